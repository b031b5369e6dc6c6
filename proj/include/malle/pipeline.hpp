#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "malle/asymptotics.hpp"
#include "malle/catalog.hpp"
#include "malle/concentration.hpp"
#include "malle/io.hpp"

namespace malle {

using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "malle-report/1";

struct AnalysisRequest {
  std::string entry;
  std::string weight = "disc";         // disc | cond-d4 | prodram | inv-gamma:<r> | file:<path>
  std::string profile = "burgess-yang";  // burgess-yang[:g] | lindelof[:g] | convexity[:g] | ref-d4 | ref-16t11 | file:<path>
  std::string cyc = "Q";               // Q | trivial | file:<path>
  std::string witnesses = "auto";      // auto | W1;W2;... with Wi = g1+g2+..., gi cycles or a type label
  std::string base_dir;                // for relative file paths
};

CyclotomicProfile resolve_cyclotomic(const std::string& spec, const std::string& base_dir = {});
WeightFunction resolve_weight(const TypeSystem& ts, const std::string& spec, const std::string& base_dir = {});
SubconvexityProfile resolve_profile(const TypeSystem& ts, const std::string& spec, const std::string& base_dir = {});
std::vector<ElementSet> resolve_witnesses(const TypeSystem& ts, const std::string& spec, const WeightFunction& wt);

Json rational_json(const Rational& r);
Json report_to_json(const MalleReport& report, const TypeSystem& ts, const AnalysisRequest& request,
                    const CatalogEntry& entry);

// Resolves every spec before computing, then runs analyze.
Json run_analysis(const AnalysisRequest& request);

// Conjugacy classes with per-representation indices and, for D4, conductor weights.
Json classes_table(const CatalogEntry& entry);
std::string classes_tsv(const Json& table);

Json classify_json(const CatalogEntry& entry, const std::string& weight_spec, const std::string& cyc_spec = "Q",
                   const std::string& base_dir = {});

std::string analysis_tsv(const Json& report);

// Exit-code classes: 0 ok, 1 parse/validation, 2 contract violation, 3 resource cap.
int exit_code_for(const std::exception& e);

struct BatchItem {
  int line = 0;
  std::string label;  // "<line>-<entry>"
  int code = 0;
  Json report;        // on success
  std::string error;  // otherwise
};

// Runs every manifest line on a pool of `jobs` workers; results come back in manifest order.
std::vector<BatchItem> run_batch(const std::vector<ManifestLine>& lines, const std::string& base_dir, int jobs);
Json batch_summary(const std::vector<BatchItem>& items);

}  // namespace malle
