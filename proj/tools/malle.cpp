#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "malle/errors.hpp"
#include "malle/pipeline.hpp"

namespace fs = std::filesystem;
using namespace malle;

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + out_path + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int run_batch_command(const std::string& manifest_path, const std::string& out_dir, int jobs) {
  const std::vector<ManifestLine> lines = parse_manifest(read_text_file(manifest_path));
  const std::string base_dir = fs::path(manifest_path).parent_path().string();
  const std::vector<BatchItem> items = run_batch(lines, base_dir, jobs);
  fs::create_directories(out_dir);
  int code = 0;
  for (const auto& it : items) {
    if (it.error.empty()) {
      emit(dump(it.report), (fs::path(out_dir) / (it.label + ".json")).string());
    } else {
      std::cerr << it.error << "\n";
      code = std::max(code, it.code);
    }
  }
  emit(dump(batch_summary(items)), (fs::path(out_dir) / "summary.json").string());
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"malle: tame types, tubular regions and power-saving exponents for G-extension counts"};
  app.require_subcommand(1);

  std::string entry, weight = "disc", profile = "burgess-yang", cyc = "Q", witnesses = "auto", format = "json", out;
  int jobs = 1;

  auto* classes = app.add_subcommand("classes", "conjugacy classes with indices and conductor weights");
  classes->add_option("entry", entry, "catalog entry")->required();
  classes->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
  classes->add_option("--out", out, "write to a file instead of stdout");

  auto* classify_cmd = app.add_subcommand("classify", "concentration verdict for a weight");
  classify_cmd->add_option("entry", entry, "catalog entry")->required();
  classify_cmd->add_option("--weight", weight);
  classify_cmd->add_option("--cyc", cyc);
  classify_cmd->add_option("--out", out);

  auto* analyze_cmd = app.add_subcommand("analyze", "threshold, delta, xi and the power-saving exponent");
  analyze_cmd->add_option("entry", entry, "catalog entry")->required();
  analyze_cmd->add_option("--weight", weight);
  analyze_cmd->add_option("--profile", profile);
  analyze_cmd->add_option("--cyc", cyc);
  analyze_cmd->add_option("--witnesses", witnesses);
  analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
  analyze_cmd->add_option("--out", out);

  std::string manifest;
  auto* batch = app.add_subcommand("batch", "run every request of a manifest");
  batch->add_option("manifest", manifest, "manifest file")->required();
  batch->add_option("--out", out, "output directory")->required();
  batch->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* export_cmd = app.add_subcommand("export", "write an entry in the group file format");
  export_cmd->add_option("entry", entry, "catalog entry")->required();
  export_cmd->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*classes) {
      const Json table = classes_table(resolve_entry(entry));
      emit(format == "tsv" ? classes_tsv(table) : dump(table), out);
    } else if (*classify_cmd) {
      emit(dump(classify_json(resolve_entry(entry), weight, cyc)), out);
    } else if (*analyze_cmd) {
      const Json report = run_analysis({entry, weight, profile, cyc, witnesses, {}});
      emit(format == "tsv" ? analysis_tsv(report) : dump(report), out);
    } else if (*batch) {
      return run_batch_command(manifest, out, jobs);
    } else if (*export_cmd) {
      const CatalogEntry e = resolve_entry(entry);
      emit(format_group_file(e.group, e.provenance), out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 0;
}
