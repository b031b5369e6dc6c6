#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "helpers.hpp"
#include "reference_tables.hpp"
#include "malle/errors.hpp"
#include "malle/io.hpp"
#include "malle/pipeline.hpp"

using namespace malle;
using th::q;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("malle-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

}  // namespace

TEST_SUITE("catalog_cli") {

TEST_CASE("D4 class table in both degrees") {
  for (const std::string entry : {"4T3", "8T4"}) {
    CAPTURE(entry);
    const Json t = classes_table(resolve_entry(entry));
    REQUIRE(t["classes"].size() == 5);
    for (const auto& row : t["classes"]) {
      const auto& want = reference::kD4Table.at(row["label"].get<std::string>());
      CHECK(row["size"] == want.size);
      CHECK(row["order"] == want.order);
      CHECK(row["indices"]["4"] == want.small_index);
      CHECK(row["indices"]["8"] == want.large_index);
      CHECK(parse_rational(row["conductor"].get<std::string>()) == want.conductor);
    }
  }
}

TEST_CASE("Q8:C2 class table in both degrees") {
  const auto e8 = resolve_entry("8T11");
  const auto classes8 = tame_types(e8.group, CyclotomicProfile::trivial());
  for (const std::string entry : {"8T11", "16T11"}) {
    CAPTURE(entry);
    const Json t = classes_table(resolve_entry(entry));
    REQUIRE(t["classes"].size() == 10);
    for (const auto& row : t["classes"]) {
      const std::string label = row["label"];
      const auto& want = reference::kQ8Table.at(label);
      CHECK(row["size"] == want.size);
      CHECK(row["order"] == want.order);
      CHECK(row["indices"]["8"] == want.ind8);
      CHECK(row["indices"]["16"] == want.ind16);
    }
  }
  for (const auto& [label, want] : reference::kQ8Table) {
    if (label == "1A") continue;
    CAPTURE(label);
    const auto x = th::elt(e8.group, want.rep8);
    CHECK(classes8.types[static_cast<std::size_t>(classes8.type_of[x])].label == label);
  }
}

TEST_CASE("small tables and TSV rendering") {
  const Json c2 = classes_table(resolve_entry("C2"));
  CHECK(c2["classes"].size() == 2);
  const std::string tsv = classes_tsv(classes_table(resolve_entry("4T3")));
  CHECK(tsv.rfind("label\trepresentative\tsize\torder\tind_4\tind_8\tconductor\n", 0) == 0);
  CHECK(tsv.find("2C\t(2,4)\t2\t2\t1\t4\t1\n") != std::string::npos);
}

TEST_CASE("catalog grammar") {
  CHECK(resolve_entry("C7").group.order() == 7);
  CHECK(resolve_entry("prod(C2,C3)").group.degree() == 6);
  CHECK(resolve_entry("wr(C2,C2)").group.order() == 8);
  CHECK(resolve_entry("wr(prod(C2,C3),C2)").group.order() == 72);
  CHECK_THROWS_AS(resolve_entry("9T99"), ValidationError);
  CHECK_THROWS_AS(resolve_entry("prod(C2)"), ParseError);
  CHECK_THROWS_AS(resolve_entry("C0"), ValidationError);
  CHECK_THROWS_AS(resolve_entry("file:/nonexistent/group.txt"), ValidationError);
  CHECK(builtin_entries().size() == 5);
  CHECK(*reference_exponent("16T11", "disc", "ref-16t11") == q("97/800"));
  CHECK_FALSE(reference_exponent("16T11", "disc", "burgess-yang"));
}

TEST_CASE("group files parse and round-trip") {
  const auto g = parse_group_file(
      "# the dihedral group\nname D4\ndegree 4\nprovenance hand-written\nlabel 2C (2,4)\n(1,2,3,4)\n\n(2,4)\n");
  CHECK(g.group.order() == 8);
  CHECK(g.group.name() == "D4");
  CHECK(g.provenance == "hand-written");
  for (const std::string name : {"4T3", "8T4", "8T11", "16T11", "S3", "wr(C2,C3)"}) {
    CAPTURE(name);
    const auto e = resolve_entry(name);
    const auto back = parse_group_file(format_group_file(e.group, e.provenance));
    CHECK(back.group.elements() == e.group.elements());
    CHECK(back.provenance == e.provenance);
    const auto a = tame_types(e.group, CyclotomicProfile::full_q());
    const auto b = tame_types(back.group, CyclotomicProfile::full_q());
    CHECK(a.labels() == b.labels());
  }
}

TEST_CASE("group file errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_group_file(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("degree 4\nname x\n(1,2)\n") == 1);
  CHECK(line_of("name x\n\ndegree four\n(1,2)\n") == 3);
  CHECK(line_of("name x\ndegree 4\n# gens\n(1,2)\n(1,5)\n") == 5);
  CHECK(line_of("name x\ndegree 4\nbogus 1\n") == 3);
  CHECK(line_of("name x\ndegree 4\n") == 2);
  CHECK(line_of("name x\ndegree 4\n(1,2)(2,3)\n") == 3);
}

TEST_CASE("weight, cyclotomic and profile files") {
  const auto w = parse_weight_file("name mine\n2A 2\n2B 3/2\n2C 1\n4A 5/2\n");
  CHECK(w.name == "mine");
  CHECK(w.values.at("2B") == q("3/2"));
  CHECK_THROWS_AS(parse_weight_file("2A 1\n2A 2\n"), ParseError);
  CHECK_THROWS_AS(parse_weight_file("2A x\n"), ParseError);

  const auto c = parse_cyclotomic_file("degree 2\nname q-i\n4 1\n");
  CHECK(c.field_degree() == 2);
  CHECK(c.units(4) == std::vector<int>{1});
  CHECK_THROWS_AS(parse_cyclotomic_file("4 2\n"), Error);

  const auto p = parse_profile_file("gamma 1/2\nalpha * 3/8\nbeta 2A 1/3\n");
  CHECK(p.gamma == q("1/2"));
  CHECK(p.alpha.at("*") == q("3/8"));
  CHECK(p.has_beta);
  CHECK_FALSE(parse_profile_file("gamma 1/2\nalpha * 1/4\nbeta none\n").has_beta);
  CHECK_THROWS_AS(parse_profile_file("alpha * 1/4\n"), ParseError);
  CHECK_THROWS_AS(parse_profile_file("gamma 1/2\nbeta none\nbeta 2A 1\n"), ParseError);
}

TEST_CASE("file-based requests resolve against a base directory") {
  TempDir dir;
  dir.write("d4.group", format_group_file(resolve_entry("4T3").group, "copy"));
  dir.write("w.txt", "2A 2\n2B 2\n2C 1\n4A 3\n");
  dir.write("p.txt", "gamma 1/2\nalpha * 3/8\n");
  AnalysisRequest req{"file:d4.group", "file:w.txt", "file:p.txt", "Q", "auto", dir.path.string()};
  const Json r = run_analysis(req);
  CHECK(r["threshold"] == "9/16");
  CHECK(r["group"]["provenance"] == "copy");
}

TEST_CASE("analysis reports") {
  const Json r = run_analysis({"8T4", "disc", "ref-d4", "Q", "auto", {}});
  CHECK(r["schema_version"] == kReportSchema);
  CHECK(r["power_saving_exponent"] == "61/274");
  CHECK(r["reference"]["comparison"] == "matches-reference");
  CHECK(r["certificate"]["pole"]["member"] == true);
  CHECK(r["types"].size() == 4);

  const Json g = run_analysis({"4T3", "inv-gamma:1/5", "burgess-yang", "Q", "auto", {}});
  CHECK(g["power_saving_exponent"] == "201/242");
  CHECK(g["secondary_term"]["exponent"] == "5/6");
  CHECK(g["secondary_term"]["visible"] == true);

  const Json explicit_w = run_analysis({"4T3", "disc", "ref-d4", "Q", "2A+2C;(1,2)(3,4)+(1,3)(2,4)", {}});
  CHECK(explicit_w["threshold"] == "9/16");
  CHECK(explicit_w["witnesses"].size() == 2);
  const Json none = run_analysis({"4T3", "disc", "ref-d4", "Q", "none", {}});
  CHECK(none["verdict"] == "hull-too-small");

  CHECK(run_analysis({"S3", "disc", "burgess-yang", "Q", "auto", {}})["verdict"] == "hull-too-small");
  CHECK(run_analysis({"C5", "disc", "burgess-yang", "Q", "auto", {}})["power_saving_exponent"] == "5/28");
  CHECK(run_analysis({"4T3", "disc", "lindelof", "Q", "auto", {}})["power_saving_exponent"] == "1/2");

  CHECK_THROWS_AS(run_analysis({"4T3", "weird", "ref-d4", "Q", "auto", {}}), ValidationError);
  CHECK_THROWS_AS(run_analysis({"4T3", "disc", "ref-d4", "Q", "(1,2)", {}}), ContractViolation);

  const std::string tsv = analysis_tsv(r);
  CHECK(tsv.find("8T4\tdisc\tref-d4\t27/128\t5/128\t41/96\t2\t3\t61/274\tasymptotic-with-power-saving") !=
        std::string::npos);
}

TEST_CASE("classification output") {
  const Json d = classify_json(resolve_entry("4T3"), "disc");
  CHECK(d["status"] == "concentrated");
  CHECK(d["container"] == "<2A,2C>");
  const Json c = classify_json(resolve_entry("4T3"), "cond-d4");
  CHECK(c["status"] == "properly-semiconcentrated");
  CHECK(c["witnesses"].size() == 2);
  CHECK(classify_json(resolve_entry("C5"), "disc")["status"] == "not-semiconcentrated");
}

TEST_CASE("manifests and batches") {
  const auto lines = parse_manifest("# header\n\n4T3 disc ref-d4 Q\n8T4 disc ref-d4 Q auto\n");
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].line == 3);
  CHECK(lines[1].witnesses == "auto");
  CHECK_THROWS_AS(parse_manifest("4T3 disc\n"), ParseError);
  CHECK_THROWS_AS(parse_manifest("4T3 disc ref-d4 Q auto extra\n"), ParseError);
  CHECK(parse_manifest("").empty());

  const auto text = "4T3 disc ref-d4 Q\n8T4 disc ref-d4 Q\n16T11 disc ref-16t11 Q\nfile:missing.g disc ref-d4 Q\n"
                    "4T3 cond-d4 ref-d4 Q\n";
  const auto m = parse_manifest(text);
  const auto one = run_batch(m, {}, 1);
  const auto three = run_batch(m, {}, 3);
  REQUIRE(one.size() == 5);
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].label == three[i].label);
    CHECK(one[i].report.dump() == three[i].report.dump());
    CHECK(one[i].error == three[i].error);
  }
  CHECK(one[3].code == 1);
  CHECK(one[3].error.rfind("line 4:", 0) == 0);
  CHECK(one[2].label == "3-16T11");
  const Json s = batch_summary(one);
  CHECK(s["requests"] == 5);
  CHECK(s["failed"] == 1);
  CHECK(batch_summary({})["requests"] == 0);
}

TEST_CASE("exit code classes") {
  CHECK(exit_code_for(ParseError("x")) == 1);
  CHECK(exit_code_for(ValidationError("x")) == 1);
  CHECK(exit_code_for(ContractViolation("x")) == 2);
  CHECK(exit_code_for(UnsupportedHypothesis("x")) == 2);
  CHECK(exit_code_for(ResourceCapError("x")) == 3);
  CHECK(exit_code_for(std::runtime_error("x")) == 1);
}

}  // TEST_SUITE
