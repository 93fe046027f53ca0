#include <doctest.h>

#include <json.hpp>

#include "og4/cli.hpp"

using namespace og4;
using nlohmann::json;

namespace {

RunResult go(Command c, const std::string& text, OutputFormat f = OutputFormat::json) {
  JobSpec job;
  job.command = c;
  job.input_text = text;
  job.format = f;
  return run(job);
}

const char* triangle = R"j({"degree": 3, "generators": ["(1 2 3)"], "arcs": [[1,2],[2,3],[3,1]], "valency": 2})j";

}  // namespace

TEST_CASE("construct reports the lexicographic 5-cycle") {
  auto r = go(Command::construct, R"j({"family": "lex_cycle", "r": 5})j");
  REQUIRE(r.exit_code == exit_ok);
  auto j = json::parse(r.report);
  CHECK(j["status"] == "verified");
  CHECK(j["pair"]["vertices"] == 10);
  CHECK(j["pair"]["group_order"] == 160);
  CHECK(j["basic_type"] == "Cycle");
}

TEST_CASE("verify refutes a group that reverses an arc") {
  auto r = go(Command::verify, R"j({"degree": 3, "generators": ["(1 2)"], "arcs": [[1,2],[2,3],[3,1]], "valency": 2})j");
  CHECK(r.exit_code == exit_refuted);
  auto j = json::parse(r.report);
  CHECK(j["refuted_clause"]["tag"] == "og:orientation_invariant");
  CHECK(j["refuted_clause"]["detail"] == "orientation not G-invariant");
}

TEST_CASE("pair documents") {
  auto doc = parse_document(triangle);
  REQUIRE_FALSE(doc.is_construction());
  const auto& p = std::get<PairSpec>(doc.body);
  CHECK(p.degree == 3);
  REQUIRE(p.arcs.has_value());
  CHECK(p.arcs->size() == 3);
  CHECK((*p.arcs)[2] == Arc{2, 0});
  CHECK(go(Command::verify, triangle).exit_code == exit_ok);

  auto c = parse_document(R"j({"family": "sym_bigstab", "n": 5})j");
  REQUIRE(c.is_construction());
  CHECK(std::get<ConstructionSpec>(c.body).n == 5);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_document("{\"degree\": 3,\n \"generators\": [\"(1 2 3)\"],\n \"arcs\": [[1,2], [1,1]]}");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("diagonal arc") != std::string::npos);
    CHECK(std::string(e.what()).find("/arcs/1") != std::string::npos);
    CHECK(e.line() == 3);
    CHECK(e.column() == 18);
  }
  try {
    parse_document("{\"degree\": 3,\n \"generators\": [\"(1 2 3)\" \"(1 2)\"]}");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_document(R"j({"degree": 3, "generators": ["(1 2 4)"]})j"), ParseError);
  CHECK_THROWS_AS(parse_document(R"j({"degree": 3, "generators": ["(1 2"]})j"), ParseError);
  CHECK_THROWS_AS(parse_document(R"j({"degree": 3, "generators": [], "arcs": [[1,2],[1,2]]})j"), ParseError);
  CHECK_THROWS_AS(parse_document(R"j({"family": "petersen"})j"), ParseError);
  CHECK_THROWS_AS(parse_document(R"j({"family": "lex_cycle"})j"), ParseError);
}

TEST_CASE("operational errors exit 2") {
  CHECK(go(Command::verify, "{").exit_code == exit_error);
  CHECK(go(Command::construct, R"j({"family": "nope"})j").exit_code == exit_error);
  CHECK(go(Command::construct, R"j({"family": "sym_bigstab", "n": 6})j").exit_code == exit_error);
  JobSpec job;
  job.command = Command::construct;
  job.input_text = R"j({"family": "lex_cycle", "r": 5})j";
  job.max_order = 100;
  auto r = run(job);
  CHECK(r.exit_code == exit_error);
  CHECK(r.message.find("cap exceeded") != std::string::npos);
  job.input_path = "/nonexistent/file.json";
  job.input_text.reset();
  CHECK(run(job).exit_code == exit_error);
}

TEST_CASE("refuted constructions exit 1") {
  auto r = go(Command::construct, R"j({"family": "simple_cayley", "T": {"alternating": 5},
                                      "a": "(1 2)(3 4)", "sigma": "(1 4)(2 5)"})j");
  CHECK(r.exit_code == exit_refuted);
  CHECK(json::parse(r.report)["refuted_clause"]["tag"] == "simple_cayley:a_not_involution");
}

TEST_CASE("chain on a non-basic pair") {
  auto r = go(Command::chain, R"j({"family": "raw_cayley",
    "N": {"degree": 10, "generators": ["(1 2 3 4 5)", "(6 7 8)", "(6 7 8 9 10)"]},
    "a": "(1 2 3 4 5)(6 7 8)", "b": "(1 2 3 4 5)(8 9 10)", "h": "(6 9)(7 10)"})j");
  REQUIRE(r.exit_code == exit_ok);
  auto j = json::parse(r.report);
  CHECK(j["basic"] == false);
  REQUIRE(j["chain"].size() == 1);
  CHECK(j["chain"][0]["normal_order"] == 10);
  CHECK(j["basic_quotient"]["vertices"] == 30);
  CHECK(j["basic_type"] == "Quasiprimitive");
}

TEST_CASE("quotient and analyze") {
  JobSpec job;
  job.command = Command::quotient;
  job.input_text = R"j({"family": "lex_cycle", "r": 4})j";
  auto r = run(job);
  REQUIRE(r.exit_code == exit_ok);
  CHECK(json::parse(r.report)["outcome"]["kind"] == "OrientedCycle");
  job.normal = {"(1 2)", "(3 4)", "(5 6)", "(7 8)", "(1 5)(2 6)(3 7)(4 8)"};
  r = run(job);
  REQUIRE(r.exit_code == exit_ok);
  CHECK(json::parse(r.report)["outcome"]["kind"] == "K2");
  job.normal = {"(1 3 5 7)(2 4 6 8)"};
  CHECK(run(job).exit_code == exit_error);  // not normal

  auto a = go(Command::analyze, R"j({"family": "lex_cycle", "r": 3})j");
  REQUIRE(a.exit_code == exit_ok);
  auto j = json::parse(a.report);
  CHECK(j["s_arcs"]["counts"] == json::array({6, 12, 24, 48}));
  CHECK(j["s_arcs"]["max_s"] == 2);
  CHECK(j["alternating"]["attachment_kind"] == "tight");
  CHECK(j["stabilizer"]["order"] == 4);
}

TEST_CASE("DOT export") {
  auto d = go(Command::export_pair, triangle, OutputFormat::dot);
  REQUIRE(d.exit_code == exit_ok);
  CHECK(d.report ==
        "digraph og4 {\n  1 [label=\"1\"];\n  2 [label=\"2\"];\n  3 [label=\"3\"];\n"
        "  1 -> 2;\n  2 -> 3;\n  3 -> 1;\n}\n");
  auto l = go(Command::export_pair, R"j({"family": "lex_cycle", "r": 3})j", OutputFormat::dot);
  std::size_t edges = 0, pos = 0;
  while ((pos = l.report.find(" -> ", pos)) != std::string::npos) ++edges, ++pos;
  CHECK(edges == 12);
  CHECK(l.report.find("[label=\"(2,1)\"]") != std::string::npos);
}

TEST_CASE("export round-trips byte for byte") {
  for (const char* doc : {R"j({"family": "lex_cycle", "r": 3})j", R"j({"family": "sym_bigstab", "n": 5})j", triangle}) {
    auto first = go(Command::export_pair, doc);
    REQUIRE(first.exit_code == exit_ok);
    auto second = go(Command::export_pair, first.report);
    REQUIRE(second.exit_code == exit_ok);
    CHECK(first.report == second.report);
    auto dot1 = go(Command::export_pair, first.report, OutputFormat::dot);
    auto dot2 = go(Command::export_pair, second.report, OutputFormat::dot);
    CHECK(dot1.report == dot2.report);
    // an exported construction certifies on its own
    CHECK(go(Command::verify, first.report).exit_code == exit_ok);
  }
}

TEST_CASE("reports are deterministic") {
  const char* doc = R"j({"family": "coset_simple", "G": {"alternating": 5}, "h": "(1 4)(2 5)", "g": "(1 2 3)"})j";
  for (Command c : {Command::construct, Command::classify, Command::analyze, Command::chain}) {
    auto a = go(c, doc), b = go(c, doc);
    CHECK(a.exit_code == exit_ok);
    CHECK(a.report == b.report);
    CHECK(go(c, doc, OutputFormat::text).report == go(c, doc, OutputFormat::text).report);
  }
}

TEST_CASE("seed arcs") {
  // Z7 with seed (1, 2) and (1, 3): both oriented 7-cycles generated by the orbital
  JobSpec job;
  job.command = Command::verify;
  job.input_text = R"j({"degree": 7, "generators": ["(1 2 3 4 5 6 7)"], "valency": 2})j";
  CHECK(run(job).exit_code == exit_ok);
  job.seed_arc = Arc{1, 3};
  CHECK(run(job).exit_code == exit_ok);
  job.seed_arc = Arc{1, 9};
  CHECK(run(job).exit_code == exit_error);
}
