#include "og4/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "og4/analysis.hpp"
#include "og4/quotient.hpp"

namespace og4 {

using ojson = nlohmann::ordered_json;

std::optional<Command> parse_command(const std::string& name) {
  if (name == "construct") return Command::construct;
  if (name == "verify") return Command::verify;
  if (name == "classify") return Command::classify;
  if (name == "quotient") return Command::quotient;
  if (name == "chain") return Command::chain;
  if (name == "analyze") return Command::analyze;
  if (name == "export") return Command::export_pair;
  return std::nullopt;
}

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::construct: return "construct";
    case Command::verify: return "verify";
    case Command::classify: return "classify";
    case Command::quotient: return "quotient";
    case Command::chain: return "chain";
    case Command::analyze: return "analyze";
    case Command::export_pair: return "export";
  }
  return "?";
}

// A job failure that is not a refutation: exit 2.
struct JobError {
  std::string message;
};

struct Loaded {
  std::string source;  // family name, or "pair"
  std::optional<OGPair> pair;
  std::vector<Clause> clauses;
  std::optional<Clause> refuted;
  std::vector<Permutation> normal_generators;
  std::optional<std::vector<Permutation>> doc_normal;
};

std::string read_input(const JobSpec& job) {
  if (job.input_text) return *job.input_text;
  std::ifstream in(job.input_path, std::ios::binary);
  if (!in) throw JobError{"cannot read '" + job.input_path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Permutation widen(const Permutation& p, std::size_t degree) {
  if (p.degree() == degree) return p;
  if (p.degree() > degree) throw JobError{"permutation " + p.to_cycle_string() + " moves points beyond " +
                                          std::to_string(degree)};
  std::vector<Point> img(p.images().begin(), p.images().end());
  for (Point x = static_cast<Point>(img.size()); x < degree; ++x) img.push_back(x);
  return Permutation(std::move(img));
}

void certify_into(Loaded& l, OrientedGraph graph, PermGroup group, std::vector<std::string> labels,
                  std::size_t valency) {
  auto checked = certify(graph, group, labels, valency);
  for (const auto& c : checked.clauses()) l.clauses.push_back(c);
  if (checked.ok()) {
    l.pair = *checked;
  } else {
    // Kept uncertified so that export still works on raw pairs.
    l.refuted = checked.refutation();
    l.pair = OGPair{std::move(graph), std::move(group), std::move(labels), std::nullopt};
  }
}

Loaded load(const JobSpec& job) {
  Document doc = parse_document(read_input(job));
  EnumerationLimits limits;
  limits.max_order = job.max_order;
  Loaded l;
  l.doc_normal = doc.normal;

  std::optional<Arc> seed;
  if (job.seed_arc) seed = Arc{job.seed_arc->first - 1, job.seed_arc->second - 1};

  if (auto* c = std::get_if<ConstructionSpec>(&doc.body)) {
    l.source = c->family;
    auto built = build_construction(*c, limits);
    l.clauses = built.clauses();
    if (!built.ok()) {
      l.refuted = built.refutation();
      return l;
    }
    l.pair = built->pair;
    l.normal_generators = built->normal_generators;
    if (seed) {
      OGPair base = *l.pair;
      if (seed->first >= base.vertex_count() || seed->second >= base.vertex_count())
        throw JobError{"seed arc out of range"};
      l.clauses.clear();
      certify_into(l, orbital_graph(base.group, *seed), base.group, base.labels,
                   job.valency.value_or(4));
    }
  } else {
    const auto& p = std::get<PairSpec>(doc.body);
    l.source = "pair";
    PermGroup G = p.generators.empty() ? PermGroup::trivial(p.degree)
                                       : PermGroup::generate(p.generators, limits);
    if (seed) {
      if (seed->first >= p.degree || seed->second >= p.degree) throw JobError{"seed arc out of range"};
      if (seed->first == seed->second) throw JobError{"diagonal seed arc"};
    }
    OrientedGraph graph;
    if (seed) {
      graph = orbital_graph(G, *seed);
    } else if (p.arcs) {
      graph = OrientedGraph(p.degree, *p.arcs);
    } else if (p.seed_arc) {
      graph = orbital_graph(G, *p.seed_arc);
    } else {
      auto s = default_orbital_seed(G);
      if (!s) throw JobError{"every orbital is self-paired; give arcs or seed_arc"};
      graph = orbital_graph(G, *s);
    }
    certify_into(l, std::move(graph), G, p.labels, job.valency.value_or(p.valency));
  }
  if (l.pair && l.pair->group.order() > job.max_order)
    throw JobError{"cap exceeded: group order " + std::to_string(l.pair->group.order()) + " > " +
                   std::to_string(job.max_order)};
  return l;
}

ojson clause_json(const Clause& c) {
  ojson j;
  j["tag"] = c.tag;
  j["holds"] = c.holds;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

ojson clauses_json(const std::vector<Clause>& cs) {
  ojson a = ojson::array();
  for (const auto& c : cs) a.push_back(clause_json(c));
  return a;
}

ojson pair_summary(const OGPair& p) {
  ojson j;
  j["vertices"] = p.vertex_count();
  j["arcs"] = p.graph.arc_count();
  j["group_order"] = p.group.order();
  if (p.certificate) {
    j["valency"] = p.certificate->valency;
    j["stabilizer_order"] = p.certificate->stabilizer_order;
  }
  return j;
}

ojson outcome_json(const QuotientOutcome& q) {
  ojson j;
  j["kind"] = to_string(q.kind);
  j["blocks"] = q.blocks.size();
  j["block_size"] = q.blocks.size() ? q.blocks.blocks[0].size() : 0;
  j["induced_group_order"] = q.induced_group.order();
  j["kernel_order"] = q.kernel.order();
  j["multicover_degree"] = q.multicover_degree;
  j["quotient_valency"] = q.quotient_valency;
  if (q.cycle_length) j["cycle_length"] = q.cycle_length;
  if (q.quotient_pair) j["quotient"] = pair_summary(*q.quotient_pair);
  return j;
}

void text_lines(const ojson& j, const std::string& indent, std::ostringstream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = j.is_object() ? it.key() : "-";
    const ojson& v = *it;
    if (v.is_structured() && !v.empty() &&
        !(v.is_array() && std::all_of(v.begin(), v.end(), [](const ojson& e) { return e.is_primitive(); }))) {
      os << indent << key << ":\n";
      text_lines(v, indent + "  ", os);
    } else {
      os << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

std::string render(const ojson& j, OutputFormat f) {
  if (f == OutputFormat::text) {
    std::ostringstream os;
    text_lines(j, "", os);
    return os.str();
  }
  return j.dump(2) + "\n";
}

const OGPair& certified_pair(const Loaded& l) {
  if (!l.pair || !l.pair->certificate) throw JobError{"internal: pair not certified"};
  return *l.pair;
}

PermGroup normal_for(const JobSpec& job, const Loaded& l) {
  const OGPair& p = certified_pair(l);
  const std::size_t n = p.vertex_count();
  std::vector<Permutation> gens;
  if (!job.normal.empty()) {
    for (const auto& s : job.normal) gens.push_back(widen(parse_cycles(s, 0), n));
  } else if (l.doc_normal) {
    for (const auto& g : *l.doc_normal) gens.push_back(widen(g, n));
  } else if (!l.normal_generators.empty()) {
    gens = l.normal_generators;
  } else {
    throw JobError{"quotient needs a normal subgroup (--normal or a \"normal\" field)"};
  }
  for (const auto& g : gens)
    if (!p.group.contains(g)) throw JobError{"normal generator " + g.to_cycle_string() + " is not in the group"};
  std::vector<ElementId> ids;
  for (const auto& g : gens) ids.push_back(*p.group.find(g));
  return p.group.subgroup_generated(ids);
}

RunResult execute(const JobSpec& job) {
  Loaded l = load(job);
  ojson rep;
  rep["command"] = command_name(job.command);
  rep["source"] = l.source;

  if (job.command == Command::export_pair) {
    if (!l.pair) {
      rep["status"] = "refuted";
      rep["refuted_clause"] = clause_json(*l.refuted);
      return {exit_refuted, render(rep, job.format), l.refuted->tag};
    }
    if (job.format == OutputFormat::dot) return {exit_ok, export_dot(*l.pair), {}};
    return {exit_ok, emit_pair_document(*l.pair), {}};
  }

  if (l.refuted) {
    rep["status"] = "refuted";
    rep["refuted_clause"] = clause_json(*l.refuted);
    rep["clauses"] = clauses_json(l.clauses);
    std::string msg = "refuted: " + l.refuted->tag;
    if (!l.refuted->detail.empty()) msg += " (" + l.refuted->detail + ")";
    return {exit_refuted, render(rep, job.format), msg};
  }
  const OGPair& pair = certified_pair(l);
  NormalSearchLimits nlimits;

  if (job.format == OutputFormat::dot && job.command != Command::quotient)
    return {exit_ok, export_dot(pair), {}};

  rep["status"] = "verified";
  rep["pair"] = pair_summary(pair);
  switch (job.command) {
    case Command::construct:
      rep["basic_type"] = to_string(basic_type(pair, nlimits));
      rep["clauses"] = clauses_json(l.clauses);
      break;
    case Command::verify:
      rep["clauses"] = clauses_json(l.clauses);
      break;
    case Command::classify: {
      rep["quasiprimitivity"] = to_string(quasiprimitivity_type(pair.group, nlimits));
      auto entries = classify_all_quotients(pair, nlimits);
      rep["basic_type"] = to_string(basic_type_of(entries));
      ojson list = ojson::array();
      for (const auto& e : entries) {
        ojson j;
        j["normal_order"] = e.normal.order();
        j["outcome"] = outcome_json(e.outcome);
        list.push_back(j);
      }
      rep["normal_quotients"] = list;
      break;
    }
    case Command::quotient: {
      PermGroup N = normal_for(job, l);
      auto q = classify_og4_quotient(pair, N);
      if (job.format == OutputFormat::dot) {
        OGPair shown = q.quotient_pair ? *q.quotient_pair
                                       : OGPair{q.quotient_graph, q.induced_group, {}, std::nullopt};
        return {exit_ok, export_dot(shown), {}};
      }
      rep["normal_order"] = N.order();
      rep["outcome"] = outcome_json(q);
      rep["checks"] = clauses_json(q.checks);
      break;
    }
    case Command::chain: {
      auto steps = basic_chain(pair, nlimits);
      ojson list = ojson::array();
      for (const auto& s : steps) {
        ojson j;
        j["normal_order"] = s.normal.order();
        j["quotient"] = pair_summary(s.quotient);
        list.push_back(j);
      }
      rep["basic"] = steps.empty();
      rep["chain"] = list;
      const OGPair& last = steps.empty() ? pair : steps.back().quotient;
      rep["basic_quotient"] = pair_summary(last);
      rep["basic_type"] = to_string(basic_type(last, nlimits));
      if (job.all_basic) {
        ojson all = ojson::array();
        for (const auto& s : all_basic_quotients(pair, nlimits)) {
          ojson j;
          j["normal_order"] = s.normal.order();
          j["quotient"] = pair_summary(s.quotient);
          j["basic_type"] = to_string(basic_type(s.quotient, nlimits));
          all.push_back(j);
        }
        rep["basic_quotients"] = all;
      }
      break;
    }
    case Command::analyze: {
      if (pair.certificate->valency != 4) throw JobError{"analyze needs valency 4"};
      auto alt = alternating_structure(pair);
      ojson a;
      a["cycles"] = alt.cycles.size();
      a["common_length"] = alt.common_length;
      a["partitions_edges"] = alt.partitions_edges;
      a["attachment_number"] = alt.attachment_number;
      a["attachment_kind"] = to_string(alt.attachment_kind);
      a["intersections_form_blocks"] = alt.intersections_form_blocks;
      rep["alternating"] = a;
      SArcLimits sl;
      sl.max_sarcs = job.max_sarcs;
      auto s = s_arc_report(pair, sl);
      ojson sj;
      sj["max_s"] = s.max_s;
      sj["counts"] = s.counts;
      sj["regular_on_max"] = s.regular_on_max;
      sj["lower_bound"] = s.lower_bound;
      rep["s_arcs"] = sj;
      auto st = stabilizer_report(pair);
      ojson stj;
      stj["order"] = st.order;
      stj["is_2group"] = st.is_2group;
      stj["elementary_abelian"] = st.elementary_abelian;
      if (st.nilpotency_class)
        stj["nilpotency_class"] = *st.nilpotency_class;
      else
        stj["nilpotency_class"] = nullptr;
      rep["stabilizer"] = stj;
      break;
    }
    case Command::export_pair: break;
  }
  return {exit_ok, render(rep, job.format), {}};
}

RunResult error_result(const JobSpec& job, const std::string& message) {
  ojson rep;
  rep["command"] = command_name(job.command);
  rep["status"] = "error";
  rep["error"] = message;
  return {exit_error, render(rep, job.format == OutputFormat::dot ? OutputFormat::json : job.format),
          message};
}

}  // namespace

RunResult run(const JobSpec& job) {
  if (job.max_order == 0 || job.max_sarcs == 0) return error_result(job, "caps must be positive");
  try {
    return execute(job);
  } catch (const JobError& e) {
    return error_result(job, e.message);
  } catch (const ParseError& e) {
    return error_result(job, std::string("parse error: ") + e.what());
  } catch (const EnumerationOverflow& e) {
    return error_result(job, std::string("cap exceeded: ") + e.what());
  } catch (const InvariantViolation& e) {
    return error_result(job, std::string("invariant violation: ") + e.what());
  } catch (const Error& e) {
    return error_result(job, e.what());
  }
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Oriented 4-valent graph pairs: construct, verify, classify and analyze"};
  app.require_subcommand(1);

  JobSpec job;
  std::string format = "json";
  std::string seed;
  std::size_t valency = 0;

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"construct", "Build a construction document and report its basic type"},
      {"verify", "Check membership in OG(m)"},
      {"classify", "Classify every nontrivial normal quotient"},
      {"quotient", "Classify the quotient by one normal subgroup"},
      {"chain", "Descend through Cover quotients to a basic pair"},
      {"analyze", "Alternating cycles, s-arcs and the vertex stabilizer"},
      {"export", "Emit the canonical pair document or DOT"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", job.input_path, "Pair or construction document (JSON)")->required();
    sub->add_option("--max-order", job.max_order, "Cap on enumerated group orders");
    sub->add_option("--max-sarcs", job.max_sarcs, "Cap on s-arc counts");
    sub->add_option("--format", format, "json, text or dot")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_option("-o,--output", job.output_path, "Write the report here");
    sub->add_option("--seed-arc", seed, "Orbital seed 'x,y' (1-based), replacing the graph");
    sub->add_option("--valency", valency, "Valency m for OG(m) (default 4)");
    if (std::string(name) == "quotient")
      sub->add_option("--normal", job.normal, "Generator of the normal subgroup (repeatable)");
    if (std::string(name) == "chain")
      sub->add_flag("--all", job.all_basic, "Also list every basic Cover quotient");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_error;
  }

  for (auto* sub : app.get_subcommands()) job.command = *parse_command(sub->get_name());
  job.format = format == "text" ? OutputFormat::text : format == "dot" ? OutputFormat::dot : OutputFormat::json;
  if (valency) job.valency = valency;
  if (!seed.empty()) {
    unsigned long x = 0, y = 0;
    char comma = 0;
    std::istringstream ss(seed);
    if (!(ss >> x >> comma >> y) || comma != ',' || x == 0 || y == 0) {
      std::cerr << "--seed-arc expects 'x,y' with 1-based vertices\n";
      return exit_error;
    }
    job.seed_arc = Arc{static_cast<Point>(x), static_cast<Point>(y)};
  }

  RunResult res = run(job);
  if (job.output_path.empty()) {
    std::cout << res.report;
  } else {
    std::ofstream out(job.output_path, std::ios::binary);
    if (!out || !(out << res.report)) {
      std::cerr << "cannot write '" << job.output_path << "'\n";
      return exit_error;
    }
  }
  if (!res.message.empty()) std::cerr << res.message << "\n";
  return res.exit_code;
}

}  // namespace og4
