#include "og4/document.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace og4 {

using nlohmann::json;

namespace {

// Line and column (1-based) of a byte offset.
std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Finds the offset of the value at a JSON pointer in text already known to
// be valid JSON. Used only to position semantic errors.
class Locator {
 public:
  explicit Locator(std::string_view text) : t_(text) {}

  std::size_t find(const std::vector<std::string>& path) {
    std::size_t pos = 0;
    skip_ws(pos);
    for (const auto& key : path) {
      if (pos >= t_.size()) return pos;
      if (t_[pos] == '{') {
        ++pos;
        bool found = false;
        while (true) {
          skip_ws(pos);
          if (pos >= t_.size() || t_[pos] == '}') break;
          std::size_t ks = pos;
          skip_string(pos);
          std::string_view name = t_.substr(ks + 1, pos - ks - 2);
          skip_ws(pos);
          ++pos;  // ':'
          skip_ws(pos);
          if (name == key) {
            found = true;
            break;
          }
          skip_value(pos);
          skip_ws(pos);
          if (pos < t_.size() && t_[pos] == ',') ++pos;
        }
        if (!found) return pos;
      } else if (t_[pos] == '[') {
        ++pos;
        std::size_t want = std::stoul(key);
        for (std::size_t i = 0; i < want; ++i) {
          skip_ws(pos);
          skip_value(pos);
          skip_ws(pos);
          if (pos < t_.size() && t_[pos] == ',') ++pos;
        }
        skip_ws(pos);
      } else {
        return pos;
      }
    }
    return pos;
  }

 private:
  void skip_ws(std::size_t& p) const {
    while (p < t_.size() && (t_[p] == ' ' || t_[p] == '\n' || t_[p] == '\r' || t_[p] == '\t')) ++p;
  }
  void skip_string(std::size_t& p) const {
    ++p;
    while (p < t_.size() && t_[p] != '"') p += t_[p] == '\\' ? 2 : 1;
    ++p;
  }
  void skip_value(std::size_t& p) const {
    if (p >= t_.size()) return;
    if (t_[p] == '"') {
      skip_string(p);
      return;
    }
    if (t_[p] == '{' || t_[p] == '[') {
      int depth = 0;
      do {
        if (t_[p] == '"') {
          skip_string(p);
          continue;
        }
        if (t_[p] == '{' || t_[p] == '[') ++depth;
        if (t_[p] == '}' || t_[p] == ']') --depth;
        ++p;
      } while (p < t_.size() && depth > 0);
      return;
    }
    while (p < t_.size() && t_[p] != ',' && t_[p] != '}' && t_[p] != ']' && t_[p] != ' ' &&
           t_[p] != '\n' && t_[p] != '\r' && t_[p] != '\t')
      ++p;
  }

  std::string_view t_;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::vector<std::string>& path, const std::string& msg) const {
    std::string where;
    for (const auto& k : path) where += "/" + k;
    auto [line, col] = line_col(text_, Locator(text_).find(path));
    throw ParseError((where.empty() ? "" : where + ": ") + msg, line, col);
  }

  const json& at(const json& obj, const std::vector<std::string>& path, const std::string& key) const {
    if (!obj.contains(key)) fail(path, "missing field '" + key + "'");
    return obj.at(key);
  }

  std::size_t count(const json& v, const std::vector<std::string>& path) const {
    if (!v.is_number_unsigned()) fail(path, "expected a non-negative integer");
    return v.get<std::size_t>();
  }

  Permutation perm(const json& v, const std::vector<std::string>& path, std::size_t degree) const {
    if (!v.is_string()) fail(path, "expected cycle notation");
    try {
      Permutation p = parse_cycles(v.get<std::string>(), degree);
      if (degree && p.degree() != degree) fail(path, "degree mismatch");
      return p;
    } catch (const ParseError& e) {
      fail(path, e.what());
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }

  std::vector<Permutation> perms(const json& v, const std::vector<std::string>& path,
                                 std::size_t degree) const {
    if (!v.is_array()) fail(path, "expected a list of permutations");
    std::vector<Permutation> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      auto p = path;
      p.push_back(std::to_string(i));
      out.push_back(perm(v[i], p, degree));
    }
    return out;
  }

  GroupSpec group(const json& v, const std::vector<std::string>& path) const {
    if (!v.is_object()) fail(path, "expected a group object");
    GroupSpec g;
    auto sub = [&](const char* k) {
      auto p = path;
      p.push_back(k);
      return p;
    };
    if (v.contains("alternating")) {
      g.kind = GroupSpec::Kind::alternating;
      g.degree = count(v["alternating"], sub("alternating"));
    } else if (v.contains("symmetric")) {
      g.kind = GroupSpec::Kind::symmetric;
      g.degree = count(v["symmetric"], sub("symmetric"));
    } else if (v.contains("cyclic")) {
      g.kind = GroupSpec::Kind::cyclic;
      g.degree = count(v["cyclic"], sub("cyclic"));
    } else {
      g.kind = GroupSpec::Kind::generated;
      g.degree = count(at(v, path, "degree"), sub("degree"));
      if (g.degree == 0) fail(sub("degree"), "degree must be positive");
      g.generators = perms(at(v, path, "generators"), sub("generators"), g.degree);
      return g;
    }
    if (g.degree == 0) fail(path, "degree must be positive");
    return g;
  }

 private:
  std::string_view text_;
};

Arc arc_of(const Reader& rd, const json& v, const std::vector<std::string>& path, std::size_t degree) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_unsigned() || !v[1].is_number_unsigned())
    rd.fail(path, "expected an arc [tail, head]");
  std::size_t x = v[0].get<std::size_t>(), y = v[1].get<std::size_t>();
  if (x < 1 || y < 1 || x > degree || y > degree) rd.fail(path, "vertex out of range");
  if (x == y) rd.fail(path, "diagonal arc");
  return {static_cast<Point>(x - 1), static_cast<Point>(y - 1)};
}

PairSpec parse_pair(const Reader& rd, const json& doc) {
  PairSpec p;
  p.degree = rd.count(rd.at(doc, {}, "degree"), {"degree"});
  if (p.degree == 0) rd.fail({"degree"}, "degree must be positive");
  p.generators = rd.perms(rd.at(doc, {}, "generators"), {"generators"}, p.degree);
  if (doc.contains("arcs")) {
    const json& arcs = doc["arcs"];
    if (!arcs.is_array()) rd.fail({"arcs"}, "expected a list of arcs");
    std::vector<Arc> list;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      Arc a = arc_of(rd, arcs[i], {"arcs", std::to_string(i)}, p.degree);
      if (std::find(list.begin(), list.end(), a) != list.end())
        rd.fail({"arcs", std::to_string(i)}, "duplicate arc");
      list.push_back(a);
    }
    p.arcs = std::move(list);
  }
  if (doc.contains("seed_arc")) {
    if (p.arcs) rd.fail({"seed_arc"}, "give either arcs or seed_arc");
    p.seed_arc = arc_of(rd, doc["seed_arc"], {"seed_arc"}, p.degree);
  }
  if (doc.contains("labels")) {
    const json& l = doc["labels"];
    if (!l.is_array() || l.size() != p.degree) rd.fail({"labels"}, "expected one label per vertex");
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!l[i].is_string()) rd.fail({"labels", std::to_string(i)}, "expected a string");
      p.labels.push_back(l[i].get<std::string>());
    }
  }
  if (doc.contains("valency")) p.valency = rd.count(doc["valency"], {"valency"});
  return p;
}

std::size_t group_degree(const GroupSpec& g) { return g.degree; }

ConstructionSpec parse_construction(const Reader& rd, const json& doc) {
  ConstructionSpec c;
  const json& fam = doc["family"];
  if (!fam.is_string()) rd.fail({"family"}, "expected a family name");
  c.family = fam.get<std::string>();
  const auto& known = construction_families();
  if (std::find(known.begin(), known.end(), c.family) == known.end())
    rd.fail({"family"}, "unknown family '" + c.family + "'");

  auto group_field = [&](const char* key) {
    c.group = rd.group(rd.at(doc, {}, key), {key});
    return group_degree(*c.group);
  };
  auto elements = [&](std::initializer_list<const char*> keys, std::size_t degree) {
    for (const char* k : keys) c.elements.emplace(k, rd.perm(rd.at(doc, {}, k), {k}, degree));
  };
  auto overgroup = [&](std::size_t degree) {
    if (doc.contains("automorphisms"))
      c.overgroup = rd.group(doc["automorphisms"], {"automorphisms"});
    else
      c.overgroup = GroupSpec{GroupSpec::Kind::symmetric, degree, {}};
  };

  if (c.family == "lex_cycle") {
    c.r = rd.count(rd.at(doc, {}, "r"), {"r"});
  } else if (c.family == "sym_bigstab") {
    c.n = rd.count(rd.at(doc, {}, "n"), {"n"});
  } else if (c.family == "simple_cayley") {
    std::size_t d = group_field("T");
    elements({"a", "sigma"}, d);
  } else if (c.family == "tw_cayley" || c.family == "pa") {
    std::size_t d = group_field("T");
    elements({"a", "b"}, d);
    overgroup(d);
  } else if (c.family == "coset_simple") {
    std::size_t d = group_field("G");
    elements({"h", "g"}, d);
  } else if (c.family == "raw_cayley") {
    std::size_t d = group_field("N");
    elements({"a", "b", "h"}, d);
  } else if (c.family == "raw_coset") {
    std::size_t d = group_field("G");
    c.subgroup = rd.perms(rd.at(doc, {}, "H"), {"H"}, d);
    elements({"s"}, d);
  }
  return c;
}

}  // namespace

PermGroup GroupSpec::build(const EnumerationLimits& limits) const {
  switch (kind) {
    case Kind::alternating: return alternating_group(degree, limits);
    case Kind::symmetric: return symmetric_group(degree, limits);
    case Kind::cyclic: return cyclic_group(degree);
    case Kind::generated: break;
  }
  if (generators.empty()) return PermGroup::trivial(degree);
  return PermGroup::generate(generators, limits);
}

const std::vector<std::string>& construction_families() {
  static const std::vector<std::string> names = {"lex_cycle", "simple_cayley", "tw_cayley",
                                                 "coset_simple", "sym_bigstab", "pa",
                                                 "raw_cayley", "raw_coset"};
  return names;
}

Document parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    auto [line, col] = line_col(text, e.byte ? e.byte - 1 : 0);
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError(msg, line, col);
  }
  Reader rd(text);
  if (!doc.is_object()) rd.fail({}, "expected a JSON object");

  Document out;
  if (doc.contains("family"))
    out.body = parse_construction(rd, doc);
  else
    out.body = parse_pair(rd, doc);

  if (doc.contains("normal")) {
    std::size_t degree = 0;
    if (auto* p = std::get_if<PairSpec>(&out.body)) degree = p->degree;
    // For constructions the vertex degree is only known after building, so
    // the generators are read with their own degree and checked later.
    out.normal = rd.perms(doc["normal"], {"normal"}, degree);
  }
  return out;
}

Checked<Built> build_construction(const ConstructionSpec& spec, const EnumerationLimits& limits) {
  const auto& e = spec.elements;
  if (spec.family == "lex_cycle") return lexicographic_cycle(spec.r);
  if (spec.family == "sym_bigstab") return sym_bigstab(spec.n, limits);

  PermGroup G = spec.group->build(limits);
  if (spec.family == "simple_cayley")
    return simple_cayley(G, e.at("a"), Automorphism::conjugation(G, e.at("sigma")));
  if (spec.family == "tw_cayley" || spec.family == "pa") {
    auto auts = conjugation_automorphisms(G, spec.overgroup->build(limits));
    if (spec.family == "pa") return pa_construction(G, e.at("a"), e.at("b"), auts);
    return tw_cayley(G, e.at("a"), e.at("b"), auts);
  }
  if (spec.family == "coset_simple") return coset_simple(G, e.at("h"), e.at("g"));
  if (spec.family == "raw_cayley")
    return build_cayley({G, e.at("a"), e.at("b"), Automorphism::conjugation(G, e.at("h"))});
  if (spec.family == "raw_coset") {
    PermGroup H = spec.subgroup.empty() ? PermGroup::trivial(G.degree())
                                        : PermGroup::generate(spec.subgroup, limits);
    return build_coset_graph({G, H, e.at("s")});
  }
  throw InvalidArgument("unknown family '" + spec.family + "'");
}

std::string emit_pair_document(const OGPair& pair) {
  // Hand-formatted so that arcs sit one per line and the bytes are stable.
  json gens = json::array();
  for (const auto& g : pair.group.generators())
    if (!g.is_identity()) gens.push_back(g.to_cycle_string());
  std::ostringstream os;
  os << "{\n  \"degree\": " << pair.vertex_count() << ",\n  \"generators\": " << gens.dump()
     << ",\n  \"arcs\": [";
  auto arcs = pair.graph.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i)
    os << (i ? ",\n    " : "\n    ") << "[" << arcs[i].first + 1 << ", " << arcs[i].second + 1 << "]";
  os << (arcs.empty() ? "]" : "\n  ]");
  if (!pair.labels.empty()) os << ",\n  \"labels\": " << json(pair.labels).dump();
  if (pair.certificate && pair.certificate->valency != 4)
    os << ",\n  \"valency\": " << pair.certificate->valency;
  os << "\n}\n";
  return os.str();
}

std::string export_dot(const OGPair& pair) {
  std::ostringstream os;
  os << "digraph og4 {\n";
  for (Point v = 0; v < pair.vertex_count(); ++v)
    os << "  " << v + 1 << " [label=" << json(pair.label(v)).dump() << "];\n";
  for (const auto& [x, y] : pair.graph.arcs()) os << "  " << x + 1 << " -> " << y + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace og4
