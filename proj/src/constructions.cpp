#include "og4/constructions.hpp"

#include <algorithm>
#include <limits>

namespace og4 {

namespace {

std::string n_str(std::size_t v) { return std::to_string(v); }

Checked<Built> refute(ClauseLog& log) { return Checked<Built>::from_log(std::move(log)); }

// Looks up p in group, recording the membership clause.
std::optional<ElementId> member(ClauseLog& log, const std::string& tag, const PermGroup& group,
                                const Permutation& p, const std::string& name) {
  std::optional<ElementId> id;
  if (p.degree() == group.degree()) id = group.find(p);
  log.check(tag, id.has_value(), name + " = " + p.to_cycle_string());
  return id;
}

// (x, y) in T x T acting on two copies of T's points.
Permutation pair_perm(const Permutation& x, const Permutation& y) {
  const std::size_t d = x.degree();
  std::vector<Point> img(2 * d);
  for (Point p = 0; p < d; ++p) {
    img[p] = x(p);
    img[p + d] = static_cast<Point>(y(p) + d);
  }
  return Permutation(std::move(img));
}

Permutation factor_swap(std::size_t d) {
  std::vector<Point> img(2 * d);
  for (Point p = 0; p < d; ++p) {
    img[p] = static_cast<Point>(p + d);
    img[p + d] = p;
  }
  return Permutation(std::move(img));
}

// Components of an element of T x T (as built by pair_perm / direct_product).
std::pair<ElementId, ElementId> components(const PermGroup& T, const PermGroup& N, ElementId n) {
  const std::size_t d = T.degree();
  auto row = N.row(n);
  std::vector<Point> x(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(d));
  std::vector<Point> y(d);
  for (std::size_t p = 0; p < d; ++p) y[p] = static_cast<Point>(row[p + d] - d);
  auto ix = T.find(x), iy = T.find(y);
  if (!ix || !iy) throw InvariantViolation("element of T x T has a component outside T");
  return {*ix, *iy};
}

struct CosetAction {
  std::vector<std::uint32_t> coset_of;  // per element of G
  std::vector<ElementId> reps;          // least element of each coset

  Permutation vertex_perm(const PermGroup& G, ElementId g) const {
    std::vector<Point> img(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) img[c] = coset_of[G.mul(reps[c], g)];
    return Permutation(std::move(img));
  }
};

// Right cosets Hx, numbered in order of their least element.
CosetAction coset_action(const PermGroup& G, const ElementSet& H) {
  CosetAction a;
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  a.coset_of.assign(G.order(), unset);
  for (ElementId x = 0; x < G.order(); ++x) {
    if (a.coset_of[x] != unset) continue;
    auto c = static_cast<std::uint32_t>(a.reps.size());
    a.reps.push_back(x);
    for (ElementId h : H) a.coset_of[G.mul(h, x)] = c;
  }
  return a;
}

ElementSet double_coset(const PermGroup& G, const ElementSet& H, ElementId s) {
  ElementSet out;
  for (ElementId h1 : H) {
    ElementId hs = G.mul(h1, s);
    for (ElementId h2 : H) out.push_back(G.mul(hs, h2));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// |H cap H^s| with H^s = s^-1 H s.
std::size_t conjugate_intersection(const PermGroup& G, const ElementSet& H, ElementId s) {
  std::size_t count = 0;
  for (ElementId h : H)
    if (std::binary_search(H.begin(), H.end(), G.conj(h, s))) ++count;
  return count;
}

// Largest normal subgroup of G inside H.
std::size_t core_order(const PermGroup& G, const ElementSet& H) {
  std::vector<char> in(G.order(), 0);
  for (ElementId h : H) in[h] = 1;
  ElementSet core = H;
  for (bool changed = true; changed;) {
    changed = false;
    for (ElementId g : G.generator_ids()) {
      ElementId gi = G.inv(g);
      ElementSet next;
      for (ElementId x : core)
        if (in[G.conj(x, gi)]) next.push_back(x);  // g x g^-1 in core
      if (next.size() != core.size()) {
        changed = true;
        for (ElementId x : core) in[x] = 0;
        for (ElementId x : next) in[x] = 1;
        core = std::move(next);
      }
    }
  }
  return core.size();
}

Checked<Built> coset_graph(const CosetSpec& spec, const std::vector<Permutation>& normal_in_g,
                           ClauseLog log) {
  const PermGroup& G = spec.G;
  ElementSet H;
  bool is_sub = spec.H.degree() == G.degree() && G.contains_group(spec.H);
  if (!log.check("coset:h_subgroup", is_sub, "|H| = " + n_str(spec.H.order()))) return refute(log);
  H = G.ids_of(spec.H);
  auto s = member(log, "coset:s_in_g", G, spec.s, "s");
  if (!s) return refute(log);
  if (!log.check("coset:h_proper", H.size() < G.order())) return refute(log);

  std::size_t core = core_order(G, H);
  log.check("coset:core_free", core == 1, "core of order " + n_str(core));
  ElementSet hsh = double_coset(G, H, *s);
  log.check("coset:s_inverse_outside", !std::binary_search(hsh.begin(), hsh.end(), G.inv(*s)),
            "|HsH| = " + n_str(hsh.size()));
  std::size_t meet = conjugate_intersection(G, H, *s);
  log.check("coset:index_two", meet * 2 == H.size(),
            "|H : H cap H^s| = " + n_str(H.size()) + "/" + n_str(meet));
  std::vector<ElementId> gens(spec.H.generator_ids().size());
  for (std::size_t i = 0; i < gens.size(); ++i) gens[i] = *G.find(spec.H.generators()[i]);
  gens.push_back(*s);
  std::size_t generated = G.closure(gens).size();
  log.check("coset:generates", generated == G.order(),
            "<H, s> of order " + n_str(generated) + " in " + n_str(G.order()));
  if (!log.all_hold()) return refute(log);

  CosetAction act = coset_action(G, H);
  const std::size_t n = act.reps.size();
  std::vector<ElementId> reps_of_hsh;  // one element per coset inside HsH
  {
    std::vector<char> seen(n, 0);
    for (ElementId d : hsh)
      if (!seen[act.coset_of[d]]) {
        seen[act.coset_of[d]] = 1;
        reps_of_hsh.push_back(d);
      }
  }
  std::vector<Arc> arcs;
  for (std::size_t c = 0; c < n; ++c)
    for (ElementId d : reps_of_hsh)
      arcs.push_back({static_cast<Point>(c), act.coset_of[G.mul(d, act.reps[c])]});

  std::vector<Permutation> vgens;
  for (ElementId g : G.generator_ids()) vgens.push_back(act.vertex_perm(G, g));
  PermGroup vg = PermGroup::generate(vgens);
  log.check("coset:faithful", vg.order() == G.order(), "vertex action of order " + n_str(vg.order()));

  std::vector<std::string> labels(n);
  for (std::size_t c = 0; c < n; ++c)
    labels[c] = act.reps[c] == PermGroup::identity_id ? "H" : "H" + G.element(act.reps[c]).to_cycle_string();

  std::vector<Permutation> normal_v;
  for (const auto& p : normal_in_g) normal_v.push_back(act.vertex_perm(G, *G.find(p)));

  auto pair = certify(OrientedGraph(n, std::move(arcs)), std::move(vg), std::move(labels), 4);
  log.append(pair.clauses());
  if (!pair || !log.all_hold()) return refute(log);
  return Checked<Built>::success(Built{*pair, std::move(normal_v)}, std::move(log).take());
}

}  // namespace

PermGroup Built::normal_subgroup() const {
  std::vector<ElementId> ids;
  for (const auto& p : normal_generators) {
    auto id = pair.group.find(p);
    if (!id) throw InvariantViolation("normal generator outside the acting group");
    ids.push_back(*id);
  }
  return pair.group.subgroup_generated(ids);
}

std::vector<Permutation> right_multiplications(const PermGroup& N) {
  std::vector<Permutation> out;
  for (ElementId g : N.generator_ids()) {
    std::vector<Point> img(N.order());
    for (ElementId x = 0; x < N.order(); ++x) img[x] = N.mul(x, g);
    out.emplace_back(std::move(img));
  }
  return out;
}

Checked<Built> build_cayley(const CayleySpec& spec) {
  const PermGroup& N = spec.N;
  const Automorphism& h = spec.h;
  ClauseLog log;
  auto a = member(log, "cayley:a_in_n", N, spec.a, "a");
  auto b = member(log, "cayley:b_in_n", N, spec.b, "b");
  if (!a || !b) return refute(log);
  if (!log.check("cayley:h_automorphism", is_automorphism(N, h.table()), h.description))
    return refute(log);

  bool involution = true;
  for (ElementId x = 0; x < N.order() && involution; ++x) involution = h(h(x)) == x;
  log.check("cayley:h_involution", involution);
  log.check("cayley:h_swaps_a_b", h(*a) == *b && h(*b) == *a);
  log.check("cayley:a_ne_b", *a != *b);
  log.check("cayley:a2_ne_1", N.mul(*a, *a) != PermGroup::identity_id);
  log.check("cayley:b2_ne_1", N.mul(*b, *b) != PermGroup::identity_id);
  log.check("cayley:ab_ne_1", N.mul(*a, *b) != PermGroup::identity_id);
  std::vector<ElementId> s0{*a, *b};
  std::size_t generated = N.closure(s0).size();
  log.check("cayley:generates", generated == N.order(),
            "<a, b> of order " + n_str(generated) + " in " + n_str(N.order()));
  if (!log.all_hold()) return refute(log);

  const std::size_t n = N.order();
  std::vector<Arc> arcs;
  arcs.reserve(2 * n);
  for (ElementId x = 0; x < n; ++x) {
    arcs.push_back({x, N.mul(*a, x)});
    arcs.push_back({x, N.mul(*b, x)});
  }
  std::vector<Permutation> right = right_multiplications(N);
  std::vector<Permutation> gens = right;
  gens.emplace_back(std::vector<Point>(h.table().begin(), h.table().end()));
  PermGroup G = PermGroup::generate(gens);
  log.check("cayley:semidirect_order", G.order() == 2 * n, "|G| = " + n_str(G.order()));

  std::vector<std::string> labels(n);
  for (ElementId x = 0; x < n; ++x) labels[x] = N.element(x).to_cycle_string();
  auto pair = certify(OrientedGraph(n, std::move(arcs)), std::move(G), std::move(labels), 4);
  log.append(pair.clauses());
  if (!pair || !log.all_hold()) return refute(log);
  return Checked<Built>::success(Built{*pair, std::move(right)}, std::move(log).take());
}

Checked<Built> lexicographic_cycle(std::size_t r) {
  if (r < 3) throw InvalidArgument("lexicographic cycle needs r >= 3, got " + n_str(r));
  const std::size_t n = 2 * r;
  auto idx = [](std::size_t i, std::size_t j) { return static_cast<Point>(2 * i + j); };
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) arcs.push_back({idx(i, j), idx((i + 1) % r, k)});
  std::vector<Point> tau(n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < 2; ++j) tau[idx(i, j)] = idx((i + 1) % r, j);
  std::vector<Permutation> flips;
  for (std::size_t i = 0; i < r; ++i)
    flips.push_back(Permutation::from_cycles(n, {{idx(i, 0), idx(i, 1)}}));
  PermGroup G = PermGroup::generate({Permutation(tau), flips.front()});
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < 2; ++j) labels[idx(i, j)] = "(" + n_str(i) + "," + n_str(j) + ")";

  ClauseLog log;
  log.check("lex:wreath_order", G.order() == r * (std::size_t{1} << r), "|G| = " + n_str(G.order()));
  auto pair = certify(OrientedGraph(n, std::move(arcs)), std::move(G), std::move(labels), 4);
  log.append(pair.clauses());
  if (!pair || !log.all_hold()) return refute(log);
  return Checked<Built>::success(Built{*pair, std::move(flips)}, std::move(log).take());
}

Checked<Built> simple_cayley(const PermGroup& T, const Permutation& a, const Automorphism& sigma) {
  ClauseLog log;
  log.check("simple_cayley:t_simple", is_nonabelian_simple(T), "|T| = " + n_str(T.order()));
  bool involution = true;
  for (ElementId x = 0; x < T.order() && involution; ++x) involution = sigma(sigma(x)) == x;
  log.check("simple_cayley:sigma_involution", involution, sigma.description);
  auto ia = member(log, "simple_cayley:a_in_t", T, a, "a");
  if (!ia) return refute(log);
  ElementId as = sigma(*ia);
  log.check("simple_cayley:a_not_involution", T.mul(*ia, *ia) != PermGroup::identity_id);
  log.check("simple_cayley:a_sigma_ne_a_inverse", as != T.inv(*ia),
            "a^sigma = " + T.element(as).to_cycle_string());
  std::vector<ElementId> s0{*ia, as};
  std::size_t generated = T.closure(s0).size();
  log.check("simple_cayley:generates", generated == T.order(),
            "<a, a^sigma> of order " + n_str(generated));
  if (!log.all_hold()) return refute(log);
  auto built = build_cayley({T, a, T.element(as), sigma});
  log.append(built.clauses());
  if (!built) return refute(log);
  return Checked<Built>::success(*built, std::move(log).take());
}

Checked<Built> tw_cayley(const PermGroup& T, const Permutation& a, const Permutation& b,
                         const std::vector<Automorphism>& automorphisms) {
  ClauseLog log;
  log.check("tw:t_simple", is_nonabelian_simple(T), "|T| = " + n_str(T.order()));
  auto ia = member(log, "tw:a_in_t", T, a, "a");
  auto ib = member(log, "tw:b_in_t", T, b, "b");
  if (!ia || !ib) return refute(log);
  bool both_involutions =
      T.mul(*ia, *ia) == PermGroup::identity_id && T.mul(*ib, *ib) == PermGroup::identity_id;
  bool inverse_pair = *ib == T.inv(*ia);
  log.check("tw:s0_disjoint", !both_involutions && !inverse_pair,
            both_involutions ? "(a,b) is an involution" : inverse_pair ? "b = a^-1" : "");
  std::vector<ElementId> ab{*ia, *ib};
  std::size_t generated = T.closure(ab).size();
  log.check("tw:generates", generated == T.order(), "<a, b> of order " + n_str(generated));
  std::string swapper;
  for (const auto& nu : automorphisms) {
    if (nu.table().size() != T.order()) throw InvalidArgument("automorphism inventory is for another group");
    if (nu(*ia) == *ib && nu(*ib) == *ia) {
      swapper = nu.description.empty() ? "an inventory automorphism" : nu.description;
      break;
    }
  }
  log.check("tw:no_swapping_automorphism", swapper.empty(),
            swapper.empty() ? n_str(automorphisms.size()) + " automorphisms checked" : swapper + " swaps a and b");
  // Both projections of S0 are {a, b}, which generates T.
  log.check("tw:projections_full", generated == T.order());
  if (!log.all_hold()) return refute(log);

  const std::size_t d = T.degree();
  PermGroup N = direct_product(T, T);
  Automorphism tau = Automorphism::conjugation(N, factor_swap(d));
  tau.description = "coordinate swap";
  auto built = build_cayley({N, pair_perm(a, b), pair_perm(b, a), tau});
  log.append(built.clauses());
  if (!built) return refute(log);
  return Checked<Built>::success(*built, std::move(log).take());
}

Checked<Built> build_coset_graph(const CosetSpec& spec) { return coset_graph(spec, {}, ClauseLog{}); }

Checked<Built> coset_simple(const PermGroup& G, const Permutation& h, const Permutation& g) {
  ClauseLog log;
  log.check("coset_simple:g_simple", is_nonabelian_simple(G), "|G| = " + n_str(G.order()));
  auto ih = member(log, "coset_simple:h_in_g", G, h, "h");
  auto ig = member(log, "coset_simple:g_in_g", G, g, "g");
  if (!ih || !ig) return refute(log);
  log.check("coset_simple:h_involution",
            *ih != PermGroup::identity_id && G.mul(*ih, *ih) == PermGroup::identity_id);
  ElementId gh = G.conj(*ig, *ih);
  log.check("coset_simple:g_h_ne_g", gh != *ig);
  ElementId gi = G.inv(*ig);
  ElementId quad[4] = {*ig, G.mul(*ih, *ig), G.mul(*ig, *ih), G.mul(G.mul(*ih, *ig), *ih)};
  bool outside = std::find(std::begin(quad), std::end(quad), gi) == std::end(quad);
  log.check("coset_simple:g_inverse_outside", outside, "g^-1 not in {g, hg, gh, hgh}");
  std::vector<ElementId> pair_ids{*ig, gh};
  std::size_t generated = G.closure(pair_ids).size();
  log.check("coset_simple:generates", generated == G.order(), "<g, g^h> of order " + n_str(generated));
  if (!log.all_hold()) return refute(log);
  std::vector<ElementId> hs{*ih};
  PermGroup H = G.subgroup_generated(hs);
  ElementSet Hids = G.ids_of(H);
  log.check("coset_simple:trivial_intersection", conjugate_intersection(G, Hids, *ig) == 1);
  return coset_graph({G, H, g}, {}, std::move(log));
}

Checked<Built> sym_bigstab(std::size_t n, const EnumerationLimits& limits) {
  if (n < 5 || n % 2 == 0) throw InvalidArgument("sym_bigstab needs odd n >= 5, got " + n_str(n));
  const std::size_t m = (n - 1) / 2;
  PermGroup G = symmetric_group(n, limits);
  std::vector<ElementId> hgens;
  for (Point i = 0; i < m; ++i)
    hgens.push_back(*G.find(Permutation::from_cycles(n, {{i, static_cast<Point>(i + m)}})));
  PermGroup H = G.subgroup_generated(hgens);
  std::vector<Point> cyc(n);
  for (Point i = 0; i < n; ++i) cyc[i] = i;
  Permutation g = Permutation::from_cycles(n, {cyc});

  ClauseLog log;
  log.check("bigstab:h_order", H.order() == (std::size_t{1} << m), "|H| = " + n_str(H.order()));
  // The generators are transpositions, so H has odd elements; Alt(n) is far larger than H.
  log.check("bigstab:h_has_odd", !H.generators().empty() && H.generators().front().cycles().size() == 1 &&
                                     H.generators().front().cycles().front().size() == 2);
  log.check("bigstab:alt_not_in_h", H.order() < G.order() / 2);
  PermGroup alt = alternating_group(n, limits);
  auto built = coset_graph({G, H, g}, alt.generators(), std::move(log));
  if (!built) return built;
  ClauseLog out;
  out.append(built.clauses());
  out.check("bigstab:stabilizer_order", built->pair.certificate->stabilizer_order == (std::size_t{1} << m),
            "|G_x| = " + n_str(built->pair.certificate->stabilizer_order));
  if (!out.all_hold()) return refute(out);
  return Checked<Built>::success(*built, std::move(out).take());
}

Checked<Built> pa_construction(const PermGroup& T, const Permutation& a, const Permutation& b,
                               const std::vector<Automorphism>& automorphisms) {
  ClauseLog log;
  log.check("pa:t_simple", is_nonabelian_simple(T), "|T| = " + n_str(T.order()));
  auto ia = member(log, "pa:a_in_t", T, a, "a");
  auto ib = member(log, "pa:b_in_t", T, b, "b");
  if (!ia || !ib) return refute(log);
  log.check("pa:a_involution", *ia != PermGroup::identity_id && T.mul(*ia, *ia) == PermGroup::identity_id);
  std::vector<ElementId> ab{*ia, *ib};
  std::size_t generated = T.closure(ab).size();
  log.check("pa:generates", generated == T.order(), "<a, b> of order " + n_str(generated));
  ElementId ba = T.mul(*ib, *ia);
  std::size_t centralizing = 0;
  std::string offender;
  for (const auto& nu : automorphisms) {
    if (nu.table().size() != T.order()) throw InvalidArgument("automorphism inventory is for another group");
    if (nu(*ia) != *ia) continue;
    ++centralizing;
    if (nu(*ib) == ba && offender.empty()) offender = nu.description;
  }
  log.check("pa:no_centralizing_conjugate", offender.empty(),
            offender.empty() ? n_str(centralizing) + " automorphisms centralizing a checked"
                             : offender + " maps b to ba");
  if (!log.all_hold()) return refute(log);

  const std::size_t d = T.degree();
  PermGroup N = direct_product(T, T);
  std::vector<Permutation> ggens = N.generators();
  Permutation iota = factor_swap(d);
  ggens.push_back(iota);
  PermGroup G = PermGroup::generate(ggens);
  std::vector<ElementId> hgens{*G.find(pair_perm(a, a)), *G.find(iota)};
  PermGroup H = G.subgroup_generated(hgens);
  Permutation g = pair_perm(b, b * a);
  ElementId gid = *G.find(g);
  ElementSet Hids = G.ids_of(H);

  log.check("pa:h_klein", H.order() == 4 && is_elementary_abelian(H), "|H| = " + n_str(H.order()));
  std::size_t bad = 0;
  for (ElementId h1 : Hids)
    for (ElementId h2 : Hids)
      if (G.mul(G.mul(h1, gid), h2) == G.inv(gid)) ++bad;
  log.check("pa:sixteen_pairs", bad == 0 && Hids.size() * Hids.size() == 16,
            n_str(Hids.size() * Hids.size()) + " pairs, " + n_str(bad) + " with g^-1 = h g h'");
  log.check("pa:index_two", conjugate_intersection(G, Hids, gid) == 2,
            "|H cap H^g| = " + n_str(conjugate_intersection(G, Hids, gid)));
  return coset_graph({G, H, g}, N.generators(), std::move(log));
}

PermGroup pgl2_7() {
  constexpr Point inf = 7;
  std::vector<Point> shift(8), scale(8), invert(8);
  for (Point x = 0; x < 7; ++x) {
    shift[x] = (x + 1) % 7;
    scale[x] = (3 * x) % 7;
    Point inv = 1;
    while (x != 0 && (inv * x) % 7 != 1) ++inv;
    invert[x] = x == 0 ? inf : (7 - inv) % 7;  // -1/x
  }
  shift[inf] = inf;
  scale[inf] = inf;
  invert[inf] = 0;
  return PermGroup::generate({Permutation(shift), Permutation(scale), Permutation(invert)});
}

TwentyOneReport twenty_one_vertex_check() {
  TwentyOneReport rep;
  ClauseLog log;
  PermGroup G = pgl2_7();
  rep.group_order = G.order();
  log.check("pgl:order_336", G.order() == 336);

  // A dihedral Sylow 2-subgroup: an element of order 8 and an involution inverting it.
  std::optional<ElementId> rot, refl;
  for (ElementId x = 0; x < G.order() && !rot; ++x)
    if (G.element_order(x) == 8) rot = x;
  if (rot) {
    ElementSet cyc = G.closure(std::vector<ElementId>{*rot});
    for (ElementId t = 0; t < G.order() && !refl; ++t)
      if (G.element_order(t) == 2 && !std::binary_search(cyc.begin(), cyc.end(), t) &&
          G.conj(*rot, t) == G.inv(*rot))
        refl = t;
  }
  if (!log.check("pgl:dihedral_16", rot && refl)) {
    rep.clauses = std::move(log).take();
    return rep;
  }
  ElementSet H = G.closure(std::vector<ElementId>{*rot, *refl});
  rep.stabilizer_order = H.size();
  rep.stabilizer_dihedral = H.size() == 16;

  std::optional<ElementId> s;
  for (ElementId x = 0; x < G.order() && !s; ++x) {
    if (std::binary_search(H.begin(), H.end(), x)) continue;
    if (conjugate_intersection(G, H, x) * 4 != H.size()) continue;
    ElementSet hsh = double_coset(G, H, x);
    if (!std::binary_search(hsh.begin(), hsh.end(), G.inv(x))) continue;
    std::vector<ElementId> gens{*rot, *refl, x};
    if (G.closure(gens).size() == G.order()) s = x;
  }
  if (!log.check("pgl:s_found", s.has_value(), "|H : H cap H^s| = 4, s^-1 in HsH, <H, s> = G")) {
    rep.clauses = std::move(log).take();
    return rep;
  }
  rep.s = G.element(*s);

  CosetAction act = coset_action(G, H);
  const std::size_t n = act.reps.size();
  rep.vertices = n;
  ElementSet hsh = double_coset(G, H, *s);
  std::vector<Arc> arcs;
  for (std::size_t c = 0; c < n; ++c)
    for (ElementId d : hsh) arcs.push_back({static_cast<Point>(c), act.coset_of[G.mul(d, act.reps[c])]});
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  OrientedGraph full(n, arcs);
  rep.valency = full.out(0).size();
  std::vector<Permutation> vgens;
  for (ElementId g : G.generator_ids()) vgens.push_back(act.vertex_perm(G, g));
  PermGroup VG = PermGroup::generate(vgens);
  rep.arc_transitive = orientation_status(full, VG) == OrientationStatus::arc_transitive;
  log.check("pgl:21_vertices", n == 21);
  log.check("pgl:valency_4", rep.valency == 4 && full.is_symmetric());
  log.check("pgl:arc_transitive", rep.arc_transitive);
  log.check("pgl:connected", connectivity(full).connected);

  // The Frobenius group of order 42 fixes infinity.
  ElementSet F;
  for (ElementId x = 0; x < G.order(); ++x)
    if (G.image(x, 7) == 7) F.push_back(x);
  rep.frobenius_order = F.size();
  std::vector<Permutation> fgens;
  PermGroup frobenius = G.subgroup(F);
  for (ElementId f : frobenius.generator_ids()) fgens.push_back(act.vertex_perm(G, F[f]));
  PermGroup VF = PermGroup::generate(fgens);
  log.check("pgl:frobenius_42", VF.order() == 42);

  OrientedGraph delta = orbital_graph(VF, full.arc(0));
  std::vector<std::string> labels(n);
  for (std::size_t c = 0; c < n; ++c)
    labels[c] = act.reps[c] == PermGroup::identity_id ? "H" : "H" + G.element(act.reps[c]).to_cycle_string();
  auto pair = certify(delta, VF, labels, 4);
  log.append(pair.clauses());
  if (pair) rep.pair = *pair;
  rep.arc_orbits = arc_orbit_count(delta, VF);
  log.check("pgl:two_arc_orbits", rep.arc_orbits == 2);

  OrientedGraph reversed = reverse_arcs(delta);
  for (ElementId x = 0; x < VG.order(); ++x) {
    auto row = VG.row(x);
    bool meets = false, all = true;
    for (const Arc& a : delta.arcs()) {
      bool into = reversed.has_arc(row[a.first], row[a.second]);
      meets = meets || into;
      all = all && into;
    }
    rep.elements_meeting_reverse += meets;
    rep.elements_swapping += all;
  }
  log.check("pgl:no_swap", rep.elements_swapping == 0,
            n_str(rep.elements_meeting_reverse) + " elements carry some arc into the paired orbital, " +
                n_str(rep.elements_swapping) + " map it onto the paired orbital");
  rep.clauses = std::move(log).take();
  return rep;
}

TwistNormalization normalize_twisted_cayley(const PermGroup& T, const Permutation& a1,
                                            const Permutation& a2, const Automorphism& sigma,
                                            const std::vector<Automorphism>& automorphisms) {
  TwistNormalization out;
  ClauseLog log;
  PermGroup N = direct_product(T, T);
  std::vector<ElementId> sigma_inv(T.order());
  for (ElementId x = 0; x < T.order(); ++x) sigma_inv[sigma(x)] = x;

  auto pack = [&](ElementId x, ElementId y) { return *N.find(pair_perm(T.element(x), T.element(y))); };
  // h = (sigma, sigma^-1) tau : (x, y) -> (y^sigma^-1, x^sigma)
  std::vector<ElementId> h(N.order()), beta(N.order()), tau(N.order());
  for (ElementId n = 0; n < N.order(); ++n) {
    auto [x, y] = components(T, N, n);
    h[n] = pack(sigma_inv[y], sigma(x));
    beta[n] = pack(sigma(x), y);
    tau[n] = pack(y, x);
  }
  Automorphism ha = Automorphism::from_table(N, h);
  ha.description = "(sigma, sigma^-1) tau";
  auto ia1 = T.find(a1), ia2 = T.find(a2);
  if (!ia1 || !ia2) throw InvalidArgument("a1 and a2 must lie in T");
  ElementId a = pack(*ia1, *ia2);
  auto twisted = build_cayley({N, N.element(a), N.element(ha(a)), ha});
  log.append(twisted.clauses());
  auto normalized = tw_cayley(T, T.element(sigma(*ia1)), a2, automorphisms);
  log.append(normalized.clauses());
  if (!twisted || !normalized) {
    out.clauses = std::move(log).take();
    return out;
  }
  out.twisted = *twisted;
  out.normalized = *normalized;
  out.bijection.assign(beta.begin(), beta.end());

  const OrientedGraph& g1 = twisted->pair.graph;
  const OrientedGraph& g2 = normalized->pair.graph;
  bool maps = g1.arc_count() == g2.arc_count();
  for (std::size_t i = 0; i < g1.arc_count() && maps; ++i) {
    Arc e = g1.arc(i);
    maps = g2.has_arc(beta[e.first], beta[e.second]);
  }
  out.maps_arcs = maps;
  bool swap = true;
  for (ElementId v = 0; v < N.order() && swap; ++v) swap = beta[h[v]] == tau[beta[v]];
  out.h_becomes_swap = swap;
  log.check("normalize:isomorphism", maps);
  log.check("normalize:h_becomes_swap", swap);
  out.clauses = std::move(log).take();
  return out;
}

}  // namespace og4
