#pragma once

// Brute-force references used as independent oracles. Permutations here are
// plain image vectors composed left to right, with no sharing of code with
// the library beyond the vocabulary types.

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline Perm mul(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline Perm inv(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

inline Perm id(std::size_t n) {
  Perm r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<int>(i);
  return r;
}

inline std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t n) {
  std::set<Perm> seen{id(n)};
  std::queue<Perm> q;
  q.push(id(n));
  while (!q.empty()) {
    Perm x = q.front();
    q.pop();
    for (const auto& g : gens) {
      Perm y = mul(x, g);
      if (seen.insert(y).second) q.push(y);
    }
  }
  return seen;
}

// Orders of all normal subgroups: unions of conjugacy classes (containing the
// identity) that are closed under multiplication.
inline std::vector<std::size_t> normal_subgroup_orders(const std::set<Perm>& group) {
  std::vector<Perm> els(group.begin(), group.end());
  std::vector<std::vector<Perm>> classes;
  std::set<Perm> done;
  for (const auto& x : els) {
    if (done.count(x)) continue;
    std::set<Perm> cls;
    for (const auto& g : els) cls.insert(mul(mul(inv(g), x), g));
    done.insert(cls.begin(), cls.end());
    classes.emplace_back(cls.begin(), cls.end());
  }
  // classes[0] is the identity class since the identity sorts first.
  std::vector<std::size_t> orders;
  const std::size_t k = classes.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); mask += 2) {
    std::set<Perm> s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) s.insert(classes[i].begin(), classes[i].end());
    bool closed = true;
    for (auto a = s.begin(); closed && a != s.end(); ++a)
      for (const auto& b : s)
        if (!s.count(mul(*a, b))) {
          closed = false;
          break;
        }
    if (closed) orders.push_back(s.size());
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

using Digraph = std::vector<std::vector<int>>;

inline std::vector<bool> reach(const Digraph& g, int s) {
  std::vector<bool> seen(g.size());
  std::vector<int> st{s};
  seen[s] = true;
  while (!st.empty()) {
    int x = st.back();
    st.pop_back();
    for (int y : g[x])
      if (!seen[y]) {
        seen[y] = true;
        st.push_back(y);
      }
  }
  return seen;
}

inline bool strongly_connected(const Digraph& g) {
  for (std::size_t s = 0; s < g.size(); ++s) {
    auto r = reach(g, static_cast<int>(s));
    if (!std::all_of(r.begin(), r.end(), [](bool b) { return b; })) return false;
  }
  return true;
}

inline bool weakly_connected(const Digraph& g) {
  Digraph u(g.size());
  for (std::size_t x = 0; x < g.size(); ++x)
    for (int y : g[x]) {
      u[x].push_back(y);
      u[y].push_back(static_cast<int>(x));
    }
  auto r = reach(u, 0);
  return std::all_of(r.begin(), r.end(), [](bool b) { return b; });
}

// Every s-arc (x0, ..., xs), following out-arcs.
inline std::vector<std::vector<int>> s_arcs(const Digraph& g, std::size_t s) {
  std::vector<std::vector<int>> cur;
  for (std::size_t x = 0; x < g.size(); ++x) cur.push_back({static_cast<int>(x)});
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& a : cur)
      for (int y : g[a.back()]) {
        auto b = a;
        b.push_back(y);
        next.push_back(std::move(b));
      }
    cur.swap(next);
  }
  return cur;
}

// Number of orbits of the group (given by all its elements) on s-arcs.
inline std::size_t s_arc_orbits(const Digraph& g, const std::set<Perm>& group, std::size_t s) {
  auto arcs = s_arcs(g, s);
  std::set<std::vector<int>> left(arcs.begin(), arcs.end());
  std::size_t orbits = 0;
  while (!left.empty()) {
    auto a = *left.begin();
    for (const auto& p : group) {
      std::vector<int> b(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) b[i] = p[a[i]];
      left.erase(b);
    }
    ++orbits;
  }
  return orbits;
}

}  // namespace oracle
