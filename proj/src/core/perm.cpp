#include "perm.hpp"

#include <algorithm>
#include <numeric>

namespace exc::perm {

Perm identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

Perm power(const Perm& a, long k) {
  const int o = order(a);
  k %= o;
  if (k < 0) k += o;
  Perm r = identity(static_cast<int>(a.size()));
  for (long i = 0; i < k; ++i) r = compose(a, r);
  return r;
}

int order(const Perm& a) {
  const Perm id = identity(static_cast<int>(a.size()));
  Perm x = a;
  int k = 1;
  while (x != id) {
    x = compose(a, x);
    ++k;
  }
  return k;
}

bool is_even(const Perm& a) {
  int transpositions = 0;
  std::vector<bool> seen(a.size(), false);
  for (size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

bool Group::subset_of(const Group& h) const {
  return std::includes(h.elems.begin(), h.elems.end(), elems.begin(), elems.end());
}

bool Group::is_cyclic() const {
  for (const auto& g : elems)
    if (order(g) == size()) return true;
  return false;
}

bool Group::is_abelian() const {
  for (const auto& a : elems)
    for (const auto& b : elems)
      if (compose(a, b) != compose(b, a)) return false;
  return true;
}

Group generate(int n, const std::vector<Perm>& gens) {
  Group g;
  g.n = n;
  g.elems.insert(identity(n));
  std::vector<Perm> frontier{identity(n)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        Perm y = compose(s, x);
        if (g.elems.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return g;
}

Group symmetric(int n) {
  Perm t = identity(n), c(n);
  std::swap(t[0], t[1]);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return generate(n, {t, c});
}

Group alternating(int n) {
  Group s = symmetric(n), a;
  a.n = n;
  for (const auto& g : s.elems)
    if (is_even(g)) a.elems.insert(g);
  return a;
}

std::vector<Group> small_subgroups(const Group& g) {
  std::set<std::set<Perm>> seen;
  std::vector<Group> out;
  std::vector<Perm> el(g.elems.begin(), g.elems.end());
  for (size_t i = 0; i < el.size(); ++i)
    for (size_t j = i; j < el.size(); ++j) {
      Group h = generate(g.n, {el[i], el[j]});
      if (seen.insert(h.elems).second) out.push_back(std::move(h));
    }
  std::sort(out.begin(), out.end(), [](const Group& a, const Group& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.elems < b.elems;
  });
  return out;
}

bool is_normal(const Group& h, const Group& g) {
  for (const auto& x : g.elems) {
    const Perm xi = inverse(x);
    for (const auto& y : h.elems)
      if (!h.contains(compose(x, compose(y, xi)))) return false;
  }
  return true;
}

std::vector<std::vector<int>> orbits(const Group& g) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(g.n, false);
  for (int i = 0; i < g.n; ++i) {
    if (seen[i]) continue;
    std::set<int> orb;
    for (const auto& x : g.elems) orb.insert(x[i]);
    for (int j : orb) seen[j] = true;
    out.emplace_back(orb.begin(), orb.end());
  }
  return out;
}

int orbit_size(const Group& g, int point) {
  std::set<int> orb;
  for (const auto& x : g.elems) orb.insert(x[point]);
  return static_cast<int>(orb.size());
}

}  // namespace exc::perm
