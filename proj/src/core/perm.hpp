#pragma once

#include <set>
#include <vector>

namespace exc::perm {

using Perm = std::vector<int>;

Perm identity(int n);
/// (a * b)(x) = a(b(x))
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
Perm power(const Perm& a, long k);
int order(const Perm& a);
bool is_even(const Perm& a);

struct Group {
  int n = 0;
  std::set<Perm> elems;

  int size() const { return static_cast<int>(elems.size()); }
  bool contains(const Perm& g) const { return elems.count(g) > 0; }
  bool subset_of(const Group& h) const;
  bool is_cyclic() const;
  bool is_abelian() const;
};

Group generate(int n, const std::vector<Perm>& gens);
Group symmetric(int n);
Group alternating(int n);
/// All subgroups generated by at most two elements (every subgroup of S4 and A5).
std::vector<Group> small_subgroups(const Group& g);
bool is_normal(const Group& h, const Group& g);
/// Orbits on {0..n-1}, each sorted, ordered by smallest point.
std::vector<std::vector<int>> orbits(const Group& g);
int orbit_size(const Group& g, int point);

}  // namespace exc::perm
