#pragma once

#include "poly.hpp"

#include <string>
#include <vector>

namespace exc {

enum class GroupKind { A4, S4, A5, Other };

struct GlobalGroup {
  GroupKind kind = GroupKind::Other;
  std::string reason;  // set for Other

  std::string label() const;
  bool exceptional() const { return kind != GroupKind::Other; }
};

struct IrreducibilityScreen {
  bool rejected = false;
  bool proven = false;  // factorization patterns exclude every proper factor degree
  std::string note;
};

/// Irreducibility screen: rational roots plus factorization patterns modulo
/// the first 20 primes not dividing lc(f) * disc(f). When the patterns leave
/// room for a proper factor of a quartic or quintic, quadratic factors are
/// searched exactly; higher degrees are then only trusted.
IrreducibilityScreen screen_irreducible(const ZPoly& f);

/// Classical cubic resolvent with roots r1 r2 + r3 r4, r1 r3 + r2 r4, r1 r4 + r2 r3.
/// A non-monic quartic is first replaced by its monic transform.
ZPoly resolvent_cubic(const ZPoly& f);

/// Degree-6 resolvent of a quintic whose roots are the squares of
/// (x1x2 + x2x3 + x3x4 + x4x5 + x5x1) - (x1x3 + x3x5 + x5x2 + x2x4 + x4x1)
/// and conjugates; it has a rational root iff the group lies in F20 (for a
/// squarefree resolvent). Computed exactly in the universal splitting algebra
/// of the monic transform.
ZPoly sextic_resolvent(const ZPoly& f);

GlobalGroup galois_group(const ZPoly& f);

bool is_non_real(const ZPoly& f);

}  // namespace exc
