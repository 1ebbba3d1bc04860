#pragma once

#include <vector>

#include "lenspec/classes.hpp"

namespace lenspec {

/// One singular stratum: the element g^{q/divisor} (of order `divisor`)
/// fixes exactly the coordinates whose rotation parameter is divisible by
/// `divisor`; those coordinates span a fixed sphere S^{2c-1}.
struct SingularStratum {
  long long divisor = 0;      // isotropy order of the stratum
  long long fixed_count = 0;  // c_d: entries divisible by divisor
  long long sphere_dim = 0;   // 2 c_d - 1

  friend bool operator==(const SingularStratum&,
                         const SingularStratum&) = default;
};

struct SingularSignature {
  std::vector<SingularStratum> strata;  // ascending divisor, c_d > 0 only

  /// Empty iff every entry is coprime to q, i.e. the quotient is a manifold.
  bool manifold() const { return strata.empty(); }

  friend bool operator==(const SingularSignature&,
                         const SingularSignature&) = default;
};

SingularSignature singular_signature(const LensTuple& t);

}  // namespace lenspec
