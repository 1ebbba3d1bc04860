#include "lenspec/geometry.hpp"

namespace lenspec {

SingularSignature singular_signature(const LensTuple& t) {
  const long long q = t.q();
  SingularSignature sig;
  // Folding preserves divisibility by divisors of q, so the folded entries
  // carry the same counts as the unfolded parameters.
  for (long long d = 2; d <= q; ++d) {
    if (q % d != 0) continue;
    long long count = 0;
    for (long long e : t.entries())
      if (e % d == 0) ++count;
    if (count > 0) sig.strata.push_back({d, count, 2 * count - 1});
  }
  return sig;
}

}  // namespace lenspec
