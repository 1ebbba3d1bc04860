#pragma once

#include <array>
#include <string>
#include <vector>

#include "lenspec/classes.hpp"
#include "lenspec/spectra.hpp"

namespace lenspec {

/// Stratum label of a residue inside an ExpressionPattern. Zero marks a
/// combination q1 +/- q2 that vanishes mod q; it cannot occur for reduced
/// pairs and is asserted against, not assumed away.
struct PatternLabel {
  enum class Kind { Units, Stratum, Zero };
  Kind kind = Kind::Units;
  long long divisor = 1;

  friend bool operator==(const PatternLabel&, const PatternLabel&) = default;
  friend auto operator<=>(const PatternLabel&, const PatternLabel&) = default;
};

/// The data the k=2 case analyses depend on: where q1 and q2 sit, and where
/// q1 + q2 and q1 - q2 sit. Both pairs are unordered, which absorbs the
/// swap q1 <-> q2 and either sign flip.
struct ExpressionPattern {
  std::array<PatternLabel, 2> operands;      // sorted
  std::array<PatternLabel, 2> combinations;  // sorted: {q1+q2, q1-q2}

  friend bool operator==(const ExpressionPattern&,
                         const ExpressionPattern&) = default;
  friend auto operator<=>(const ExpressionPattern&,
                          const ExpressionPattern&) = default;
};

/// Pattern of a reduced pair (q1, q2). Requires nonzero residues with
/// distinct folds.
ExpressionPattern pattern(const ResidueSystem& sys, long long q1,
                          long long q2);

std::string to_string(const ResidueSystem& sys, const ExpressionPattern& p);

/// Mutually non-isometric classes sharing one SpectralInvariant, each
/// cross-checked against the first member by the series method.
struct IsospectralFamily {
  long long q = 0;
  long long n = 0;
  std::vector<CanonicalClass> members;  // lexicographic, size >= 2
  SpectralInvariant invariant;
  long long verified_to = 0;  // series cross-check depth
};

/// Partitions enumerate_classes(q, n) by SpectralInvariant and returns the
/// groups of size >= 2 in deterministic order. Every family is
/// cross-validated by the series method to depth min(series_cutoff, 200)
/// (or `depth` when given); a disagreement between the two methods is a
/// hard failure (std::logic_error), never a silent fallback.
std::vector<IsospectralFamily> find_families(
    std::shared_ptr<const ResidueSystem> sys, long long n,
    long long depth = -1);

/// Number of distinct ExpressionPatterns realized by the w-complements of
/// all classes of I0(q, q0-2).
long long realized_pattern_count(std::shared_ptr<const ResidueSystem> sys);

/// Case-analysis bound on that count: m^2 for odd p^m, (m-1)^2 for 2^m,
/// 11 for odd p1*p2, 6 for 2p. Throws for the general shape.
long long pattern_bound(const ResidueSystem& sys);

/// Shape-specific sufficiency inequality for the existence of isospectral
/// non-isometric pairs at k = 2. satisfied == true guarantees
/// find_families(q, q0-2) is nonempty (not conversely).
struct SufficiencyRecord {
  long long lhs = 0;
  long long rhs = 0;
  std::string relation;  // "lhs <= rhs" or "lhs >= rhs"
  bool satisfied = false;

  friend bool operator==(const SufficiencyRecord&,
                         const SufficiencyRecord&) = default;
};

/// p^m odd: q0(2m^2+3-q0) <= 2r(m^2+1);  p1 p2 odd: q0(25-q0) <= 24r;
/// 2^m: m^2-2m+3 <= q0;  2p: (p-1)(p-7) >= 0. Throws for general shape.
SufficiencyRecord sufficiency_check(const ResidueSystem& sys);

}  // namespace lenspec
