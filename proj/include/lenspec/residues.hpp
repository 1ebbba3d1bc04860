#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace lenspec {

/// Folds x into [0, q0]: min(x mod q, q - x mod q). Identifies x with -x.
long long fold(long long x, long long q);

enum class Shape { PrimePower, Semiprime, General };

/// All residues x in [1, q-1] with gcd(x, q) == divisor, for one proper
/// divisor 1 < divisor < q. For q = p^m the stratum of p^j is B_j; for
/// q = p1*p2 the strata of p1 and p2 are B and C.
struct Stratum {
  long long divisor = 0;
  std::string label;
  std::vector<long long> members;
};

/// Names an index set for character sums: the units A, one stratum, or the
/// full range [1, q] (the latter exists for cross-checking identities).
struct SetId {
  enum class Kind { Units, Stratum, All };
  Kind kind = Kind::Units;
  long long divisor = 1;

  static SetId units() { return {Kind::Units, 1}; }
  static SetId stratum(long long d) { return {Kind::Stratum, d}; }
  static SetId all() { return {Kind::All, 1}; }

  friend bool operator==(const SetId&, const SetId&) = default;
  friend auto operator<=>(const SetId&, const SetId&) = default;
};

/// Residue arithmetic mod a fixed non-prime q >= 7: unit/stratum membership
/// and exact root-of-unity sums over those sets.
///
/// Immutable after construction; safe for unrestricted concurrent use.
class ResidueSystem {
 public:
  /// Classifies q and materializes A and the strata. Throws
  /// std::invalid_argument when q < 7, q is prime, or q0 < 4.
  static std::shared_ptr<const ResidueSystem> build(long long q);

  long long q() const { return q_; }
  long long q0() const { return q0_; }
  Shape shape() const { return shape_; }

  /// Prime factorization of q as (prime, exponent), primes ascending.
  const std::vector<std::pair<long long, int>>& factorization() const {
    return factors_;
  }

  long long fold(long long x) const { return lenspec::fold(x, q_); }
  bool is_unit(long long x) const;

  const std::vector<long long>& units() const { return units_; }
  const std::vector<Stratum>& strata() const { return strata_; }

  /// Count of non-units in [1, q0]; the self-negative residue q/2 of an
  /// even q counts once.
  long long r() const { return r_; }

  /// SetId of the set containing x (x must be nonzero mod q).
  SetId stratum_of(long long x) const;

  std::string label(const SetId& id) const;
  long long set_size(const SetId& id) const;

  /// Exact value of sum over l in S of gamma^{ml}, gamma a primitive q-th
  /// root of unity. Computed through the divisor identity
  ///   sum_{l in [1,q], d|l} gamma^{ml} = q/d if (q/d) | m else 0
  /// and Moebius inversion over the divisor lattice; no floating point.
  long long character_sum(const SetId& id, long long m) const;

 private:
  ResidueSystem() = default;

  long long q_ = 0;
  long long q0_ = 0;
  Shape shape_ = Shape::General;
  std::vector<std::pair<long long, int>> factors_;
  std::vector<long long> divisors_;  // all divisors of q, ascending
  std::vector<long long> units_;
  std::vector<Stratum> strata_;      // ascending divisor
  long long r_ = 0;
};

}  // namespace lenspec
