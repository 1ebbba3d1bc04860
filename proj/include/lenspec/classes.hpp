#pragma once

#include <memory>
#include <vector>

#include "lenspec/bigint.hpp"
#include "lenspec/residues.hpp"

namespace lenspec {

/// A reduced tuple of rotation parameters: entries folded into [1, q0],
/// sorted, pairwise distinct. A tuple defines an effective action (a lens
/// space with fundamental group of order q) iff gcd(entries, q) == 1;
/// complement tuples produced by w may be non-effective and are still valid
/// here.
class LensTuple {
 public:
  /// Folds, sorts and validates raw entries. Throws std::invalid_argument on
  /// an entry congruent to 0 or on two entries with equal folds.
  static LensTuple make(std::shared_ptr<const ResidueSystem> sys,
                        const std::vector<long long>& raw);

  const ResidueSystem& system() const { return *sys_; }
  const std::shared_ptr<const ResidueSystem>& system_ptr() const {
    return sys_;
  }
  const std::vector<long long>& entries() const { return entries_; }
  long long n() const { return static_cast<long long>(entries_.size()); }
  long long q() const { return sys_->q(); }

  /// gcd(entries, q) == 1, i.e. the generated rotation has order exactly q.
  bool effective() const;

  friend bool operator==(const LensTuple& a, const LensTuple& b) {
    return a.q() == b.q() && a.entries_ == b.entries_;
  }

 private:
  LensTuple(std::shared_ptr<const ResidueSystem> sys,
            std::vector<long long> entries)
      : sys_(std::move(sys)), entries_(std::move(entries)) {}

  std::shared_ptr<const ResidueSystem> sys_;
  std::vector<long long> entries_;
};

/// The lexicographically minimal representative of an isometry class.
class CanonicalClass {
 public:
  explicit CanonicalClass(LensTuple tuple) : tuple_(std::move(tuple)) {}

  const LensTuple& tuple() const { return tuple_; }
  const std::vector<long long>& entries() const { return tuple_.entries(); }
  long long q() const { return tuple_.q(); }
  long long n() const { return tuple_.n(); }

  friend bool operator==(const CanonicalClass& a, const CanonicalClass& b) {
    return a.tuple_ == b.tuple_;
  }
  friend bool operator<(const CanonicalClass& a, const CanonicalClass& b) {
    return a.entries() < b.entries();
  }

 private:
  LensTuple tuple_;
};

/// Minimum of fold(l * entries) over all unit multipliers l; sign flips and
/// permutations are absorbed by fold-and-sort. Constant on isometry orbits.
CanonicalClass canonicalize(const LensTuple& t);

/// True iff the two tuples define isometric lens spaces. Throws
/// std::invalid_argument when q or n differ (that is an error, not `false`).
bool is_isometric(const LensTuple& a, const LensTuple& b);

/// Complement of the entry set within [1, q0], as a raw entry list.
std::vector<long long> complement_entries(const LensTuple& t);

/// The class of the complement of t within [1, q0] (the map w). An
/// involution up to equivalence. Throws when the complement is empty.
CanonicalClass complement_w(const LensTuple& t);

/// All canonical classes of I0(q, n): reduced n-tuples in [1, q0] with
/// gcd(entries, q) == 1, deduplicated under the isometry equivalence,
/// in lexicographic order. For n > q0/2 the enumeration walks the
/// complementary (q0 - n)-subsets instead.
std::vector<CanonicalClass> enumerate_classes(
    std::shared_ptr<const ResidueSystem> sys, long long n);

/// Counting lower bound on |I0(q, n)|:
///   sum_{t=u}^{r} 1/(n-t) * C(q0-1-r, n-1-t) * C(r, t),  u = max(r-k, 0).
/// Exact rational; |enumerate_classes(q, n)| >= ceil of this value.
Rat lower_bound(const ResidueSystem& sys, long long n);

}  // namespace lenspec
