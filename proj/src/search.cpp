#include "lenspec/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lenspec {

namespace {

PatternLabel label_of(const ResidueSystem& sys, long long folded) {
  if (folded == 0) return {PatternLabel::Kind::Zero, 0};
  SetId id = sys.stratum_of(folded);
  if (id.kind == SetId::Kind::Units) return {PatternLabel::Kind::Units, 1};
  return {PatternLabel::Kind::Stratum, id.divisor};
}

std::string label_text(const ResidueSystem& sys, const PatternLabel& l) {
  switch (l.kind) {
    case PatternLabel::Kind::Units:
      return "A";
    case PatternLabel::Kind::Zero:
      return "0";
    case PatternLabel::Kind::Stratum:
      return sys.label(SetId::stratum(l.divisor));
  }
  return {};
}

}  // namespace

ExpressionPattern pattern(const ResidueSystem& sys, long long q1,
                          long long q2) {
  const long long f1 = sys.fold(q1);
  const long long f2 = sys.fold(q2);
  if (f1 == 0 || f2 == 0)
    throw std::invalid_argument("pattern: residues must be nonzero mod q");
  if (f1 == f2)
    throw std::invalid_argument("pattern: residues must have distinct folds");

  ExpressionPattern p;
  p.operands = {label_of(sys, f1), label_of(sys, f2)};
  p.combinations = {label_of(sys, sys.fold(q1 + q2)),
                    label_of(sys, sys.fold(q1 - q2))};
  std::sort(p.operands.begin(), p.operands.end());
  std::sort(p.combinations.begin(), p.combinations.end());
  return p;
}

std::string to_string(const ResidueSystem& sys, const ExpressionPattern& p) {
  std::ostringstream out;
  out << "{" << label_text(sys, p.operands[0]) << ","
      << label_text(sys, p.operands[1]) << "},{"
      << label_text(sys, p.combinations[0]) << ","
      << label_text(sys, p.combinations[1]) << "}";
  return out.str();
}

std::vector<IsospectralFamily> find_families(
    std::shared_ptr<const ResidueSystem> sys, long long n, long long depth) {
  const auto classes = enumerate_classes(sys, n);
  if (depth < 0) depth = std::min<long long>(series_cutoff(sys->q(), n), 200);

  // Keyed on the invariant's stable text form; values keep enumeration order
  // (already lexicographic).
  std::map<std::string, IsospectralFamily> groups;
  for (const auto& cls : classes) {
    auto inv = spectral_invariant(cls.tuple());
    auto key = inv.key();
    auto it = groups.find(key);
    if (it == groups.end()) {
      IsospectralFamily fam;
      fam.q = sys->q();
      fam.n = n;
      fam.invariant = std::move(inv);
      fam.verified_to = depth;
      it = groups.emplace(std::move(key), std::move(fam)).first;
    }
    it->second.members.push_back(cls);
  }

  std::vector<IsospectralFamily> families;
  for (auto& [key, fam] : groups) {
    if (fam.members.size() < 2) continue;
    std::sort(fam.members.begin(), fam.members.end());
    // Series cross-check: equal invariants must mean equal series; anything
    // else falsifies the partial-fraction uniqueness argument.
    const auto reference = multiplicity_prefix(
        fam.q, fam.members.front().entries(), depth, 0);
    for (std::size_t i = 1; i < fam.members.size(); ++i) {
      const auto other =
          multiplicity_prefix(fam.q, fam.members[i].entries(), depth, 0);
      if (other != reference)
        throw std::logic_error(
            "find_families: invariant-equal classes disagree in the series "
            "method (q=" +
            std::to_string(fam.q) + ", n=" + std::to_string(n) + ")");
    }
    families.push_back(std::move(fam));
  }
  std::sort(families.begin(), families.end(),
            [](const IsospectralFamily& a, const IsospectralFamily& b) {
              return a.members.front() < b.members.front();
            });
  return families;
}

long long realized_pattern_count(std::shared_ptr<const ResidueSystem> sys) {
  const long long n = sys->q0() - 2;
  std::set<ExpressionPattern> seen;
  for (const auto& cls : enumerate_classes(sys, n)) {
    const auto comp = complement_entries(cls.tuple());
    const auto p = pattern(*sys, comp[0], comp[1]);
    for (const auto& l : p.combinations)
      if (l.kind == PatternLabel::Kind::Zero)
        throw std::logic_error(
            "realized_pattern_count: zero combination on a reduced pair");
    seen.insert(p);
  }
  return static_cast<long long>(seen.size());
}

long long pattern_bound(const ResidueSystem& sys) {
  const auto& factors = sys.factorization();
  switch (sys.shape()) {
    case Shape::PrimePower: {
      const long long m = factors[0].second;
      return factors[0].first == 2 ? (m - 1) * (m - 1) : m * m;
    }
    case Shape::Semiprime:
      return factors[0].first == 2 ? 6 : 11;
    case Shape::General:
      throw std::invalid_argument(
          "pattern_bound: unsupported shape (q is neither p^m nor p1*p2)");
  }
  return 0;
}

SufficiencyRecord sufficiency_check(const ResidueSystem& sys) {
  const auto& factors = sys.factorization();
  const long long q0 = sys.q0();
  const long long r = sys.r();
  switch (sys.shape()) {
    case Shape::PrimePower: {
      const long long p = factors[0].first;
      const long long m = factors[0].second;
      if (p == 2) {
        const long long lhs = m * m - 2 * m + 3;
        return {lhs, q0, "lhs <= rhs", lhs <= q0};
      }
      const long long lhs = q0 * ((2 * m * m + 3) - q0);
      const long long rhs = 2 * r * (m * m + 1);
      return {lhs, rhs, "lhs <= rhs", lhs <= rhs};
    }
    case Shape::Semiprime: {
      if (factors[0].first == 2) {
        const long long p = factors[1].first;
        const long long lhs = (p - 1) * (p - 7);
        return {lhs, 0, "lhs >= rhs", lhs >= 0};
      }
      const long long lhs = q0 * (25 - q0);
      const long long rhs = 24 * r;
      return {lhs, rhs, "lhs <= rhs", lhs <= rhs};
    }
    case Shape::General:
      throw std::invalid_argument(
          "sufficiency_check: unsupported shape (q is neither p^m nor p1*p2)");
  }
  return {};
}

}  // namespace lenspec
