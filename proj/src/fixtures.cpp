#include "lenspec/fixtures.hpp"

#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "lenspec/geometry.hpp"
#include "lenspec/search.hpp"

namespace lenspec::fixtures {

namespace {

using Entries = std::vector<long long>;
using Coeffs = std::vector<long long>;

std::shared_ptr<const ResidueSystem> sys(long long q) {
  static std::map<long long, std::shared_ptr<const ResidueSystem>> cache;
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, ResidueSystem::build(q)).first;
  return it->second;
}

LensTuple tuple(long long q, const Entries& e) {
  return LensTuple::make(sys(q), e);
}

std::string show(const Entries& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

std::string show(const std::vector<Int>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

using Outcome = std::pair<bool, std::string>;

Outcome expect_ll(long long got, long long want) {
  std::ostringstream out;
  out << "expected " << want << ", got " << got;
  return {got == want, out.str()};
}

Outcome expect_entries(const Entries& got, const Entries& want) {
  return {got == want, "expected " + show(want) + ", got " + show(got)};
}

Outcome expect_poly(const CharacterPolynomial& got, const Coeffs& want) {
  std::vector<Int> wide(want.begin(), want.end());
  return {got.coefficients == wide,
          "expected " + show(wide) + ", got " + show(got.coefficients)};
}

// The family containing `first` must exist with exactly the listed members
// (when exact_size), every member pairwise non-isometric, and membership
// verified by both the invariant and the series method to depth 60.
Outcome expect_family(long long q, long long n,
                      const std::vector<Entries>& member_tuples,
                      std::optional<std::size_t> exact_size) {
  auto families = find_families(sys(q), n);
  std::vector<CanonicalClass> wanted;
  for (const auto& e : member_tuples)
    wanted.push_back(canonicalize(tuple(q, e)));

  const IsospectralFamily* hit = nullptr;
  for (const auto& fam : families) {
    for (const auto& m : fam.members)
      if (m == wanted.front()) hit = &fam;
  }
  if (!hit) return {false, "no family contains " + show(member_tuples[0])};

  for (const auto& w : wanted) {
    bool found = false;
    for (const auto& m : hit->members) found |= m == w;
    if (!found)
      return {false, "family misses member " + show(w.entries())};
  }
  if (exact_size && hit->members.size() != *exact_size)
    return {false, "family size " + std::to_string(hit->members.size()) +
                       ", expected " + std::to_string(*exact_size)};

  for (std::size_t i = 0; i < hit->members.size(); ++i) {
    for (std::size_t j = i + 1; j < hit->members.size(); ++j) {
      const auto& a = hit->members[i].tuple();
      const auto& b = hit->members[j].tuple();
      if (is_isometric(a, b))
        return {false, "members " + show(a.entries()) + " and " +
                           show(b.entries()) + " are isometric"};
      if (!is_isospectral(a, b, IsoMethod::Invariant).isospectral)
        return {false, "invariant method rejects a member pair"};
      if (!is_isospectral(a, b, IsoMethod::Series, 60).isospectral)
        return {false, "series method (depth 60) rejects a member pair"};
    }
  }
  std::ostringstream ok;
  ok << "family of " << hit->members.size()
     << " verified by both methods to depth 60";
  return {true, ok.str()};
}

Outcome expect_no_families(long long q, long long n) {
  auto families = find_families(sys(q), n);
  if (families.empty()) return {true, "no isospectral families"};
  std::ostringstream out;
  out << "expected none, found " << families.size() << " families of sizes";
  for (const auto& f : families) out << " " << f.members.size();
  out << "; first: ";
  for (std::size_t i = 0; i < families[0].members.size(); ++i)
    out << (i ? " ~ " : "") << show(families[0].members[i].entries());
  return {false, out.str()};
}

struct Fixture {
  const char* name;
  int criterion;
  std::function<Outcome()> run;
};

const std::vector<Fixture>& table() {
  static const std::vector<Fixture> fixtures = {
      // --- character sums (q = 25) ---
      {"charsum.q25.A.m1", 1,
       [] { return expect_ll(sys(25)->character_sum(SetId::units(), 1), 0); }},
      {"charsum.q25.B1.m1", 1,
       [] {
         return expect_ll(sys(25)->character_sum(SetId::stratum(5), 1), -1);
       }},
      {"charsum.q25.A.m5", 1,
       [] {
         return expect_ll(sys(25)->character_sum(SetId::units(), 5), -5);
       }},
      {"charsum.q25.B1.m5", 1,
       [] {
         return expect_ll(sys(25)->character_sum(SetId::stratum(5), 5), 4);
       }},
      {"charsum.q25.A.m0", 1,
       [] {
         return expect_ll(sys(25)->character_sum(SetId::units(), 0), 20);
       }},

      // --- residue systems ---
      {"system.q25", 0,
       [] {
         const auto& s = *sys(25);
         if (s.units().size() != 20) return expect_ll(s.units().size(), 20);
         if (s.strata().size() != 1 ||
             s.strata()[0].members != Entries{5, 10, 15, 20})
           return Outcome{false, "B1 != {5,10,15,20}"};
         return expect_ll(s.r(), 2);
       }},
      {"system.q14", 0,
       [] {
         const auto& s = *sys(14);
         if (s.units() != Entries{1, 3, 5, 9, 11, 13})
           return Outcome{false, "A != {1,3,5,9,11,13}"};
         if (s.strata().size() != 2 ||
             s.strata()[0].members != Entries{2, 4, 6, 8, 10, 12} ||
             s.strata()[1].members != Entries{7})
           return Outcome{false, "B/C mismatch"};
         return expect_ll(s.r(), 4);
       }},
      {"system.q21", 0,
       [] {
         const auto& s = *sys(21);
         if (s.strata().size() != 2 ||
             s.strata()[0].members != Entries{3, 6, 9, 12, 15, 18} ||
             s.strata()[1].members != Entries{7, 14})
           return Outcome{false, "B/C mismatch"};
         return Outcome{true, "B and C as published"};
       }},

      // --- classes ---
      {"canonical.q9.13", 0,
       [] {
         return expect_entries(canonicalize(tuple(9, {1, 3})).entries(),
                               {1, 3});
       }},
      {"isometric.q25.pair-distinct", 0,
       [] {
         bool iso = is_isometric(tuple(25, {1, 2, 3, 4, 5, 6, 7, 8, 9, 11}),
                                 tuple(25, {1, 2, 3, 4, 6, 7, 8, 9, 10, 11}));
         return Outcome{!iso, iso ? "expected non-isometric"
                                  : "non-isometric as published"};
       }},
      {"complement.q14", 0,
       [] {
         auto w = complement_w(tuple(14, {1, 2, 4, 5, 7}));
         auto want = canonicalize(tuple(14, {3, 6}));
         return expect_entries(w.entries(), want.entries());
       }},
      {"enumerate.q9n2.classes", 4,
       [] {
         auto classes = enumerate_classes(sys(9), 2);
         if (classes.size() != 2) return expect_ll(classes.size(), 2);
         if (classes[0].entries() != Entries{1, 2} ||
             classes[1].entries() != Entries{1, 3})
           return Outcome{false, "classes != {[1,2],[1,3]}"};
         return Outcome{true, "exactly [1,2] and [1,3]"};
       }},
      {"enumerate.q10n3.count", 4,
       [] { return expect_ll(enumerate_classes(sys(10), 3).size(), 6); }},
      {"enumerate.q8n2.count", 4,
       [] { return expect_ll(enumerate_classes(sys(8), 2).size(), 4); }},
      {"enumerate.q16n6.count", 4,
       [] { return expect_ll(enumerate_classes(sys(16), 6).size(), 9); }},
      {"enumerate.q32n14.count", 4,
       [] { return expect_ll(enumerate_classes(sys(32), 14).size(), 16); }},

      // --- lower bounds ---
      {"bound.q27n11", 5,
       [] {
         auto b = lower_bound(*sys(27), 11);
         return Outcome{b == Rat(26, 3), "expected 26/3, got " +
                                             b.str()};
       }},
      {"bound.q35n15", 5,
       [] {
         auto b = lower_bound(*sys(35), 15);
         return Outcome{b == Rat(34, 3), "expected 34/3, got " + b.str()};
       }},
      {"bound.q21n8", 5,
       [] {
         auto b = lower_bound(*sys(21), 8);
         return Outcome{b == Rat(15, 2), "expected 15/2, got " + b.str()};
       }},

      // --- character polynomials, q=25 k=2 ---
      {"poly.q25k2.case1.psi", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(25), Entries{5, 10}, SetId::units()),
             {20, 20, 20, 20, 20});
       }},
      {"poly.q25k2.case1.alpha1", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(25), Entries{5, 10}, SetId::stratum(5)),
             {4, -16, 24, -16, 4});
       }},
      {"poly.q25k2.case3.psi", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(25), Entries{10, 12}, SetId::units()),
             {20, 10, 40, 10, 20});
       }},
      {"poly.q25k2.case3.alpha1", 2,
       [] {
         return expect_poly(character_polynomial(*sys(25), Entries{10, 12},
                                                 SetId::stratum(5)),
                            {4, -6, 4, -6, 4});
       }},
      {"poly.q25k2.case4a.psi", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(25), Entries{11, 12}, SetId::units()),
             {20, 0, 40, 0, 20});
       }},
      {"poly.q25k2.case4a.alpha1", 2,
       [] {
         return expect_poly(character_polynomial(*sys(25), Entries{11, 12},
                                                 SetId::stratum(5)),
                            {4, 4, 4, 4, 4});
       }},
      {"poly.q25k2.case4b.psi", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(25), Entries{8, 12}, SetId::units()),
             {20, 0, 30, 0, 20});
       }},
      {"poly.q25k2.case4b.alpha1", 2,
       [] {
         return expect_poly(character_polynomial(*sys(25), Entries{8, 12},
                                                 SetId::stratum(5)),
                            {4, 4, 14, 4, 4});
       }},

      // --- character polynomials, q=27 ---
      {"poly.q27.case1.psi", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(27), Entries{3, 8}, SetId::units()),
             {18, 0, 36, 0, 18});
       }},
      {"poly.q27.case1.alpha1", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(27), Entries{3, 8}, SetId::stratum(3)),
             {6, 6, 12, 6, 6});
       }},
      {"poly.q27.case1.alpha2", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(27), Entries{3, 8}, SetId::stratum(9)),
             {2, -2, 0, -2, 2});
       }},
      {"poly.q27.case2.psi", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(27), Entries{2, 8}, SetId::units()),
             {18, 0, 36, 0, 18});
       }},
      {"poly.q27.case2.alpha1", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(27), Entries{2, 8}, SetId::stratum(3)),
             {6, 0, 6, 0, 6});
       }},
      {"poly.q27.case2.alpha2", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(27), Entries{2, 8}, SetId::stratum(9)),
             {2, 4, 6, 4, 2});
       }},

      // --- character polynomials, q=35 ---
      {"poly.q35.case1.psi", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(35), Entries{2, 10}, SetId::units()),
             {24, 6, 52, 6, 24});
       }},
      {"poly.q35.case1.alpha", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(35), Entries{2, 10}, SetId::stratum(5)),
             {6, 4, 8, 4, 6});
       }},
      {"poly.q35.case1.beta", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(35), Entries{2, 10}, SetId::stratum(7)),
             {4, -6, 4, -6, 4});
       }},
      {"poly.q35.case2a.psi", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(35), Entries{2, 4}, SetId::units()),
             {24, -4, 52, -4, 24});
       }},
      {"poly.q35.case2a.alpha", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(35), Entries{2, 4}, SetId::stratum(5)),
             {6, 4, 8, 4, 6});
       }},
      {"poly.q35.case2a.beta", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(35), Entries{2, 4}, SetId::stratum(7)),
             {4, 4, 4, 4, 4});
       }},
      {"poly.q35.case2b.psi", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(35), Entries{2, 8}, SetId::units()),
             {24, -4, 42, -4, 24});
       }},
      {"poly.q35.case2b.alpha", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(35), Entries{2, 8}, SetId::stratum(5)),
             {6, 4, 8, 4, 6});
       }},
      {"poly.q35.case2b.beta", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(35), Entries{2, 8}, SetId::stratum(7)),
             {4, 4, 14, 4, 4});
       }},

      // --- character polynomials, q=14 ---
      {"poly.q14.psi", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(14), Entries{3, 6}, SetId::units()),
             {6, 0, 16, 0, 6});
       }},
      {"poly.q14.alpha", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(14), Entries{3, 6}, SetId::stratum(2)),
             {6, 4, 8, 4, 6});
       }},
      {"poly.q14.beta", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(14), Entries{3, 6}, SetId::stratum(7)),
             {1, 0, -2, 0, 1});
       }},

      // --- character polynomials, q=25 k=3 ---
      {"poly.q25k3.case2f.psi", 2,
       [] {
         return expect_poly(
             character_polynomial(*sys(25), Entries{2, 3, 12}, SetId::units()),
             {20, 0, 30, 0, 30, 0, 20});
       }},
      {"poly.q25k3.case2f.alpha1", 2,
       [] {
         return expect_poly(character_polynomial(*sys(25), Entries{2, 3, 12},
                                                 SetId::stratum(5)),
                            {4, 6, 30, 20, 30, 6, 4});
       }},
      {"poly.q25k3.case2h.psi", 2,
       [] {
         return expect_poly(character_polynomial(*sys(25), Entries{9, 11, 12},
                                                 SetId::units()),
                            {20, 0, 50, 10, 50, 0, 20});
       }},
      {"poly.q25k3.case2h.alpha1", 2,
       [] {
         return expect_poly(character_polynomial(*sys(25), Entries{9, 11, 12},
                                                 SetId::stratum(5)),
                            {4, 6, 10, 10, 10, 6, 4});
       }},
      {"poly.q25k3.case2h2.psi", 2,
       [] {
         return expect_poly(character_polynomial(*sys(25), Entries{2, 11, 12},
                                                 SetId::units()),
                            {20, 0, 50, -40, 50, 0, 20});
       }},
      {"poly.q25k3.case2h2.alpha1", 2,
       [] {
         return expect_poly(character_polynomial(*sys(25), Entries{2, 11, 12},
                                                 SetId::stratum(5)),
                            {4, 6, 10, 10, 10, 6, 4});
       }},
      {"poly.q25k3.case3c.psi", 2,
       [] {
         return expect_poly(character_polynomial(*sys(25), Entries{10, 11, 12},
                                                 SetId::units()),
                            {20, 10, 60, 20, 60, 10, 20});
       }},
      {"poly.q25k3.case3c.alpha1", 2,
       [] {
         return expect_poly(character_polynomial(*sys(25), Entries{10, 11, 12},
                                                 SetId::stratum(5)),
                            {4, -4, 0, 0, 0, -4, 4});
       }},
      {"poly.q25k3.case3d.psi", 2,
       [] {
         return expect_poly(character_polynomial(*sys(25), Entries{9, 10, 11},
                                                 SetId::units()),
                            {20, 10, 50, 40, 50, 10, 20});
       }},
      {"poly.q25k3.case3d.alpha1", 2,
       [] {
         return expect_poly(character_polynomial(*sys(25), Entries{9, 10, 11},
                                                 SetId::stratum(5)),
                            {4, -4, 10, -20, 10, -4, 4});
       }},
      {"poly.q25k3.case3e.psi", 2,
       [] {
         return expect_poly(character_polynomial(*sys(25), Entries{5, 9, 11},
                                                 SetId::units()),
                            {20, 10, 50, -10, 50, 10, 20});
       }},
      {"poly.q25k3.case3e.alpha1", 2,
       [] {
         return expect_poly(character_polynomial(*sys(25), Entries{5, 9, 11},
                                                 SetId::stratum(5)),
                            {4, -4, 10, -20, 10, -4, 4});
       }},
      {"poly.q25k3.case4.psi", 2,
       [] {
         return expect_poly(character_polynomial(*sys(25), Entries{5, 10, 12},
                                                 SetId::units()),
                            {20, 20, 40, 40, 40, 20, 20});
       }},
      {"poly.q25k3.case4.alpha1", 2,
       [] {
         return expect_poly(character_polynomial(*sys(25), Entries{5, 10, 12},
                                                 SetId::stratum(5)),
                            {4, -14, 20, -20, 20, -14, 4});
       }},

      // --- spectral invariants / isospectrality decisions ---
      {"invariant.q25.pair-equal", 3,
       [] {
         auto a = spectral_invariant(tuple(25, {1, 2, 3, 4, 5, 6, 7, 8, 9, 11}));
         auto b = spectral_invariant(tuple(25, {1, 2, 3, 4, 6, 7, 8, 9, 10, 11}));
         return Outcome{a == b, a == b ? "invariants equal"
                                       : "expected equal invariants"};
       }},
      {"invariant.q9.unequal", 4,
       [] {
         auto a = spectral_invariant(tuple(9, {1, 2}));
         auto b = spectral_invariant(tuple(9, {1, 3}));
         return Outcome{!(a == b), a == b ? "expected distinct invariants"
                                          : "invariants distinct"};
       }},
      {"isospectral.q14.pair", 3,
       [] {
         auto r = is_isospectral(tuple(14, {1, 2, 4, 5, 7}),
                                 tuple(14, {1, 4, 5, 6, 7}));
         return Outcome{r.isospectral, r.certificate.detail};
       }},
      {"isospectral.q35.pair", 3,
       [] {
         auto r = is_isospectral(
             tuple(35, {1, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 15, 16, 17}),
             tuple(35, {1, 2, 4, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17}));
         return Outcome{r.isospectral, r.certificate.detail};
       }},
      {"isospectral.q9.negative", 4,
       [] {
         auto r = is_isospectral(tuple(9, {1, 2}), tuple(9, {1, 3}));
         return Outcome{!r.isospectral, r.certificate.detail};
       }},

      // --- families found by search ---
      {"family.q25n10.pair", 3,
       [] {
         return expect_family(25, 10,
                              {{1, 2, 3, 4, 5, 6, 7, 8, 9, 11},
                               {1, 2, 3, 4, 6, 7, 8, 9, 10, 11}},
                              2);
       }},
      {"family.q25n10.triple", 3,
       [] {
         return expect_family(25, 10,
                              {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
                               {1, 2, 3, 4, 5, 6, 7, 8, 10, 11},
                               {1, 2, 3, 4, 5, 6, 7, 10, 11, 12}},
                              3);
       }},
      {"family.q25n10.second-pair", 3,
       [] {
         // Case 4(b): the published list repeats the Case 4(a) tuple; the
         // computed partner of L6 is the complement of {1,4}.
         return expect_family(25, 10,
                              {{1, 2, 3, 4, 5, 6, 7, 9, 10, 11},
                               {2, 3, 5, 6, 7, 8, 9, 10, 11, 12}},
                              2);
       }},
      {"family.q27n11.triple1", 3,
       [] {
         return expect_family(27, 11,
                              {{1, 2, 4, 5, 6, 7, 9, 10, 11, 12, 13},
                               {1, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13},
                               {1, 2, 5, 6, 7, 8, 9, 10, 11, 12, 13}},
                              3);
       }},
      {"family.q27n11.triple2", 3,
       [] {
         return expect_family(27, 11,
                              {{1, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13},
                               {1, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13},
                               {1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13}},
                              3);
       }},
      {"family.q35n15.pair1", 3,
       [] {
         return expect_family(
             35, 15,
             {{1, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 15, 16, 17},
              {1, 2, 4, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17}},
             std::nullopt);
       }},
      {"family.q35n15.pair2", 3,
       [] {
         return expect_family(
             35, 15,
             {{1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17},
              {1, 3, 4, 5, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17}},
             std::nullopt);
       }},
      {"family.q35n15.pair3", 3,
       [] {
         return expect_family(
             35, 15,
             {{1, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15, 16, 17},
              {1, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17}},
             std::nullopt);
       }},
      {"family.q14n5.pair", 3,
       [] {
         return expect_family(14, 5, {{1, 2, 4, 5, 7}, {1, 4, 5, 6, 7}},
                              std::nullopt);
       }},
      {"family.q25n9.size8", 3,
       [] {
         return expect_family(25, 9,
                              {{1, 2, 3, 4, 5, 6, 7, 8, 10},
                               {1, 2, 3, 4, 5, 6, 7, 9, 10},
                               {1, 2, 3, 4, 5, 6, 8, 9, 10},
                               {1, 2, 3, 4, 5, 7, 8, 9, 10},
                               {1, 2, 4, 5, 6, 7, 8, 9, 10},
                               {1, 4, 5, 6, 7, 8, 9, 10, 12},
                               {1, 3, 5, 6, 7, 9, 10, 11, 12},
                               {1, 2, 5, 6, 7, 8, 9, 10, 12}},
                              8);
       }},
      {"family.q25n9.size5", 3,
       [] {
         return expect_family(25, 9,
                              {{1, 2, 3, 4, 5, 6, 7, 8, 9},
                               {1, 2, 3, 4, 5, 6, 7, 8, 11},
                               {1, 2, 3, 4, 5, 6, 7, 9, 12},
                               {1, 3, 5, 6, 7, 8, 9, 11, 12},
                               {1, 2, 4, 5, 6, 7, 8, 9, 12}},
                              5);
       }},

      // --- negative searches ---
      {"negative.q9n2", 4, [] { return expect_no_families(9, 2); }},
      {"negative.q10n3", 4, [] { return expect_no_families(10, 3); }},
      {"negative.q8n2", 4, [] { return expect_no_families(8, 2); }},
      {"negative.q16n6", 4, [] { return expect_no_families(16, 6); }},
      {"negative.q32n14", 4, [] { return expect_no_families(32, 14); }},
      {"negative.q15n5", 4, [] { return expect_no_families(15, 5); }},
      {"negative.q21n8", 4, [] { return expect_no_families(21, 8); }},

      // --- expression patterns ---
      {"pattern.q25.case1", 0,
       [] {
         auto p = pattern(*sys(25), 5, 10);
         bool ok = p.operands[0] == PatternLabel{PatternLabel::Kind::Stratum, 5} &&
                   p.operands[1] == PatternLabel{PatternLabel::Kind::Stratum, 5} &&
                   p.combinations == p.operands;
         return Outcome{ok, to_string(*sys(25), p)};
       }},
      {"pattern.q25.case3", 0,
       [] {
         auto p = pattern(*sys(25), 10, 12);
         bool ok = p.operands[0] == PatternLabel{PatternLabel::Kind::Units, 1} &&
                   p.operands[1] == PatternLabel{PatternLabel::Kind::Stratum, 5} &&
                   p.combinations[0] == PatternLabel{PatternLabel::Kind::Units, 1} &&
                   p.combinations[1] == PatternLabel{PatternLabel::Kind::Units, 1};
         return Outcome{ok, to_string(*sys(25), p)};
       }},
      {"pattern.q14", 0,
       [] {
         auto p = pattern(*sys(14), 3, 6);
         bool ok = p.operands[0] == PatternLabel{PatternLabel::Kind::Units, 1} &&
                   p.operands[1] == PatternLabel{PatternLabel::Kind::Stratum, 2} &&
                   p.combinations[0] == PatternLabel{PatternLabel::Kind::Units, 1} &&
                   p.combinations[1] == PatternLabel{PatternLabel::Kind::Units, 1};
         return Outcome{ok, to_string(*sys(14), p)};
       }},

      // --- realized pattern counts and bounds ---
      {"realized.q21", 5,
       [] { return expect_ll(realized_pattern_count(sys(21)), 9); }},
      {"realized.q15", 5,
       [] { return expect_ll(realized_pattern_count(sys(15)), 7); }},
      {"realized.q27", 5,
       [] { return expect_ll(realized_pattern_count(sys(27)), 7); }},
      {"realized.q35", 5,
       [] { return expect_ll(realized_pattern_count(sys(35)), 10); }},
      {"patternbound.q27", 5,
       [] { return expect_ll(pattern_bound(*sys(27)), 9); }},
      {"patternbound.q15", 5,
       [] { return expect_ll(pattern_bound(*sys(15)), 11); }},
      {"patternbound.q21", 5,
       [] { return expect_ll(pattern_bound(*sys(21)), 11); }},
      {"patternbound.q35", 5,
       [] { return expect_ll(pattern_bound(*sys(35)), 11); }},

      // --- sufficiency inequalities ---
      {"sufficiency.q33", 5,
       [] {
         auto rec = sufficiency_check(*sys(33));
         bool ok = rec == SufficiencyRecord{144, 144, "lhs <= rhs", true};
         return Outcome{ok, std::to_string(rec.lhs) + " vs " +
                                std::to_string(rec.rhs) +
                                (rec.satisfied ? ", satisfied" : ", not satisfied")};
       }},
      {"sufficiency.q39", 5,
       [] {
         auto rec = sufficiency_check(*sys(39));
         bool ok = rec == SufficiencyRecord{114, 168, "lhs <= rhs", true};
         return Outcome{ok, std::to_string(rec.lhs) + " vs " +
                                std::to_string(rec.rhs) +
                                (rec.satisfied ? ", satisfied" : ", not satisfied")};
       }},
      {"sufficiency.q35", 5,
       [] {
         auto rec = sufficiency_check(*sys(35));
         bool ok = rec == SufficiencyRecord{136, 120, "lhs <= rhs", false};
         return Outcome{ok, std::to_string(rec.lhs) + " vs " +
                                std::to_string(rec.rhs) +
                                (rec.satisfied ? ", satisfied" : ", not satisfied")};
       }},

      // --- singular signatures ---
      {"singular.q25.pair-members", 6,
       [] {
         auto a = singular_signature(tuple(25, {1, 2, 3, 4, 5, 6, 7, 8, 9, 11}));
         auto b = singular_signature(tuple(25, {1, 2, 3, 4, 6, 7, 8, 9, 10, 11}));
         SingularSignature want{{{5, 1, 1}}};
         bool ok = a == want && b == want;
         return Outcome{ok, ok ? "both members: one S^1 stratum of order 5"
                               : "expected [(5,1,S1)] for both members"};
       }},
      {"singular.q25.manifold", 6,
       [] {
         auto s = singular_signature(tuple(25, {1, 2, 3, 4, 6, 7, 8, 9, 11, 12}));
         return Outcome{s.manifold(),
                        s.manifold() ? "empty signature (manifold)"
                                     : "expected empty signature"};
       }},
      {"singular.q14", 6,
       [] {
         auto s = singular_signature(tuple(14, {1, 2, 4, 5, 7}));
         SingularSignature want{{{2, 2, 3}, {7, 1, 1}}};
         return Outcome{s == want,
                        s == want ? "S^3 of order 2 and S^1 of order 7"
                                  : "expected [(2,2,S3),(7,1,S1)]"};
       }},

      // --- W-extension preserves isospectrality ---
      {"extend.q14.preserved", 3,
       [] {
         auto ma = multiplicity_sequence(tuple(14, {1, 2, 4, 5, 7}), 20);
         auto mb = multiplicity_sequence(tuple(14, {1, 4, 5, 6, 7}), 20);
         if (ma.values != mb.values)
           return Outcome{false, "base sequences differ"};
         for (long long w = 1; w <= 3; ++w)
           if (extend_w(ma, w).values != extend_w(mb, w).values)
             return Outcome{false, "extension W=" + std::to_string(w) +
                                       " breaks equality"};
         return Outcome{true, "pair stays isospectral for W in {1,2,3}"};
       }},
  };
  return fixtures;
}

}  // namespace

std::vector<FixtureResult> run_paper_fixtures(const std::string& filter) {
  std::vector<FixtureResult> results;
  for (const auto& fixture : table()) {
    std::string name = fixture.name;
    if (!filter.empty() && name.find(filter) == std::string::npos) continue;
    FixtureResult res;
    res.name = name;
    res.criterion = fixture.criterion;
    try {
      auto [passed, detail] = fixture.run();
      res.passed = passed;
      res.detail = detail;
    } catch (const std::exception& e) {
      res.passed = false;
      res.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace lenspec::fixtures
