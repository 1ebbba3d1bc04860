#include "lenspec/classes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace lenspec {

LensTuple LensTuple::make(std::shared_ptr<const ResidueSystem> sys,
                          const std::vector<long long>& raw) {
  if (!sys) throw std::invalid_argument("LensTuple: null residue system");
  if (raw.empty()) throw std::invalid_argument("LensTuple: empty tuple");
  std::vector<long long> folded;
  folded.reserve(raw.size());
  for (long long x : raw) {
    long long f = sys->fold(x);
    if (f == 0)
      throw std::invalid_argument("LensTuple: entry " + std::to_string(x) +
                                  " is congruent to 0 mod " +
                                  std::to_string(sys->q()));
    folded.push_back(f);
  }
  std::sort(folded.begin(), folded.end());
  if (std::adjacent_find(folded.begin(), folded.end()) != folded.end())
    throw std::invalid_argument(
        "LensTuple: two entries share a fold (p_i = ±p_j mod q)");
  return LensTuple(std::move(sys), std::move(folded));
}

bool LensTuple::effective() const {
  long long g = sys_->q();
  for (long long e : entries_) g = std::gcd(g, e);
  return g == 1;
}

CanonicalClass canonicalize(const LensTuple& t) {
  const ResidueSystem& sys = t.system();
  std::vector<long long> best = t.entries();
  std::vector<long long> cand(best.size());
  for (long long l : sys.units()) {
    for (std::size_t i = 0; i < cand.size(); ++i)
      cand[i] = sys.fold(l * t.entries()[i]);
    std::sort(cand.begin(), cand.end());
    if (cand < best) best = cand;
  }
  return CanonicalClass(LensTuple::make(t.system_ptr(), best));
}

bool is_isometric(const LensTuple& a, const LensTuple& b) {
  if (a.q() != b.q())
    throw std::invalid_argument("is_isometric: tuples have different q (" +
                                std::to_string(a.q()) + " vs " +
                                std::to_string(b.q()) + ")");
  if (a.n() != b.n())
    throw std::invalid_argument("is_isometric: tuples have different n (" +
                                std::to_string(a.n()) + " vs " +
                                std::to_string(b.n()) + ")");
  return canonicalize(a) == canonicalize(b);
}

std::vector<long long> complement_entries(const LensTuple& t) {
  const long long q0 = t.system().q0();
  std::vector<bool> present(static_cast<std::size_t>(q0) + 1, false);
  for (long long e : t.entries()) present[static_cast<std::size_t>(e)] = true;
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(q0 - t.n()));
  for (long long x = 1; x <= q0; ++x)
    if (!present[static_cast<std::size_t>(x)]) out.push_back(x);
  return out;
}

CanonicalClass complement_w(const LensTuple& t) {
  auto comp = complement_entries(t);
  if (comp.empty())
    throw std::invalid_argument("complement_w: complement is empty (n = q0)");
  return canonicalize(LensTuple::make(t.system_ptr(), comp));
}

namespace {

// Calls fn(subset) for every n-subset of [1, q0].
template <typename Fn>
void for_each_subset(long long q0, long long n, Fn&& fn) {
  std::vector<long long> pick(static_cast<std::size_t>(n));
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    fn(pick);
    long long i = n - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == q0 - (n - 1 - i))
      --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (long long j = i + 1; j < n; ++j)
      pick[static_cast<std::size_t>(j)] =
          pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::vector<CanonicalClass> enumerate_classes(
    std::shared_ptr<const ResidueSystem> sys, long long n) {
  const long long q0 = sys->q0();
  if (n < 1 || n > q0 - 1)
    throw std::invalid_argument("enumerate_classes: n must be in [1, q0-1]");

  std::set<std::vector<long long>> canon;
  auto consider = [&](const std::vector<long long>& tuple) {
    long long g = sys->q();
    for (long long e : tuple) g = std::gcd(g, e);
    if (g != 1) return;
    auto t = LensTuple::make(sys, tuple);
    canon.insert(canonicalize(t).entries());
  };

  if (n <= q0 / 2) {
    for_each_subset(q0, n, consider);
  } else {
    // Walk the smaller complementary subsets.
    const long long k = q0 - n;
    std::vector<bool> present(static_cast<std::size_t>(q0) + 1, false);
    for_each_subset(q0, k, [&](const std::vector<long long>& small) {
      std::fill(present.begin(), present.end(), false);
      for (long long e : small) present[static_cast<std::size_t>(e)] = true;
      std::vector<long long> tuple;
      tuple.reserve(static_cast<std::size_t>(n));
      for (long long x = 1; x <= q0; ++x)
        if (!present[static_cast<std::size_t>(x)]) tuple.push_back(x);
      consider(tuple);
    });
  }

  std::vector<CanonicalClass> out;
  out.reserve(canon.size());
  for (const auto& entries : canon)
    out.emplace_back(LensTuple::make(sys, entries));
  return out;
}

Rat lower_bound(const ResidueSystem& sys, long long n) {
  const long long q0 = sys.q0();
  const long long r = sys.r();
  const long long k = q0 - n;
  const long long u = r > k ? r - k : 0;
  Rat total = 0;
  for (long long t = u; t <= r; ++t) {
    if (t >= n) break;  // a class needs n - t > 0 unit slots
    Int c = binomial(q0 - 1 - r, n - 1 - t) * binomial(r, t);
    if (c == 0) continue;
    total += Rat(c, Int(n - t));
  }
  return total;
}

}  // namespace lenspec
