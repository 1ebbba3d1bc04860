#include "lenspec/residues.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lenspec/bigint.hpp"

namespace lenspec {

Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

long long fold(long long x, long long q) {
  if (q < 2) throw std::invalid_argument("fold: q must be >= 2");
  long long v = x % q;
  if (v < 0) v += q;
  return std::min(v, q - v);
}

namespace {

std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> factors;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      factors.emplace_back(d, e);
    }
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

int mobius_of(long long n) {
  auto f = factorize(n);
  for (const auto& [p, e] : f)
    if (e > 1) return 0;
  return f.size() % 2 == 0 ? 1 : -1;
}

}  // namespace

std::shared_ptr<const ResidueSystem> ResidueSystem::build(long long q) {
  if (q < 7)
    throw std::invalid_argument("ResidueSystem: q must be >= 7, got " +
                                std::to_string(q));
  auto factors = factorize(q);
  if (factors.size() == 1 && factors[0].second == 1)
    throw std::invalid_argument("ResidueSystem: q must not be prime, got " +
                                std::to_string(q));

  auto sys = std::shared_ptr<ResidueSystem>(new ResidueSystem());
  sys->q_ = q;
  sys->q0_ = q % 2 == 0 ? q / 2 : (q - 1) / 2;
  sys->factors_ = factors;

  if (factors.size() == 1) {
    sys->shape_ = Shape::PrimePower;
  } else if (factors.size() == 2 && factors[0].second == 1 &&
             factors[1].second == 1) {
    sys->shape_ = Shape::Semiprime;
  } else {
    sys->shape_ = Shape::General;
  }

  for (long long d = 1; d <= q; ++d)
    if (q % d == 0) sys->divisors_.push_back(d);

  // Partition [1, q-1] by gcd with q.
  std::vector<Stratum> strata;
  for (long long x = 1; x < q; ++x) {
    long long g = std::gcd(x, q);
    if (g == 1) {
      sys->units_.push_back(x);
      continue;
    }
    auto it = std::find_if(strata.begin(), strata.end(),
                           [g](const Stratum& s) { return s.divisor == g; });
    if (it == strata.end()) {
      strata.push_back({g, "", {}});
      it = std::prev(strata.end());
    }
    it->members.push_back(x);
  }
  std::sort(strata.begin(), strata.end(),
            [](const Stratum& a, const Stratum& b) { return a.divisor < b.divisor; });

  switch (sys->shape_) {
    case Shape::PrimePower: {
      // divisor p^j gets label Bj
      const long long p = factors[0].first;
      for (auto& s : strata) {
        int j = 0;
        for (long long v = s.divisor; v > 1; v /= p) ++j;
        s.label = "B" + std::to_string(j);
      }
      break;
    }
    case Shape::Semiprime:
      // B holds the multiples of the smaller prime, C of the larger.
      for (auto& s : strata)
        s.label = s.divisor == factors[0].first ? "B" : "C";
      break;
    case Shape::General:
      for (auto& s : strata) s.label = "D" + std::to_string(s.divisor);
      break;
  }
  sys->strata_ = std::move(strata);

  for (long long x = 1; x <= sys->q0_; ++x)
    if (std::gcd(x, q) != 1) ++sys->r_;

  if (sys->q0_ < 4)
    throw std::invalid_argument("ResidueSystem: q0 must be >= 4, got q0 = " +
                                std::to_string(sys->q0_));
  return sys;
}

bool ResidueSystem::is_unit(long long x) const {
  long long v = x % q_;
  if (v < 0) v += q_;
  return std::gcd(v, q_) == 1;
}

SetId ResidueSystem::stratum_of(long long x) const {
  long long v = x % q_;
  if (v < 0) v += q_;
  if (v == 0)
    throw std::invalid_argument("stratum_of: residue is zero mod q");
  long long g = std::gcd(v, q_);
  return g == 1 ? SetId::units() : SetId::stratum(g);
}

std::string ResidueSystem::label(const SetId& id) const {
  switch (id.kind) {
    case SetId::Kind::Units:
      return "A";
    case SetId::Kind::All:
      return "ALL";
    case SetId::Kind::Stratum:
      for (const auto& s : strata_)
        if (s.divisor == id.divisor) return s.label;
      throw std::invalid_argument("label: no stratum for divisor " +
                                  std::to_string(id.divisor));
  }
  return {};
}

long long ResidueSystem::set_size(const SetId& id) const {
  switch (id.kind) {
    case SetId::Kind::Units:
      return static_cast<long long>(units_.size());
    case SetId::Kind::All:
      return q_;
    case SetId::Kind::Stratum:
      for (const auto& s : strata_)
        if (s.divisor == id.divisor)
          return static_cast<long long>(s.members.size());
      throw std::invalid_argument("set_size: no stratum for divisor " +
                                  std::to_string(id.divisor));
  }
  return 0;
}

long long ResidueSystem::character_sum(const SetId& id, long long m) const {
  // multiples_sum(d) = sum_{l in [1,q], d|l} gamma^{ml}
  auto multiples_sum = [&](long long d) -> long long {
    long long qd = q_ / d;
    long long mm = m % qd;
    if (mm < 0) mm += qd;
    return mm == 0 ? qd : 0;
  };

  if (id.kind == SetId::Kind::All) return multiples_sum(1);

  const long long base = id.kind == SetId::Kind::Units ? 1 : id.divisor;
  if (id.kind == SetId::Kind::Stratum) {
    bool found = false;
    for (const auto& s : strata_) found |= s.divisor == base;
    if (!found)
      throw std::invalid_argument("character_sum: no stratum for divisor " +
                                  std::to_string(base));
  }

  // {x in [1,q-1]: gcd(x,q) = base} by Moebius inversion over divisors above
  // base; the l = q term lives in the class of divisor q and cancels out.
  long long total = 0;
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    long long e = divisors_[i];
    if (e % base != 0) continue;
    int mu = mobius_of(e / base);
    if (mu == 0) continue;
    total += mu * multiples_sum(e);
  }
  return total;
}

}  // namespace lenspec
