#include "lenspec/spectra.hpp"

#include <sstream>
#include <stdexcept>

namespace lenspec {

std::vector<Int> invariant_dims(long long q, std::span<const long long> entries,
                                long long w_block, long long max_k) {
  if (q < 1) throw std::invalid_argument("invariant_dims: q must be >= 1");
  if (max_k < 0) throw std::invalid_argument("invariant_dims: max_k < 0");
  if (w_block < 0) throw std::invalid_argument("invariant_dims: W < 0");

  std::vector<long long> weights;
  weights.reserve(entries.size() * 2 + static_cast<std::size_t>(w_block));
  for (long long p : entries) {
    long long v = p % q;
    if (v < 0) v += q;
    weights.push_back(v);
    weights.push_back((q - v) % q);
  }
  for (long long i = 0; i < w_block; ++i) weights.push_back(0);

  const std::size_t qs = static_cast<std::size_t>(q);
  const std::size_t K = static_cast<std::size_t>(max_k);
  // dp[d][res] = #exponent vectors of the processed coordinates with total
  // degree d and weight res. One coordinate with weight w contributes
  // dp'[d][res] = dp[d][res] + dp'[d-1][res-w] (exponent unbounded).
  std::vector<std::vector<Int>> dp(K + 1, std::vector<Int>(qs, 0));
  dp[0][0] = 1;
  for (long long w : weights) {
    const std::size_t ws = static_cast<std::size_t>(w);
    for (std::size_t d = 1; d <= K; ++d) {
      auto& row = dp[d];
      const auto& below = dp[d - 1];
      for (std::size_t res = 0; res < qs; ++res)
        row[res] += below[(res + qs - ws) % qs];
    }
  }
  std::vector<Int> out(K + 1);
  for (std::size_t d = 0; d <= K; ++d) out[d] = dp[d][0];
  return out;
}

Int multiplicity(long long q, std::span<const long long> entries, long long k,
                 long long w_block) {
  auto dims = invariant_dims(q, entries, w_block, k);
  Int below = k >= 2 ? dims[static_cast<std::size_t>(k - 2)] : Int(0);
  return dims[static_cast<std::size_t>(k)] - below;
}

Int multiplicity(const LensTuple& t, long long k, long long w_block) {
  return multiplicity(t.q(), t.entries(), k, w_block);
}

std::vector<Int> multiplicity_prefix(long long q,
                                     std::span<const long long> entries,
                                     long long max_k, long long w_block) {
  auto dims = invariant_dims(q, entries, w_block, max_k);
  std::vector<Int> out(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k)
    out[k] = dims[k] - (k >= 2 ? dims[k - 2] : Int(0));
  return out;
}

MultiplicitySequence multiplicity_sequence(const LensTuple& t, long long max_k,
                                           long long w_block) {
  return {t.q(), t.n(), w_block,
          multiplicity_prefix(t.q(), t.entries(), max_k, w_block)};
}

MultiplicitySequence extend_w(const MultiplicitySequence& m, long long w) {
  if (w < 0) throw std::invalid_argument("extend_w: W must be >= 0");
  if (w == 0) return m;
  MultiplicitySequence out{m.q, m.n, m.w_block + w, {}};
  out.values.resize(m.values.size());
  for (std::size_t k = 0; k < m.values.size(); ++k) {
    Int acc = 0;
    for (std::size_t a = 0; a <= k; ++a)
      acc += binomial(static_cast<long long>(k - a) + w - 1, w - 1) *
             m.values[a];
    out.values[k] = acc;
  }
  return out;
}

long long series_cutoff(long long q, long long n) {
  return 2 * n * (q - 1) + 2;
}

std::string SpectralInvariant::key() const {
  std::ostringstream out;
  out << "q" << q << ":n" << n;
  if (kind == Kind::Polynomial) {
    for (const auto& poly : polynomials) {
      out << "|";
      for (const auto& c : poly.coefficients) out << c << ",";
    }
  } else {
    out << "|prefix:";
    for (const auto& v : prefix) out << v << ",";
  }
  return out.str();
}

SpectralInvariant spectral_invariant(const LensTuple& t) {
  const ResidueSystem& sys = t.system();
  SpectralInvariant inv;
  inv.q = sys.q();
  inv.n = t.n();

  const bool decomposable = sys.shape() != Shape::General && t.n() >= 2 &&
                            t.n() <= sys.q0() - 2;
  if (decomposable) {
    inv.kind = SpectralInvariant::Kind::Polynomial;
    const auto comp = complement_entries(t);
    inv.polynomials.push_back(
        character_polynomial(sys, comp, SetId::units()));
    for (const auto& s : sys.strata())
      inv.polynomials.push_back(
          character_polynomial(sys, comp, SetId::stratum(s.divisor)));
  } else {
    inv.kind = SpectralInvariant::Kind::SeriesPrefix;
    inv.prefix = multiplicity_prefix(t.q(), t.entries(),
                                     series_cutoff(t.q(), t.n()), 0);
  }
  return inv;
}

IsoResult is_isospectral(const LensTuple& a, const LensTuple& b,
                         IsoMethod method, std::optional<long long> max_k) {
  IsoResult res;
  res.certificate.method = method;
  res.certificate.q = a.q();
  res.certificate.n = a.n();

  if (a.q() != b.q()) {
    res.isospectral = false;
    res.certificate.detail = "orders differ: q=" + std::to_string(a.q()) +
                             " vs q=" + std::to_string(b.q()) +
                             "; isospectral lens spaces share q";
    return res;
  }
  if (a.n() != b.n()) {
    res.isospectral = false;
    res.certificate.detail = "dimensions differ: n=" + std::to_string(a.n()) +
                             " vs n=" + std::to_string(b.n());
    return res;
  }

  if (method == IsoMethod::Invariant) {
    auto ia = spectral_invariant(a);
    auto ib = spectral_invariant(b);
    if (ia == ib) {
      res.isospectral = true;
      res.certificate.detail =
          ia.kind == SpectralInvariant::Kind::Polynomial
              ? "all character polynomials agree"
              : "multiplicity prefix agrees to k=" +
                    std::to_string(series_cutoff(a.q(), a.n()));
      return res;
    }
    res.isospectral = false;
    if (ia.kind != ib.kind) {
      res.certificate.detail = "invariant kinds differ";
      return res;
    }
    if (ia.kind == SpectralInvariant::Kind::Polynomial) {
      for (std::size_t i = 0; i < ia.polynomials.size(); ++i) {
        if (ia.polynomials[i] != ib.polynomials[i]) {
          res.certificate.detail =
              "polynomial over " +
              a.system().label(ia.polynomials[i].source) + " differs: " +
              to_string(ia.polynomials[i]) + " vs " +
              to_string(ib.polynomials[i]);
          return res;
        }
      }
    } else {
      for (std::size_t k = 0; k < ia.prefix.size(); ++k) {
        if (ia.prefix[k] != ib.prefix[k]) {
          res.certificate.detail =
              "multiplicities differ first at k=" + std::to_string(k);
          return res;
        }
      }
    }
    res.certificate.detail = "invariants differ";
    return res;
  }

  const long long depth = max_k.value_or(series_cutoff(a.q(), a.n()));
  res.certificate.series_depth = depth;
  auto ma = multiplicity_prefix(a.q(), a.entries(), depth, 0);
  auto mb = multiplicity_prefix(b.q(), b.entries(), depth, 0);
  for (std::size_t k = 0; k < ma.size(); ++k) {
    if (ma[k] != mb[k]) {
      res.isospectral = false;
      std::ostringstream detail;
      detail << "multiplicities differ first at k=" << k << ": " << ma[k]
             << " vs " << mb[k];
      res.certificate.detail = detail.str();
      return res;
    }
  }
  res.isospectral = true;
  res.certificate.detail =
      "multiplicities agree for all k <= " + std::to_string(depth);
  return res;
}

std::vector<SpectrumLine> spectrum(const LensTuple& t, long long max_k,
                                   long long w_block) {
  auto prefix = multiplicity_prefix(t.q(), t.entries(), max_k, w_block);
  std::vector<SpectrumLine> lines;
  for (long long k = 0; k <= max_k; ++k) {
    const Int& m = prefix[static_cast<std::size_t>(k)];
    if (m == 0) continue;
    lines.push_back({k, k * (k + 2 * t.n() + w_block - 2), m});
  }
  return lines;
}

}  // namespace lenspec
