#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lenspec/bigint.hpp"
#include "lenspec/classes.hpp"
#include "lenspec/polynomials.hpp"

namespace lenspec {

/// dim P^k_G for k = 0..max_k: the number of exponent vectors
/// (i_1..i_n, j_1..j_n, t_1..t_W) >= 0 of total degree k with
/// sum (i_s - j_s) p_s = 0 mod q. Dynamic programming over coordinates
/// with state (degree, residue); exact integers. Accepts q >= 1 and raw
/// entries (repeats and zeros allowed).
std::vector<Int> invariant_dims(long long q, std::span<const long long> entries,
                                long long w_block, long long max_k);

/// Multiplicity of the eigenvalue k(k + 2n + W - 2):
/// dim P^k_G - dim P^{k-2}_G.
Int multiplicity(long long q, std::span<const long long> entries, long long k,
                 long long w_block = 0);
Int multiplicity(const LensTuple& t, long long k, long long w_block = 0);

/// m_0..m_K in one DP sweep.
std::vector<Int> multiplicity_prefix(long long q,
                                     std::span<const long long> entries,
                                     long long max_k, long long w_block = 0);

/// Exact eigenvalue multiplicities of a lens space; m_k multiplies the
/// eigenvalue k(k + 2n + W - 2).
struct MultiplicitySequence {
  long long q = 0;
  long long n = 0;
  long long w_block = 0;
  std::vector<Int> values;  // m_0 .. m_K

  friend bool operator==(const MultiplicitySequence&,
                         const MultiplicitySequence&) = default;
};

MultiplicitySequence multiplicity_sequence(const LensTuple& t, long long max_k,
                                           long long w_block = 0);

/// Extends the group generator by a W x W identity block: the generating
/// function is multiplied by (1-z)^{-W}, so
///   m'_k = sum_{a<=k} C(k-a+W-1, W-1) m_a.
/// W = 0 is the identity. Agrees with the direct DP at w_block + W.
MultiplicitySequence extend_w(const MultiplicitySequence& m, long long w);

/// Comparing the first series_cutoff()+1 multiplicities decides equality of
/// the full generating functions: both, multiplied by (z^q - 1)^{2n}, are
/// polynomials of degree <= 2n(q-1)+2 and the clearing factor has unit
/// constant term.
long long series_cutoff(long long q, long long n);

/// Complete spectral data determining the generating function. For
/// prime-power q the character polynomials (psi, alpha^(1..m-1)) of the
/// w-complement; for semiprime q (psi, alpha, beta); otherwise an exact
/// multiplicity prefix of length series_cutoff()+1.
struct SpectralInvariant {
  enum class Kind { Polynomial, SeriesPrefix };

  long long q = 0;
  long long n = 0;
  Kind kind = Kind::Polynomial;
  std::vector<CharacterPolynomial> polynomials;  // psi first, strata ascending
  std::vector<Int> prefix;

  /// Stable text form; equal strings iff equal invariants.
  std::string key() const;

  friend bool operator==(const SpectralInvariant&,
                         const SpectralInvariant&) = default;
};

SpectralInvariant spectral_invariant(const LensTuple& t);

enum class IsoMethod { Invariant, Series };

struct IsoCertificate {
  IsoMethod method = IsoMethod::Invariant;
  long long q = 0;
  long long n = 0;
  long long series_depth = -1;  // depth compared, Series method
  std::string detail;           // first difference, or mismatch reason
};

struct IsoResult {
  bool isospectral = false;
  IsoCertificate certificate;
};

/// Decides isospectrality. Different q (or different n) is instantly false.
/// The Series method compares multiplicities up to max_k (default
/// series_cutoff(q, n)); Invariant compares SpectralInvariants.
IsoResult is_isospectral(const LensTuple& a, const LensTuple& b,
                         IsoMethod method = IsoMethod::Invariant,
                         std::optional<long long> max_k = std::nullopt);

struct SpectrumLine {
  long long k = 0;
  long long eigenvalue = 0;  // k(k + 2n + W - 2)
  Int multiplicity;
};

/// All nonzero spectrum lines with k <= max_k, ascending.
std::vector<SpectrumLine> spectrum(const LensTuple& t, long long max_k,
                                   long long w_block = 0);

}  // namespace lenspec
