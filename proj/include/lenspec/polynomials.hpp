#pragma once

#include <span>
#include <string>
#include <vector>

#include "lenspec/bigint.hpp"
#include "lenspec/residues.hpp"

namespace lenspec {

/// Degree-2k integer polynomial sum over l in S of
/// prod_i (z - gamma^{t_i l})(z - gamma^{-t_i l}), stored as the literal
/// signed coefficients c_0 z^{2k} + c_1 z^{2k-1} + ... + c_{2k}.
/// Always palindromic (c_i = c_{2k-i}) with c_0 = |S|.
struct CharacterPolynomial {
  SetId source;
  std::vector<Int> coefficients;  // c_0 .. c_{2k}

  long long degree() const {
    return static_cast<long long>(coefficients.size()) - 1;
  }

  friend bool operator==(const CharacterPolynomial&,
                         const CharacterPolynomial&) = default;
};

/// Expands prod_i (z^2 - (gamma^{t_i} + gamma^{-t_i}) z + 1) in the group
/// ring Z[Z_q] and maps each basis element gamma^m to character_sum(S, m).
/// Entries may repeat but must be nonzero mod q. k = 0 yields |S|.
CharacterPolynomial character_polynomial(const ResidueSystem& sys,
                                         std::span<const long long> entries,
                                         const SetId& set);

/// Human-readable form, e.g. "4z^4 - 16z^3 + 24z^2 - 16z + 4".
std::string to_string(const CharacterPolynomial& poly);

}  // namespace lenspec
