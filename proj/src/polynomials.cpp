#include "lenspec/polynomials.hpp"

#include <sstream>
#include <stdexcept>

namespace lenspec {

CharacterPolynomial character_polynomial(const ResidueSystem& sys,
                                         std::span<const long long> entries,
                                         const SetId& set) {
  const long long q = sys.q();
  const std::size_t qs = static_cast<std::size_t>(q);

  // ring[j][res] = coefficient of gamma^res z^j in the running product.
  std::vector<std::vector<Int>> ring(1, std::vector<Int>(qs, 0));
  ring[0][0] = 1;

  for (long long raw : entries) {
    long long t = raw % q;
    if (t < 0) t += q;
    if (t == 0)
      throw std::invalid_argument(
          "character_polynomial: entry congruent to 0 mod q");
    const std::size_t deg = ring.size() - 1;
    std::vector<std::vector<Int>> next(deg + 3, std::vector<Int>(qs, 0));
    for (std::size_t j = 0; j <= deg; ++j) {
      for (std::size_t res = 0; res < qs; ++res) {
        const Int& c = ring[j][res];
        if (c == 0) continue;
        next[j][res] += c;      // * 1
        next[j + 2][res] += c;  // * z^2
        // * -(gamma^t + gamma^-t) z
        next[j + 1][(res + static_cast<std::size_t>(t)) % qs] -= c;
        next[j + 1][(res + qs - static_cast<std::size_t>(t)) % qs] -= c;
      }
    }
    ring = std::move(next);
  }

  CharacterPolynomial poly;
  poly.source = set;
  const std::size_t two_k = ring.size() - 1;
  poly.coefficients.resize(two_k + 1);
  for (std::size_t j = 0; j <= two_k; ++j) {
    Int v = 0;
    for (std::size_t res = 0; res < qs; ++res) {
      const Int& c = ring[two_k - j][res];
      if (c != 0) v += c * sys.character_sum(set, static_cast<long long>(res));
    }
    poly.coefficients[j] = v;
  }
  return poly;
}

std::string to_string(const CharacterPolynomial& poly) {
  std::ostringstream out;
  const long long deg = poly.degree();
  bool first = true;
  for (long long i = 0; i <= deg; ++i) {
    const Int& c = poly.coefficients[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Int abs = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const long long power = deg - i;
    if (abs != 1 || power == 0) out << abs;
    if (power > 0) out << "z";
    if (power > 1) out << "^" << power;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace lenspec
