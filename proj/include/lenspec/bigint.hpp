#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lenspec {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// C(n, k) as an exact integer; zero outside 0 <= k <= n.
Int binomial(long long n, long long k);

}  // namespace lenspec
