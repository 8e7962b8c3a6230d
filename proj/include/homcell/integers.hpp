#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace homcell {

// All ring arithmetic is exact; intermediate Smith-normal-form entries
// overflow fixed width even on small inputs.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

struct ExtGcd {
  Int g;  // gcd(a, b), always >= 0
  Int x;  // a*x + b*y == g
  Int y;
};

ExtGcd ext_gcd(const Int& a, const Int& b);

// p-adic valuation of x != 0; valuation(0, p) is an error.
int valuation(Int x, const Int& p);

bool is_prime(const Int& n);

// Distinct prime divisors of |n|, ascending. n must be nonzero.
std::vector<Int> prime_factors(Int n);

// Smallest prime not contained in the sorted list `excluded`.
Int smallest_prime_not_in(const std::vector<Int>& excluded);

}  // namespace homcell
