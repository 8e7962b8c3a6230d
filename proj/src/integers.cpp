#include "homcell/integers.hpp"

#include <algorithm>

#include "homcell/errors.hpp"

namespace homcell {

ExtGcd ext_gcd(const Int& a, const Int& b) {
  // Iterative extended Euclid; normalizes the gcd to be nonnegative.
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t;
    t = old_r - q * r; old_r = r; r = t;
    t = old_x - q * x; old_x = x; x = t;
    t = old_y - q * y; old_y = y; y = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return {old_r, old_x, old_y};
}

int valuation(Int x, const Int& p) {
  if (x == 0) throw InvariantViolation("valuation of zero is undefined");
  x = abs(x);
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<Int> prime_factors(Int n) {
  n = abs(n);
  if (n == 0) throw InvariantViolation("prime_factors of zero");
  std::vector<Int> out;
  for (Int p = 2; p * p <= n; p == 2 ? p = 3 : p += 2) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Int smallest_prime_not_in(const std::vector<Int>& excluded) {
  for (Int p = 2;; p == 2 ? p = 3 : p += 2) {
    if (!is_prime(p)) continue;
    if (!std::binary_search(excluded.begin(), excluded.end(), p)) return p;
  }
}

}  // namespace homcell
