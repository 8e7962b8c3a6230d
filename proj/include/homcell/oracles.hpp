#pragma once

#include <cstddef>
#include <vector>

#include "homcell/complex.hpp"

namespace homcell {

// Explicit element table of a finite module of order <= 4096, built from
// its cyclic decomposition. Elements are mixed-radix indices.
class FiniteGroupTable {
 public:
  static constexpr std::size_t kMaxOrder = 4096;

  // m must be finite (torsion over Z; anything over Z/n).
  explicit FiniteGroupTable(const FPModule& m);

  std::size_t order() const { return order_; }
  const std::vector<Int>& cyclic_orders() const { return orders_; }

  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const;
  std::size_t scalar_mul(const Int& c, std::size_t a) const;

 private:
  std::vector<Int> orders_;  // cyclic summand orders, ascending
  std::size_t order_ = 1;
};

// g_k = gcd of all k x k minors, k = 1..min(rows, cols). The SNF diagonal
// must satisfy d_1 * ... * d_k = g_k. Requires min(rows, cols) <= 5.
std::vector<Int> oracle_snf_minors(const IntMatrix& a);

// First-principles evaluation of "n is a quotient of a sum of m": the
// subgroup of n generated by the images of all homomorphisms m -> n,
// enumerated from the group table, must be all of n. Requires n finite of
// order <= 4096.
bool oracle_quotient_of_sum(const FPModule& n, const FPModule& m);

// Homology of a Z/n complex by degreewise element enumeration; the
// isomorphism type of each kernel/image quotient is recovered from element
// order counts, with no Smith normal form involved. Requires n <= 9 and
// all ranks <= 3.
HomologyObject oracle_homology_enum(const FreeComplex& x);

}  // namespace homcell
