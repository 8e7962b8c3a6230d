#pragma once

#include <optional>
#include <vector>

#include "homcell/int_matrix.hpp"

namespace homcell {

// Smith normal form u*a*v = s with u, v unimodular and s diagonal,
// each nonzero diagonal entry dividing the next, zeros trailing.
struct SNFResult {
  IntMatrix u;            // rows x rows
  IntMatrix s;            // rows x cols
  IntMatrix v;            // cols x cols
  std::vector<Int> diag;  // full diagonal of s, length min(rows, cols)

  std::size_t rank() const {
    std::size_t r = 0;
    while (r < diag.size() && diag[r] != 0) ++r;
    return r;
  }
};

// Deterministic: smallest-nonzero-|pivot| with lowest-row, lowest-column
// tie-break.
SNFResult snf(const IntMatrix& a);

// modulus == 0 means the ring is Z, otherwise Z/modulus. Over Z the columns
// are a lattice basis of {x : a*x = 0}; over Z/n they generate
// {x : a*x = 0 (mod n)}, computed via the lifted matrix [a | n*I].
IntMatrix kernel_basis(const IntMatrix& a, const Int& modulus);

// Presentation matrix (columns are relations) for coker(a) over the ring;
// over Z/n the relations n*e_i are appended.
IntMatrix cokernel_presentation(const IntMatrix& a, const Int& modulus);

// One solution of a*x = b (modulus 0) or a*x = b (mod n), if any.
std::optional<std::vector<Int>> solve_linear(const IntMatrix& a,
                                             const std::vector<Int>& b,
                                             const Int& modulus);

// Columnwise solve_linear of a*X = b; nullopt if any column is unsolvable.
std::optional<IntMatrix> solve_matrix(const IntMatrix& a, const IntMatrix& b,
                                      const Int& modulus);

}  // namespace homcell
