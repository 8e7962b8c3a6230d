#include "homcell/snf.hpp"

#include "homcell/errors.hpp"

namespace homcell {

namespace {

// Locate the entry of smallest nonzero absolute value in a[t.., t..],
// tie-broken to the lowest row then lowest column index.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Int& x = a.at(i, j);
      if (x == 0) continue;
      Int ax = abs(x);
      if (!found || ax < best) {
        found = true;
        best = ax;
        pi = i;
        pj = j;
      }
    }
  return found;
}

// Replace the diagonal pair (s[i][i], s[j][j]) = (a, b) by (gcd, lcm) via a
// 2x2 unimodular transform on rows/columns i and j:
//   U = [[x, y], [-b/g, a/g]],  V = [[1, -y*b/g], [1, x*a/g]],
// where g = x*a + y*b. Also moves a zero at position i past a nonzero at j.
void chain_fix(IntMatrix& s, IntMatrix& u, IntMatrix& v, std::size_t i,
               std::size_t j) {
  Int a = s.at(i, i), b = s.at(j, j);
  ExtGcd e = ext_gcd(a, b);
  const Int& g = e.g;
  Int adg = a / g, bdg = b / g;

  // Rows i, j of s and u: premultiply by U.
  for (IntMatrix* m : {&s, &u}) {
    for (std::size_t k = 0; k < m->cols(); ++k) {
      Int ri = m->at(i, k), rj = m->at(j, k);
      m->at(i, k) = e.x * ri + e.y * rj;
      m->at(j, k) = -bdg * ri + adg * rj;
    }
  }
  // Columns i, j of s and v: postmultiply by V.
  for (IntMatrix* m : {&s, &v}) {
    for (std::size_t k = 0; k < m->rows(); ++k) {
      Int ci = m->at(k, i), cj = m->at(k, j);
      m->at(k, i) = ci + cj;
      m->at(k, j) = -(e.y * bdg) * ci + (e.x * adg) * cj;
    }
  }
}

}  // namespace

SNFResult snf(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SNFResult r;
  r.u = IntMatrix::identity(m);
  r.v = IntMatrix::identity(n);
  r.s = a;
  IntMatrix& s = r.s;
  IntMatrix& u = r.u;
  IntMatrix& v = r.v;

  const std::size_t nmin = std::min(m, n);
  for (std::size_t t = 0; t < nmin; ++t) {
    std::size_t pi, pj;
    if (!find_pivot(s, t, pi, pj)) break;  // remaining block is zero
    s.swap_rows(t, pi);
    u.swap_rows(t, pi);
    s.swap_cols(t, pj);
    v.swap_cols(t, pj);

    for (;;) {
      // Clear column t below the pivot, then row t to its right. Remainders
      // are strictly smaller than the pivot, so re-pivoting terminates.
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s.at(i, t) == 0) continue;
        Int q = s.at(i, t) / s.at(t, t);
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s.at(t, j) == 0) continue;
        Int q = s.at(t, j) / s.at(t, t);
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (s.at(t, j) != 0) dirty = true;
      }
      if (!dirty) break;
      std::size_t qi, qj;
      find_pivot(s, t, qi, qj);
      s.swap_rows(t, qi);
      u.swap_rows(t, qi);
      s.swap_cols(t, qj);
      v.swap_cols(t, qj);
    }
  }

  for (std::size_t t = 0; t < nmin; ++t) {
    if (s.at(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }

  // Enforce the divisibility chain (zeros count as divisible only by zero,
  // so this pass also bubbles zeros to the end).
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t t = 0; t + 1 < nmin; ++t) {
      const Int& da = s.at(t, t);
      const Int& db = s.at(t + 1, t + 1);
      bool ok = (da == 0) ? (db == 0) : (db % da == 0);
      if (!ok) {
        chain_fix(s, u, v, t, t + 1);
        changed = true;
      }
    }
  }

  r.diag.resize(nmin);
  for (std::size_t t = 0; t < nmin; ++t) r.diag[t] = s.at(t, t);
  return r;
}

IntMatrix kernel_basis(const IntMatrix& a, const Int& modulus) {
  if (modulus != 0) {
    IntMatrix lifted = hcat(a, mul(modulus, IntMatrix::identity(a.rows())));
    IntMatrix full = kernel_basis(lifted, Int(0));
    return full.top_rows(a.cols()).reduced_mod(modulus);
  }
  SNFResult r = snf(a);
  std::size_t rank = r.rank();
  IntMatrix out(a.cols(), a.cols() - rank);
  for (std::size_t j = rank; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.cols(); ++i)
      out.at(i, j - rank) = r.v.at(i, j);
  return out;
}

IntMatrix cokernel_presentation(const IntMatrix& a, const Int& modulus) {
  if (modulus == 0) return a;
  return hcat(a, mul(modulus, IntMatrix::identity(a.rows())));
}

std::optional<std::vector<Int>> solve_linear(const IntMatrix& a,
                                             const std::vector<Int>& b,
                                             const Int& modulus) {
  if (modulus != 0) {
    IntMatrix lifted = hcat(a, mul(modulus, IntMatrix::identity(a.rows())));
    auto x = solve_linear(lifted, b, Int(0));
    if (!x) return std::nullopt;
    x->resize(a.cols());
    for (auto& xi : *x) {
      xi %= modulus;
      if (xi < 0) xi += modulus;
    }
    return x;
  }
  if (b.size() != a.rows()) throw SchemaError("solve_linear size mismatch");
  SNFResult r = snf(a);
  std::vector<Int> ub = mul_vec(r.u, b);
  std::size_t rank = r.rank();
  std::vector<Int> z(a.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < rank) {
      if (ub[i] % r.diag[i] != 0) return std::nullopt;
      z[i] = ub[i] / r.diag[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return mul_vec(r.v, z);
}

std::optional<IntMatrix> solve_matrix(const IntMatrix& a, const IntMatrix& b,
                                      const Int& modulus) {
  if (a.rows() != b.rows()) throw SchemaError("solve_matrix size mismatch");
  IntMatrix lifted = modulus == 0
                         ? a
                         : hcat(a, mul(modulus, IntMatrix::identity(a.rows())));
  SNFResult r = snf(lifted);
  std::size_t rank = r.rank();
  IntMatrix out(a.cols(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    std::vector<Int> ub = mul_vec(r.u, b.column_vec(c));
    std::vector<Int> z(lifted.cols());
    for (std::size_t i = 0; i < ub.size(); ++i) {
      if (i < rank) {
        if (ub[i] % r.diag[i] != 0) return std::nullopt;
        z[i] = ub[i] / r.diag[i];
      } else if (ub[i] != 0) {
        return std::nullopt;
      }
    }
    std::vector<Int> x = mul_vec(r.v, z);
    for (std::size_t i = 0; i < a.cols(); ++i) {
      Int xi = x[i];
      if (modulus != 0) {
        xi %= modulus;
        if (xi < 0) xi += modulus;
      }
      out.at(i, c) = xi;
    }
  }
  return out;
}

}  // namespace homcell
