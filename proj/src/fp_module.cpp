#include "homcell/fp_module.hpp"

#include <sstream>

#include "homcell/errors.hpp"

namespace homcell {

std::string ModuleNormalForm::str() const {
  std::ostringstream os;
  os << "(free " << free_rank << ", [";
  for (std::size_t i = 0; i < invariant_factors.size(); ++i)
    os << (i ? "," : "") << invariant_factors[i];
  os << "])";
  return os.str();
}

FPModule::FPModule(RingSpec ring, IntMatrix presentation)
    : ring_(std::move(ring)), presentation_(std::move(presentation)) {
  SNFResult r = snf(cokernel_presentation(presentation_, ring_.modulus()));
  std::size_t nonzero = r.rank();
  std::size_t g = presentation_.rows();
  if (ring_.is_integers()) {
    nf_.free_rank = g - nonzero;
    for (std::size_t i = 0; i < nonzero; ++i)
      if (r.diag[i] >= 2) nf_.invariant_factors.push_back(r.diag[i]);
  } else {
    // The lift [pres | n*I] has full row rank; invariant factors equal to n
    // are the Z/n-free summands.
    const Int& n = ring_.modulus();
    for (std::size_t i = 0; i < nonzero; ++i) {
      if (r.diag[i] == n)
        ++nf_.free_rank;
      else if (r.diag[i] >= 2)
        nf_.invariant_factors.push_back(r.diag[i]);
    }
  }
}

FPModule FPModule::from_invariants(const RingSpec& ring, std::size_t free_rank,
                                   std::vector<Int> invariant_factors) {
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    const Int& d = invariant_factors[i];
    if (d < 2) throw SchemaError("invariant factor < 2");
    if (i > 0 && d % invariant_factors[i - 1] != 0)
      throw SchemaError("invariant factors must form a divisibility chain");
    if (!ring.is_integers() && ring.modulus() % d != 0)
      throw SchemaError("invariant factor must divide n over Z/n");
  }
  std::size_t g = free_rank + invariant_factors.size();
  IntMatrix pres(g, invariant_factors.size());
  for (std::size_t i = 0; i < invariant_factors.size(); ++i)
    pres.at(free_rank + i, i) = invariant_factors[i];
  return FPModule(ring, std::move(pres));
}

FPModule FPModule::cyclic(const RingSpec& ring, const Int& k) {
  if (k < 2) throw SchemaError("cyclic(k) requires k >= 2");
  if (!ring.is_integers() && k == ring.modulus())
    return from_invariants(ring, 1, {});
  return from_invariants(ring, 0, {k});
}

bool FPModule::is_isomorphic_to(const FPModule& other) const {
  return ring_ == other.ring_ && nf_ == other.nf_;
}

Int FPModule::exponent() const {
  if (!ring_.is_integers() && nf_.free_rank > 0) return ring_.modulus();
  if (nf_.invariant_factors.empty()) return 1;
  return nf_.invariant_factors.back();
}

Int FPModule::annihilator() const {
  if (nf_.free_rank > 0)
    return ring_.is_integers() ? Int(0) : ring_.modulus();
  return exponent();
}

SuppSet FPModule::support() const {
  if (ring_.is_integers() && nf_.free_rank > 0)
    return SuppSet::everything(ring_);
  Int e = exponent();
  if (e == 1) return SuppSet::empty(ring_);
  return SuppSet::closed_points(ring_, prime_factors(e));
}

std::optional<Int> FPModule::order() const {
  if (ring_.is_integers() && nf_.free_rank > 0) return std::nullopt;
  Int o = 1;
  for (const Int& d : nf_.invariant_factors) o *= d;
  if (!ring_.is_integers())
    for (std::size_t i = 0; i < nf_.free_rank; ++i) o *= ring_.modulus();
  return o;
}

IntMatrix FPModule::canonical_relations() const {
  std::size_t g = nf_.free_rank + nf_.invariant_factors.size();
  IntMatrix rel(g, nf_.invariant_factors.size());
  for (std::size_t i = 0; i < nf_.invariant_factors.size(); ++i)
    rel.at(nf_.free_rank + i, i) = nf_.invariant_factors[i];
  return rel;
}

FPModule direct_sum(const FPModule& a, const FPModule& b) {
  require_same_ring(a.ring(), b.ring(), "direct_sum");
  const IntMatrix& pa = a.presentation();
  const IntMatrix& pb = b.presentation();
  IntMatrix pres(pa.rows() + pb.rows(), pa.cols() + pb.cols());
  for (std::size_t i = 0; i < pa.rows(); ++i)
    for (std::size_t j = 0; j < pa.cols(); ++j) pres.at(i, j) = pa.at(i, j);
  for (std::size_t i = 0; i < pb.rows(); ++i)
    for (std::size_t j = 0; j < pb.cols(); ++j)
      pres.at(pa.rows() + i, pa.cols() + j) = pb.at(i, j);
  return FPModule(a.ring(), std::move(pres));
}

FPModule evaluation_image(const FPModule& m, const FPModule& n) {
  require_same_ring(m.ring(), n.ring(), "evaluation_image");
  const RingSpec& ring = m.ring();
  if (ring.is_integers() && m.normal_form().free_rank > 0)
    return FPModule::from_invariants(ring, n.normal_form().free_rank,
                                     n.normal_form().invariant_factors);
  // m is torsion (over Z) or any Z/n-module: images of the cyclic summand
  // of maximal order reach Z/gcd(e, c) inside each cyclic summand Z/c of n,
  // and nothing inside a free summand over Z.
  Int e = m.exponent();
  std::vector<Int> factors;
  for (const Int& c : n.normal_form().invariant_factors) {
    Int g = gcd(e, c);
    if (g >= 2) factors.push_back(g);
  }
  std::size_t image_free = 0;
  if (!ring.is_integers()) {
    // Free summands of n are cyclic of order n over Z/n.
    Int g = gcd(e, ring.modulus());
    if (g == ring.modulus())
      image_free = n.normal_form().free_rank;
    else if (g >= 2)
      for (std::size_t i = 0; i < n.normal_form().free_rank; ++i)
        factors.push_back(g);
  }
  std::sort(factors.begin(), factors.end());
  return FPModule::from_invariants(ring, image_free, std::move(factors));
}

QuotientDecision is_quotient_of_sum(const FPModule& n, const FPModule& m) {
  require_same_ring(n.ring(), m.ring(), "is_quotient_of_sum");
  const RingSpec& ring = n.ring();
  const ModuleNormalForm& nn = n.normal_form();
  const ModuleNormalForm& nm = m.normal_form();

  QuotientDecision out;
  bool m_free = nm.free_rank > 0;
  if (ring.is_integers() && !m_free && nn.free_rank > 0) {
    out.obstruction = ModuleObstruction{true, 0};
    return out;
  }
  if (!(ring.is_integers() && m_free)) {
    // Effective form of the quotient criterion: exp(n) | exp(m), checked
    // prime by prime so a failure names its witness.
    Int en = n.exponent(), em = m.exponent();
    if (en > 1) {
      for (const Int& p : prime_factors(en)) {
        int vn = valuation(en, p);
        int vm = (em % p == 0) ? valuation(em, p) : 0;
        if (vn > vm) {
          out.obstruction = ModuleObstruction{false, p};
          return out;
        }
      }
    }
  }

  out.yes = true;
  // One source copy of m per cyclic/free summand of n; each block sends a
  // single generator of m of sufficient order onto the target generator.
  std::size_t gm = nm.free_rank + nm.invariant_factors.size();
  std::size_t gn = nn.free_rank + nn.invariant_factors.size();
  out.t = gn;
  IntMatrix w(gn, out.t * gm);
  for (std::size_t j = 0; j < gn; ++j) {
    std::size_t source;
    if (ring.is_integers() && m_free) {
      source = 0;  // a free generator surjects onto anything cyclic
    } else if (j < nn.free_rank) {
      // Target summand is Z/n-free; m must have a free generator too.
      source = 0;
    } else {
      source = gm - 1;  // the generator of maximal order
    }
    w.at(j, j * gm + source) = 1;
  }
  out.witness = std::move(w);
  return out;
}

bool module_acyclic(const FPModule& n, const FPModule& m) {
  require_same_ring(n.ring(), m.ring(), "module_acyclic");
  return supp_subset(n.support(), m.support());
}

bool nonzero_hom_exists(const FPModule& m, const FPModule& n) {
  require_same_ring(m.ring(), n.ring(), "nonzero_hom_exists");
  if (m.is_zero() || n.is_zero()) return false;
  if (m.ring().is_integers()) {
    if (m.normal_form().free_rank > 0) return true;  // Hom(Z, N) = N
    // Torsion into free is zero; Hom(Z/a, Z/b) = Z/gcd(a, b).
    Int tm = m.normal_form().invariant_factors.empty()
                 ? Int(1)
                 : m.normal_form().invariant_factors.back();
    Int tn = n.normal_form().invariant_factors.empty()
                 ? Int(1)
                 : n.normal_form().invariant_factors.back();
    return gcd(tm, tn) > 1;
  }
  return gcd(m.exponent(), n.exponent()) > 1;
}

bool verify_quotient_witness(const IntMatrix& witness, std::size_t t,
                             const FPModule& n, const FPModule& m) {
  require_same_ring(n.ring(), m.ring(), "verify_quotient_witness");
  const Int& modulus = n.ring().modulus();
  IntMatrix rel_n = n.canonical_relations();
  IntMatrix rel_m = m.canonical_relations();
  std::size_t gm = rel_m.rows();
  if (witness.rows() != rel_n.rows() || witness.cols() != t * gm) return false;

  // Well-definedness: each block must send the relations of m into the
  // relation submodule of n.
  for (std::size_t block = 0; block < t; ++block) {
    IntMatrix wb(witness.rows(), gm);
    for (std::size_t i = 0; i < witness.rows(); ++i)
      for (std::size_t j = 0; j < gm; ++j)
        wb.at(i, j) = witness.at(i, block * gm + j);
    IntMatrix image = mul(wb, rel_m);
    if (!solve_matrix(rel_n, image, modulus)) return false;
  }

  // Surjectivity: the cokernel of [witness | relations of n] vanishes.
  return FPModule(n.ring(), hcat(witness, rel_n)).is_zero();
}

}  // namespace homcell
