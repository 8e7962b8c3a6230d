#pragma once

#include <optional>
#include <vector>

#include "homcell/int_matrix.hpp"
#include "homcell/rings.hpp"
#include "homcell/snf.hpp"

namespace homcell {

// Isomorphism invariant of a finitely presented module: free part plus the
// canonical divisibility chain d_1 | d_2 | ... with every d_i >= 2. Over
// Z/n the free rank counts Z/n-free summands (invariant factor n) and the
// chain lists the factors strictly dividing n.
struct ModuleNormalForm {
  std::size_t free_rank = 0;
  std::vector<Int> invariant_factors;

  friend bool operator==(const ModuleNormalForm& a,
                         const ModuleNormalForm& b) = default;
  bool is_zero() const { return free_rank == 0 && invariant_factors.empty(); }
  std::string str() const;
};

// Finitely presented module via a presentation matrix: g generators by r
// relations, columns are relations. The normal form is computed once at
// construction.
class FPModule {
 public:
  FPModule(RingSpec ring, IntMatrix presentation);

  static FPModule zero(const RingSpec& ring) {
    return FPModule(ring, IntMatrix(0, 0));
  }
  static FPModule from_invariants(const RingSpec& ring, std::size_t free_rank,
                                  std::vector<Int> invariant_factors);
  // Z/k as a module over the given ring (k must divide n over Z/n).
  static FPModule cyclic(const RingSpec& ring, const Int& k);

  const RingSpec& ring() const { return ring_; }
  const IntMatrix& presentation() const { return presentation_; }
  std::size_t generators() const { return presentation_.rows(); }
  const ModuleNormalForm& normal_form() const { return nf_; }

  bool is_zero() const { return nf_.is_zero(); }
  bool is_isomorphic_to(const FPModule& other) const;

  // Exponent of the torsion part: the largest invariant factor, 1 for a
  // torsion-free (or zero) module. Over Z/n free summands count as torsion
  // of order n.
  Int exponent() const;

  // Generator of Ann(M): over Z, 0 for positive free rank, the largest
  // invariant factor for torsion, 1 for the zero module. Over Z/n the
  // integer e representing the ideal (e)/(n); e = n for a free module,
  // e = 1 for the zero module.
  Int annihilator() const;

  SuppSet support() const;

  // Order of the underlying finite group, if finite.
  std::optional<Int> order() const;

  // Canonical relation matrix in normal-form coordinates: generators
  // ordered free-first then torsion ascending, relations d_i * e_i on the
  // torsion generators.
  IntMatrix canonical_relations() const;

 private:
  RingSpec ring_;
  IntMatrix presentation_;
  ModuleNormalForm nf_;
};

FPModule direct_sum(const FPModule& a, const FPModule& b);

// Largest submodule of n generated by homomorphic images of m, i.e. the
// image of the evaluation map Hom(m, n) (x) m -> n, in normal form.
FPModule evaluation_image(const FPModule& m, const FPModule& n);

// Obstruction to "n is a quotient of a sum of m".
struct ModuleObstruction {
  bool free_rank_kind = false;  // n has free rank that m cannot reach
  Int prime = 0;                // else: v_p(exp n) > v_p(exp m) at this p
  friend bool operator==(const ModuleObstruction&,
                         const ModuleObstruction&) = default;
};

struct QuotientDecision {
  bool yes = false;
  // On yes: matrix of a surjection m^t -> n in normal-form coordinates
  // (rows = generators of n, columns = t blocks of generators of m).
  std::size_t t = 0;
  std::optional<IntMatrix> witness;
  std::optional<ModuleObstruction> obstruction;
};

QuotientDecision is_quotient_of_sum(const FPModule& n, const FPModule& m);

// Exact module-level acyclicity: Supp(n) contained in Supp(m).
bool module_acyclic(const FPModule& n, const FPModule& m);

bool nonzero_hom_exists(const FPModule& m, const FPModule& n);

// Re-checks a quotient witness from scratch: well-definedness on m^t and
// surjectivity onto n.
bool verify_quotient_witness(const IntMatrix& witness, std::size_t t,
                             const FPModule& n, const FPModule& m);

}  // namespace homcell
