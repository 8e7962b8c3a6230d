#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "homcell/fp_module.hpp"

namespace homcell {

// Graded object carrying one nonzero module per degree; the shape every
// support-level criterion consumes, and the only representation available
// for modules without bounded free resolutions (Z/n torsion).
class HomologyObject {
 public:
  HomologyObject(RingSpec ring, std::map<int, FPModule> summands);

  static HomologyObject zero(const RingSpec& ring) {
    return HomologyObject(ring, {});
  }
  // M placed in a single degree; the zero module gives the zero object.
  static HomologyObject concentrated(const FPModule& m, int degree);

  const RingSpec& ring() const { return ring_; }
  const std::map<int, FPModule>& summands() const { return summands_; }
  bool is_zero() const { return summands_.empty(); }

  // Zero module when the degree carries nothing.
  FPModule module_at(int degree) const;
  SuppSet support_at(int degree) const;

  HomologyObject suspended(int shift) const;

  // Degreewise isomorphism of normal forms.
  bool is_isomorphic_to(const HomologyObject& other) const;

 private:
  RingSpec ring_;
  std::map<int, FPModule> summands_;
};

HomologyObject direct_sum(const HomologyObject& a, const HomologyObject& b);

// Bounded complex of finitely generated free modules, homological grading
// (the differential lowers degree by 1). d o d = 0 is checked and homology
// is computed at construction; values are immutable afterwards.
class FreeComplex {
 public:
  // ranks[i] is the rank in degree bottom + i; differentials[i] maps degree
  // bottom + i + 1 to bottom + i and has shape ranks[i] x ranks[i+1].
  FreeComplex(RingSpec ring, int bottom, std::vector<std::size_t> ranks,
              std::vector<IntMatrix> differentials);

  static FreeComplex zero(const RingSpec& ring) {
    return FreeComplex(ring, 0, {}, {});
  }

  const RingSpec& ring() const { return ring_; }
  bool is_zero() const { return ranks_.empty(); }
  int bottom() const { return bottom_; }
  int top() const { return bottom_ + static_cast<int>(ranks_.size()) - 1; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }

  std::size_t rank(int degree) const;
  // d_k : X_k -> X_{k-1}; zero-sized outside the support of the complex.
  IntMatrix differential(int degree) const;

  FPModule homology_module(int degree) const;
  // Columns generate ker d_k inside X_k; the homology presentation is on
  // exactly these generators.
  const IntMatrix& kernel_generators(int degree) const;
  HomologyObject homology() const;

  friend bool operator==(const FreeComplex& a, const FreeComplex& b);

 private:
  RingSpec ring_;
  int bottom_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> diffs_;
  std::map<int, std::pair<FPModule, IntMatrix>> hdata_;
};

// Degreewise matrix map of complexes; commuting squares are checked at
// construction, missing degrees are zero maps.
class ChainMap {
 public:
  ChainMap(FreeComplex source, FreeComplex target,
           std::map<int, IntMatrix> components);

  static ChainMap identity(const FreeComplex& x);
  static ChainMap zero(const FreeComplex& source, const FreeComplex& target);
  // c times the identity on x.
  static ChainMap scalar(const FreeComplex& x, const Int& c);

  const FreeComplex& source() const { return source_; }
  const FreeComplex& target() const { return target_; }
  const std::map<int, IntMatrix>& components() const { return components_; }
  IntMatrix component(int degree) const;

 private:
  FreeComplex source_;
  FreeComplex target_;
  std::map<int, IntMatrix> components_;
};

// A map from a complex into a shifted module Sigma^k M, given by its only
// nonzero component X_k -> M (matrix into the generators of M). The
// composite with d_{k+1} must die in M; checked at construction.
class ModuleValuedMap {
 public:
  ModuleValuedMap(FreeComplex source, int degree, FPModule target,
                  IntMatrix matrix);

  const FreeComplex& source() const { return source_; }
  int degree() const { return degree_; }
  const FPModule& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

 private:
  FreeComplex source_;
  int degree_;
  FPModule target_;
  IntMatrix matrix_;
};

// The map H_k(f) in generator coordinates of the two homology
// presentations, with its kernel and cokernel.
struct InducedMap {
  FPModule source_h;
  FPModule target_h;
  IntMatrix matrix;  // target generators x source generators

  FPModule kernel() const;
  FPModule cokernel() const;
};

struct ConeResult {
  FreeComplex complex;
  ChainMap include_target;        // Y -> C_f
  ChainMap project_shift_source;  // C_f -> Sigma X
};

FreeComplex suspend(const FreeComplex& x, int shift);
ConeResult cone(const ChainMap& f);
FreeComplex direct_sum(const std::vector<FreeComplex>& xs);

// Homotopy colimit of the finite directed system first -> ... -> last:
// the cone of (inclusion - shift) from the sum of all but the last object
// into the sum of all objects. Empty map list returns `first` itself.
FreeComplex hocolim(const FreeComplex& first, const std::vector<ChainMap>& maps);

// Total complex of the bidegree-wise tensor with Koszul signs; both inputs
// are degreewise free, so this computes the derived tensor product.
FreeComplex tensor(const FreeComplex& x, const FreeComplex& y);

// Two-term free complex in degrees k+1, k quasi-isomorphic to Sigma^k m.
// Throws UnresolvableOverQuotientRing for non-free m over Z/n.
FreeComplex module_to_complex(const FPModule& m, int degree);

std::map<int, InducedMap> induced_homology_maps(const ChainMap& f);

// The morphism x -> Sigma^k H_k(x) restricting to the canonical projection
// on cycles; requires H_i(x) = 0 for i < k.
ModuleValuedMap quotient_map_to_bottom_homology(const FreeComplex& x, int k);

InducedMap induced_map_at(const ChainMap& f, int degree);
InducedMap induced_map_of(const ModuleValuedMap& f);

// True iff localizing at p makes H_k(f) an isomorphism, i.e. neither the
// kernel nor the cokernel of H_k(f) is supported at p.
bool verify_local_h_iso(const ChainMap& f, int k, const PrimeIdeal& p);
bool verify_local_h_iso(const ModuleValuedMap& f, const PrimeIdeal& p);

struct EulerCharacteristics {
  Int chi_free;                  // alternating sum of ranks
  bool homology_finite = false;  // all H_k finite
  Int num = 1, den = 1;          // multiplicative Euler characteristic
};

EulerCharacteristics euler_characteristics(const FreeComplex& x);

// Either representation of a finite object of D(R).
using Object = std::variant<FreeComplex, HomologyObject>;

const RingSpec& object_ring(const Object& obj);
HomologyObject to_homology(const Object& obj);

}  // namespace homcell
