#pragma once

#include <utility>
#include <vector>

#include "homcell/complex.hpp"

namespace homcell {

// Increasing step function Z -> {specialization-closed subsets of Spec R}
// with finitely many breakpoints; empty below the first breakpoint. The
// complete invariant of finitely generated acyclic classes.
class PhiFunction {
 public:
  // Breakpoints must be strictly increasing in degree with values weakly
  // increasing under inclusion; values equal to their predecessor are
  // dropped to reach the canonical form.
  PhiFunction(RingSpec ring, std::vector<std::pair<int, SuppSet>> breakpoints);

  const RingSpec& ring() const { return ring_; }
  const std::vector<std::pair<int, SuppSet>>& breakpoints() const {
    return breakpoints_;
  }

  SuppSet at(int degree) const;

  friend bool operator==(const PhiFunction& a, const PhiFunction& b) = default;

 private:
  RingSpec ring_;
  std::vector<std::pair<int, SuppSet>> breakpoints_;
};

// phi(i) = union over the generators of Supp(H_k) for k <= i; the phi of
// the acyclic class generated by gens.
PhiFunction phi_of_generators(const std::vector<Object>& gens);

// Membership in the acyclic class A'_phi: every Supp(H_k x) inside phi(k).
bool phi_member(const Object& x, const PhiFunction& phi);

bool classes_equal(const std::vector<Object>& gens1,
                   const std::vector<Object>& gens2);

// A(gens1) contained in A(gens2), decided generator by generator.
bool class_contained(const std::vector<Object>& gens1,
                     const std::vector<Object>& gens2);

// Neeman-style membership for finite complexes: the localizing class of a
// set of primes contains x iff it contains the support of the homology.
bool localizing_member(const Object& x, const SuppSet& primes);

}  // namespace homcell
