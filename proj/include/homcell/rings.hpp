#pragma once

#include <string>
#include <vector>

#include "homcell/errors.hpp"
#include "homcell/integers.hpp"

namespace homcell {

// The supported coefficient rings: Z and Z/n, n >= 2. Both have fully
// computable module theory via Smith normal form and enumerable spectra.
class RingSpec {
 public:
  static RingSpec integers() { return RingSpec(Int(0)); }
  static RingSpec integers_mod(const Int& n);

  bool is_integers() const { return n_ == 0; }
  // 0 for Z, n for Z/n; the value fed to the exact linear algebra layer.
  const Int& modulus() const { return n_; }

  friend bool operator==(const RingSpec& a, const RingSpec& b) = default;

  std::string str() const;

 private:
  explicit RingSpec(const Int& n) : n_(n) {}
  Int n_;
};

void require_same_ring(const RingSpec& a, const RingSpec& b,
                       const char* context);

// A point of Spec R: the zero ideal (Z only) or a closed point (p).
class PrimeIdeal {
 public:
  static PrimeIdeal generic_point(const RingSpec& ring);
  static PrimeIdeal closed_point(const RingSpec& ring, const Int& p);

  const RingSpec& ring() const { return ring_; }
  bool is_generic() const { return generic_; }
  const Int& prime() const { return p_; }

  friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) = default;

 private:
  PrimeIdeal(const RingSpec& ring, bool generic, const Int& p)
      : ring_(ring), generic_(generic), p_(p) {}
  RingSpec ring_;
  bool generic_;
  Int p_;
};

// A specialization-closed subset of Spec R: either everything or a finite
// set of closed points. Over Z/n "everything" is canonicalized to the set
// of primes dividing n, so equality is structural.
class SuppSet {
 public:
  static SuppSet everything(const RingSpec& ring);
  static SuppSet closed_points(const RingSpec& ring, std::vector<Int> primes);
  static SuppSet empty(const RingSpec& ring) {
    return closed_points(ring, {});
  }

  const RingSpec& ring() const { return ring_; }
  bool is_everything() const { return everything_; }
  bool is_empty() const { return !everything_ && primes_.empty(); }
  // Valid only when !is_everything(); sorted, deduplicated.
  const std::vector<Int>& primes() const { return primes_; }

  friend bool operator==(const SuppSet& a, const SuppSet& b) = default;

  std::string str() const;

 private:
  SuppSet(const RingSpec& ring, bool everything, std::vector<Int> primes)
      : ring_(ring), everything_(everything), primes_(std::move(primes)) {}
  RingSpec ring_;
  bool everything_;
  std::vector<Int> primes_;
};

bool supp_contains(const SuppSet& s, const PrimeIdeal& p);
bool supp_subset(const SuppSet& a, const SuppSet& b);
SuppSet supp_union(const SuppSet& a, const SuppSet& b);

}  // namespace homcell
