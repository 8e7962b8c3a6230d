#include "homcell/rings.hpp"

#include <algorithm>
#include <sstream>

#include "homcell/errors.hpp"

namespace homcell {

RingSpec RingSpec::integers_mod(const Int& n) {
  if (n < 2) throw SchemaError("Z/n requires n >= 2");
  return RingSpec(n);
}

std::string RingSpec::str() const {
  if (is_integers()) return "Z";
  return "Z/" + n_.str();
}

void require_same_ring(const RingSpec& a, const RingSpec& b,
                       const char* context) {
  if (!(a == b))
    throw RingMismatchError(std::string(context) + ": " + a.str() + " vs " +
                            b.str());
}

PrimeIdeal PrimeIdeal::generic_point(const RingSpec& ring) {
  if (!ring.is_integers())
    throw SchemaError("the generic point exists only over Z");
  return PrimeIdeal(ring, true, Int(0));
}

PrimeIdeal PrimeIdeal::closed_point(const RingSpec& ring, const Int& p) {
  if (!is_prime(p)) throw SchemaError("closed point requires a prime: " + p.str());
  if (!ring.is_integers() && ring.modulus() % p != 0)
    throw SchemaError("prime " + p.str() + " does not divide " +
                      ring.modulus().str());
  return PrimeIdeal(ring, false, p);
}

SuppSet SuppSet::everything(const RingSpec& ring) {
  if (ring.is_integers()) return SuppSet(ring, true, {});
  // Spec Z/n is finite; canonical form is the explicit list of primes.
  return SuppSet(ring, false, prime_factors(ring.modulus()));
}

SuppSet SuppSet::closed_points(const RingSpec& ring, std::vector<Int> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (const Int& p : primes) {
    if (!is_prime(p)) throw SchemaError("not a prime: " + p.str());
    if (!ring.is_integers() && ring.modulus() % p != 0)
      throw SchemaError("prime " + p.str() + " does not divide " +
                        ring.modulus().str());
  }
  return SuppSet(ring, false, std::move(primes));
}

std::string SuppSet::str() const {
  if (everything_) return "Spec " + ring_.str();
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < primes_.size(); ++i)
    os << (i ? "," : "") << "(" << primes_[i] << ")";
  os << "}";
  return os.str();
}

bool supp_contains(const SuppSet& s, const PrimeIdeal& p) {
  require_same_ring(s.ring(), p.ring(), "supp_contains");
  if (s.is_everything()) return true;
  // The closure of (0) is all of Spec Z, so (0) only lies in Everything.
  if (p.is_generic()) return false;
  return std::binary_search(s.primes().begin(), s.primes().end(), p.prime());
}

bool supp_subset(const SuppSet& a, const SuppSet& b) {
  require_same_ring(a.ring(), b.ring(), "supp_subset");
  if (b.is_everything()) return true;
  if (a.is_everything()) return false;
  return std::includes(b.primes().begin(), b.primes().end(),
                       a.primes().begin(), a.primes().end());
}

SuppSet supp_union(const SuppSet& a, const SuppSet& b) {
  require_same_ring(a.ring(), b.ring(), "supp_union");
  if (a.is_everything() || b.is_everything())
    return SuppSet::everything(a.ring());
  std::vector<Int> merged;
  std::set_union(a.primes().begin(), a.primes().end(), b.primes().begin(),
                 b.primes().end(), std::back_inserter(merged));
  return SuppSet::closed_points(a.ring(), std::move(merged));
}

}  // namespace homcell
