#include "homcell/stanley.hpp"

#include "homcell/errors.hpp"

namespace homcell {

PhiFunction::PhiFunction(RingSpec ring,
                         std::vector<std::pair<int, SuppSet>> breakpoints)
    : ring_(std::move(ring)) {
  SuppSet prev = SuppSet::empty(ring_);
  int prev_degree = 0;
  bool first = true;
  for (auto& [degree, value] : breakpoints) {
    require_same_ring(ring_, value.ring(), "PhiFunction");
    if (!first && degree <= prev_degree)
      throw SchemaError("phi breakpoints must be strictly increasing");
    if (!supp_subset(prev, value))
      throw SchemaError("phi must be increasing");
    if (!(value == prev)) breakpoints_.emplace_back(degree, value);
    prev = value;
    prev_degree = degree;
    first = false;
  }
}

SuppSet PhiFunction::at(int degree) const {
  SuppSet value = SuppSet::empty(ring_);
  for (const auto& [d, v] : breakpoints_) {
    if (d > degree) break;
    value = v;
  }
  return value;
}

PhiFunction phi_of_generators(const std::vector<Object>& gens) {
  if (gens.empty()) throw SchemaError("phi_of_generators: empty generator list");
  const RingSpec& ring = object_ring(gens.front());
  for (const auto& g : gens)
    require_same_ring(ring, object_ring(g), "phi_of_generators");

  std::map<int, SuppSet> per_degree;
  for (const auto& g : gens) {
    HomologyObject h = to_homology(g);
    for (const auto& [k, m] : h.summands()) {
      auto it = per_degree.find(k);
      if (it == per_degree.end())
        per_degree.emplace(k, m.support());
      else
        it->second = supp_union(it->second, m.support());
    }
  }

  std::vector<std::pair<int, SuppSet>> breakpoints;
  SuppSet running = SuppSet::empty(ring);
  for (const auto& [k, s] : per_degree) {
    running = supp_union(running, s);
    breakpoints.emplace_back(k, running);
  }
  return PhiFunction(ring, std::move(breakpoints));
}

bool phi_member(const Object& x, const PhiFunction& phi) {
  require_same_ring(object_ring(x), phi.ring(), "phi_member");
  HomologyObject h = to_homology(x);
  for (const auto& [k, m] : h.summands())
    if (!supp_subset(m.support(), phi.at(k))) return false;
  return true;
}

bool classes_equal(const std::vector<Object>& gens1,
                   const std::vector<Object>& gens2) {
  return phi_of_generators(gens1) == phi_of_generators(gens2);
}

bool class_contained(const std::vector<Object>& gens1,
                     const std::vector<Object>& gens2) {
  PhiFunction phi = phi_of_generators(gens2);
  for (const auto& g : gens1)
    if (!phi_member(g, phi)) return false;
  return true;
}

bool localizing_member(const Object& x, const SuppSet& primes) {
  require_same_ring(object_ring(x), primes.ring(), "localizing_member");
  HomologyObject h = to_homology(x);
  SuppSet total = SuppSet::empty(primes.ring());
  for (const auto& [k, m] : h.summands())
    total = supp_union(total, m.support());
  return supp_subset(total, primes);
}

}  // namespace homcell
