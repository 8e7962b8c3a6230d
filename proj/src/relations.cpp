#include "homcell/relations.hpp"

#include <algorithm>

#include "homcell/errors.hpp"

namespace homcell {

namespace {

const std::vector<std::string> kRuleNames = {
    "acyclicity", "module_case", "hom_epi", "shifted_support",
    "homology_piece"};

// Smallest closed point of supp not lying in sub (sub must not cover supp).
Int smallest_witness_prime(const SuppSet& supp, const SuppSet& sub) {
  if (supp.is_everything()) {
    if (sub.is_everything())
      throw InvariantViolation("no witness prime exists");
    return smallest_prime_not_in(sub.primes());
  }
  for (const Int& p : supp.primes()) {
    if (sub.is_everything()) break;
    if (!std::binary_search(sub.primes().begin(), sub.primes().end(), p))
      return p;
  }
  throw InvariantViolation("no witness prime exists");
}

std::optional<DegreeObstruction> support_violation(const HomologyObject& hy,
                                                   const PhiFunction& phi,
                                                   int shift) {
  for (const auto& [k, m] : hy.summands()) {
    SuppSet sy = m.support();
    SuppSet bound = phi.at(k + shift);
    if (!supp_subset(sy, bound))
      return DegreeObstruction{k, smallest_witness_prime(sy, bound)};
  }
  return std::nullopt;
}

}  // namespace

AcyclicResult acyclic_over(const Object& y, const std::vector<Object>& gens) {
  if (gens.empty()) throw SchemaError("acyclic_over: empty generator list");
  const RingSpec& ring = object_ring(y);
  for (const auto& g : gens)
    require_same_ring(ring, object_ring(g), "acyclic_over");
  PhiFunction phi = phi_of_generators(gens);
  auto violation = support_violation(to_homology(y), phi, 0);
  if (violation) return {false, violation};
  return {true, std::nullopt};
}

Verdict cellular_decide(const Object& y, const Object& x,
                        const std::optional<ChainMap>& hint) {
  require_same_ring(object_ring(y), object_ring(x), "cellular_decide");
  if (hint) {
    if (!std::holds_alternative<FreeComplex>(x) ||
        !std::holds_alternative<FreeComplex>(y) ||
        !(hint->source() == std::get<FreeComplex>(x)) ||
        !(hint->target() == std::get<FreeComplex>(y)))
      throw SchemaError("hint is not a chain map from x to y");
  }

  // Rule 1: cellular implies acyclic, so a failed support criterion is an
  // exact No.
  AcyclicResult ac = acyclic_over(y, {x});
  if (!ac.acyclic)
    return Verdict{Verdict::Kind::No, std::nullopt,
                   Obstruction{*ac.obstruction}, {}};

  HomologyObject hy = to_homology(y);
  HomologyObject hx = to_homology(x);

  // Rule 2: both objects concentrated in one equal degree reduce exactly
  // to the module criterion.
  if (hy.summands().size() == 1 && hx.summands().size() == 1 &&
      hy.summands().begin()->first == hx.summands().begin()->first) {
    QuotientDecision qd = is_quotient_of_sum(hy.summands().begin()->second,
                                             hx.summands().begin()->second);
    if (qd.yes)
      return Verdict{Verdict::Kind::Yes,
                     CellCertificate{cert::ModuleEpi{qd.t, *qd.witness}},
                     std::nullopt,
                     {}};
    return Verdict{Verdict::Kind::No, std::nullopt,
                   Obstruction{*qd.obstruction}, {}};
  }

  // Rule 3: a hint epimorphic on all homology certifies Y >> X.
  if (hint) {
    bool all_epi = true;
    for (const auto& [k, im] : induced_homology_maps(*hint))
      if (!im.cokernel().is_zero()) {
        all_epi = false;
        break;
      }
    if (all_epi)
      return Verdict{Verdict::Kind::Yes, CellCertificate{cert::HomEpi{*hint}},
                     std::nullopt, {}};
  }

  // Rule 4: the criterion shifted by one exhibits Y as the suspension of
  // an X-acyclic object, and suspensions of acyclics are cellular.
  PhiFunction phi = phi_of_generators({x});
  if (!support_violation(hy, phi, -1)) {
    cert::ShiftedSupport ss;
    for (const auto& [k, m] : hy.summands())
      ss.entries.push_back({k, m.support(), phi.at(k - 1)});
    return Verdict{Verdict::Kind::Yes, CellCertificate{std::move(ss)},
                   std::nullopt, {}};
  }

  // Rule 5: Y isomorphic to a single homology piece Sigma^k H_k X.
  if (hy.summands().size() == 1) {
    int k = hy.summands().begin()->first;
    if (hy.summands().begin()->second.is_isomorphic_to(hx.module_at(k)))
      return Verdict{Verdict::Kind::Yes,
                     CellCertificate{cert::HomologyPiece{k}}, std::nullopt,
                     {}};
  }

  return Verdict{Verdict::Kind::Unknown, std::nullopt, std::nullopt,
                 kRuleNames};
}

bool verify_certificate(const CellCertificate& certificate, const Object& y,
                        const Object& x) {
  require_same_ring(object_ring(y), object_ring(x), "verify_certificate");
  HomologyObject hy = to_homology(y);
  HomologyObject hx = to_homology(x);

  if (const auto* me = std::get_if<cert::ModuleEpi>(&certificate)) {
    if (hy.summands().size() > 1 || hx.summands().size() != 1) return false;
    int degree = hx.summands().begin()->first;
    FPModule n = hy.module_at(degree);
    if (!hy.is_zero() && hy.summands().begin()->first != degree) return false;
    return verify_quotient_witness(me->matrix, me->t, n,
                                   hx.summands().begin()->second);
  }
  if (const auto* he = std::get_if<cert::HomEpi>(&certificate)) {
    if (!std::holds_alternative<FreeComplex>(x) ||
        !std::holds_alternative<FreeComplex>(y))
      return false;
    if (!(he->f.source() == std::get<FreeComplex>(x)) ||
        !(he->f.target() == std::get<FreeComplex>(y)))
      return false;
    for (const auto& [k, im] : induced_homology_maps(he->f))
      if (!im.cokernel().is_zero()) return false;
    return true;
  }
  if (std::holds_alternative<cert::ShiftedSupport>(certificate)) {
    PhiFunction phi = phi_of_generators({x});
    return !support_violation(hy, phi, -1).has_value();
  }
  const auto& hp = std::get<cert::HomologyPiece>(certificate);
  HomologyObject piece = HomologyObject::concentrated(hx.module_at(hp.degree),
                                                      hp.degree);
  return hy.is_isomorphic_to(piece);
}

std::optional<bool> hom_mono_acyclic(const ChainMap& f) {
  for (const auto& [k, im] : induced_homology_maps(f))
    if (!im.kernel().is_zero()) return std::nullopt;
  return acyclic_over(Object{f.source()}, {Object{f.target()}}).acyclic;
}

}  // namespace homcell
