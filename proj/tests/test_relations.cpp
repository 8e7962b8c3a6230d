#include <doctest.h>

#include <functional>

#include "corpus.hpp"
#include "homcell/relations.hpp"

using namespace homcell;
using homcell::testing::Rng;

namespace {

const RingSpec kZ = RingSpec::integers();

Object module_at(const RingSpec& ring, const Int& k, int degree) {
  return HomologyObject::concentrated(FPModule::cyclic(ring, k), degree);
}

}  // namespace

TEST_SUITE("relations") {

TEST_CASE("acyclic_over worked examples") {
  // Sigma Z/2 is Z/2-acyclic (suspension of an acyclic object)
  CHECK(acyclic_over(module_at(kZ, 2, 1), {module_at(kZ, 2, 0)}).acyclic);
  // but desuspension fails at degree 0 with witness prime 2
  AcyclicResult r = acyclic_over(module_at(kZ, 2, 0), {module_at(kZ, 2, 1)});
  CHECK_FALSE(r.acyclic);
  CHECK(r.obstruction->degree == 0);
  CHECK(r.obstruction->prime == 2);
  // equal supports in one degree
  CHECK(acyclic_over(module_at(kZ, 4, 0), {module_at(kZ, 2, 0)}).acyclic);
}

TEST_CASE("acyclic_over over several generators") {
  Object y = HomologyObject::concentrated(FPModule::cyclic(kZ, 6), 0);
  CHECK_FALSE(acyclic_over(y, {module_at(kZ, 2, 0)}).acyclic);
  CHECK(acyclic_over(y, {module_at(kZ, 2, 0), module_at(kZ, 3, 0)}).acyclic);
  CHECK_THROWS_AS(acyclic_over(y, {}), SchemaError);
}

TEST_CASE("acyclic_over: free module needs a witness prime off the list") {
  Object y = HomologyObject::concentrated(FPModule::from_invariants(kZ, 1, {}), 0);
  AcyclicResult r = acyclic_over(y, {module_at(kZ, 6, 0)});
  CHECK_FALSE(r.acyclic);
  CHECK(r.obstruction->degree == 0);
  CHECK(r.obstruction->prime == 5);  // smallest prime outside {2, 3}
}

TEST_CASE("cellular_decide: module cases") {
  Verdict v1 = cellular_decide(module_at(kZ, 2, 0), module_at(kZ, 4, 0));
  REQUIRE(v1.is_yes());
  const auto& me = std::get<cert::ModuleEpi>(*v1.certificate);
  CHECK(me.t == 1);
  CHECK(verify_certificate(*v1.certificate, module_at(kZ, 2, 0),
                           module_at(kZ, 4, 0)));

  Verdict v2 = cellular_decide(module_at(kZ, 4, 0), module_at(kZ, 2, 0));
  REQUIRE(v2.is_no());
  const auto& ob = std::get<ModuleObstruction>(*v2.obstruction);
  CHECK_FALSE(ob.free_rank_kind);
  CHECK(ob.prime == 2);
}

TEST_CASE("cellular_decide: acyclicity failure is an exact no") {
  Verdict v = cellular_decide(module_at(kZ, 2, 0), module_at(kZ, 2, 1));
  REQUIRE(v.is_no());
  const auto& ob = std::get<DegreeObstruction>(*v.obstruction);
  CHECK(ob.degree == 0);
  CHECK(ob.prime == 2);
}

TEST_CASE("cellular_decide: suspension via shifted support") {
  Verdict v = cellular_decide(module_at(kZ, 2, 1), module_at(kZ, 2, 0));
  REQUIRE(v.is_yes());
  CHECK(std::holds_alternative<cert::ShiftedSupport>(*v.certificate));
  CHECK(verify_certificate(*v.certificate, module_at(kZ, 2, 1),
                           module_at(kZ, 2, 0)));
}

TEST_CASE("cellular_decide: hom-epi hint") {
  FreeComplex pt(kZ, 0, {1}, {});
  FreeComplex x(kZ, 0, {1, 1}, {IntMatrix{{2}}});  // homology Z/2 at 0
  // projection Z -> Z in degree 0 covering H_0: x -> pt is not a map of
  // our shapes; instead use the identity hint on a complex against itself
  Verdict v = cellular_decide(Object{x}, Object{x},
                              std::optional<ChainMap>(ChainMap::identity(x)));
  REQUIRE(v.is_yes());
  // rule 2 does not apply (x is a complex whose homology sits in degree 0
  // only, so it does); accept either exact module certificate or hom-epi
  CHECK(verify_certificate(*v.certificate, Object{x}, Object{x}));

  // a genuine rule-3 case: two nonisomorphic complexes with homology in
  // two degrees and an epimorphic map between them
  FreeComplex big = direct_sum(std::vector<FreeComplex>{x, suspend(x, 2)});
  Verdict v2 = cellular_decide(Object{big}, Object{big},
                               std::optional<ChainMap>(ChainMap::identity(big)));
  REQUIRE(v2.is_yes());
  CHECK(std::holds_alternative<cert::HomEpi>(*v2.certificate));
  CHECK(verify_certificate(*v2.certificate, Object{big}, Object{big}));

  CHECK_THROWS_AS(
      cellular_decide(Object{x}, Object{big},
                      std::optional<ChainMap>(ChainMap::identity(x))),
      SchemaError);
}

TEST_CASE("cellular_decide: homology piece rule") {
  // X with homology Z/2 at 0 and Z/3 at 1; Y = Sigma H_1 X. Rules 1 and 4:
  // acyclicity holds, shifted support fails at degree 1 (phi(0) = {2}
  // does not contain 3); rule 5 fires.
  FreeComplex x(kZ, 0, {1, 2, 1},
                {IntMatrix{{2, 0}}, IntMatrix{{0}, {3}}});
  Object y = HomologyObject::concentrated(FPModule::cyclic(kZ, 3), 1);
  Verdict v = cellular_decide(y, Object{x});
  REQUIRE(v.is_yes());
  const auto& hp = std::get<cert::HomologyPiece>(*v.certificate);
  CHECK(hp.degree == 1);
  CHECK(verify_certificate(*v.certificate, y, Object{x}));
}

TEST_CASE("cellular_decide: the Z/4 unknown example") {
  RingSpec z4 = RingSpec::integers_mod(4);
  std::map<int, FPModule> s;
  s.emplace(0, FPModule::cyclic(z4, 2));
  s.emplace(1, FPModule::cyclic(z4, 2));
  Object y = HomologyObject(z4, std::move(s));
  Object x = FreeComplex(z4, 0, {1, 1}, {IntMatrix{{2}}});
  Verdict v = cellular_decide(y, x);
  REQUIRE(v.is_unknown());
  CHECK(v.rules_tried.size() == 5);
}

TEST_CASE("verify_certificate rejects wrong evidence") {
  // hom-epi with the zero map on a complex with nonzero homology
  FreeComplex x(kZ, 0, {1, 1}, {IntMatrix{{2}}});
  CellCertificate bad{cert::HomEpi{ChainMap::zero(x, x)}};
  CHECK_FALSE(verify_certificate(bad, Object{x}, Object{x}));

  // module-epi witness that does not reach the target
  CellCertificate bad2{cert::ModuleEpi{1, IntMatrix{{2}}}};
  CHECK_FALSE(
      verify_certificate(bad2, module_at(kZ, 4, 0), module_at(kZ, 4, 0)));
  CellCertificate good{cert::ModuleEpi{1, IntMatrix{{1}}}};
  CHECK(verify_certificate(good, module_at(kZ, 4, 0), module_at(kZ, 4, 0)));

  // shifted support for (Sigma Z/2, Z/2) holds, in the other order fails
  CellCertificate ss{cert::ShiftedSupport{}};
  CHECK(verify_certificate(ss, module_at(kZ, 2, 1), module_at(kZ, 2, 0)));
  CHECK_FALSE(verify_certificate(ss, module_at(kZ, 2, 0), module_at(kZ, 2, 1)));
}

TEST_CASE("hom_mono_acyclic") {
  FreeComplex pt(kZ, 0, {1}, {});
  CHECK(hom_mono_acyclic(ChainMap::identity(pt)) == std::optional<bool>(true));
  ChainMap times2(pt, pt, {{0, IntMatrix{{2}}}});
  CHECK(hom_mono_acyclic(times2) == std::optional<bool>(true));
  // H_0 of the projection Z^2 -> Z collapsing a summand has kernel Z
  FreeComplex two(kZ, 0, {2}, {});
  ChainMap proj(two, pt, {{0, IntMatrix{{1, 0}}}});
  CHECK_FALSE(hom_mono_acyclic(proj).has_value());
}

TEST_CASE("soundness on a random corpus") {
  Rng rng(2024);
  for (const RingSpec& ring : {kZ, RingSpec::integers_mod(4)}) {
    std::vector<Object> corpus = homcell::testing::build_corpus(rng, ring, 60);
    for (int it = 0; it < 300; ++it) {
      const Object& y = corpus[rng.index(corpus.size())];
      const Object& x = corpus[rng.index(corpus.size())];
      Verdict v = cellular_decide(y, x);
      if (v.is_yes()) {
        CHECK(verify_certificate(*v.certificate, y, x));
        CHECK(acyclic_over(y, {x}).acyclic);
      } else if (v.is_no()) {
        if (const auto* d = std::get_if<DegreeObstruction>(&*v.obstruction)) {
          HomologyObject hy = to_homology(y);
          PhiFunction phi = phi_of_generators({x});
          PrimeIdeal p = PrimeIdeal::closed_point(ring, d->prime);
          CHECK(supp_contains(hy.support_at(d->degree), p));
          CHECK_FALSE(supp_contains(phi.at(d->degree), p));
        }
      }
    }
  }
}

TEST_CASE("acyclic_over is reflexive and transitive on a corpus") {
  Rng rng(31337);
  std::vector<Object> corpus = homcell::testing::build_corpus(rng, kZ, 50);
  for (const Object& x : corpus) CHECK(acyclic_over(x, {x}).acyclic);
  for (int it = 0; it < 2000; ++it) {
    const Object& a = corpus[rng.index(corpus.size())];
    const Object& b = corpus[rng.index(corpus.size())];
    const Object& c = corpus[rng.index(corpus.size())];
    if (acyclic_over(a, {b}).acyclic && acyclic_over(b, {c}).acyclic)
      CHECK(acyclic_over(a, {c}).acyclic);
  }
}

TEST_CASE("homology pieces of a complex are acyclic over it") {
  Rng rng(99);
  for (const RingSpec& ring : {kZ, RingSpec::integers_mod(4)}) {
    for (int it = 0; it < 25; ++it) {
      FreeComplex x = homcell::testing::random_complex(rng, ring);
      HomologyObject h = x.homology();
      for (const auto& [k, m] : h.summands()) {
        Object piece = HomologyObject::concentrated(m, k);
        CHECK(acyclic_over(piece, {Object{x}}).acyclic);
      }
      if (!h.is_zero()) {
        CHECK(acyclic_over(Object{x}, {Object{h}}).acyclic);
        CHECK(acyclic_over(Object{h}, {Object{x}}).acyclic);
      }
    }
  }
}

TEST_CASE("module case is complete: no unknowns for torsion module pairs") {
  std::vector<FPModule> mods{FPModule::zero(kZ)};
  std::function<void(std::vector<Int>&, Int)> rec = [&](std::vector<Int>& c,
                                                        Int prod) {
    Int lo = c.empty() ? 2 : c.back();
    for (Int d = lo; prod * d <= 36; ++d) {
      if (!c.empty() && d % c.back() != 0) continue;
      c.push_back(d);
      mods.push_back(FPModule::from_invariants(kZ, 0, c));
      rec(c, prod * d);
      c.pop_back();
    }
  };
  std::vector<Int> chain;
  rec(chain, 1);
  for (const auto& n : mods) {
    for (const auto& m : mods) {
      if (m.is_zero()) continue;  // rule 2 needs a nonzero single-degree x
      Object y = HomologyObject::concentrated(n, 0);
      Object x = HomologyObject::concentrated(m, 0);
      Verdict v = cellular_decide(y, x);
      CHECK_FALSE(v.is_unknown());
      bool expected = evaluation_image(m, n).is_isomorphic_to(n);
      CHECK(v.is_yes() == expected);
    }
  }
}

TEST_CASE("epi hints never contradict the acyclicity rule") {
  Rng rng(4242);
  int tested = 0;
  while (tested < 40) {
    ChainMap f = homcell::testing::random_chain_map(rng, kZ);
    bool all_epi = true;
    for (const auto& [k, im] : induced_homology_maps(f))
      if (!im.cokernel().is_zero()) {
        all_epi = false;
        break;
      }
    if (!all_epi) continue;
    Verdict v = cellular_decide(Object{f.target()}, Object{f.source()},
                                std::optional<ChainMap>(f));
    CHECK(v.is_yes());
    ++tested;
  }
}

TEST_CASE("tensor preserves acyclicity") {
  Rng rng(1212);
  int checked = 0;
  while (checked < 20) {
    FreeComplex x = homcell::testing::random_complex(rng, kZ, -1, 1, 2, 3);
    FreeComplex w = homcell::testing::random_complex(rng, kZ, -1, 1, 2, 2);
    FreeComplex y = rng.chance(0.5)
                        ? suspend(x, 1)
                        : direct_sum(std::vector<FreeComplex>{x, x});
    if (!acyclic_over(Object{y}, {Object{x}}).acyclic) continue;
    CHECK(acyclic_over(Object{tensor(y, w)}, {Object{tensor(x, w)}}).acyclic);
    ++checked;
  }
}

}  // TEST_SUITE
