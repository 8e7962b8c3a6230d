#include <doctest.h>

#include "corpus.hpp"
#include "homcell/complex.hpp"
#include "homcell/oracles.hpp"

using namespace homcell;
using homcell::testing::Rng;
using homcell::testing::random_complex;

namespace {

const RingSpec kZ = RingSpec::integers();

FreeComplex two_term(const RingSpec& ring, const Int& c, int bottom = 0) {
  return FreeComplex(ring, bottom, {1, 1}, {IntMatrix{{c}}});
}

}  // namespace

TEST_SUITE("complexes") {

TEST_CASE("homology of small complexes") {
  FreeComplex x = two_term(kZ, 2);  // Z --2--> Z in degrees 1, 0
  CHECK(x.homology_module(0).normal_form() == ModuleNormalForm{0, {2}});
  CHECK(x.homology_module(1).is_zero());
  CHECK(FreeComplex::zero(kZ).homology().is_zero());

  RingSpec z4 = RingSpec::integers_mod(4);
  FreeComplex y = two_term(z4, 2);
  CHECK(y.homology_module(0).normal_form() == ModuleNormalForm{0, {2}});
  CHECK(y.homology_module(1).normal_form() == ModuleNormalForm{0, {2}});
  CHECK(y.homology().is_isomorphic_to(oracle_homology_enum(y)));
}

TEST_CASE("d o d != 0 is rejected") {
  CHECK_THROWS_AS(FreeComplex(kZ, 0, {1, 1, 1},
                              {IntMatrix{{2}}, IntMatrix{{3}}}),
                  SchemaError);
  Rng rng(77);
  int rejected = 0;
  while (rejected < 100) {
    FreeComplex x = random_complex(rng, kZ, 0, 0, 3, 4);
    if (x.top() - x.bottom() < 2) continue;
    // corrupt one entry of an inner differential
    std::vector<IntMatrix> diffs;
    for (int k = x.bottom() + 1; k <= x.top(); ++k)
      diffs.push_back(x.differential(k));
    std::size_t which = 1 + rng.index(diffs.size() - 1);
    IntMatrix& d = diffs[which];
    if (d.rows() == 0 || d.cols() == 0) continue;
    d.at(rng.index(d.rows()), rng.index(d.cols())) += 1;
    IntMatrix dd = mul(diffs[which - 1], diffs[which]);
    bool still_complex = dd.is_zero();
    if (which + 1 < diffs.size())
      still_complex = still_complex && mul(d, diffs[which + 1]).is_zero();
    if (still_complex) continue;
    CHECK_THROWS_AS(
        FreeComplex(kZ, x.bottom(), x.ranks(), std::move(diffs)),
        SchemaError);
    ++rejected;
  }
}

TEST_CASE("suspend") {
  Rng rng(3);
  FreeComplex x = random_complex(rng, kZ);
  CHECK(suspend(x, 0) == x);
  CHECK(suspend(suspend(x, 1), -1) == x);
  for (int n = -3; n <= 3; ++n) {
    FreeComplex s = suspend(x, n);
    for (int k = x.bottom() - 1; k <= x.top() + 1; ++k)
      CHECK(s.homology_module(k + n).is_isomorphic_to(x.homology_module(k)));
  }
}

TEST_CASE("cone") {
  Rng rng(4);
  for (int it = 0; it < 20; ++it) {
    FreeComplex x = random_complex(rng, kZ);
    CHECK(cone(ChainMap::identity(x)).complex.homology().is_zero());
    // the cone of X -> 0 is the suspension
    ChainMap to_zero = ChainMap::zero(x, FreeComplex::zero(kZ));
    CHECK(cone(to_zero).complex == suspend(x, 1));
  }
  FreeComplex pt(kZ, 0, {1}, {});
  ChainMap times2(pt, pt, {{0, IntMatrix{{2}}}});
  ConeResult c = cone(times2);
  CHECK(c.complex.homology_module(0).normal_form() == ModuleNormalForm{0, {2}});
  CHECK(c.complex.homology_module(1).is_zero());
}

TEST_CASE("direct_sum of complexes") {
  Rng rng(5);
  FreeComplex x = random_complex(rng, kZ);
  CHECK(direct_sum(std::vector<FreeComplex>{x}) == x);
  FreeComplex y = random_complex(rng, kZ);
  FreeComplex s = direct_sum(std::vector<FreeComplex>{x, y});
  for (int k = s.bottom(); k <= s.top(); ++k)
    CHECK(s.homology_module(k).is_isomorphic_to(
        direct_sum(x.homology_module(k), y.homology_module(k))));
  CHECK(direct_sum(std::vector<FreeComplex>{FreeComplex::zero(kZ),
                                            FreeComplex::zero(kZ)})
            .is_zero());
}

TEST_CASE("hocolim") {
  Rng rng(6);
  FreeComplex x = random_complex(rng, kZ);
  CHECK(hocolim(x, {}).homology().is_isomorphic_to(x.homology()));
  // constant system along the identity collapses
  ChainMap id = ChainMap::identity(x);
  CHECK(hocolim(x, {id}).homology().is_isomorphic_to(x.homology()));
  CHECK(hocolim(x, {id, id}).homology().is_isomorphic_to(x.homology()));
  // Z --2--> Z --2--> Z: over the finite system H_0 comes from the last term
  FreeComplex pt(kZ, 0, {1}, {});
  ChainMap times2(pt, pt, {{0, IntMatrix{{2}}}});
  FreeComplex h = hocolim(pt, {times2, times2});
  CHECK(h.homology_module(0).normal_form() == ModuleNormalForm{1, {}});
  for (int k = 1; k <= h.top(); ++k) CHECK(h.homology_module(k).is_zero());
}

TEST_CASE("tensor") {
  Rng rng(7);
  FreeComplex unit(kZ, 0, {1}, {});
  for (int it = 0; it < 10; ++it) {
    FreeComplex x = random_complex(rng, kZ);
    CHECK(tensor(x, unit) == x);
    CHECK(tensor(unit, x) == x);
  }
  // Tor: res(Z/2) (x) res(Z/2) has H_0 = H_1 = Z/2
  FreeComplex r2 = module_to_complex(FPModule::cyclic(kZ, 2), 0);
  FreeComplex r3 = module_to_complex(FPModule::cyclic(kZ, 3), 0);
  FreeComplex t22 = tensor(r2, r2);
  CHECK(t22.homology_module(0).normal_form() == ModuleNormalForm{0, {2}});
  CHECK(t22.homology_module(1).normal_form() == ModuleNormalForm{0, {2}});
  CHECK(tensor(r2, r3).homology().is_zero());
}

TEST_CASE("tensor is commutative and associative up to homology") {
  Rng rng(8);
  for (int it = 0; it < 10; ++it) {
    FreeComplex x = random_complex(rng, kZ, -1, 1, 2, 3);
    FreeComplex y = random_complex(rng, kZ, -1, 1, 2, 3);
    FreeComplex z = random_complex(rng, kZ, -1, 1, 2, 2);
    CHECK(tensor(x, y).homology().is_isomorphic_to(tensor(y, x).homology()));
    CHECK(tensor(tensor(x, y), z)
              .homology()
              .is_isomorphic_to(tensor(x, tensor(y, z)).homology()));
  }
}

TEST_CASE("module_to_complex") {
  FreeComplex r2 = module_to_complex(FPModule::cyclic(kZ, 2), 0);
  CHECK(r2 == two_term(kZ, 2));
  FreeComplex f3 = module_to_complex(FPModule::from_invariants(kZ, 1, {}), 3);
  CHECK(f3.bottom() == 3);
  CHECK(f3.ranks() == std::vector<std::size_t>{1});
  RingSpec z4 = RingSpec::integers_mod(4);
  CHECK_THROWS_AS(module_to_complex(FPModule::cyclic(z4, 2), 0),
                  UnresolvableOverQuotientRing);
  CHECK(module_to_complex(FPModule::cyclic(z4, 4), 0).ranks() ==
        std::vector<std::size_t>{1});
  // redundant relations are pruned to an honest resolution
  FPModule m(kZ, IntMatrix{{2, 2, 4}});
  FreeComplex r = module_to_complex(m, 0);
  CHECK(r.ranks() == std::vector<std::size_t>{1, 1});
  CHECK(r.homology_module(0).is_isomorphic_to(m));
  CHECK(r.homology_module(1).is_zero());
}

TEST_CASE("induced_homology_maps") {
  Rng rng(9);
  FreeComplex x = random_complex(rng, kZ);
  for (const auto& [k, im] : induced_homology_maps(ChainMap::identity(x))) {
    CHECK(im.kernel().is_zero());
    CHECK(im.cokernel().is_zero());
  }
  FreeComplex pt(kZ, 0, {1}, {});
  ChainMap times2(pt, pt, {{0, IntMatrix{{2}}}});
  InducedMap im0 = induced_map_at(times2, 0);
  CHECK(im0.cokernel().normal_form() == ModuleNormalForm{0, {2}});
  CHECK(im0.kernel().is_zero());
  for (const auto& [k, im] :
       induced_homology_maps(ChainMap::zero(x, x))) {
    CHECK(im.cokernel().is_isomorphic_to(x.homology_module(k)));
    CHECK(im.kernel().is_isomorphic_to(x.homology_module(k)));
  }
}

TEST_CASE("quotient_map_to_bottom_homology") {
  FreeComplex x = two_term(kZ, 2);
  ModuleValuedMap q = quotient_map_to_bottom_homology(x, 0);
  CHECK(q.target().is_isomorphic_to(FPModule::cyclic(kZ, 2)));
  InducedMap im = induced_map_of(q);
  CHECK(im.kernel().is_zero());
  CHECK(im.cokernel().is_zero());

  CHECK_THROWS_AS(quotient_map_to_bottom_homology(x, 1), HypothesisFailed);

  FreeComplex f2(kZ, 2, {1}, {});
  ModuleValuedMap q2 = quotient_map_to_bottom_homology(f2, 2);
  CHECK(q2.target().normal_form() == ModuleNormalForm{1, {}});
  CHECK(q2.matrix() == IntMatrix::identity(1));
}

TEST_CASE("quotient_map over Z/n with cycles that are not free") {
  RingSpec z4 = RingSpec::integers_mod(4);
  // X_1 = (Z/4)^2 --(1 2)--> X_0 = Z/4 is exact at degree 0; H_1 is cyclic
  // of order 4 generated by (2, 1), a non-free direct summand situation.
  FreeComplex x(z4, 0, {1, 2}, {IntMatrix{{1, 2}}});
  REQUIRE(x.homology_module(0).is_zero());
  ModuleValuedMap q = quotient_map_to_bottom_homology(x, 1);
  InducedMap im = induced_map_of(q);
  CHECK(im.kernel().is_zero());
  CHECK(im.cokernel().is_zero());
}

TEST_CASE("quotient_map on random complexes at their lowest degree") {
  Rng rng(10);
  for (const RingSpec& ring : {kZ, RingSpec::integers_mod(4)}) {
    for (int it = 0; it < 25; ++it) {
      FreeComplex x = random_complex(rng, ring);
      if (x.is_zero()) continue;
      int k = x.bottom();
      while (k <= x.top() && x.homology_module(k).is_zero()) ++k;
      if (k > x.top()) continue;
      ModuleValuedMap q = quotient_map_to_bottom_homology(x, k);
      InducedMap im = induced_map_of(q);
      CHECK(im.kernel().is_zero());
      CHECK(im.cokernel().is_zero());
    }
  }
}

TEST_CASE("verify_local_h_iso") {
  FreeComplex pt(kZ, 0, {1}, {});
  CHECK(verify_local_h_iso(ChainMap::identity(pt), 0,
                           PrimeIdeal::closed_point(kZ, 5)));
  ChainMap times2(pt, pt, {{0, IntMatrix{{2}}}});
  CHECK(verify_local_h_iso(times2, 0, PrimeIdeal::closed_point(kZ, 3)));
  CHECK_FALSE(verify_local_h_iso(times2, 0, PrimeIdeal::closed_point(kZ, 2)));
}

TEST_CASE("local iso detection matches the useful-proposition setting") {
  // X with H_0 = Z/2 and H_1 = Z/3: at p = 3 the quotient map to Sigma^0
  // H_0 cannot be built (H below 1 is nonzero), but the local statement
  // at degree 1 is checkable through a module-valued map.
  FreeComplex x(kZ, 0, {1, 2, 1},
                {IntMatrix{{2, 0}}, IntMatrix{{0}, {3}}});
  REQUIRE(x.homology_module(0).normal_form() == ModuleNormalForm{0, {2}});
  REQUIRE(x.homology_module(1).normal_form() == ModuleNormalForm{0, {3}});
  // the degreewise quotient onto H_1 exists here because ker d_1 splits
  FPModule h1 = x.homology_module(1);
  ModuleValuedMap f(x, 1, h1, IntMatrix{{0, 1}});
  CHECK(verify_local_h_iso(f, PrimeIdeal::closed_point(kZ, 3)));
  CHECK(verify_local_h_iso(f, PrimeIdeal::closed_point(kZ, 5)));
}

TEST_CASE("euler_characteristics") {
  EulerCharacteristics e0 = euler_characteristics(FreeComplex::zero(kZ));
  CHECK(e0.chi_free == 0);
  CHECK(e0.homology_finite);
  CHECK(e0.num == 1);
  CHECK(e0.den == 1);

  EulerCharacteristics e1 = euler_characteristics(two_term(kZ, 2));
  CHECK(e1.chi_free == 0);
  CHECK(e1.homology_finite);
  CHECK(e1.num == 2);
  CHECK(e1.den == 1);

  EulerCharacteristics e2 = euler_characteristics(FreeComplex(kZ, 0, {1}, {}));
  CHECK(e2.chi_free == 1);
  CHECK_FALSE(e2.homology_finite);
}

TEST_CASE("cone Euler identities") {
  Rng rng(12);
  for (int it = 0; it < 30; ++it) {
    ChainMap f = homcell::testing::random_chain_map(rng, kZ);
    ConeResult c = cone(f);
    EulerCharacteristics ex = euler_characteristics(f.source());
    EulerCharacteristics ey = euler_characteristics(f.target());
    EulerCharacteristics ec = euler_characteristics(c.complex);
    CHECK(ec.chi_free == ey.chi_free - ex.chi_free);
    if (ex.homology_finite && ey.homology_finite) {
      REQUIRE(ec.homology_finite);
      // chi(C) = chi(Y) / chi(X) as positive rationals
      CHECK(ec.num * ey.den * ex.num == ec.den * ey.num * ex.den);
    }
  }
}

TEST_CASE("homology over Z/n matches the enumeration oracle") {
  Rng rng(13);
  for (int it = 0; it < 40; ++it) {
    RingSpec ring = RingSpec::integers_mod(rng.uniform(2, 9));
    FreeComplex x = random_complex(rng, ring, -2, 1, 3, 3);
    CHECK(x.homology().is_isomorphic_to(oracle_homology_enum(x)));
  }
}

}  // TEST_SUITE
