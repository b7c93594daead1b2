#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "error.hpp"
#include "hessian.hpp"
#include "support.hpp"

using namespace llab;
using namespace llab::test;

namespace {

VanishingOptions mode(VanishingMode m, std::uint64_t seed = 0) {
  VanishingOptions o;
  o.mode = m;
  o.seed = seed;
  return o;
}

}  // namespace

TEST_CASE("hessian_matrix at k = 0 is f itself") {
  const Poly f = ikeda();
  const HessianMatrix h = hessian_matrix(f, 0);
  REQUIRE(h.size() == 1);
  CHECK(h.at(0, 0) == f);
}

TEST_CASE("hessian_matrix of x^3 at k = 1") {
  const Poly f = poly("x^3", "x");
  const HessianMatrix h = hessian_matrix(f, 1);
  REQUIRE(h.size() == 1);
  CHECK(h.at(0, 0) == poly("6*x", "x"));
}

TEST_CASE("second Hessian of the Ikeda form has u-only rows for the mixed prefix") {
  const Poly f = ikeda();
  const AkBasis b = ak_basis(f, 2, ops(f, {"X0*U2", "X0*U1", "X1*U2", "X1*U1"}));
  const HessianMatrix h = hessian_matrix(f, 2, &b);
  REQUIRE(h.size() == 10);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) CHECK(h.at(i, j) == h.at(j, i));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 10; ++j) CHECK(h.at(i, j).in_u_subring());
}

TEST_CASE("hessian_vanishes oracles in both modes") {
  for (auto m : {VanishingMode::Exact, VanishingMode::Probabilistic}) {
    CAPTURE(to_string(m));
    CHECK(hessian_vanishes(perazzo(), 1, mode(m)).vanishes);
    CHECK_FALSE(hessian_vanishes(ikeda(), 1, mode(m)).vanishes);
    CHECK(hessian_vanishes(ikeda(), 2, mode(m)).vanishes);
    CHECK_FALSE(hessian_vanishes(poly("x^4 + y^4 + z^4", "x,y,z"), 1, mode(m)).vanishes);
  }
}

TEST_CASE("verdicts carry their evidence") {
  const auto nz = hessian_vanishes(ikeda(), 1, mode(VanishingMode::Probabilistic));
  REQUIRE(nz.witness_point);
  REQUIRE(nz.det_value);
  CHECK(*nz.det_value != 0);
  const auto z = hessian_vanishes(ikeda(), 2, mode(VanishingMode::Exact));
  CHECK(z.mode == VanishingMode::Exact);
  REQUIRE(z.transcript_hash);
  CHECK(z.transcript_hash->size() == 16);
}

TEST_CASE("probabilistic vanishing above the cutoff reports an error bound") {
  VanishingOptions o = mode(VanishingMode::Probabilistic);
  o.exact_cutoff = 0;
  const auto v = hessian_vanishes(perazzo(), 1, o);
  CHECK(v.vanishes);
  CHECK(v.mode == VanishingMode::Probabilistic);
  REQUIRE(v.error_bound);
  CHECK(*v.error_bound < 1e-8);
}

TEST_CASE("hessian_vanishes rejects levels past the socle") {
  CHECK_THROWS_AS(hessian_vanishes(ikeda(), 6, mode(VanishingMode::Exact)), Error);
}

TEST_CASE("hess_profile") {
  auto flags = vanishing_flags(hess_profile(ikeda(), mode(VanishingMode::Probabilistic)));
  CHECK(flags == std::vector<bool>{false, false, true});
  flags = vanishing_flags(hess_profile(poly("x^5 + y^5", "x,y"), mode(VanishingMode::Exact)));
  CHECK(flags == std::vector<bool>{false, false, false});
  flags = vanishing_flags(hess_profile(gen_exceptional(3, 7, 3).f, mode(VanishingMode::Probabilistic)));
  CHECK(flags == std::vector<bool>{false, false, true, true});
  CHECK(hess_profile(ikeda(), mode(VanishingMode::Exact), 1).size() == 2);
}

TEST_CASE("hess_profile is deterministic in the seed") {
  const auto a = hess_profile(ikeda(), mode(VanishingMode::Probabilistic, 7));
  const auto b = hess_profile(ikeda(), mode(VanishingMode::Probabilistic, 7));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].witness_point == b[i].witness_point);
    CHECK(a[i].det_value == b[i].det_value);
  }
}

TEST_CASE("is_cone") {
  auto c = is_cone(poly("x^2", "x,y"));
  CHECK(c.is_cone);
  CHECK(c.dependency == std::vector<Rational>{0, 1});
  CHECK_FALSE(is_cone(perazzo()).is_cone);
  c = is_cone(poly("x^3 + 3*x^2*y + 3*x*y^2 + y^3", "x,y"));
  CHECK(c.is_cone);
  CHECK(c.dependency == std::vector<Rational>{1, -1});
}

TEST_CASE("second_partials_det_vanishes") {
  const auto o = mode(VanishingMode::Exact);
  CHECK(second_partials_det_vanishes(poly("x^2", "x,y"), o).vanishes);
  const auto v = second_partials_det_vanishes(poly("x^2 + y^2", "x,y"), o);
  CHECK_FALSE(v.vanishes);
  REQUIRE(v.det_value);
  CHECK(*v.det_value == 4);
  CHECK(second_partials_det_vanishes(perazzo(), o).vanishes);
}

TEST_CASE("matrix_det_vanishes on a hand-built matrix") {
  const VarsPtr v = vars("x,y");
  // [[x, y], [2x, 2y]] is singular; [[x, y], [y, x]] is not.
  std::vector<Poly> singular{poly("x", "x,y"), poly("y", "x,y"), poly("2*x", "x,y"), poly("2*y", "x,y")};
  std::vector<Poly> regular{poly("x", "x,y"), poly("y", "x,y"), poly("y", "x,y"), poly("x", "x,y")};
  for (auto m : {VanishingMode::Exact, VanishingMode::Probabilistic}) {
    CHECK(matrix_det_vanishes(singular, 2, 1, mode(m)).vanishes);
    CHECK_FALSE(matrix_det_vanishes(regular, 2, 1, mode(m)).vanishes);
  }
}

TEST_CASE("derive_seed separates streams") {
  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 2, 4));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 3));
}
