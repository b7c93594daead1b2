#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "error.hpp"
#include "lefschetz.hpp"
#include "support.hpp"

using namespace llab;
using namespace llab::test;

namespace {

std::set<std::string> op_names(const std::vector<DiffOp>& ops) {
  std::set<std::string> out;
  for (const auto& op : ops) out.insert(op.to_string());
  return out;
}

GenericOptions generic(std::uint64_t seed = 0) {
  GenericOptions g;
  g.seed = seed;
  g.vanishing.seed = seed;
  return g;
}

Poly quartic_example() { return poly("x*u^3 + y*u^2*v + z*u*v^2 + v^4", "x,y,z,u,v", 3); }

}  // namespace

TEST_CASE("linear forms parse and print over dual names") {
  const Poly f = quartic_example();
  const LinearForm l = form(f, "U + V");
  CHECK(l.coeffs == std::vector<Rational>{0, 0, 0, 1, 1});
  CHECK(l.to_string(f.vars()) == "U + V");
  CHECK_THROWS_AS(form(f, "U^2"), Error);
  CHECK(random_linear_form(5, 10, 3).coeffs == random_linear_form(5, 10, 3).coeffs);
}

TEST_CASE("mult_map shapes and ranks") {
  const Poly c = poly("x^3", "x");
  const RationalMatrix m = mult_map(c, form(c, "X"), 1, 1);
  CHECK(m.rows() == 1);
  CHECK(m.cols() == 1);
  CHECK(rank(m) == 1);

  const Poly f = quartic_example();
  const RationalMatrix q = mult_map(f, form(f, "U + V"), 1, 1);
  CHECK(q.cols() == 5);
  CHECK(rank(q) == 5);

  const GorensteinAlgebra a(ikeda());
  const LinearForm l = random_linear_form(4, linear_form_bound(5), 11);
  const RationalMatrix mi = a.mult_map(l, 2, 1);
  CHECK(mi.rows() == 10);
  CHECK(mi.cols() == 10);
  CHECK(rank(mi) < 10);
}

TEST_CASE("slp_check_element") {
  const GorensteinAlgebra binary(poly("x^5 + y^5", "x,y"));
  CHECK(slp_check_element(binary, form(binary.form(), "X + Y")).holds);

  const GorensteinAlgebra ik(ikeda());
  const auto r = slp_check_element(ik, random_linear_form(4, 1000, 5));
  CHECK_FALSE(r.holds);
  bool level_two_fails = false;
  for (const auto& l : r.levels) level_two_fails |= (l.from == 2 && !l.ok());
  CHECK(level_two_fails);

  const GorensteinAlgebra q(poly("x^2 + y^2", "x,y"));
  CHECK(slp_check_element(q, form(q.form(), "X")).holds);
}

TEST_CASE("Hessian rank at L equals the rank of the power map") {
  const GorensteinAlgebra a(gen_exceptional(3, 7, 3).f);
  for (std::uint64_t s = 0; s < 4; ++s) {
    const LinearForm l = random_linear_form(a.form().vars().size(), 50, s);
    for (unsigned k = 0; k <= 3; ++k) CHECK(a.hessian_rank_at(l, k) == a.mult_rank(l, k, 7 - 2 * k));
  }
}

TEST_CASE("slp_generic") {
  const auto exc = slp_generic(GorensteinAlgebra(gen_exceptional(3, 5, 2).f), generic());
  CHECK(exc.verdict == Verdict::Fails);
  REQUIRE(exc.failing_map);
  CHECK(exc.failing_map->from == 2);

  const auto fermat = slp_generic(GorensteinAlgebra(poly("x^4 + y^4 + z^4", "x,y,z")), generic());
  CHECK(fermat.verdict == Verdict::Holds);
  REQUIRE(fermat.witness);

  const auto per = slp_generic(GorensteinAlgebra(gen_gnp(2, 2, 1, 2, "lemma_m2").f), generic());
  CHECK(per.verdict == Verdict::Fails);
  REQUIRE(per.failing_map);
  CHECK(per.failing_map->from == 1);
  bool has_key = false;
  for (const auto& c : per.certificates) has_key |= c.kind == FailureCertificate::Kind::KeyCriterion;
  CHECK(has_key);
}

TEST_CASE("wlp_check_element") {
  const GorensteinAlgebra q(quartic_example());
  const auto r = wlp_check_element(q, form(q.form(), "U + V"));
  const auto level_one = std::find_if(r.levels.begin(), r.levels.end(), [](const LevelCheck& l) { return l.from == 1; });
  REQUIRE(level_one != r.levels.end());
  CHECK(level_one->rank == 5);
  CHECK(level_one->ok());

  const GorensteinAlgebra p44(gen_prop44("i").f);
  CHECK(wlp_check_element(p44, form(p44.form(), "U + V")).holds);

  const GorensteinAlgebra c(poly("x^3", "x"));
  CHECK(wlp_check_element(c, form(c.form(), "X")).holds);
}

TEST_CASE("wlp_generic") {
  const auto t = wlp_generic(GorensteinAlgebra(gen_thmwlp(5, 4).f), generic());
  CHECK(t.verdict == Verdict::Fails);
  REQUIRE(t.failing_map);
  CHECK(t.failing_map->from == 1);
  bool obstruction = false;
  for (const auto& c : t.certificates) obstruction |= c.kind == FailureCertificate::Kind::WlpObstruction;
  CHECK(obstruction);

  const auto w = wlp_generic(GorensteinAlgebra(gen_wlpodd(4, 5).f), generic());
  CHECK(w.verdict == Verdict::Fails);
  REQUIRE(w.failing_map);
  CHECK(w.failing_map->from == 2);
  CHECK(w.failing_map->to == 3);

  const auto fermat = wlp_generic(GorensteinAlgebra(poly("x^4 + y^4 + z^4", "x,y,z")), generic());
  CHECK(fermat.verdict == Verdict::Holds);
  CHECK(fermat.witness);
}

TEST_CASE("a sum of forms in disjoint variables has the WLP") {
  const Poly f = poly("x0*x1*x2*x3 + y0^4 + y1^4 + y2^4 + y3^4 + y4^4 + y5^4 + y6^4",
                      "x0,x1,x2,x3,y0,y1,y2,y3,y4,y5,y6");
  const GorensteinAlgebra a(f);
  CHECK(is_unimodal(a.hilbert()));
  const auto r = wlp_generic(a, generic());
  CHECK(r.verdict == Verdict::Holds);
}

TEST_CASE("key criterion on the Ikeda form") {
  const auto cert = key_criterion(ikeda(), 2);
  REQUIRE(cert);
  CHECK(cert->s == 4);
  CHECK(cert->bound == 3);
  CHECK(op_names(cert->ops) == std::set<std::string>{"X0*U2", "X0*U1", "X1*U2", "X1*U1"});
  CHECK(verify_key_certificate(ikeda(), *cert));
}

TEST_CASE("key criterion needs a split and may find nothing") {
  CHECK_THROWS_AS(key_criterion(poly("x^3 + y^3", "x,y"), 1), Error);
  const Poly f = poly("x^4 + y^4", "x,y", 1);
  for (unsigned k = 1; k <= 2; ++k) CHECK_FALSE(key_criterion(f, k));
}

TEST_CASE("key criterion on the quadratic-in-x lemma instance") {
  const FamilyInstance inst = gen_gnp(2, 2, 2, 3, "lemma_m2");
  CHECK(inst.f == poly("x^2*u^3 + x*y*u^2*v + y^2*u*v^2 + z^2*v^3", "x,y,z,u,v", 3));
  const auto cert = key_criterion(inst.f, 2);
  REQUIRE(cert);
  CHECK(cert->s == 4);
  CHECK(verify_key_certificate(inst.f, *cert));
}

TEST_CASE("tampered key certificates are rejected") {
  auto cert = key_criterion(ikeda(), 2);
  REQUIRE(cert);
  cert->ops.pop_back();
  CHECK_FALSE(verify_key_certificate(ikeda(), *cert));
}

TEST_CASE("WLP obstructions on the even socle degree family") {
  const FamilyInstance a = gen_thmwlp(5, 4);
  auto c = wlp_obstruction(a.f, 1);
  REQUIRE(c);
  CHECK(c->s == 4);
  CHECK(c->bound == 3);
  CHECK(op_names(c->ops) == std::set<std::string>{"X2", "X3", "X4", "X5"});
  CHECK(verify_obstruction_certificate(a.f, *c));

  const FamilyInstance b = gen_thmwlp(4, 6);
  c = wlp_obstruction(b.f, 2);
  REQUIRE(c);
  CHECK(c->s >= 5);
  CHECK(c->s > c->bound);
  CHECK(verify_obstruction_certificate(b.f, *c));

  const FamilyInstance e = gen_thmwlp(3, 8);
  c = wlp_obstruction(e.f, 3);
  REQUIRE(c);
  CHECK(c->s >= 6);
  CHECK(verify_obstruction_certificate(e.f, *c));
}

TEST_CASE("middle level and bounds") {
  CHECK(middle_level(4) == 1);
  CHECK(middle_level(5) == 2);
  CHECK(linear_form_bound(5) == 384);
}
