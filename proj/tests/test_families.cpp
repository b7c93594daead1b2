#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "error.hpp"
#include "families.hpp"
#include "support.hpp"

using namespace llab;
using namespace llab::test;

namespace {

VanishingOptions exact() {
  VanishingOptions o;
  o.mode = VanishingMode::Exact;
  return o;
}

bool vanishes(const Poly& f, unsigned k) { return hessian_vanishes(f, k, exact()).vanishes; }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Internal;
}

void manifest_holds(const FamilyInstance& inst) {
  for (const auto& c : verify_manifest(inst, ManifestOptions{})) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
}

}  // namespace

TEST_CASE("Ikeda instance") {
  const FamilyInstance inst = gen_ikeda();
  CHECK(inst.f == ikeda());
  CHECK(hilbert_vector(inst.f).dims == std::vector<std::size_t>{1, 4, 10, 10, 4, 1});
  CHECK_FALSE(is_cone(inst.f).is_cone);
  REQUIRE(inst.manifest.slp_fails_at);
  CHECK(*inst.manifest.slp_fails_at == 2);
  manifest_holds(inst);
}

TEST_CASE("exceptional family") {
  const FamilyInstance a = gen_exceptional(3, 5, 2);
  CHECK(a.f.degree() == 5);
  CHECK(a.f.vars().names() == names("x2,x3,u,v"));
  CHECK_FALSE(vanishes(a.f, 1));
  CHECK(vanishes(a.f, 2));
  manifest_holds(a);

  const FamilyInstance b = gen_exceptional(3, 7, 3);
  CHECK(vanishes(b.f, 2));
  CHECK(vanishes(b.f, 3));

  const FamilyInstance c = gen_exceptional(4, 8, 3);
  CHECK_FALSE(vanishes(c.f, 4));
  manifest_holds(c);
}

TEST_CASE("exceptional family parameter checks") {
  CHECK(kind_of([] { gen_exceptional(2, 5, 2); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { gen_exceptional(3, 4, 2); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { gen_exceptional(3, 6, 3); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("gnp lemma instances") {
  CHECK(gen_gnp(2, 2, 1, 2, "lemma_m2").f == perazzo());
  const FamilyInstance q = gen_gnp(2, 2, 2, 3, "lemma_m2");
  CHECK(q.f.to_string() == "x^2*u^3 + x*y*u^2*v + y^2*u*v^2 + z^2*v^3");
  CHECK(vanishes(q.f, 2));
  manifest_holds(q);
  CHECK(kind_of([] { gen_gnp(3, 2, 1, 2, "lemma_m2"); }) == ErrorKind::Infeasible);
  CHECK(kind_of([] { gen_gnp(2, 2, 2, 2, "lemma_m2"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("gnp maximal codimension") {
  for (int m = 2; m <= 3; ++m)
    for (int e = 2; e <= 3; ++e) {
      const FamilyInstance inst = gen_gnp(m, std::nullopt, 1, e, "maximal");
      const std::size_t expect = static_cast<std::size_t>(m) +
                                 binomial(static_cast<unsigned>(m - 1 + e), static_cast<unsigned>(e)).get_ui();
      CHECK(hilbert_vector(inst.f).dims[1] == expect);
    }
}

TEST_CASE("perazzo family") {
  const FamilyInstance a = gen_perazzo(2, 2, 3);
  CHECK(a.f == perazzo());
  CHECK_FALSE(is_cone(a.f).is_cone);
  const FamilyInstance b = gen_perazzo(2, 3, 4);
  CHECK(b.f.degree() == 4);
  CHECK(b.f.vars().size() == 6);
  CHECK(vanishes(b.f, 1));
  manifest_holds(b);
  CHECK(kind_of([] { gen_perazzo(3, 2, 3); }) == ErrorKind::Infeasible);
}

TEST_CASE("permutti family") {
  // Single Q term with P0 = 0 is the Perazzo form.
  const FamilyInstance p = gen_permutti(2, 2, 3, 3, {{"P0", "0"}});
  CHECK(p.f.to_string() == perazzo().to_string());

  const FamilyInstance a = gen_permutti(2, 2, 3, 6);
  CHECK(vanishes(a.f, 1));
  CHECK_FALSE(is_cone(a.f).is_cone);
  manifest_holds(a);

  const FamilyInstance b = gen_permutti(2, 3, 4, 5);
  CHECK_FALSE(is_cone(b.f).is_cone);
  CHECK(vanishes(b.f, 1));
}

TEST_CASE("permutti parameters without enough independent g_i are infeasible") {
  CHECK(kind_of([] { gen_permutti(2, 2, 2, 4); }) == ErrorKind::Infeasible);
  CHECK(kind_of([] { gen_permutti(2, 3, 2, 5); }) == ErrorKind::Infeasible);
  CHECK(kind_of([] { gen_permutti(2, 2, 3, 6, {{"Q7", "u^6"}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("gn family") {
  const FamilyInstance a = gen_gn(2, 3, 1, 4, 5);
  CHECK(vanishes(a.f, 1));
  CHECK_FALSE(is_cone(a.f).is_cone);
  manifest_holds(a);
  CHECK(kind_of([] { gen_gn(2, 2, 1, 2, 3); }) == ErrorKind::Degenerate);
  CHECK(kind_of([] { gen_gn(2, 3, 1, 2, 4); }) == ErrorKind::Degenerate);
  CHECK(kind_of([] { gen_gn(2, 2, 1, 3, 3); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("gn with r = n - 1 has the permutti shape") {
  const FamilyInstance g = gen_gn(2, 2, 1, 3, 4);
  const FamilyInstance p = gen_permutti(2, 2, 3, 4);
  CHECK(g.f.vars().names() == p.f.vars().names());
  CHECK(g.f.degree() == p.f.degree());
  CHECK(hilbert_vector(g.f).dims[1] == hilbert_vector(p.f).dims[1]);
  CHECK(vanishes(g.f, 1));
  CHECK(vanishes(p.f, 1));
}

TEST_CASE("odd socle degree WLP family") {
  const FamilyInstance a = gen_wlpodd(4, 5);
  CHECK(hilbert_vector(a.f).dims == std::vector<std::size_t>{1, 5, 12, 12, 5, 1});
  manifest_holds(a);
  CHECK(kind_of([] { gen_wlpodd(3, 3); }) == ErrorKind::Excluded);
  CHECK(kind_of([] { gen_wlpodd(3, 5); }) == ErrorKind::Infeasible);
  CHECK(kind_of([] { gen_wlpodd(4, 6); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("odd N formula entries disagree with the catalecticant ranks") {
  // Recorded deviation: 2k + C(N-1+k, N-1) overshoots dim A_1 = N + 1.
  const FamilyInstance a = gen_wlpodd(5, 7);
  const HilbertVector hv = hilbert_vector(a.f);
  CHECK(hv.dims == std::vector<std::size_t>{1, 6, 14, 25, 25, 14, 6, 1});
  CHECK(a.manifest.hilbert_entries.at(1) == 7);
}

TEST_CASE("even socle degree WLP family") {
  CHECK(hilbert_vector(gen_thmwlp(5, 4).f).dims == std::vector<std::size_t>{1, 6, 6, 6, 1});
  CHECK(hilbert_vector(gen_thmwlp(4, 6).f).dims == std::vector<std::size_t>{1, 5, 8, 8, 8, 5, 1});
  const FamilyInstance c = gen_thmwlp(3, 8);
  REQUIRE(c.manifest.obstruction_level);
  CHECK(*c.manifest.obstruction_level == 3);
  manifest_holds(c);
  for (auto [n, d] : {std::pair{3, 4}, std::pair{4, 4}, std::pair{3, 6}}) {
    CAPTURE(n);
    CAPTURE(d);
    CHECK(kind_of([n, d] { gen_thmwlp(n, d); }) == ErrorKind::Excluded);
  }
}

TEST_CASE("codimension five socle degree four cases") {
  const FamilyInstance i = gen_prop44("i");
  CHECK(wlp_check_element(GorensteinAlgebra(i.f), form(i.f, "U + V")).holds);
  CHECK(vanishes(i.f, 1));
  const FamilyInstance iii = gen_prop44("iii", {{"h", "u^4"}});
  CHECK(wlp_check_element(GorensteinAlgebra(iii.f), form(iii.f, "V")).holds);
  const FamilyInstance ii = gen_prop44("ii", {{"h", "0"}});
  CHECK(vanishes(ii.f, 1));
  CHECK(kind_of([] { gen_prop44("iv"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("generate dispatches and validates parameters") {
  FamilySpec s;
  s.kind = FamilyKind::Gnp;
  s.m = 2;
  s.n = 2;
  s.k = 1;
  s.e = 2;
  CHECK(generate(s).f == perazzo());
  FamilySpec t;
  t.kind = FamilyKind::Exceptional;
  t.n = 3;
  CHECK(kind_of([&] { generate(t); }) == ErrorKind::InvalidArgument);
  CHECK(parse_family_kind("thmwlp") == FamilyKind::ThmWlp);
  CHECK(kind_of([] { parse_family_kind("nope"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("a tampered instance fails its manifest") {
  FamilyInstance inst = gen_thmwlp(5, 4);
  inst.f = inst.f + poly("x2^4", "x2,x3,x4,x5,u,v", 4);
  bool any_failed = false;
  for (const auto& c : verify_manifest(inst, ManifestOptions{})) any_failed |= !c.passed;
  CHECK(any_failed);
}
