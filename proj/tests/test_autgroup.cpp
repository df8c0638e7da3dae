#include <doctest.h>

#include "oracle.hpp"
#include "unitri/autgroup.hpp"

using namespace unitri;

namespace {

NcPoly P(const char* text, int rank) { return poly_parse(text, rank); }
UniAut A(const char* text) { return aut_parse(text); }

}  // namespace

TEST_CASE("construction validates the triangular shape") {
  const UniAut phi = aut_new(2, {P("x2^2", 2), P("1", 2)});
  CHECK(aut_format(phi) == "x1 + x2^2; x2 + 1");
  CHECK_THROWS_AS(aut_new(2, {P("x1*x2", 2), NcPoly(2)}), VariableLeak);
  CHECK_THROWS_AS(aut_new(3, {NcPoly(3), NcPoly(3), P("x3", 3)}), NonConstantLast);
  CHECK_THROWS_AS(aut_new(3, {NcPoly(3), P("x2", 3), NcPoly(3)}), VariableLeak);
  CHECK_THROWS_AS(aut_new(1, {NcPoly(1)}), AlgebraError);
  CHECK_THROWS_AS(aut_new(3, {NcPoly(3), NcPoly(3)}), AlgebraError);
  try {
    aut_new(3, {NcPoly(3), P("x1", 3), NcPoly(3)});
  } catch (const VariableLeak& e) {
    CHECK(e.index() == 2);
  }
}

TEST_CASE("elementary specs") {
  const ElementarySpec unit(1, 1, P("x2*x3", 3));
  CHECK(unit.is_unitriangular());
  CHECK(unit.to_uniaut() == A("x1 + x2*x3; x2; x3"));
  const ElementarySpec scaled(1, 2, P("x2", 3));
  CHECK_FALSE(scaled.is_unitriangular());
  CHECK_THROWS_AS(scaled.to_uniaut(), AlgebraError);
  CHECK_THROWS_AS(ElementarySpec(2, 0, NcPoly(3)), AlgebraError);
  CHECK_THROWS_AS(ElementarySpec(2, 1, P("x2", 3)), AlgebraError);
}

TEST_CASE("apply substitutes the images") {
  const UniAut phi = A("x + y^2; y + 1");
  CHECK(apply(phi, P("x1", 2)) == P("x1 + x2^2", 2));
  CHECK(apply(UniAut::identity(3), P("x1*x2 - x3", 3)) == P("x1*x2 - x3", 3));
  const UniAut shift = A("x1; x2 + x3^2; x3");
  const NcPoly c1 = c_generator(1, 2, 3, 3);
  const NcPoly c2 = c_generator(2, 2, 3, 3);
  const NcPoly f = ring_commutator(c1, P("x2", 3));
  CHECK(apply(shift, f) - f == c2 * P("x3", 3) + P("x3", 3) * c2);
  CHECK_THROWS_AS(apply(phi, P("x1", 3)), RankMismatch);
}

TEST_CASE("composition follows the left-acts-first convention") {
  CHECK(compose(A("x+y; y"), A("x; y+1")) == A("x + y + 1; y + 1"));
  const UniAut phi = A("x1 + x2*x3; x2 + x3^2; x3 + 1");
  CHECK(compose(phi, UniAut::identity(3)) == phi);
  CHECK(compose(UniAut::identity(3), phi) == phi);
  CHECK_THROWS_AS(compose(phi, A("x; y")), RankMismatch);

  // psi^-1 phi psi with f = y^2, h = y^3, b = 1, c = 2.
  const UniAut f = A("x + y^2; y + 1");
  const UniAut h = A("x + y^3; y + 2");
  const UniAut expected(2, {P("x2^3", 2) - poly_pow(P("x2 + 1", 2), 3) + poly_pow(P("x2 + 2", 2), 2), P("1", 2)});
  CHECK(compose(compose(invert(h), f), h) == expected);
  CHECK(conjugate(f, h) == expected);
}

TEST_CASE("composition agrees with naive substitution") {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const int n = static_cast<int>(rng.uniform(2, 4));
    const UniAut phi = random_aut(n, {2, 10, 3}, rng);
    const UniAut psi = random_aut(n, {2, 10, 3}, rng);
    std::vector<oracle::Poly> psi_images;
    for (const auto& im : psi.images()) psi_images.push_back(oracle::from(im));
    const UniAut prod = compose(phi, psi);
    for (int i = 1; i <= n; ++i) {
      CHECK(oracle::from(prod.image(i)) == oracle::subst(oracle::from(phi.image(i)), psi_images));
    }
  }
}

TEST_CASE("inversion") {
  CHECK(invert(A("x + y^2; y + 1")) == A("x - y^2 + 2*y - 1; y - 1"));
  CHECK(invert(UniAut::identity(4)).is_identity());
  const UniAut phi = A("x1 + x2*x3; x2 + x3^2; x3 + 1");
  CHECK(compose(phi, invert(phi)).is_identity());
  CHECK(compose(invert(phi), phi).is_identity());
  CHECK(invert(invert(phi)) == phi);
}

TEST_CASE("group axioms on random elements") {
  Rng rng(21);
  for (int t = 0; t < 60; ++t) {
    const int n = static_cast<int>(rng.uniform(2, 4));
    const UniAut a = random_aut(n, {3, 10, 3}, rng);
    const UniAut b = random_aut(n, {3, 10, 3}, rng);
    const UniAut c = random_aut(n, {2, 10, 2}, rng);
    CHECK(compose(a, invert(a)).is_identity());
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(invert(compose(a, b)) == compose(invert(b), invert(a)));
    // The validating constructor accepts every product.
    CHECK_NOTHROW(aut_new(n, compose(a, b).offsets()));
  }
}

TEST_CASE("conjugation and commutators") {
  const UniAut central = A("x + 1; y");
  Rng rng(8);
  for (int t = 0; t < 20; ++t) CHECK(conjugate(central, random_aut(2, {3, 10, 3}, rng)) == central);
  const UniAut phi = A("x + y^2; y + 1");
  CHECK(group_commutator(phi, phi).is_identity());
  const UniAut psi = A("x + y^3; y + 2");
  const NcPoly expected = P("x2^3", 2) - poly_pow(P("x2 + 1", 2), 3) + poly_pow(P("x2 + 2", 2), 2) - P("x2^2", 2);
  CHECK(group_commutator(phi, psi) == UniAut(2, {expected, NcPoly(2)}));
  CHECK(group_commutator(A("x+y; y"), A("x; y+1")) == A("x + 1; y"));
  CHECK(conjugate(phi, UniAut::identity(2)) == phi);
}

TEST_CASE("semidirect factorization") {
  for (const auto& g : factor_semidirect(UniAut::identity(3))) CHECK(g.is_identity());
  const UniAut phi = A("x1 + x2*x3; x2 + x3^2; x3 + 1");
  const auto factors = factor_semidirect(phi);
  REQUIRE(factors.size() == 3);
  CHECK(factors[0] == A("x1 + x2*x3; x2; x3"));
  CHECK(factors[1] == A("x1; x2 + x3^2; x3"));
  CHECK(factors[2] == A("x1; x2; x3 + 1"));
  CHECK(compose(compose(factors[2], factors[1]), factors[0]) == phi);
  CHECK(recompose_semidirect(factors) == phi);

  const UniAut u2 = A("x + y^2 - 3; y + 5");
  const auto f2 = factor_semidirect(u2);
  CHECK(compose(f2[1], f2[0]) == u2);

  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const UniAut r = random_aut(static_cast<int>(rng.uniform(2, 4)), {3, 10, 3}, rng);
    CHECK(recompose_semidirect(factor_semidirect(r)) == r);
  }
}

TEST_CASE("derived level shape") {
  CHECK(derived_level_shape(A("x1 + x2; x2; x3")) == 2);
  CHECK(derived_level_shape(UniAut::identity(3)) == 3);
  CHECK(derived_level_shape(A("x1; x2; x3 + 1")) == 0);
  CHECK(derived_level_shape(A("x1; x2 + x3; x3")) == 1);
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    const int n = static_cast<int>(rng.uniform(2, 4));
    const UniAut c = group_commutator(random_aut(n, {3, 10, 3}, rng), random_aut(n, {3, 10, 3}, rng));
    CHECK(derived_level_shape(c) >= 1);
  }
}

TEST_CASE("random automorphisms are reproducible and bounded") {
  CHECK(random_aut(4, 3, 10, 99) == random_aut(4, 3, 10, 99));
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const UniAut r = random_aut(4, {3, 10, 3}, rng);
    for (int i = 1; i <= 4; ++i) {
      CHECK(degree(r.offset(i)) <= Degree(3));
      CHECK(r.offset(i).uses_only(i + 1, 4));
      for (const auto& [w, c] : r.offset(i).terms()) {
        CHECK(abs(c.get_num()) <= 10);
        CHECK(c.get_den() <= 10);
      }
    }
  }
}

TEST_CASE("commutator preimages in U_2") {
  const NcPoly f = P("x2^4 - 3*x2 + 1/2", 2);
  const NcPoly r = u2_difference_preimage(f, 3);
  const std::vector<NcPoly> shift{P("x1", 2), P("x2 + 3", 2)};
  CHECK(substitute(r, shift) - r == f);
  CHECK(r.constant_term() == 0);
  const auto [phi, psi] = u2_commutator_preimage(f, 2);
  CHECK(group_commutator(phi, psi) == UniAut(2, {f, NcPoly(2)}));
  CHECK_THROWS_AS(u2_difference_preimage(f, 0), AlgebraError);
}

TEST_CASE("automorphism text form") {
  CHECK(aut_format(A("x1 + x2*x3; x2 + x3^2; x3 + 1")) == "x1 + x2*x3; x2 + x3^2; x3 + 1");
  CHECK(A("x; y + 1").rank() == 2);
  CHECK_THROWS_AS(A("x1 + x1; x2"), VariableLeak);
  CHECK_THROWS_AS(A("x2; x2"), AlgebraError);
  CHECK_THROWS_AS(A("x1 + ; x2"), ParseError);
  try {
    A("x1; x2 + *");
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
}
