#include <doctest.h>

#include "oracle.hpp"
#include "unitri/freealg.hpp"
#include "unitri/rng.hpp"
#include "unitri/autgroup.hpp"

using namespace unitri;

namespace {

NcPoly P(const char* text, int rank = 3) { return poly_parse(text, rank); }

NcPoly random_nc(int rank, int max_degree, Rng& rng) {
  return random_poly(rank, 1, rank, max_degree, 10, 4, rng);
}

}  // namespace

TEST_CASE("addition merges and cancels like terms") {
  CHECK(poly_add(P("x1 + x2"), P("-x2")) == P("x1"));
  CHECK(poly_add(P("x1*x2 + 7"), NcPoly(3)) == P("x1*x2 + 7"));
  CHECK(poly_add(P("2*x1*x2"), P("3*x1*x2")) == P("5*x1*x2"));
  CHECK((P("x1") - P("x1")).is_zero());
  CHECK_THROWS_AS(poly_add(P("x1", 2), P("x1", 3)), RankMismatch);
}

TEST_CASE("multiplication concatenates words") {
  CHECK(poly_format(poly_mul(P("x2"), P("x3"))) == "x2*x3");
  CHECK(poly_mul(P("1"), P("x2*x3 + 4")) == P("x2*x3 + 4"));
  CHECK(poly_mul(P("x2 + x3"), P("x2 - x3")) == P("x2*x2 - x2*x3 + x3*x2 - x3*x3"));
  CHECK(poly_mul(P("x2"), NcPoly(3)).is_zero());
  CHECK(poly_pow(P("x2 + 1"), 3) == P("x2^3 + 3*x2^2 + 3*x2 + 1"));
  CHECK_THROWS_AS(poly_mul(P("x1", 2), P("x1", 3)), RankMismatch);
}

TEST_CASE("ring commutator") {
  CHECK(ring_commutator(P("x2"), P("x3")) == P("x2*x3 - x3*x2"));
  CHECK(ring_commutator(P("x1*x2 + x3"), P("x1*x2 + x3")).is_zero());
  CHECK(ring_commutator(P("x2*x3 - x3*x2"), P("x3")) == P("x2*x3^2 - 2*x3*x2*x3 + x3^2*x2"));
}

TEST_CASE("substitution") {
  const std::vector<NcPoly> shift{P("x1"), P("x2 + 1"), P("x3")};
  CHECK(substitute(P("x2*x3"), shift) == P("x2*x3 + x3"));
  const std::vector<NcPoly> id{P("x1"), P("x2"), P("x3")};
  CHECK(substitute(P("x1*x2^2 - 3*x3 + 5"), id) == P("x1*x2^2 - 3*x3 + 5"));
  const std::vector<NcPoly> u2{P("x1"), P("x2 + x3^2"), P("x3 + 1")};
  CHECK(substitute(P("x2*x3 - x3*x2"), u2) == P("x2*x3 - x3*x2"));
  CHECK_THROWS_AS(substitute(P("x1"), std::vector<NcPoly>{P("x1")}), RankMismatch);

  // Cross-rank: images may live in a different rank.
  const std::vector<NcPoly> down{NcPoly::var(2, 2), NcPoly::var(2, 2)};
  CHECK(substitute(P("x1*x2", 2), down) == P("x2^2", 2));
}

TEST_CASE("degrees") {
  CHECK(degree(P("x2*x3^2 + 1")) == Degree(3));
  CHECK(degree_in_var(P("x2*x3^2"), 3) == Degree(2));
  CHECK(degree_in_var(P("x2*x3^2"), 1) == Degree(0));
  CHECK(degree(NcPoly(3)) == Degree::neg_infinity());
  CHECK(Degree::neg_infinity() < Degree(0));
  CHECK_FALSE(degree(NcPoly(3)).is_finite());
  CHECK(degree(P("5")) == Degree(0));
  CHECK(degree(NcPoly(3)).to_string() == "-inf");
}

TEST_CASE("abelianization") {
  CHECK(abelianize(P("x2*x3 - x3*x2")).is_zero());
  CHECK(abelianize(P("x2*x3 + x3*x2")) == CommPoly::monomial(3, {0, 1, 1}, 2));
  CHECK(abelianize(c_generator(2, 2, 3, 3)).is_zero());
  CHECK(poly_format(abelianize(P("x3*x2*x3 + 1/2"))) == "1/2 + x2*x3^2");
}

TEST_CASE("c generators") {
  CHECK(c_generator(1, 2, 3, 3) == P("x2*x3 - x3*x2"));
  CHECK(c_generator(2, 2, 3, 3) == P("x2*x3^2 - 2*x3*x2*x3 + x3^2*x2"));
  for (int k = 1; k <= 6; ++k) {
    const NcPoly c = c_generator(k, 2, 3, 3);
    CHECK(degree_in_var(c, 2) == Degree(1));
    CHECK(degree(c) == Degree(k + 1));
    for (const auto& [w, coeff] : c.terms()) CHECK(static_cast<int>(w.size()) == k + 1);
    if (k >= 2) CHECK(c == ring_commutator(c_generator(k - 1, 2, 3, 3), P("x3")));
  }
  CHECK_THROWS_AS(c_generator(1, 2, 2, 3), AlgebraError);
  CHECK_THROWS_AS(c_generator(0, 2, 3, 3), AlgebraError);
}

TEST_CASE("parsing and formatting") {
  CHECK(P("x2*x3 - x3*x2") == ring_commutator(P("x2"), P("x3")));
  const NcPoly half = P("1/2*x1^2 + 3");
  CHECK(half.coeff(Word{1, 1}) == Rational(1, 2));
  CHECK(half.constant_term() == 3);
  CHECK(poly_format(half) == "3 + 1/2*x1^2");
  CHECK(poly_format(NcPoly(3)) == "0");
  CHECK(poly_format(P("-x3*x2*x2 + x2")) == "x2 - x3*x2^2");
  CHECK(poly_format(P(" 2 / 4 * x1 * x1 ")) == "1/2*x1^2");
  CHECK(P("x + y*z", 3) == P("x1 + x2*x3"));
  CHECK(infer_rank("x1 + x4*x2") == 4);
  CHECK(infer_rank("3") == 1);

  auto position = [](const char* text, int rank) -> std::size_t {
    try {
      poly_parse(text, rank);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position("x1 +", 3) == 4);
  CHECK(position("x0", 3) == 0);
  CHECK(position("x1 + x4", 3) == 5);
  CHECK(position("1/0", 3) == 2);
  CHECK(position("x1 x2", 3) == 3);
  CHECK(position("", 3) == 0);
}

TEST_CASE("format/parse round trip on random polynomials") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const int rank = static_cast<int>(rng.uniform(1, 4));
    const NcPoly p = random_nc(rank, 4, rng);
    CHECK(poly_parse(poly_format(p), rank) == p);
  }
}

TEST_CASE("ring axioms against the naive oracle") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const int rank = static_cast<int>(rng.uniform(1, 4));
    const NcPoly a = random_nc(rank, 4, rng);
    const NcPoly b = random_nc(rank, 4, rng);
    const NcPoly c = random_nc(rank, 4, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(oracle::from(a * b) == oracle::mul(oracle::from(a), oracle::from(b)));
    CHECK(oracle::from(a + b) == oracle::sum(oracle::from(a), oracle::from(b)));
    if (!a.is_zero() && !b.is_zero()) CHECK(degree(a * b).value() == degree(a).value() + degree(b).value());
    const NcPoly jacobi = ring_commutator(ring_commutator(a, b), c) + ring_commutator(ring_commutator(b, c), a) +
                          ring_commutator(ring_commutator(c, a), b);
    CHECK(jacobi.is_zero());
    CHECK(abelianize(a * b) == abelianize(a) * abelianize(b));
    CHECK(abelianize(a + b) == abelianize(a) + abelianize(b));
  }
}

TEST_CASE("substitution is functorial and matches the oracle") {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const int rank = static_cast<int>(rng.uniform(1, 3));
    const NcPoly p = random_nc(rank, 3, rng);
    std::vector<NcPoly> a;
    std::vector<NcPoly> b;
    std::vector<oracle::Poly> a_naive;
    for (int i = 0; i < rank; ++i) {
      a.push_back(random_nc(rank, 2, rng));
      b.push_back(random_nc(rank, 2, rng));
      a_naive.push_back(oracle::from(a.back()));
    }
    std::vector<NcPoly> ab;
    for (const auto& ai : a) ab.push_back(substitute(ai, b));
    CHECK(substitute(substitute(p, a), b) == substitute(p, ab));
    CHECK(oracle::from(substitute(p, a)) == oracle::subst(oracle::from(p), a_naive));
  }
}

TEST_CASE("word order is graded lexicographic") {
  CHECK(Word{} < Word{3});
  CHECK(Word{3} < Word{1, 1});
  CHECK(Word{1, 3} < Word{2, 1});
  CHECK(Word::power(3, 2) == Word({3, 3}));
  CHECK(word_format(Word{2, 3, 3, 2}) == "x2*x3^2*x2");
  CHECK(word_format(Word{}) == "1");
}
