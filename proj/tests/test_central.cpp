#include <doctest.h>

#include "unitri/central.hpp"

using namespace unitri;

namespace {

UniAut A(const char* text) { return aut_parse(text); }

UniAut random_u2(Rng& rng) {
  NcPoly f = random_poly(2, 2, 2, 4, 10, 3, rng);
  return UniAut(2, {f, rng.coin() ? NcPoly(2) : NcPoly::constant(2, rng.nonzero_rational(10))});
}

PitConfig small_cfg() {
  PitConfig cfg;
  cfg.trials = 8;
  cfg.working_cap = 10;
  return cfg;
}

}  // namespace

TEST_CASE("ordinal levels") {
  CHECK(to_string(OrdinalLevel::finite(0)) == "0");
  CHECK(to_string(OrdinalLevel::finite(4)) == "4");
  CHECK(to_string(OrdinalLevel::omega(1)) == "w");
  CHECK(to_string(OrdinalLevel::omega(1, 1)) == "w+1");
  CHECK(to_string(OrdinalLevel::omega(2)) == "2w");
  CHECK(to_string(OrdinalLevel::omega(2, 3)) == "2w+3");
  CHECK(to_string(OrdinalLevel::omega(3, 1)) == "3w+1");
  for (const char* s : {"0", "7", "w", "w+2", "2w", "2w+5", "3w+1"}) CHECK(to_string(parse_ordinal(s)) == s);
  for (const char* s : {"", "w+", "w+0", "0w", "x", "2w1", "1+w"}) CHECK_THROWS_AS(parse_ordinal(s), ParseError);
  CHECK(OrdinalLevel::finite(100) < OrdinalLevel::omega(1));
  CHECK(OrdinalLevel::omega(1, 9) < OrdinalLevel::omega(2));
  CHECK(OrdinalLevel::omega(2, 9) < OrdinalLevel::omega(3, 1));
}

TEST_CASE("center of U_2") {
  CHECK(u2_center_test(A("x + 3; y")));
  CHECK_FALSE(u2_center_test(A("x + y; y")));
  CHECK_FALSE(u2_center_test(A("x; y + 1")));
  CHECK(u2_center_test(UniAut::identity(2)));
  CHECK_THROWS_AS(u2_center_test(UniAut::identity(3)), RankMismatch);
}

TEST_CASE("commutes") {
  CHECK(commutes(A("x + y^2; y"), A("x + y^3; y")));
  CHECK_FALSE(commutes(A("x + y^2; y"), A("x; y + 1")));
  CHECK(commutes(A("x + y^2; y + 4"), UniAut::identity(2)));
  CHECK_THROWS_AS(commutes(UniAut::identity(2), UniAut::identity(3)), RankMismatch);
}

TEST_CASE("center test agrees with brute-force commutation") {
  Rng rng(17);
  std::vector<UniAut> probes;
  for (int i = 0; i < 50; ++i) probes.push_back(random_u2(rng));
  probes.push_back(A("x; y + 1"));
  probes.push_back(A("x + y; y"));
  for (int t = 0; t < 100; ++t) {
    UniAut phi = t % 4 == 0 ? UniAut(2, {NcPoly::constant(2, rng.rational(10)), NcPoly(2)}) : random_u2(rng);
    bool all = true;
    for (const auto& psi : probes) all = all && commutes(phi, psi);
    for (int k = 0; k < 50; ++k) all = commutes(phi, random_u2(rng)) && all;
    CHECK(u2_center_test(phi) == all);
  }
}

TEST_CASE("centralizer classes") {
  CHECK(u2_centralizer_classify(A("x + y^2; y")) == CentralizerClass::FirstRow);
  CHECK(u2_centralizer_classify(A("x; y + 1")) == CentralizerClass::ConstantPairs);
  CHECK(u2_centralizer_classify(UniAut::identity(2)) == CentralizerClass::WholeGroup);
  CHECK(u2_centralizer_classify(A("x + 2; y")) == CentralizerClass::WholeGroup);
  CHECK(u2_centralizer_classify(A("x + y; y + 1")) == CentralizerClass::Generic);
  CHECK(to_string(CentralizerClass::ConstantPairs) == "ConstantPairs");

  Rng rng(12);
  const UniAut first = A("x + y^2 - y; y");
  const UniAut pairs = A("x; y - 2/3");
  for (int t = 0; t < 50; ++t) {
    const NcPoly h = random_poly(2, 2, 2, 4, 10, 3, rng);
    const Rational c = rng.nonzero_rational(10);
    CHECK(commutes(first, UniAut(2, {h, NcPoly(2)})));
    CHECK_FALSE(commutes(first, UniAut(2, {h, NcPoly::constant(2, c)})));
    CHECK(commutes(pairs, UniAut(2, {NcPoly::constant(2, rng.rational(10)), NcPoly::constant(2, c)})));
    CHECK_FALSE(commutes(pairs, UniAut(2, {h + poly_parse("x2^5", 2), NcPoly::constant(2, c)})));
  }
}

TEST_CASE("hypercenter levels of U_2") {
  CHECK(to_string(u2_hypercenter_level(A("x + y^3 + 2*y; y"))) == "4");
  CHECK(to_string(u2_hypercenter_level(A("x + 5; y"))) == "1");
  CHECK(to_string(u2_hypercenter_level(A("x; y + 1"))) == "w+1");
  CHECK(to_string(u2_hypercenter_level(UniAut::identity(2))) == "0");
  CHECK(u2_hypercenter_contains(A("x + y^2; y"), OrdinalLevel::finite(3)));
  CHECK_FALSE(u2_hypercenter_contains(A("x + y^2; y"), OrdinalLevel::finite(2)));
  CHECK(u2_hypercenter_contains(A("x + y^2; y"), OrdinalLevel::omega(1)));

  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    const int s = static_cast<int>(rng.uniform(1, 5));
    NcPoly f = random_poly(2, 2, 2, s - 1, 10, 3, rng);
    f.add_term(Word::power(2, s), rng.nonzero_rational(10));
    const UniAut phi(2, {f, NcPoly(2)});
    const OrdinalLevel level = u2_hypercenter_level(phi);
    REQUIRE(level == OrdinalLevel::finite(s + 1));
    CHECK_FALSE(u2_hypercenter_contains(phi, OrdinalLevel::finite(s)));
    for (int k = 0; k < 50; ++k) {
      CHECK(u2_hypercenter_level(group_commutator(phi, random_u2(rng))) <= OrdinalLevel::finite(s));
    }
  }
}

TEST_CASE("center test in U_n") {
  const PitConfig cfg = small_cfg();
  CHECK(un_center_test(A("x1 + x2*x3 - x3*x2; x2; x3"), cfg).kind == Verdict::Kind::Holds);
  const Verdict v = un_center_test(A("x1 + x2; x2; x3"), cfg);
  REQUIRE(v.failed());
  CHECK(v.witness.front() == A("x1; x2 + 1; x3"));
  CHECK_FALSE(commutes(A("x1 + x2; x2; x3"), v.witness.front()));
  CHECK(un_center_test(A("x1; x2; x3 + 1"), cfg).failed());
  CHECK(un_center_test(A("x1 + 7; x2; x3"), cfg).kind == Verdict::Kind::Holds);
  CHECK_THROWS_AS(un_center_test(A("x; y"), cfg), AlgebraError);

  // x3 is fixed by the constant-shift probes in x2 but not by x3 -> x3 + 1.
  const Verdict x3 = un_center_test(A("x1 + x3^2; x2; x3"), cfg);
  REQUIRE(x3.failed());
  CHECK_FALSE(commutes(A("x1 + x3^2; x2; x3"), x3.witness.front()));

  // In rank 4 the invariants live in the last two variables.
  CHECK(un_center_test(A("x1 + x3*x4 - x4*x3; x2; x3; x4"), cfg).kind == Verdict::Kind::Holds);
  const UniAut not_central = A("x1 + x2*x3 - x3*x2; x2; x3; x4");
  const Verdict w = un_center_test(not_central, cfg);
  REQUIRE(w.failed());
  CHECK_FALSE(commutes(not_central, w.witness.front()));
}

TEST_CASE("truncated classification in U_3") {
  const PitConfig cfg = small_cfg();
  CHECK(to_string(u3_hypercenter_level_truncated(A("x1; x2; x3 + 1"), 5, cfg).level) == "3w+1");
  CHECK(to_string(u3_hypercenter_level_truncated(A("x1; x2 + x3^2; x3"), 5, cfg).level) == "2w+2");
  CHECK(to_string(u3_hypercenter_level_truncated(A("x1 + x2; x2 + 4; x3"), 5, cfg).level) == "2w+1");
  const LevelResult center = u3_hypercenter_level_truncated(A("x1 + x2*x3 - x3*x2; x2; x3"), 5, cfg);
  CHECK(to_string(center.level) == "1");
  CHECK(center.confidence.kind == Verdict::Kind::Holds);
  CHECK(to_string(u3_hypercenter_level_truncated(UniAut::identity(3), 5, cfg).level) == "0");

  const LevelResult x3 = u3_hypercenter_level_truncated(A("x1 + x3; x2; x3"), 5, cfg);
  CHECK(to_string(x3.level) == "2");
  CHECK(x3.confidence.kind == Verdict::Kind::ProbablyHolds);
  CHECK_FALSE(x3.banded);

  const LevelResult x3sq = u3_hypercenter_level_truncated(A("x1 + x3^2; x2; x3"), 5, cfg);
  CHECK(to_string(x3sq.level) == "3");

  // pi(x2) has x2-degree 1, so no finite layer contains it; every commutator with U_3
  // lands in (x1 + g(x3), x2, x3), which is the band w+1.
  const LevelResult x2 = u3_hypercenter_level_truncated(A("x1 + x2; x2; x3"), 5, cfg);
  CHECK(x2.banded);
  CHECK(to_string(x2.level) == "w+1");
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const UniAut c = group_commutator(A("x1 + x2; x2; x3"), random_aut(3, {3, 10, 3}, rng));
    CHECK(c.offset(1).uses_only(3, 3));
    CHECK(c.offset(2).is_zero());
  }
  CHECK(to_string(u3_hypercenter_level_truncated(A("x1 + x2^2*x3; x2; x3"), 5, cfg).level) == "w+2");

  PitConfig shallow = cfg;
  shallow.max_layer = 1;
  const LevelResult cut = u3_hypercenter_level_truncated(A("x1 + x3^2; x2; x3"), 5, shallow);
  CHECK(cut.banded);
  CHECK(to_string(cut.level) == "3");

  CHECK_THROWS_AS(u3_hypercenter_level_truncated(A("x1 + x2^6; x2; x3"), 5, cfg), CapExceeded);
  CHECK_THROWS_AS(u3_hypercenter_level_truncated(A("x; y"), 5, cfg), RankMismatch);
}
