#include "unitri/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "unitri/central.hpp"

namespace unitri {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

using Runner = std::function<void(SuiteReport&, const SuiteOptions&)>;

void record(SuiteReport& r, std::string name, bool passed, std::string detail = {}) {
  r.checks.push_back({std::move(name), passed, std::move(detail)});
}

std::string count_detail(int bad, int total, std::string_view what = "violations") {
  return std::to_string(bad) + " " + std::string(what) + " in " + std::to_string(total);
}

/// Substream for one suite: the suite name is mixed into the seed.
Rng suite_rng(const SuiteOptions& o, std::string_view name) {
  std::uint64_t h = o.seed;
  for (char c : name) h = splitmix64(h ^ static_cast<unsigned char>(c));
  return Rng(h);
}

PitConfig pit_for(const SuiteOptions& o, int degree_cap) {
  PitConfig cfg = o.pit;
  cfg.seed = o.seed;
  cfg.working_cap = std::max(cfg.working_cap, degree_cap * cfg.subst_degree);
  return cfg;
}

// ---- U_2 helpers. x = x1, y = x2.

NcPoly y_poly(int max_degree, int height, int terms, Rng& rng) {
  return random_poly(2, 2, 2, max_degree, height, terms, rng);
}

UniAut u2(const NcPoly& f, const Rational& b) { return UniAut(2, {f, NcPoly::constant(2, b)}); }

/// f(y + s) for f in Q<y>.
NcPoly shift_y(const NcPoly& f, const Rational& s) {
  const std::vector<NcPoly> images{NcPoly::var(2, 1), NcPoly::var(2, 2) + NcPoly::constant(2, s)};
  return substitute(f, images);
}

UniAut random_u2(Rng& rng) {
  switch (rng.uniform(0, 3)) {
    case 0:
      return u2(NcPoly::constant(2, rng.rational(10)), 0);
    case 1:
      return u2(y_poly(4, 10, 3, rng), 0);
    case 2:
      return u2(NcPoly(2), rng.nonzero_rational(10));
    default:
      return u2(y_poly(4, 10, 3, rng), rng.rational(10));
  }
}

// ---- Suites

void group_axioms(SuiteReport& r, const SuiteOptions& o) {
  Rng rng = suite_rng(o, r.suite);
  const RandomAutOptions opts{3, 10, 3};
  int bad_inverse = 0;
  int bad_factor = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(rng.uniform(2, 4));
    const UniAut phi = random_aut(n, opts, rng);
    const UniAut inv = invert(phi);
    if (!compose(phi, inv).is_identity() || !compose(inv, phi).is_identity()) ++bad_inverse;
    if (recompose_semidirect(factor_semidirect(phi)) != phi) ++bad_factor;
  }
  record(r, "inverse round trip (200 automorphisms, rank <= 4)", bad_inverse == 0, count_detail(bad_inverse, 200));
  record(r, "semidirect factorization round trip", bad_factor == 0, count_detail(bad_factor, 200));

  int bad_assoc = 0;
  int bad_identity = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = static_cast<int>(rng.uniform(2, 4));
    const UniAut a = random_aut(n, opts, rng);
    const UniAut b = random_aut(n, opts, rng);
    const UniAut c = random_aut(n, opts, rng);
    if (compose(compose(a, b), c) != compose(a, compose(b, c))) ++bad_assoc;
    const UniAut id = UniAut::identity(n);
    if (compose(a, id) != a || compose(id, a) != a) ++bad_identity;
  }
  record(r, "associativity (100 triples)", bad_assoc == 0, count_detail(bad_assoc, 100));
  record(r, "identity is neutral", bad_identity == 0, count_detail(bad_identity, 100));
}

void lemma1(SuiteReport& r, const SuiteOptions& o) {
  Rng rng = suite_rng(o, r.suite);
  int bad_inv = 0;
  int bad_conj = 0;
  int bad_comm = 0;
  for (int t = 0; t < 100; ++t) {
    const NcPoly f = y_poly(4, 10, 3, rng);
    const NcPoly h = y_poly(4, 10, 3, rng);
    const Rational b = rng.rational(10);
    const Rational c = rng.rational(10);
    const UniAut phi = u2(f, b);
    const UniAut psi = u2(h, c);

    if (invert(phi) != u2(-shift_y(f, -b), -b)) ++bad_inv;
    const NcPoly conj_offset = h - shift_y(h, b) + shift_y(f, c);
    if (conjugate(phi, psi) != u2(conj_offset, b)) ++bad_conj;
    if (group_commutator(phi, psi) != u2(conj_offset - f, 0)) ++bad_comm;
  }
  record(r, "inverse closed form (100 cases)", bad_inv == 0, count_detail(bad_inv, 100, "mismatches"));
  record(r, "conjugation closed form (100 cases)", bad_conj == 0, count_detail(bad_conj, 100, "mismatches"));
  record(r, "commutator closed form (100 cases)", bad_comm == 0, count_detail(bad_comm, 100, "mismatches"));
}

void lemma2(SuiteReport& r, const SuiteOptions& o) {
  Rng rng = suite_rng(o, r.suite);
  std::vector<UniAut> probes;
  {
    Rng fixed(0x5eedULL);
    for (int i = 0; i < 50; ++i) probes.push_back(random_u2(fixed));
  }
  int disagreements = 0;
  int central = 0;
  for (int t = 0; t < 100; ++t) {
    const UniAut phi = random_u2(rng);
    bool all_commute = true;
    for (const auto& psi : probes) all_commute = all_commute && commutes(phi, psi);
    for (int k = 0; k < 50; ++k) all_commute = commutes(phi, random_u2(rng)) && all_commute;
    const bool predicted = u2_center_test(phi);
    central += predicted;
    if (predicted != all_commute) ++disagreements;
  }
  record(r, "center test agrees with commutation oracle (100 x 100 probes)", disagreements == 0,
         count_detail(disagreements, 100, "disagreements") + ", " + std::to_string(central) + " central");
  const bool examples = u2_center_test(u2(NcPoly::constant(2, 3), 0)) &&
                        !u2_center_test(u2(NcPoly::var(2, 2), 0)) && !u2_center_test(u2(NcPoly(2), 1));
  record(r, "center shape examples", examples);
}

void lemma3(SuiteReport& r, const SuiteOptions& o) {
  Rng rng = suite_rng(o, r.suite);
  int bad_shape = 0;
  for (int t = 0; t < 100; ++t) {
    if (!group_commutator(random_u2(rng), random_u2(rng)).offset(2).is_zero()) ++bad_shape;
  }
  record(r, "commutators have zero second offset (100 pairs)", bad_shape == 0, count_detail(bad_shape, 100));

  int bad_pre = 0;
  for (int t = 0; t < 20; ++t) {
    const NcPoly target = y_poly(4, 10, 4, rng);
    const auto [phi, psi] = u2_commutator_preimage(target, rng.nonzero_rational(10));
    if (group_commutator(phi, psi) != u2(target, 0)) ++bad_pre;
  }
  record(r, "commutator preimages of 20 targets", bad_pre == 0, count_detail(bad_pre, 20, "failures"));

  // FirstRow: (x + f(y), y) with f non-constant commutes with every (x + h(y), y) and with
  // nothing that moves y.
  int bad_first = 0;
  for (int t = 0; t < 50; ++t) {
    const NcPoly f = y_poly(4, 10, 3, rng) + NcPoly::monomial(2, Word::power(2, 5));
    const UniAut phi = u2(f, 0);
    if (u2_centralizer_classify(phi) != CentralizerClass::FirstRow) ++bad_first;
    if (!commutes(phi, u2(y_poly(4, 10, 3, rng), 0))) ++bad_first;
    if (commutes(phi, u2(y_poly(4, 10, 3, rng), rng.nonzero_rational(10)))) ++bad_first;
  }
  record(r, "FirstRow centralizer (50 probes)", bad_first == 0, count_detail(bad_first, 50));

  int bad_pairs = 0;
  for (int t = 0; t < 50; ++t) {
    const UniAut phi = u2(NcPoly(2), rng.nonzero_rational(10));
    if (u2_centralizer_classify(phi) != CentralizerClass::ConstantPairs) ++bad_pairs;
    if (!commutes(phi, u2(NcPoly::constant(2, rng.rational(10)), rng.rational(10)))) ++bad_pairs;
    const NcPoly moving = y_poly(3, 10, 2, rng) + NcPoly::monomial(2, Word::power(2, 4));
    if (commutes(phi, u2(moving, rng.rational(10)))) ++bad_pairs;
  }
  record(r, "ConstantPairs centralizer (50 probes)", bad_pairs == 0, count_detail(bad_pairs, 50));

  const bool classes = u2_centralizer_classify(UniAut::identity(2)) == CentralizerClass::WholeGroup &&
                       u2_centralizer_classify(u2(NcPoly::var(2, 2), 1)) == CentralizerClass::Generic;
  record(r, "WholeGroup and Generic classes", classes);
}

void lemma4(SuiteReport& r, const SuiteOptions& o) {
  Rng rng = suite_rng(o, r.suite);
  int violations = 0;
  int not_least = 0;
  for (int t = 0; t < 50; ++t) {
    const int s = static_cast<int>(rng.uniform(0, 5));
    NcPoly f = y_poly(s, 10, 3, rng);
    f.add_term(Word::power(2, s), rng.nonzero_rational(10) - f.coeff(Word::power(2, s)));
    const UniAut phi = u2(f, 0);
    const OrdinalLevel level = u2_hypercenter_level(phi);
    if (level != OrdinalLevel::finite(s + 1)) ++violations;

    OrdinalLevel highest = OrdinalLevel::finite(0);
    for (int k = 0; k < 50; ++k) {
      const OrdinalLevel l = u2_hypercenter_level(group_commutator(phi, random_u2(rng)));
      if (l > OrdinalLevel::finite(s)) ++violations;
      highest = std::max(highest, l);
    }
    // The shift y -> y + 1 realizes the bound, so the level is the least one.
    highest = std::max(highest, u2_hypercenter_level(group_commutator(phi, u2(NcPoly(2), 1))));
    if (highest != OrdinalLevel::finite(s)) ++not_least;
  }
  record(r, "descent: level([phi, psi]) <= s (50 x 50)", violations == 0, count_detail(violations, 2500));
  record(r, "level is least (bound attained)", not_least == 0, count_detail(not_least, 50));

  const bool examples =
      to_string(u2_hypercenter_level(u2(poly_parse("x2^3 + 2*x2", 2), 0))) == "4" &&
      to_string(u2_hypercenter_level(u2(NcPoly::constant(2, 5), 0))) == "1" &&
      to_string(u2_hypercenter_level(u2(NcPoly(2), 1))) == "w+1" &&
      to_string(u2_hypercenter_level(UniAut::identity(2))) == "0";
  record(r, "level examples", examples);
}

void lemma5(SuiteReport& r, const SuiteOptions& o) {
  Rng rng = suite_rng(o, r.suite);
  const PitConfig cfg = pit_for(o, 0);
  int nonzero = 0;
  for (int k = 1; k <= 4; ++k) {
    const NcPoly ck = c_poly(k);
    for (int t = 0; t < 100; ++t) {
      const UniAut phi = random_u2_substitution(cfg, rng);
      if (!invariance_defect(ck, phi.offset(2), phi.offset(3).constant_term()).is_zero()) ++nonzero;
    }
  }
  record(r, "c_1..c_4 have zero defect (400 substitutions)", nonzero == 0, count_detail(nonzero, 400, "nonzero defects"));

  int not_holds = 0;
  for (int k = 1; k <= 4; ++k) not_holds += is_invariant_pit(c_poly(k), cfg).kind != Verdict::Kind::Holds;
  not_holds += is_invariant_pit(c_poly(1) * c_poly(2) + NcPoly::constant(3, 7) * c_poly(3), cfg).kind !=
               Verdict::Kind::Holds;
  record(r, "c-products are certified invariant", not_holds == 0);

  const Verdict v = is_invariant_pit(poly_parse("x2*x3", 3), cfg);
  const bool refuted = v.failed() && v.witness.size() == 1 &&
                       apply(v.witness.front(), poly_parse("x2*x3", 3)) != poly_parse("x2*x3", 3);
  record(r, "x2*x3 is refuted with a replayable witness", refuted);
}

void theorem1(SuiteReport& r, const SuiteOptions& o) {
  Rng rng = suite_rng(o, r.suite);
  const PitConfig cfg = pit_for(o, 0);
  const RandomAutOptions opts{2, 10, 3};
  int bad = 0;
  for (int k = 1; k <= 4; ++k) {
    const UniAut phi(3, {c_poly(k), NcPoly(3), NcPoly(3)});
    if (un_center_test(phi, cfg).kind != Verdict::Kind::Holds) ++bad;
    for (int t = 0; t < 20; ++t) bad += !commutes(phi, random_aut(3, opts, rng));
  }
  record(r, "(x1 + c_k, x2, x3) is central: Holds and commutes with 20 random elements", bad == 0,
         count_detail(bad, 84, "failures"));

  const UniAut noncentral = aut_parse("x1 + x2; x2; x3");
  const Verdict v = un_center_test(noncentral, cfg);
  const bool replay = v.failed() && !v.witness.empty() && !commutes(noncentral, v.witness.front()) &&
                      v.witness.front() == aut_parse("x1; x2 + 1; x3");
  record(r, "(x1 + x2, x2, x3) fails with witness (x1, x2 + 1, x3)", replay);

  const UniAut shape = aut_parse("x1; x2; x3 + 1");
  const Verdict vs = un_center_test(shape, cfg);
  record(r, "(x1, x2, x3 + 1) fails on shape", vs.failed() && !commutes(shape, vs.witness.front()));

  int unsound = 0;
  for (int t = 0; t < 30; ++t) {
    const UniAut phi = random_aut(3, opts, rng);
    const Verdict w = un_center_test(phi, cfg);
    if (w.failed() && commutes(phi, w.witness.front())) ++unsound;
  }
  record(r, "witness soundness on 30 random elements", unsound == 0, count_detail(unsound, 30));
}

void theorem2(SuiteReport& r, const SuiteOptions& o) {
  Rng rng = suite_rng(o, r.suite);
  const int cap = 4;
  const PitConfig cfg = pit_for(o, cap);

  int bad_top = 0;
  for (int t = 0; t < 10; ++t) {
    const UniAut phi(3, {random_poly(3, 2, 3, 2, 10, 2, rng), random_poly(3, 3, 3, 2, 10, 2, rng),
                         NcPoly::constant(3, rng.nonzero_rational(10))});
    if (u3_hypercenter_level_truncated(phi, cap, cfg).level != OrdinalLevel::omega(3, 1)) ++bad_top;
  }
  record(r, "f3 != 0 gives 3w+1 (10 cases)", bad_top == 0, count_detail(bad_top, 10, "mismatches"));

  int bad_second = 0;
  for (int t = 0; t < 10; ++t) {
    NcPoly f2 = random_poly(3, 3, 3, 3, 10, 3, rng);
    if (f2.is_zero()) f2 = NcPoly::constant(3, 1);
    const UniAut phi(3, {random_poly(3, 2, 3, 2, 10, 2, rng), f2, NcPoly(3)});
    const OrdinalLevel expected = OrdinalLevel::omega(2, std::max(degree(f2).value(), 1));
    if (u3_hypercenter_level_truncated(phi, cap, cfg).level != expected) ++bad_second;
  }
  record(r, "f2 != 0 gives 2w + max(deg f2, 1) (10 cases)", bad_second == 0,
         count_detail(bad_second, 10, "mismatches"));

  // Products of c-generators of degree <= 4: 1, c1, c2, c3, c1^2.
  const std::vector<NcPoly> products{NcPoly::constant(3, 1), c_poly(1), c_poly(2), c_poly(3), c_poly(1) * c_poly(1)};
  int bad_first = 0;
  for (int t = 0; t < 10; ++t) {
    NcPoly f1(3);
    for (const auto& p : products) f1 += p * rng.rational(10);
    if (f1.is_zero()) f1 = c_poly(1);
    const LevelResult res = u3_hypercenter_level_truncated(UniAut(3, {f1, NcPoly(3), NcPoly(3)}), cap, cfg);
    const bool ok = res.level.omega_coeff == 0 && res.level.finite_part <= cfg.max_layer && !res.banded &&
                    res.confidence.passed();
    bad_first += !ok;
  }
  record(r, "f1 in span of c-products: finite level within bound (10 cases)", bad_first == 0,
         count_detail(bad_first, 10, "mismatches"));

  const LevelResult x3 = u3_hypercenter_level_truncated(aut_parse("x1 + x3; x2; x3"), cap, cfg);
  record(r, "(x1 + x3, x2, x3) has level 2", x3.level == OrdinalLevel::finite(2) && x3.confidence.passed(),
         to_string(x3.level));
  const LevelResult ex = u3_hypercenter_level_truncated(aut_parse("x1; x2 + x3^2; x3"), cap, cfg);
  record(r, "(x1, x2 + x3^2, x3) has level 2w+2", to_string(ex.level) == "2w+2", to_string(ex.level));
}

void theorem3(SuiteReport& r, const SuiteOptions& o) {
  Rng rng = suite_rng(o, r.suite);
  const PitConfig cfg = pit_for(o, 0);
  const RandomAutOptions opts{2, 10, 2};
  int bad = 0;
  for (int n = 4; n <= 5; ++n) {
    for (int k = 1; k <= 3; ++k) {
      std::vector<NcPoly> offsets(static_cast<std::size_t>(n), NcPoly(n));
      offsets[0] = c_generator(k, n - 1, n, n);
      const UniAut phi(n, offsets);
      if (un_center_test(phi, cfg).kind != Verdict::Kind::Holds) ++bad;
      for (int t = 0; t < 10; ++t) bad += !commutes(phi, random_aut(n, opts, rng));
    }
  }
  record(r, "(x1 + c_k(x_{n-1}, x_n), ...) is central in U_4 and U_5", bad == 0, count_detail(bad, 66, "failures"));

  int unsound = 0;
  int shape_missed = 0;
  for (int t = 0; t < 20; ++t) {
    const int n = static_cast<int>(rng.uniform(4, 5));
    const UniAut phi = random_aut(n, opts, rng);
    const Verdict v = un_center_test(phi, cfg);
    bool shape_ok = true;
    for (int i = 2; i <= n; ++i) shape_ok = shape_ok && phi.offset(i).is_zero();
    if (!shape_ok && !v.failed()) ++shape_missed;
    if (v.failed() && commutes(phi, v.witness.front())) ++unsound;
  }
  record(r, "non-central shapes fail with replayable witnesses (20 random)", unsound == 0 && shape_missed == 0,
         count_detail(unsound + shape_missed, 20));

  const UniAut leak = aut_parse("x1 + x2*x3 - x3*x2; x2; x3; x4");
  const Verdict v = un_center_test(leak, cfg);
  record(r, "(x1 + [x2, x3], x2, x3, x4) is not central in U_4", v.failed() && !commutes(leak, v.witness.front()));
}

void proposition1(SuiteReport& r, const SuiteOptions& o) {
  int bad = 0;
  for (int k = 1; k <= 3; ++k) {
    for (int n = 1; n <= 5; ++n) bad += !proposition_identity_check(k, n);
  }
  record(r, "commutator identity for k <= 3, N <= 5", bad == 0, count_detail(bad, 15, "failures"));

  const NcPoly f = ring_commutator(c_poly(1), NcPoly::var(3, 2));
  const NcPoly x3sq = poly_parse("x3^2", 3);
  const NcPoly expected = c_poly(2) * NcPoly::var(3, 3) + NcPoly::var(3, 3) * c_poly(2);
  record(r, "defect of [c1, x2] under x2 -> x2 + x3^2", invariance_defect(f, x3sq, 0) == expected);

  const int cap = 5;
  PitConfig cfg = pit_for(o, cap);
  const GradedSubspace s1 = s_layer_basis(1, cap, cfg);
  record(r, "[c1, x2] is outside the truncated S_1 layer (D = 5)", !s1.contains(f),
         "dim " + std::to_string(s1.dim()) + ", W = " + std::to_string(s1.working_cap()));

  for (auto [k, m] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
    const Verdict v = proposition_noninvariance_probe(k, m, cfg, k == 1 && m == 2 ? 5 : 0);
    const NcPoly target = ring_commutator(c_poly(k), NcPoly::var(3, 2));
    const bool refuted = v.failed() && !iterated_defect(target, v.witness).is_zero();
    record(r, "[c" + std::to_string(k) + ", x2] refuted in S_" + std::to_string(m), refuted);
  }
}

void remark_pi(SuiteReport& r, const SuiteOptions& o) {
  for (int m = 1; m <= 3; ++m) {
    for (int d = 1; d <= 4; ++d) {
      const PiReport rep = remark_pi_check(m, d, pit_for(o, d));
      std::ostringstream detail;
      for (const auto& row : rep.rows) detail << row.degree << ':' << row.computed << '/' << row.expected << ' ';
      record(r, "pi-image of S_" + std::to_string(m) + " at D = " + std::to_string(d), rep.matches, detail.str());
    }
  }
}

void hypothesis1(SuiteReport& r, const SuiteOptions& o) {
  for (int d = 2; d <= 5; ++d) {
    const ContainmentReport rep = hypothesis1_report(d, pit_for(o, d));
    std::ostringstream detail;
    detail << (rep.equal ? "dimensions equal" : "dimensions differ") << ":";
    for (const auto& row : rep.rows) detail << ' ' << row.degree << ':' << row.span_dim << '/' << row.layer_dim;
    record(r, "c-products inside S_1 at D = " + std::to_string(d), rep.contained, detail.str());
  }
}

void specht(SuiteReport& r, const SuiteOptions& o) {
  Rng rng = suite_rng(o, r.suite);
  const SpechtStraightener st(5);
  int bad_rebuild = 0;
  int bad_unique = 0;
  for (int t = 0; t < 200; ++t) {
    const NcPoly f = random_poly(3, 2, 3, 5, 10, 4, rng);
    const StraightenMap parts = st.straighten(f);
    if (specht_recompose(parts) != f) ++bad_rebuild;
    if (st.straighten(f, rng.next()) != parts) ++bad_unique;
  }
  record(r, "exact reconstruction (200 random, degree <= 5)", bad_rebuild == 0, count_detail(bad_rebuild, 200));
  record(r, "uniqueness under permuted column order", bad_unique == 0, count_detail(bad_unique, 200));

  const StraightenMap swapped = st.straighten(poly_parse("x3*x2", 3));
  const StraightenMap expected{{{1, 1}, NcPoly::constant(3, 1)}, {{0, 0}, -c_poly(1)}};
  record(r, "x3*x2 = x2*x3 - c1", swapped == expected);
}

void derived_series(SuiteReport& r, const SuiteOptions& o) {
  Rng rng = suite_rng(o, r.suite);
  int bad_pairs = 0;
  const RandomAutOptions pair_opts{3, 10, 3};
  for (int t = 0; t < 100; ++t) {
    const int n = static_cast<int>(rng.uniform(2, 4));
    const UniAut c = group_commutator(random_aut(n, pair_opts, rng), random_aut(n, pair_opts, rng));
    if (derived_level_shape(c) < 1) ++bad_pairs;
  }
  record(r, "commutators have shape >= 1 (100 pairs)", bad_pairs == 0, count_detail(bad_pairs, 100));

  // Leaves where f_i contains x_{i+1}^(n-i) and f_n is a nonzero constant, so that each
  // commutator level can still be nontrivial.
  auto leaf = [&rng](int n) {
    std::vector<NcPoly> offsets;
    for (int i = 1; i < n; ++i) {
      NcPoly f = random_poly(n, i + 1, n, n - i, 3, 1, rng);
      const Word top = Word::power(i + 1, n - i);
      f.add_term(top, rng.nonzero_rational(3) - f.coeff(top));
      offsets.push_back(std::move(f));
    }
    offsets.push_back(NcPoly::constant(n, rng.nonzero_rational(3)));
    return UniAut(n, std::move(offsets));
  };
  for (int n = 2; n <= 4; ++n) {
    int bad = 0;
    int nontrivial_below = 0;
    for (int t = 0; t < 3; ++t) {
      std::function<UniAut(int)> tree = [&](int depth) -> UniAut {
        if (depth == 0) return leaf(n);
        const UniAut a = tree(depth - 1);
        const UniAut b = tree(depth - 1);
        const UniAut c = group_commutator(a, b);
        if (derived_level_shape(c) < depth) ++bad;
        if (depth == n - 1 && !c.is_identity()) ++nontrivial_below;
        return c;
      };
      if (!tree(n).is_identity()) ++bad;
    }
    record(r, "depth-" + std::to_string(n) + " commutator trees in U_" + std::to_string(n) + " reach the identity",
           bad == 0, count_detail(bad, 3));
    record(r, "depth-" + std::to_string(n - 1) + " commutators in U_" + std::to_string(n) + " are not all trivial",
           nontrivial_below > 0, std::to_string(nontrivial_below) + " nontrivial of 6");
  }
}

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> table{
      {"group-axioms", group_axioms},
      {"lemma1", lemma1},
      {"lemma2", lemma2},
      {"lemma3", lemma3},
      {"lemma4", lemma4},
      {"lemma5", lemma5},
      {"theorem1", theorem1},
      {"theorem2-trunc", theorem2},
      {"theorem3", theorem3},
      {"proposition1", proposition1},
      {"remark-pi", remark_pi},
      {"hypothesis1", hypothesis1},
      {"specht", specht},
      {"derived-series", derived_series},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, run] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  for (const auto& [suite, run] : registry()) {
    if (suite != name) continue;
    SuiteReport report{suite, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    run(report, options);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  throw AlgebraError("unknown suite '" + std::string(name) + "'");
}

Json to_json(const SuiteReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return Json{{"suite", report.suite}, {"passed", report.passed()}, {"checks", std::move(checks)}};
}

}  // namespace unitri
