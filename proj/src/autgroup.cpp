#include "unitri/autgroup.hpp"

#include <sstream>

namespace unitri {

namespace {

void validate_offsets(int rank, const std::vector<NcPoly>& offsets) {
  if (rank < 2) throw AlgebraError("unitriangular automorphisms need rank >= 2");
  if (static_cast<int>(offsets.size()) != rank) {
    throw AlgebraError("expected " + std::to_string(rank) + " offsets, got " + std::to_string(offsets.size()));
  }
  for (int i = 1; i <= rank; ++i) {
    const NcPoly& f = offsets[static_cast<std::size_t>(i - 1)];
    if (f.rank() != rank) throw RankMismatch(rank, f.rank());
    if (i == rank) {
      if (!f.is_constant()) throw NonConstantLast();
    } else if (!f.uses_only(i + 1, rank)) {
      throw VariableLeak(i);
    }
  }
}

}  // namespace

UniAut::UniAut(int rank, std::vector<NcPoly> offsets) : rank_(rank), offsets_(std::move(offsets)) {
  validate_offsets(rank_, offsets_);
}

UniAut::UniAut(int rank, std::vector<NcPoly> offsets, Unchecked) : rank_(rank), offsets_(std::move(offsets)) {}

UniAut UniAut::identity(int rank) {
  return UniAut(rank, std::vector<NcPoly>(static_cast<std::size_t>(rank), NcPoly(rank)));
}

UniAut UniAut::elementary(int rank, int index, const NcPoly& offset) {
  std::vector<NcPoly> offsets(static_cast<std::size_t>(rank), NcPoly(rank));
  offsets.at(static_cast<std::size_t>(index - 1)) = offset;
  return UniAut(rank, std::move(offsets));
}

NcPoly UniAut::image(int index) const { return NcPoly::var(rank_, index) + offset(index); }

std::vector<NcPoly> UniAut::images() const {
  std::vector<NcPoly> out;
  out.reserve(offsets_.size());
  for (int i = 1; i <= rank_; ++i) out.push_back(image(i));
  return out;
}

bool UniAut::is_identity() const {
  for (const auto& f : offsets_) {
    if (!f.is_zero()) return false;
  }
  return true;
}

UniAut aut_new(int rank, std::vector<NcPoly> offsets) { return UniAut(rank, std::move(offsets)); }

ElementarySpec::ElementarySpec(int index_, Rational scale_, NcPoly offset_)
    : index(index_), scale(std::move(scale_)), offset(std::move(offset_)) {
  if (scale == 0) throw AlgebraError("elementary automorphism needs a nonzero scale");
  if (degree_in_var(offset, index) > 0) throw VariableLeak(index);
}

bool ElementarySpec::is_unitriangular() const { return scale == 1 && offset.uses_only(index + 1, offset.rank()); }

UniAut ElementarySpec::to_uniaut() const {
  if (scale != 1) throw AlgebraError("scaled elementary automorphism is not unitriangular");
  return UniAut::elementary(offset.rank(), index, offset);
}

NcPoly apply(const UniAut& phi, const NcPoly& p) {
  if (p.rank() != phi.rank()) throw RankMismatch(phi.rank(), p.rank());
  const auto images = phi.images();
  return substitute(p, images);
}

UniAut compose(const UniAut& phi, const UniAut& psi) {
  if (phi.rank() != psi.rank()) throw RankMismatch(phi.rank(), psi.rank());
  const auto images = psi.images();
  std::vector<NcPoly> offsets;
  offsets.reserve(images.size());
  for (int i = 1; i <= phi.rank(); ++i) {
    offsets.push_back(psi.offset(i) + substitute(phi.offset(i), images));
  }
  // Closure: f_i and g_i only use variables above i, and so does the substituted f_i.
  return UniAut(phi.rank(), std::move(offsets), UniAut::Unchecked{});
}

UniAut invert(const UniAut& phi) {
  const int n = phi.rank();
  std::vector<NcPoly> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images.push_back(NcPoly::var(n, i));
  std::vector<NcPoly> offsets(static_cast<std::size_t>(n), NcPoly(n));
  // f_i only sees x_{i+1..n}, whose inverse images are already final.
  for (int i = n; i >= 1; --i) {
    auto idx = static_cast<std::size_t>(i - 1);
    offsets[idx] = -substitute(phi.offset(i), images);
    images[idx] += offsets[idx];
  }
  return UniAut(n, std::move(offsets), UniAut::Unchecked{});
}

UniAut conjugate(const UniAut& phi, const UniAut& psi) { return compose(compose(invert(psi), phi), psi); }

UniAut group_commutator(const UniAut& phi, const UniAut& psi) {
  return compose(compose(compose(invert(phi), invert(psi)), phi), psi);
}

std::vector<UniAut> factor_semidirect(const UniAut& phi) {
  std::vector<UniAut> out;
  out.reserve(static_cast<std::size_t>(phi.rank()));
  for (int i = 1; i <= phi.rank(); ++i) out.push_back(UniAut::elementary(phi.rank(), i, phi.offset(i)));
  return out;
}

UniAut recompose_semidirect(const std::vector<UniAut>& factors) {
  if (factors.empty()) throw AlgebraError("no factors");
  UniAut acc = factors.back();
  for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) acc = compose(acc, *it);
  return acc;
}

int derived_level_shape(const UniAut& phi) {
  int k = 0;
  for (int i = phi.rank(); i >= 1 && phi.offset(i).is_zero(); --i) ++k;
  return k;
}

NcPoly random_poly(int rank, int lo, int hi, int max_degree, int coeff_height, int max_terms, Rng& rng) {
  NcPoly out(rank);
  const auto terms = rng.uniform(0, std::max(max_terms, 0));
  std::vector<int> letters;
  for (std::int64_t t = 0; t < terms; ++t) {
    const auto len = lo > hi ? 0 : rng.uniform(0, std::max(max_degree, 0));
    letters.clear();
    for (std::int64_t k = 0; k < len; ++k) letters.push_back(static_cast<int>(rng.uniform(lo, hi)));
    const Word w{std::span<const int>(letters)};
    const Rational c = rng.nonzero_rational(coeff_height);
    // A repeated word is dropped so every coefficient stays within the height bound.
    if (out.coeff(w) == 0) out.add_term(w, c);
  }
  return out;
}

UniAut random_aut(int rank, const RandomAutOptions& options, Rng& rng) {
  std::vector<NcPoly> offsets;
  offsets.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i < rank; ++i) {
    offsets.push_back(
        random_poly(rank, i + 1, rank, options.max_degree, options.coeff_height, options.max_terms, rng));
  }
  NcPoly last(rank);
  if (rng.coin()) last = NcPoly::constant(rank, rng.nonzero_rational(options.coeff_height));
  offsets.push_back(std::move(last));
  return UniAut(rank, std::move(offsets));
}

UniAut random_aut(int rank, int max_degree, int coeff_height, std::uint64_t seed) {
  Rng rng(seed);
  return random_aut(rank, RandomAutOptions{max_degree, coeff_height, 3}, rng);
}

NcPoly u2_difference_preimage(const NcPoly& f, const Rational& d) {
  if (d == 0) throw AlgebraError("difference step must be nonzero");
  if (!f.uses_only(2, 2)) throw AlgebraError("expected a polynomial in x2 only");
  const int rank = f.rank();
  if (f.is_zero()) return NcPoly(rank);
  const int k = degree(f).value();
  // binom[j][i] = C(j, i)
  std::vector<std::vector<Rational>> binom(static_cast<std::size_t>(k + 2));
  for (int j = 0; j <= k + 1; ++j) {
    binom[j].assign(static_cast<std::size_t>(j + 1), Rational(1));
    for (int i = 1; i < j; ++i) binom[j][i] = binom[j - 1][i - 1] + binom[j - 1][i];
  }
  std::vector<Rational> dpow(static_cast<std::size_t>(k + 2), Rational(1));
  for (int e = 1; e <= k + 1; ++e) dpow[e] = dpow[e - 1] * d;

  // Coefficient of y^i in r(y + d) - r(y) is sum_{j > i} r_j C(j, i) d^(j - i); the system
  // is triangular with diagonal (i + 1) d.
  std::vector<Rational> r(static_cast<std::size_t>(k + 2), Rational(0));
  for (int i = k; i >= 0; --i) {
    Rational rhs = f.coeff(Word::power(2, i));
    for (int j = i + 2; j <= k + 1; ++j) rhs -= r[j] * binom[j][i] * dpow[j - i];
    r[i + 1] = rhs / (binom[i + 1][i] * dpow[1]);
  }
  NcPoly out(rank);
  for (int j = 1; j <= k + 1; ++j) out.add_term(Word::power(2, j), r[j]);
  return out;
}

std::pair<UniAut, UniAut> u2_commutator_preimage(const NcPoly& f, const Rational& d) {
  if (f.rank() != 2) throw RankMismatch(2, f.rank());
  const NcPoly r = u2_difference_preimage(f, d);
  UniAut phi(2, {NcPoly(2), NcPoly::constant(2, d)});
  UniAut psi(2, {-r, NcPoly(2)});
  return {std::move(phi), std::move(psi)};
}

std::string aut_format(const UniAut& phi) {
  std::ostringstream os;
  for (int i = 1; i <= phi.rank(); ++i) {
    if (i > 1) os << "; ";
    os << 'x' << i;
    const NcPoly& f = phi.offset(i);
    if (f.is_zero()) continue;
    const std::string s = poly_format(f);
    if (s.front() == '-') {
      os << " - " << s.substr(1);
    } else {
      os << " + " << s;
    }
  }
  return os.str();
}

UniAut aut_parse(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> pieces;
  std::size_t start = 0;
  for (;;) {
    const std::size_t semi = text.find(';', start);
    const std::size_t end = semi == std::string_view::npos ? text.size() : semi;
    pieces.emplace_back(start, text.substr(start, end - start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  const int rank = static_cast<int>(pieces.size());
  if (rank < 2) throw ParseError("an automorphism needs at least two ';'-separated images", text.size());
  std::vector<NcPoly> offsets;
  offsets.reserve(pieces.size());
  for (int i = 1; i <= rank; ++i) {
    const auto& [at, piece] = pieces[static_cast<std::size_t>(i - 1)];
    NcPoly image(rank);
    try {
      image = poly_parse(piece, rank);
    } catch (const ParseError& e) {
      throw ParseError("image " + std::to_string(i) + ": " + e.detail(), at + e.position());
    }
    offsets.push_back(image - NcPoly::var(rank, i));
  }
  return UniAut(rank, std::move(offsets));
}

}  // namespace unitri
