#include "unitri/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace unitri {

namespace {

void require_same_rank(int a, int b) {
  if (a != b) throw RankMismatch(a, b);
}

constexpr int kMaxVar = 255;

}  // namespace

// ---------------------------------------------------------------------------
// Degree

int Degree::value() const {
  if (!is_finite()) throw std::logic_error("degree of the zero polynomial is -infinity");
  return value_;
}

std::string Degree::to_string() const { return is_finite() ? std::to_string(value_) : "-inf"; }

// ---------------------------------------------------------------------------
// Word

Word::Word(std::initializer_list<int> letters) : Word(std::span<const int>(letters.begin(), letters.size())) {}

Word::Word(std::span<const int> letters) {
  letters_.reserve(letters.size());
  for (int v : letters) {
    if (v < 1 || v > kMaxVar) throw AlgebraError("variable index out of range: " + std::to_string(v));
    letters_.push_back(static_cast<char>(v));
  }
}

Word Word::letter(int var) { return Word{var}; }

Word Word::power(int var, int exponent) {
  if (var < 1 || var > kMaxVar) throw AlgebraError("variable index out of range: " + std::to_string(var));
  return Word(std::string(static_cast<std::size_t>(std::max(exponent, 0)), static_cast<char>(var)));
}

int Word::count(int var) const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), static_cast<char>(var)));
}

int Word::max_letter() const {
  int m = 0;
  for (std::size_t i = 0; i < size(); ++i) m = std::max(m, (*this)[i]);
  return m;
}

int Word::min_letter() const {
  if (empty()) return 0;
  int m = kMaxVar;
  for (std::size_t i = 0; i < size(); ++i) m = std::min(m, (*this)[i]);
  return m;
}

std::vector<int> Word::letters() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i]);
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  const int c = a.letters_.compare(b.letters_);
  return c <=> 0;
}

// ---------------------------------------------------------------------------
// NcPoly

NcPoly::NcPoly(int rank) : rank_(rank) {
  if (rank < 1) throw AlgebraError("rank must be positive");
}

NcPoly NcPoly::constant(int rank, const Rational& c) { return monomial(rank, Word{}, c); }

NcPoly NcPoly::var(int rank, int index) {
  if (index < 1 || index > rank) {
    throw AlgebraError("variable x" + std::to_string(index) + " outside rank " + std::to_string(rank));
  }
  return monomial(rank, Word::letter(index));
}

NcPoly NcPoly::monomial(int rank, const Word& word, const Rational& coeff) {
  NcPoly p(rank);
  if (word.max_letter() > rank) {
    throw AlgebraError("word uses a variable outside rank " + std::to_string(rank));
  }
  p.add_term(word, coeff);
  return p;
}

bool NcPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational NcPoly::coeff(const Word& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Word& NcPoly::leading_word() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading word");
  return terms_.rbegin()->first;
}

void NcPoly::add_term(const Word& word, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(word, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int NcPoly::min_var() const {
  int m = 0;
  for (const auto& [w, c] : terms_) {
    const int v = w.min_letter();
    if (v != 0 && (m == 0 || v < m)) m = v;
  }
  return m;
}

int NcPoly::max_var() const {
  int m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.max_letter());
  return m;
}

bool NcPoly::uses_only(int lo, int hi) const {
  for (const auto& [w, c] : terms_) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] < lo || w[i] > hi) return false;
    }
  }
  return true;
}

NcPoly NcPoly::with_rank(int rank) const {
  if (max_var() > rank) throw AlgebraError("polynomial does not fit in rank " + std::to_string(rank));
  NcPoly out(rank);
  out.terms_ = terms_;
  return out;
}

NcPoly& NcPoly::operator+=(const NcPoly& rhs) {
  require_same_rank(rank_, rhs.rank_);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& rhs) {
  require_same_rank(rank_, rhs.rank_);
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  require_same_rank(a.rank_, b.rank_);
  NcPoly out(a.rank_);
  Rational prod;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(wa * wb, prod);
    }
  }
  return out;
}

NcPoly operator-(NcPoly a) {
  for (auto& [w, c] : a.terms_) c = -c;
  return a;
}

// ---------------------------------------------------------------------------
// CommPoly

bool CommPoly::GradedOrder::operator()(const Exponents& a, const Exponents& b) const {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db;
  return a < b;
}

CommPoly::CommPoly(int rank) : rank_(rank) {
  if (rank < 1) throw AlgebraError("rank must be positive");
}

CommPoly CommPoly::constant(int rank, const Rational& c) {
  CommPoly p(rank);
  p.add_term(Exponents(static_cast<std::size_t>(rank), 0), c);
  return p;
}

CommPoly CommPoly::monomial(int rank, Exponents exps, const Rational& coeff) {
  if (static_cast<int>(exps.size()) != rank) throw AlgebraError("exponent vector length must equal rank");
  CommPoly p(rank);
  p.add_term(exps, coeff);
  return p;
}

Rational CommPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CommPoly::add_term(const Exponents& e, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Degree CommPoly::degree() const {
  Degree d = Degree::neg_infinity();
  for (const auto& [e, c] : terms_) {
    int total = 0;
    for (int x : e) total += x;
    d = std::max(d, Degree(total));
  }
  return d;
}

Degree CommPoly::degree_in_var(int index) const {
  Degree d = Degree::neg_infinity();
  for (const auto& [e, c] : terms_) d = std::max(d, Degree(e.at(static_cast<std::size_t>(index - 1))));
  return d;
}

CommPoly& CommPoly::operator+=(const CommPoly& rhs) {
  require_same_rank(rank_, rhs.rank_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

CommPoly& CommPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

CommPoly operator-(CommPoly a, const CommPoly& b) {
  require_same_rank(a.rank_, b.rank_);
  for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
  return a;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  require_same_rank(a.rank_, b.rank_);
  CommPoly out(a.rank_);
  CommPoly::Exponents e(static_cast<std::size_t>(a.rank_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Operations

NcPoly poly_add(const NcPoly& a, const NcPoly& b) { return a + b; }

NcPoly poly_mul(const NcPoly& a, const NcPoly& b) { return a * b; }

NcPoly poly_pow(const NcPoly& a, int exponent) {
  if (exponent < 0) throw AlgebraError("negative exponent");
  NcPoly out = NcPoly::constant(a.rank(), 1);
  for (int i = 0; i < exponent; ++i) out = out * a;
  return out;
}

NcPoly ring_commutator(const NcPoly& a, const NcPoly& b) { return a * b - b * a; }

NcPoly substitute(const NcPoly& p, std::span<const NcPoly> images) {
  if (static_cast<int>(images.size()) != p.rank()) {
    throw RankMismatch(p.rank(), static_cast<int>(images.size()));
  }
  if (images.empty()) throw AlgebraError("substitution needs at least one image");
  const int out_rank = images.front().rank();
  for (const auto& im : images) require_same_rank(out_rank, im.rank());

  // Images of prefixes are shared across terms: terms are visited in graded order, so
  // every proper prefix of a word was either seen already or is built on demand.
  std::map<Word, NcPoly> prefix_images;
  auto image_of = [&](const Word& w, auto&& self) -> const NcPoly& {
    auto it = prefix_images.find(w);
    if (it != prefix_images.end()) return it->second;
    NcPoly value(out_rank);
    if (w.empty()) {
      value = NcPoly::constant(out_rank, 1);
    } else {
      std::vector<int> letters = w.letters();
      const int last = letters.back();
      letters.pop_back();
      const NcPoly& prefix = self(Word(std::span<const int>(letters)), self);
      value = prefix * images[static_cast<std::size_t>(last - 1)];
    }
    return prefix_images.emplace(w, std::move(value)).first->second;
  };

  NcPoly out(out_rank);
  for (const auto& [w, c] : p.terms()) {
    const NcPoly& img = image_of(w, image_of);
    for (const auto& [iw, ic] : img.terms()) out.add_term(iw, ic * c);
  }
  return out;
}

Degree degree(const NcPoly& p) {
  if (p.is_zero()) return Degree::neg_infinity();
  return Degree(static_cast<int>(p.leading_word().size()));
}

Degree degree_in_var(const NcPoly& p, int index) {
  Degree d = Degree::neg_infinity();
  for (const auto& [w, c] : p.terms()) d = std::max(d, Degree(w.count(index)));
  return d;
}

CommPoly abelianize(const NcPoly& p) {
  CommPoly out(p.rank());
  CommPoly::Exponents e(static_cast<std::size_t>(p.rank()));
  for (const auto& [w, c] : p.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) ++e[static_cast<std::size_t>(w[i] - 1)];
    out.add_term(e, c);
  }
  return out;
}

NcPoly c_generator(int k, int i, int j, int rank) {
  if (k < 1) throw AlgebraError("c_generator needs k >= 1");
  if (i == j) throw AlgebraError("c_generator needs distinct variables");
  const NcPoly xj = NcPoly::var(rank, j);
  NcPoly c = ring_commutator(NcPoly::var(rank, i), xj);
  for (int step = 1; step < k; ++step) c = ring_commutator(c, xj);
  return c;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

class Parser {
 public:
  Parser(std::string_view text, int rank) : text_(text), rank_(rank) {}

  NcPoly parse_poly() {
    NcPoly out(rank_ > 0 ? rank_ : 1);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    parse_term(out, negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      ++pos_;
      parse_term(out, op == '-');
    }
    return out;
  }

  int max_var() const { return max_var_; }

 private:
  void parse_term(NcPoly& out, bool negative) {
    skip_ws();
    Rational coeff = 1;
    std::vector<int> letters;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coeff();
    } else {
      parse_factor(letters);
    }
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      parse_factor(letters);
    }
    if (negative) coeff = -coeff;
    if (rank_ > 0) out.add_term(Word(std::span<const int>(letters)), coeff);
  }

  Rational parse_coeff() {
    mpz_class num = parse_uint_big();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      mpz_class den = parse_uint_big();
      if (den == 0) fail("zero denominator", at);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  void parse_factor(std::vector<int>& letters) {
    skip_ws();
    if (at_end()) fail("expected a variable");
    const std::size_t at = pos_;
    const char c = peek();
    int var = 0;
    if (c == 'x') {
      ++pos_;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        const long idx = parse_uint_small();
        if (idx < 1 || idx > kMaxVar) fail("unknown variable x" + std::to_string(idx), at);
        var = static_cast<int>(idx);
      } else {
        var = 1;
      }
    } else if (c == 'y') {
      ++pos_;
      var = 2;
    } else if (c == 'z') {
      ++pos_;
      var = 3;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      fail("coefficient must come first in a term");
    } else {
      fail(std::string("expected a variable, found '") + c + "'");
    }
    if (rank_ > 0 && var > rank_) {
      fail("variable x" + std::to_string(var) + " exceeds rank " + std::to_string(rank_), at);
    }
    max_var_ = std::max(max_var_, var);
    int exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      const long e = parse_uint_small();
      if (e > 4096) fail("exponent too large");
      exponent = static_cast<int>(e);
    }
    for (int i = 0; i < exponent; ++i) letters.push_back(var);
  }

  mpz_class parse_uint_big() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  long parse_uint_small() {
    const std::size_t start = pos_;
    mpz_class v = parse_uint_big();
    if (!v.fits_slong_p() || v > 1000000) fail("integer too large", start);
    return v.get_si();
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  std::string_view text_;
  int rank_;
  std::size_t pos_ = 0;
  int max_var_ = 0;
};

}  // namespace

NcPoly poly_parse(std::string_view text, int rank) {
  if (rank < 1) throw AlgebraError("rank must be positive");
  Parser parser(text, rank);
  return parser.parse_poly();
}

int infer_rank(std::string_view text) {
  Parser parser(text, 0);
  parser.parse_poly();
  return std::max(parser.max_var(), 1);
}

std::string word_format(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!first) os << '*';
    first = false;
    os << 'x' << w[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

namespace {

template <class Terms, class MonoFormat, class IsUnit>
std::string format_terms(const Terms& terms, MonoFormat mono, IsUnit is_unit) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (is_unit(m)) {
      os << to_string(mag);
    } else if (mag == 1) {
      os << mono(m);
    } else {
      os << to_string(mag) << '*' << mono(m);
    }
  }
  return os.str();
}

}  // namespace

std::string poly_format(const NcPoly& p) {
  return format_terms(p.terms(), word_format, [](const Word& w) { return w.empty(); });
}

std::string poly_format(const CommPoly& p) {
  auto mono = [](const CommPoly::Exponents& e) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first) os << '*';
      first = false;
      os << 'x' << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
    }
    return os.str();
  };
  auto is_unit = [](const CommPoly::Exponents& e) {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  };
  return format_terms(p.terms(), mono, is_unit);
}

}  // namespace unitri
