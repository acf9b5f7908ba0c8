#include "thick/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "thick/error.hpp"

namespace thick {

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(const std::map<std::string, int>& exponents) {
  for (const auto& [v, e] : exponents) {
    if (e < 0) throw Error(ErrorCode::InvalidInput, "negative exponent on " + v);
    if (e > 0) exps_.emplace(v, e);
  }
}

Monomial Monomial::var(const std::string& name, int exp) { return Monomial({{name, exp}}); }

int Monomial::degree(const std::string& var) const {
  auto it = exps_.find(var);
  return it == exps_.end() ? 0 : it->second;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : exps_) d += e;
  return d;
}

std::set<std::string> Monomial::support() const {
  std::set<std::string> s;
  for (const auto& [v, e] : exps_) s.insert(v);
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [v, e] : exps_)
    if (other.degree(v) < e) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r = *this;
  for (const auto& [v, e] : divisor.exps_) {
    auto it = r.exps_.find(v);
    if (it == r.exps_.end() || it->second < e)
      throw std::logic_error("monomial division is not exact");
    it->second -= e;
    if (it->second == 0) r.exps_.erase(it);
  }
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (const auto& [v, e] : other.exps_) r.exps_[v] += e;
  return r;
}

Monomial Monomial::pow(int k) const {
  if (k == 0) return {};
  Monomial r = *this;
  for (auto& [v, e] : r.exps_) e *= k;
  return r;
}

Monomial Monomial::without(const std::string& var) const {
  Monomial r = *this;
  r.exps_.erase(var);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (const auto& [v, e] : a.exps_) {
    int m = std::min(e, b.degree(v));
    if (m > 0) r.exps_.emplace(v, m);
  }
  return r;
}

std::string Monomial::str() const {
  if (exps_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : exps_) {
    if (!s.empty()) s += "*";
    s += v;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Poly::Poly(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<std::string> Poly::variables() const {
  std::set<std::string> s;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.exponents()) s.insert(v);
  return s;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::pow(int k) const {
  Poly r(1);
  for (int i = 0; i < k; ++i) r *= *this;
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return {};
  Poly r = *this;
  for (auto& [m, coef] : r.terms_) coef *= c;
  return r;
}

Poly Poly::substitute(const std::map<std::string, Poly>& images) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Poly term(c);
    Monomial kept;
    for (const auto& [v, e] : m.exponents()) {
      auto it = images.find(v);
      if (it == images.end())
        kept = kept * Monomial::var(v, e);
      else
        term *= it->second.pow(e);
    }
    r += term.multiply(kept);
  }
  return r;
}

Poly Poly::rename(const std::map<std::string, std::string>& names) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    std::map<std::string, int> e;
    for (const auto& [v, k] : m.exponents()) {
      auto it = names.find(v);
      e[it == names.end() ? v : it->second] += k;
    }
    r.add_term(Monomial(e), c);
  }
  return r;
}

Poly Poly::at_zero(const std::string& var) const {
  Poly r;
  for (const auto& [m, c] : terms_)
    if (m.degree(var) == 0) r.terms_.emplace(m, c);
  return r;
}

int Poly::order_in(const std::string& var) const {
  if (terms_.empty()) return 0;
  int o = terms_.begin()->first.degree(var);
  for (const auto& [m, c] : terms_) o = std::min(o, m.degree(var));
  return o;
}

int Poly::degree_in(const std::string& var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(var));
  return d;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_) g = Monomial::gcd(g, m);
  return g;
}

Monomial Poly::monomial_content(const std::set<std::string>& vars) const {
  std::map<std::string, int> e;
  Monomial all = monomial_content();
  for (const auto& [v, k] : all.exponents())
    if (vars.count(v)) e[v] = k;
  return Monomial(e);
}

bool Poly::divisible_by(const Monomial& m) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return m.divides(t.first); });
}

std::optional<Poly> Poly::divide(const Monomial& m) const {
  if (!divisible_by(m)) return std::nullopt;
  Poly r;
  for (const auto& [t, c] : terms_) r.terms_.emplace(t / m, c);
  return r;
}

Poly Poly::multiply(const Monomial& m) const {
  Poly r;
  for (const auto& [t, c] : terms_) r.terms_.emplace(t * m, c);
  return r;
}

std::optional<std::pair<Rational, Monomial>> Poly::as_term() const {
  if (terms_.size() != 1) return std::nullopt;
  return std::make_pair(terms_.begin()->second, terms_.begin()->first);
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  // Highest monomials first so that output reads like hand-written algebra.
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    bool neg = c < 0;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (m.is_one()) {
      s += to_string(a);
    } else {
      if (a != 1) s += to_string(a) + "*";
      s += m.str();
    }
  }
  return s;
}

// ---------------------------------------------------------------- parser

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : s_(text) {}

  Poly expr() {
    Poly r = term();
    for (;;) {
      skip();
      if (peek() == '+') {
        ++pos_;
        r += term();
      } else if (peek() == '-') {
        ++pos_;
        r -= term();
      } else {
        return r;
      }
    }
  }

  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

 private:
  Poly term() {
    Poly r = unary();
    for (;;) {
      skip();
      if (peek() != '*') return r;
      ++pos_;
      r *= unary();
    }
  }

  Poly unary() {
    skip();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      return base.pow(static_cast<int>(integer()));
    }
    return base;
  }

  Poly atom() {
    skip();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly r = expr();
      expect(')');
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer_big();
      // `p/q` with no whitespace is a rational coefficient; any other slash
      // belongs to an enclosing rational-function expression.
      if (peek() == '/' && pos_ + 1 < s_.size() &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        Integer den = integer_big();
        if (den == 0) fail("zero denominator");
        return Poly(Rational(num, den));
      }
      return Poly(Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      return Poly::var(s_.substr(start, pos_ - start));
    }
    fail(c == '\0' ? "unexpected end of input" : std::string("unexpected '") + c + "'");
  }

  long integer() {
    Integer v = integer_big();
    if (v > 1000000) fail("exponent too large");
    return v.convert_to<long>();
  }

  Integer integer_big() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Integer(s_.substr(start, pos_ - start));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text) {
  PolyParser p(text);
  Poly r = p.expr();
  if (!p.at_end()) p.fail("trailing input");
  return r;
}

RationalFunction parse_rational_function(const std::string& text) {
  PolyParser p(text);
  Poly num = p.expr();
  p.skip();
  if (p.peek() == '/') {
    p.expect('/');
    Poly den = p.expr();
    if (!p.at_end()) p.fail("trailing input");
    if (den.is_zero()) p.fail("zero denominator");
    return RationalFunction(num, den);
  }
  if (!p.at_end()) p.fail("trailing input");
  return RationalFunction(num);
}

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error(ErrorCode::ZeroInput, "rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Monomial g = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
  num_ = *num_.divide(g);
  den_ = *den_.divide(g);
  // Scale so the leading denominator coefficient is 1.
  Rational lead = den_.terms().rbegin()->second;
  num_ = num_.scaled(1 / lead);
  den_ = den_.scaled(1 / lead);
}

Poly RationalFunction::as_poly() const {
  if (!is_polynomial()) throw std::logic_error("rational function is not a polynomial");
  return num_.scaled(1 / den_.constant_term());
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::string RationalFunction::str() const {
  if (den_ == Poly(1)) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

int valuation(const RationalFunction& a, const std::string& t) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "valuation of zero");
  return a.numerator().order_in(t) - a.denominator().order_in(t);
}

}  // namespace thick
