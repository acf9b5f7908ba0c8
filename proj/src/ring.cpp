#include "thick/ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "thick/error.hpp"

namespace thick {

MonomialQuotientRing::MonomialQuotientRing(std::vector<std::string> vars, Monomial relation)
    : vars_(std::move(vars)), relation_(std::move(relation)) {
  std::vector<std::string> sorted = vars_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::InvalidInput, "duplicate ring variable");
  if (relation_.is_one()) throw Error(ErrorCode::InvalidInput, "ring relation must be nonconstant");
  for (const auto& v : relation_.support())
    if (!has_var(v)) throw Error(ErrorCode::UnknownVariable, "relation uses " + v);
}

bool MonomialQuotientRing::has_var(const std::string& v) const {
  return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
}

std::optional<std::string> MonomialQuotientRing::nilpotent_var() const {
  if (relation_.exponents().size() != 1) return std::nullopt;
  return relation_.exponents().begin()->first;
}

std::string MonomialQuotientRing::fresh(const std::string& base) const {
  std::string name = base + "'";
  while (has_var(name)) name += "'";
  return name;
}

std::string MonomialQuotientRing::str() const {
  std::string s = "k[";
  for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
  return s + "]/(" + relation_.str() + ")";
}

RingElem normal_form(const Poly& p, const MonomialQuotientRing& ring) {
  for (const auto& v : p.variables())
    if (!ring.has_var(v)) throw Error(ErrorCode::UnknownVariable, v + " is not a variable of " + ring.str());
  Poly r;
  for (const auto& [m, c] : p.terms())
    if (!ring.relation().divides(m)) r += Poly(m, c);
  return RingElem(ring, r);
}

RingElem::RingElem(MonomialQuotientRing ring, const Poly& p) : ring_(std::move(ring)) {
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.exponents())
      if (!ring_.has_var(v))
        throw Error(ErrorCode::UnknownVariable, v + " is not a variable of " + ring_.str());
    if (!ring_.relation().divides(m)) poly_ += Poly(m, c);
  }
}

void RingElem::check_same_ring(const RingElem& o) const {
  if (!(ring_ == o.ring_)) throw std::logic_error("ring elements from different rings");
}

RingElem RingElem::operator+(const RingElem& o) const {
  check_same_ring(o);
  return RingElem(ring_, poly_ + o.poly_);
}

RingElem RingElem::operator-(const RingElem& o) const {
  check_same_ring(o);
  return RingElem(ring_, poly_ - o.poly_);
}

RingElem RingElem::operator*(const RingElem& o) const {
  check_same_ring(o);
  return RingElem(ring_, poly_ * o.poly_);
}

RingElem RingElem::pow(int k) const {
  RingElem r(ring_, Poly(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

namespace {

bool term_is_nilpotent(const Monomial& m, const MonomialQuotientRing& ring) {
  for (const auto& v : ring.relation().support())
    if (m.degree(v) == 0) return false;
  return true;
}

}  // namespace

bool is_unit(const RingElem& f) {
  if (f.poly().constant_term() == 0) return false;
  for (const auto& [m, c] : f.poly().terms())
    if (!m.is_one() && !term_is_nilpotent(m, f.ring())) return false;
  return true;
}

RingElem invert(const RingElem& f) {
  if (!is_unit(f)) throw Error(ErrorCode::InvalidInput, "element " + f.str() + " is not a unit");
  Rational c = f.poly().constant_term();
  // f = c (1 + n) with n nilpotent; 1/f = c^{-1} sum_k (-n)^k.
  RingElem neg_n(f.ring(), -(f.poly() - Poly(c)).scaled(1 / c));
  RingElem sum(f.ring(), Poly(1));
  RingElem power = neg_n;
  while (!power.is_zero()) {
    sum = sum + power;
    power = power * neg_n;
  }
  return RingElem(f.ring(), sum.poly().scaled(1 / c));
}

bool is_nilpotent(const RingElem& f) {
  auto eps = f.ring().nilpotent_var();
  if (!eps) throw Error(ErrorCode::NotPtmRing, f.ring().str() + " is not a ptm ring");
  return f.poly().divisible_by(Monomial::var(*eps));
}

std::optional<UnitMonomial> unit_monomial_decompose(const RingElem& f) {
  auto eps = f.ring().nilpotent_var();
  if (!eps) throw Error(ErrorCode::NotPtmRing, f.ring().str() + " is not a ptm ring");
  auto leading = f.poly().at_zero(*eps).as_term();
  if (!leading) return std::nullopt;
  const Monomial& m = leading->second;
  auto quotient = f.poly().divide(m);
  if (!quotient) return std::nullopt;
  RingElem u(f.ring(), *quotient);
  if (!is_unit(u)) return std::nullopt;
  return UnitMonomial{u, m};
}

// ---------------------------------------------------------------- RingMap

RingMap::RingMap(MonomialQuotientRing source, MonomialQuotientRing target,
                 std::map<std::string, Poly> images)
    : source_(std::move(source)), target_(std::move(target)) {
  for (const auto& [v, p] : images)
    if (!source_.has_var(v)) throw Error(ErrorCode::UnknownVariable, v + " is not a source variable");
  for (const auto& v : source_.vars()) {
    auto it = images.find(v);
    Poly img = it == images.end() ? Poly::var(v) : it->second;
    images_.emplace(v, normal_form(img, target_).poly());
  }
}

RingMap RingMap::identity(const MonomialQuotientRing& ring) { return RingMap(ring, ring, {}); }

const Poly& RingMap::image(const std::string& var) const {
  auto it = images_.find(var);
  if (it == images_.end()) throw Error(ErrorCode::UnknownVariable, var + " is not a source variable");
  return it->second;
}

bool RingMap::well_defined() const {
  return apply_map(*this, Poly(source_.relation())).is_zero();
}

RingMap RingMap::then(const RingMap& next) const {
  if (!(target_ == next.source_)) throw std::logic_error("composing incompatible ring maps");
  std::map<std::string, Poly> imgs;
  for (const auto& [v, p] : images_) imgs.emplace(v, apply_map(next, p).poly());
  return RingMap(source_, next.target_, imgs);
}

RingElem apply_map(const RingMap& phi, const Poly& f) {
  for (const auto& v : f.variables())
    if (!phi.source().has_var(v)) throw Error(ErrorCode::UnknownVariable, v + " is not a source variable");
  return normal_form(f.substitute(phi.images()), phi.target());
}

RingElem apply_map(const RingMap& phi, const RingElem& f) {
  if (!(f.ring() == phi.source())) throw std::logic_error("element is not in the map's source ring");
  return apply_map(phi, f.poly());
}

}  // namespace thick
