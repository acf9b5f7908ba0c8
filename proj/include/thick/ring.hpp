#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thick/poly.hpp"

namespace thick {

/// k[vars]/(relation) for a single nonconstant monomial `relation`.
///
/// Every chart the blowup constructions produce lives in this class: ptm
/// charts have relation eps^h, log-smooth charts eps^h * t1^(h d1) * ...
/// Normal forms are obtained by deleting terms divisible by the relation.
class MonomialQuotientRing {
 public:
  MonomialQuotientRing(std::vector<std::string> vars, Monomial relation);

  const std::vector<std::string>& vars() const { return vars_; }
  const Monomial& relation() const { return relation_; }
  bool has_var(const std::string& v) const;

  /// The single variable of the relation when the ring is a ptm model
  /// k[eps, t...]/(eps^h); nullopt otherwise.
  std::optional<std::string> nilpotent_var() const;
  bool is_ptm() const { return nilpotent_var().has_value(); }

  /// A variable name not yet used in this ring, derived from `base` by appending primes.
  std::string fresh(const std::string& base) const;

  bool operator==(const MonomialQuotientRing&) const = default;

  std::string str() const;

 private:
  std::vector<std::string> vars_;
  Monomial relation_;
};

class RingElem {
 public:
  RingElem(MonomialQuotientRing ring, const Poly& p);  // normalizes

  const MonomialQuotientRing& ring() const { return ring_; }
  const Poly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator*(const RingElem& o) const;
  RingElem pow(int k) const;

  std::string str() const { return poly_.str(); }

  bool operator==(const RingElem& o) const { return ring_ == o.ring_ && poly_ == o.poly_; }

 private:
  void check_same_ring(const RingElem& o) const;
  MonomialQuotientRing ring_;
  Poly poly_;
};

/// Deletes every term of `p` divisible by the relation.
/// Throws UnknownVariable when `p` mentions a variable outside the ring.
RingElem normal_form(const Poly& p, const MonomialQuotientRing& ring);

/// True iff f is a nonzero constant modulo the nilradical of the ring.
/// The nilradical of k[vars]/(m) is generated by the product of the variables
/// in m, so a term is nilpotent iff it involves every variable of m.
bool is_unit(const RingElem& f);

/// Inverse of a unit via the terminating geometric series in its nilpotent part.
RingElem invert(const RingElem& f);

/// Membership in the nilradical (eps) of a ptm ring; NotPtmRing otherwise.
bool is_nilpotent(const RingElem& f);

struct UnitMonomial {
  RingElem unit;
  Monomial monomial;
};

/// f = unit * monomial with the monomial free of the nilpotent variable, or nullopt.
std::optional<UnitMonomial> unit_monomial_decompose(const RingElem& f);

/// A ring homomorphism given by the images of the source generators.
class RingMap {
 public:
  RingMap(MonomialQuotientRing source, MonomialQuotientRing target,
          std::map<std::string, Poly> images);

  static RingMap identity(const MonomialQuotientRing& ring);

  const MonomialQuotientRing& source() const { return source_; }
  const MonomialQuotientRing& target() const { return target_; }
  /// Image of a source variable, as a normal-form polynomial in the target.
  const Poly& image(const std::string& var) const;
  const std::map<std::string, Poly>& images() const { return images_; }

  /// The relation of the source is sent to zero in the target.
  bool well_defined() const;

  /// (g . f): first this map, then `next`.
  RingMap then(const RingMap& next) const;

  bool operator==(const RingMap&) const = default;

 private:
  MonomialQuotientRing source_;
  MonomialQuotientRing target_;
  std::map<std::string, Poly> images_;
};

RingElem apply_map(const RingMap& phi, const RingElem& f);
RingElem apply_map(const RingMap& phi, const Poly& f);

}  // namespace thick
