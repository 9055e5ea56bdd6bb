#include "colombeau/quaternion.hpp"

#include <algorithm>
#include <ostream>

#include "colombeau/error.hpp"

namespace colombeau {

GenQuaternion::GenQuaternion(GenNumber x0, GenNumber x1, GenNumber x2, GenNumber x3)
    : c_{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {
  for (auto& x : c_) {
    if (!x.is_real_valued())
      throw Error(ErrorKind::FieldMismatch, "quaternion components must be real generalized numbers");
    if (x.field() != Field::Real) x = x.to_field(Field::Real);
  }
}

bool GenQuaternion::is_exact() const {
  return std::all_of(c_.begin(), c_.end(), [](const GenNumber& x) { return x.is_exact(); });
}

bool GenQuaternion::is_scalar() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const GenNumber& x) { return x == GenNumber(0); });
}

GenQuaternion GenQuaternion::conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }

GenQuaternion GenQuaternion::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

GenQuaternion operator+(const GenQuaternion& a, const GenQuaternion& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

GenQuaternion operator-(const GenQuaternion& a, const GenQuaternion& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

GenQuaternion operator*(const GenQuaternion& a, const GenQuaternion& b) {
  return {
      a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
      a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
      a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
      a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
  };
}

GenQuaternion operator*(const GenNumber& s, const GenQuaternion& x) {
  return {s * x[0], s * x[1], s * x[2], s * x[3]};
}

GenNumber norm_sq(const GenQuaternion& x) { return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]; }

GenNumber norm(const GenQuaternion& x, const Rational& window) { return sqrt(norm_sq(x), window); }

QuatClassification qclassify(const GenQuaternion& x, const Rational& window) {
  const GenNumber n = norm_sq(x);
  auto scalar = classify(n, window);
  if (auto* u = std::get_if<Unit<GenNumber>>(&scalar)) return Unit<GenQuaternion>{u->inverse * x.conj()};
  if (auto* zd = std::get_if<ZeroDivisor>(&scalar)) return std::move(*zd);
  if (std::holds_alternative<Zero>(scalar)) return Zero{};
  return Indeterminate{};
}

GenQuaternion qinvert(const GenQuaternion& x, const Rational& window) {
  auto c = qclassify(x, window);
  if (auto* u = std::get_if<Unit<GenQuaternion>>(&c)) return std::move(u->inverse);
  throw Error(ErrorKind::NotAUnit, to_string(x) + " is not a unit");
}

Valuation qvaluation(const GenQuaternion& x) {
  Valuation best{std::nullopt, true};
  for (const auto& c : x.components()) {
    const Valuation v = valuation(c);
    if (ext_less(v.value, best.value)) {
      best = v;
    } else if (v.value == best.value) {
      best.exact = best.exact || v.exact;
    }
  }
  return best;
}

bool is_idempotent(const GenQuaternion& x) {
  if (!x.is_exact()) throw Error(ErrorKind::InexactElement, "idempotence needs an exact quaternion");
  return x * x == x;
}

IndexSet idempotent_decompose(const GenQuaternion& x) {
  if (!is_idempotent(x)) throw Error(ErrorKind::NotIdempotent, to_string(x) + " is not idempotent");
  if (!x.is_scalar())
    throw Error(ErrorKind::NonRealIdempotent, "idempotent with a nonzero vector part: " + to_string(x));
  IndexSet a;
  for (const auto& p : x[0].pieces()) {
    if (p.series == PuiseuxSeries::constant(1)) {
      a = a.unite(p.region);
    } else if (!p.series.is_exact_zero()) {
      throw Error(ErrorKind::NonRealIdempotent, "idempotent scalar part is not 0/1-valued: " + to_string(x));
    }
  }
  return a;
}

GenQuaternion unit_near(const GenQuaternion& x, const Rational& n) {
  if (!x.is_exact()) throw Error(ErrorKind::Indeterminate, "unit_near needs an exact quaternion");
  const IndexSet zeros = norm_sq(x).zero_set();
  if (zeros.is_empty()) return x;
  return x + GenQuaternion(chi(zeros) * alpha(n));
}

std::string to_string(const GenQuaternion& x) {
  return "quat(" + to_string(x[0]) + "; " + to_string(x[1]) + "; " + to_string(x[2]) + "; " + to_string(x[3]) + ")";
}

std::ostream& operator<<(std::ostream& os, const GenQuaternion& x) { return os << to_string(x); }

}  // namespace colombeau
