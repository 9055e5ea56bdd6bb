#include "colombeau/puiseux.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "colombeau/error.hpp"

namespace colombeau {

namespace {

// Upper bound on lattice points in one power-series expansion.
constexpr unsigned long kMaxLatticeTerms = 1ul << 20;

struct RationalLess {
  bool operator()(const Rational& a, const Rational& b) const { return cmp(a, b) < 0; }
};

std::string format_term(const Coefficient& c, const Rational& q) {
  if (sgn(q) == 0) return to_string(c);
  const std::string e = "eps^(" + to_string(q) + ")";
  if (c.is_one()) return e;
  if (c == Coefficient(-1)) return "-" + e;
  return to_string(c) + "*" + e;
}

}  // namespace

std::string to_string(const ExtRational& q) { return q ? to_string(*q) : "inf"; }

PuiseuxSeries PuiseuxSeries::constant(const Coefficient& c) { return monomial(c, 0); }

PuiseuxSeries PuiseuxSeries::monomial(const Coefficient& c, const Rational& exponent) {
  PuiseuxSeries s;
  if (!c.is_zero()) s.terms_.push_back({exponent, c});
  return s;
}

PuiseuxSeries PuiseuxSeries::big_o(const Rational& order) {
  PuiseuxSeries s;
  s.order_ = order;
  return s;
}

PuiseuxSeries PuiseuxSeries::from_terms(std::vector<Term> terms, ExtRational order) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  PuiseuxSeries s;
  s.order_ = std::move(order);
  for (auto& t : terms) {
    if (s.order_ && t.exponent >= *s.order_) break;
    if (!s.terms_.empty() && s.terms_.back().exponent == t.exponent) {
      s.terms_.back().coeff += t.coeff;
      if (s.terms_.back().coeff.is_zero()) s.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      s.terms_.push_back(std::move(t));
    }
  }
  return s;
}

bool PuiseuxSeries::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_real(); });
}

ExtRational PuiseuxSeries::leading_exponent() const {
  if (!terms_.empty()) return terms_.front().exponent;
  return order_;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries s = *this;
  for (auto& t : s.terms_) t.coeff = -t.coeff;
  return s;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() + b.terms_.size());
  std::merge(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(), std::back_inserter(terms),
             [](const Term& x, const Term& y) { return x.exponent < y.exponent; });
  return PuiseuxSeries::from_terms(std::move(terms), ext_min(a.order_, b.order_));
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  const ExtRational order =
      ext_min(ext_add(a.order_, b.leading_exponent()), ext_add(b.order_, a.leading_exponent()));
  std::map<Rational, Coefficient, RationalLess> acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Rational e = x.exponent + y.exponent;
      if (order && e >= *order) break;
      acc[e] += x.coeff * y.coeff;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc) terms.push_back({e, std::move(c)});
  return PuiseuxSeries::from_terms(std::move(terms), order);
}

PuiseuxSeries PuiseuxSeries::scaled(const Coefficient& c) const {
  if (c.is_zero()) return {};
  PuiseuxSeries s = *this;
  for (auto& t : s.terms_) t.coeff *= c;
  return s;
}

PuiseuxSeries PuiseuxSeries::shifted(const Rational& q) const {
  PuiseuxSeries s = *this;
  for (auto& t : s.terms_) t.exponent += q;
  if (s.order_) *s.order_ += q;
  return s;
}

PuiseuxSeries PuiseuxSeries::conj() const {
  PuiseuxSeries s = *this;
  for (auto& t : s.terms_) t.coeff = t.coeff.conj();
  return s;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& order) const {
  return from_terms(terms_, ext_min(order_, order));
}

PuiseuxSeries PuiseuxSeries::normalized_power(const Rational& power, const Coefficient& lead_factor,
                                              const Rational& lead_exponent, const Rational& window) const {
  const Rational& q = terms_.front().exponent;
  const Coefficient& c = terms_.front().coeff;
  Rational rel = window;
  if (order_ && *order_ - q < rel) rel = *order_ - q;

  // Write s = c eps^q (1 + sum_{j>=1} a_j t^j) with t = eps^(1/D).
  Integer lattice = 1;
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    const Rational d = terms_[i].exponent - q;
    mpz_lcm(lattice.get_mpz_t(), lattice.get_mpz_t(), d.get_den_mpz_t());
  }
  const Rational scaled_rel = rel * Rational(lattice);
  const Integer count = sgn(scaled_rel) > 0 ? ceil(scaled_rel) : Integer(0);
  if (count > kMaxLatticeTerms)
    throw Error(ErrorKind::InvalidArgument, "series expansion needs more than 2^20 lattice terms");
  const auto k_max = count.get_ui();
  const Coefficient inv_c = c.inverse();
  std::vector<std::pair<unsigned long, Coefficient>> a;
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    const Rational idx = (terms_[i].exponent - q) * Rational(lattice);
    if (cmp(idx, Rational(count)) >= 0) break;
    a.emplace_back(mpz_class(idx).get_ui(), terms_[i].coeff * inv_c);
  }

  // Power-series power via k y_k = sum_j ((power + 1) j - k) a_j y_{k-j}.
  std::vector<Coefficient> y(k_max);
  if (k_max > 0) y[0] = Coefficient(1);
  const Rational p1 = power + 1;
  for (unsigned long k = 1; k < k_max; ++k) {
    Coefficient acc;
    for (const auto& [j, aj] : a) {
      if (j > k) break;
      if (y[k - j].is_zero()) continue;
      acc += Coefficient(Rational(p1 * j - k)) * aj * y[k - j];
    }
    y[k] = acc * Coefficient(Rational(Integer(1), Integer(k)));
  }

  std::vector<Term> out;
  for (unsigned long k = 0; k < k_max; ++k) {
    if (y[k].is_zero()) continue;
    Rational step(Integer(k), lattice);
    step.canonicalize();
    out.push_back({lead_exponent + step, lead_factor * y[k]});
  }
  return from_terms(std::move(out), Rational(lead_exponent + rel));
}

PuiseuxSeries PuiseuxSeries::reciprocal(const Rational& window) const {
  if (terms_.empty()) throw Error(ErrorKind::NotAUnit, "reciprocal of a series without terms");
  const Rational& q = terms_.front().exponent;
  const Coefficient inv = terms_.front().coeff.inverse();
  if (is_monomial()) return monomial(inv, -q);
  return normalized_power(Rational(-1), inv, -q, window);
}

PuiseuxSeries PuiseuxSeries::sqrt(const Rational& window) const {
  if (terms_.empty()) {
    if (!order_) return {};
    throw Error(ErrorKind::NotQPositive, "square root of a series that is zero only up to precision");
  }
  const Coefficient& c = terms_.front().coeff;
  if (!c.is_real() || sgn(c.re()) <= 0)
    throw Error(ErrorKind::NotQPositive, "leading coefficient " + to_string(c) + " is not positive");
  const Rational root = rational_sqrt(c.re());
  const Rational half = terms_.front().exponent / 2;
  if (is_monomial()) return monomial(root, half);
  return normalized_power(Rational(1, 2), root, half, window);
}

std::string to_string(const PuiseuxSeries& s) {
  std::string out;
  for (const auto& t : s.terms()) {
    if (out.empty()) {
      out = format_term(t.coeff, t.exponent);
    } else if (t.coeff.is_real() && sgn(t.coeff.re()) < 0) {
      out += " - " + format_term(-t.coeff, t.exponent);
    } else {
      out += " + " + format_term(t.coeff, t.exponent);
    }
  }
  if (s.order()) {
    const std::string o = "O(eps^(" + to_string(*s.order()) + "))";
    out = out.empty() ? o : out + " + " + o;
  }
  return out.empty() ? "0" : out;
}

}  // namespace colombeau
