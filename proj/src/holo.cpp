#include "colombeau/holo.hpp"

#include "colombeau/error.hpp"

namespace colombeau {

namespace {

GenNumber complex(const GenNumber& x) { return x.to_field(Field::Complex); }

void require_exact(const GenNumber& x, std::string_view what) {
  if (!x.is_exact()) throw Error(ErrorKind::InexactInput, std::string(what) + " " + to_string(x) + " is truncated");
}

void require_bounded(const GenNumber& z0) {
  if (ext_less(valuation(z0).value, Rational(0)))
    throw Error(ErrorKind::OutOfDomain, "base point " + to_string(z0) + " is not bounded");
}

bool is_unit(const GenNumber& x) { return std::holds_alternative<Unit<GenNumber>>(classify(x)); }

// Regionwise difference of leading exponents; both arguments are units.
Rational leading_gap(const GenNumber& num, const GenNumber& den) {
  std::optional<Rational> best;
  for (const auto& pn : num.pieces())
    for (const auto& pd : den.pieces()) {
      if (pn.region.intersect(pd.region).is_empty()) continue;
      const Rational gap = *pn.series.leading_exponent() - *pd.series.leading_exponent();
      if (!best || gap < *best) best = gap;
    }
  return *best;
}

}  // namespace

GenPolynomial::GenPolynomial(std::vector<GenNumber> coeffs) {
  for (auto& c : coeffs) {
    require_exact(c, "coefficient");
    c = complex(c);
  }
  while (coeffs.size() > 1 && coeffs.back() == GenNumber()) coeffs.pop_back();
  if (coeffs.empty()) coeffs.push_back(complex(0));
  coeffs_ = std::move(coeffs);
}

GenNumber GenPolynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : complex(0); }

GenNumber eval(const GenPolynomial& f, const GenNumber& z) {
  const GenNumber w = complex(z);
  GenNumber acc = complex(0);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * w + *it;
  return acc;
}

GenPolynomial derivative(const GenPolynomial& f) {
  std::vector<GenNumber> out;
  for (std::size_t k = 1; k < f.coeffs().size(); ++k) out.push_back(f.coeffs()[k].scaled(static_cast<long>(k)));
  return GenPolynomial(std::move(out));
}

GenPolynomial taylor_shift(const GenPolynomial& f, const GenNumber& z0) {
  // Horner in the shifted variable: f(z0 + w) = a_0 + (z0 + w)(a_1 + ...).
  const GenNumber c = complex(z0);
  std::vector<GenNumber> acc{complex(0)};
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    std::vector<GenNumber> next(acc.size() + 1, complex(0));
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k] += c * acc[k];
      next[k + 1] += acc[k];
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return GenPolynomial(std::move(acc));
}

FgIdeal cf_ideal(const GenPolynomial& f, const GenNumber& z0) {
  const auto shifted = taylor_shift(f, z0);
  if (shifted.degree() == 0) return FgIdeal({complex(0)});
  return FgIdeal({shifted.coeffs().begin() + 1, shifted.coeffs().end()});
}

IdentityVerdict identity_check(const GenPolynomial& f, const GenNumber& z0, const std::vector<Rational>& verify_n) {
  require_exact(z0, "base point");
  require_bounded(z0);
  const auto ideal = cf_ideal(f, z0);
  if (is_dense(ideal)) return DenseVerdict{};
  Counterexample out{annihilator_idempotent(ideal), {}, {}};
  out.sequence = "x_n = " + to_string(z0) + " + (" + to_string(out.idempotent) + ")*alpha(n)";
  for (const auto& n : verify_n) {
    if (!verify_counterexample(f, z0, out.idempotent, n))
      throw Error(ErrorKind::PreconditionFailed, "counterexample failed to verify at n = " + to_string(n));
    out.verified_n.push_back(n);
  }
  return out;
}

bool verify_counterexample(const GenPolynomial& f, const GenNumber& z0, const GenNumber& e, const Rational& n) {
  require_exact(z0, "base point");
  require_exact(e, "idempotent");
  const GenNumber ec = complex(e);
  if (ec * ec != ec) throw Error(ErrorKind::NotIdempotent, to_string(e) + " is not idempotent");
  const GenNumber step = ec * alpha(n).to_field(Field::Complex);
  if (is_negligible(step) != Negligibility::No) return false;
  if (valuation(step) != Valuation{n, true}) return false;
  return is_negligible(eval(f, complex(z0) + step) - eval(f, z0)) == Negligibility::Yes;
}

QuadraticReport quadratic_unique_solution_check(const GenPolynomial& p, const GenNumber& z0) {
  if (p.degree() > 2) throw Error(ErrorKind::DegreeTooHigh, "expected a polynomial of degree at most 2");
  require_exact(z0, "base point");
  require_bounded(z0);
  const GenNumber a1 = p.coeff(1), a2 = p.coeff(2);
  if (!is_unit(a1)) return {QuadraticVerdict::Inconclusive, std::nullopt, std::nullopt};
  // Linear: a_1 (z - z0) = 0 forces z = z0.
  if (a2 == GenNumber()) return {QuadraticVerdict::UniqueInUnitBall, std::nullopt, std::nullopt};
  if (!is_unit(a2)) {
    const auto e = annihilator_idempotent(FgIdeal({a2}));
    return {QuadraticVerdict::IdempotentKillsQuadratic, std::nullopt, e};
  }
  const Valuation ratio{leading_gap(a2, a1), true};
  if (*ratio.value <= 0) return {QuadraticVerdict::Inconclusive, ratio, std::nullopt};
  // p(z) - p(z0) = a_1 (z - z0) [1 + a_2/a_1 (z + z0)], and the bracket is a
  // unit for bounded z since a_2/a_1 has positive valuation.
  const GenNumber q = a2 * invert(a1);
  if (!is_unit(complex(1) + q * complex(z0 + z0)))
    throw Error(ErrorKind::PreconditionFailed, "unit factor failed to certify");
  return {QuadraticVerdict::UniqueInUnitBall, ratio, std::nullopt};
}

std::string_view to_string(QuadraticVerdict v) {
  switch (v) {
    case QuadraticVerdict::UniqueInUnitBall: return "unique_in_unit_ball";
    case QuadraticVerdict::IdempotentKillsQuadratic: return "idempotent_kills_quadratic";
    default: return "inconclusive";
  }
}

}  // namespace colombeau
