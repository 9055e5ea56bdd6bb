#include "colombeau/polyann.hpp"

#include <numeric>
#include <random>

#include "colombeau/error.hpp"
#include "colombeau/ideals.hpp"

namespace colombeau {

namespace {

void require_arity(const MultiPoly& f, const MultiPoly& g) {
  if (f.nvars() != g.nvars())
    throw Error(ErrorKind::ArityMismatch, "polynomials in " + std::to_string(f.nvars()) + " and " +
                                              std::to_string(g.nvars()) + " variables");
}

std::pair<GenNumber, GenNumber> common_field(GenNumber a, GenNumber b) {
  if (a.field() != b.field()) {
    a = a.to_field(Field::Complex);
    b = b.to_field(Field::Complex);
  }
  return {std::move(a), std::move(b)};
}

GenNumber sum(const GenNumber& a, const GenNumber& b) {
  auto [x, y] = common_field(a, b);
  return x + y;
}

GenNumber product(const GenNumber& a, const GenNumber& b) {
  auto [x, y] = common_field(a, b);
  return x * y;
}

}  // namespace

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), 0UL);
  const auto db = std::accumulate(b.begin(), b.end(), 0UL);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0) throw Error(ErrorKind::InvalidArgument, "a polynomial needs at least one variable");
}

MultiPoly MultiPoly::constant(std::size_t nvars, const GenNumber& c) { return monomial(nvars, c, Exponents(nvars)); }

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  Exponents e(nvars);
  if (index >= nvars) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  e[index] = 1;
  return monomial(nvars, 1, std::move(e));
}

MultiPoly MultiPoly::monomial(std::size_t nvars, const GenNumber& c, Exponents exponents) {
  MultiPoly out(nvars);
  if (exponents.size() != nvars) throw Error(ErrorKind::ArityMismatch, "exponent vector has the wrong length");
  out.add_term(exponents, c);
  return out;
}

void MultiPoly::add_term(const Exponents& e, const GenNumber& c) {
  auto it = terms_.find(e);
  GenNumber next = it == terms_.end() ? c : sum(it->second, c);
  if (next == GenNumber()) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(e, std::move(next));
  } else {
    it->second = std::move(next);
  }
}

bool MultiPoly::is_exact() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_exact()) return false;
  return true;
}

GenNumber MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GenNumber() : it->second;
}

std::vector<GenNumber> MultiPoly::coefficients() const {
  std::vector<GenNumber> out;
  for (const auto& [e, c] : terms_) out.push_back(c);
  return out;
}

MultiPoly padd(const MultiPoly& f, const MultiPoly& g) {
  require_arity(f, g);
  MultiPoly out = f;
  for (const auto& [e, c] : g.terms_) out.add_term(e, c);
  return out;
}

MultiPoly psub(const MultiPoly& f, const MultiPoly& g) { return padd(f, scale(g, -1)); }

MultiPoly pmul(const MultiPoly& f, const MultiPoly& g) {
  require_arity(f, g);
  MultiPoly out(f.nvars());
  for (const auto& [ea, ca] : f.terms_)
    for (const auto& [eb, cb] : g.terms_) {
      Exponents e(ea);
      for (std::size_t v = 0; v < e.size(); ++v) e[v] += eb[v];
      out.add_term(e, product(ca, cb));
    }
  return out;
}

MultiPoly scale(const MultiPoly& f, const GenNumber& r) {
  MultiPoly out(f.nvars());
  for (const auto& [e, c] : f.terms_) out.add_term(e, product(c, r));
  return out;
}

MultiPoly embed(const MultiPoly& f, std::size_t nvars) {
  if (nvars < f.nvars()) throw Error(ErrorKind::ArityMismatch, "cannot embed into fewer variables");
  MultiPoly out(nvars);
  for (const auto& [e, c] : f.terms_) {
    Exponents wide(e);
    wide.resize(nvars);
    out.terms_.emplace(std::move(wide), c);
  }
  return out;
}

std::vector<MultiPoly> coefficients_in_last(const MultiPoly& f) {
  if (f.nvars() < 2) throw Error(ErrorKind::ArityMismatch, "needs at least two variables");
  std::vector<MultiPoly> out;
  for (const auto& [e, c] : f.terms_) {
    const unsigned k = e.back();
    while (out.size() <= k) out.emplace_back(f.nvars() - 1);
    out[k].add_term(Exponents(e.begin(), e.end() - 1), c);
  }
  return out;
}

GenNumber ann_constant(const MultiPoly& f) {
  if (!f.is_exact()) throw Error(ErrorKind::InexactCoefficient, "polynomial has truncated coefficients");
  if (f.is_zero()) return 1;
  return annihilator_idempotent(FgIdeal(f.coefficients()));
}

bool verify_annihilator(const MultiPoly& f, const GenNumber& b, int trials, std::uint64_t seed) {
  if (!f.is_exact() || !b.is_exact()) throw Error(ErrorKind::InexactInput, "annihilator check needs exact inputs");
  bool coefficientwise = true;
  for (const auto& c : f.coefficients()) coefficientwise = coefficientwise && product(b, c) == GenNumber();

  std::mt19937_64 rng(seed);
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const auto n = f.nvars();
  const MultiPoly bp = MultiPoly::constant(n, b);
  bool sandwich = true;
  for (int t = 0; t < trials && sandwich; ++t) {
    MultiPoly h = MultiPoly::constant(n, 1);
    if (t > 0) {
      h = MultiPoly(n);
      for (long k = pick(1, 3); k > 0; --k) {
        Exponents e(n);
        for (auto& x : e) x = static_cast<unsigned>(pick(0, 2));
        std::vector<std::uint32_t> residues;
        const auto m = static_cast<std::uint32_t>(pick(1, 4));
        for (std::uint32_t r = 0; r < m; ++r)
          if (pick(0, 1)) residues.push_back(r);
        const GenNumber c = GenNumber(pick(-3, 3)) + alpha(Rational(Integer(pick(-2, 4)), Integer(2))) *
                                                         chi(IndexSet::make_periodic(m, residues));
        h = padd(h, MultiPoly::monomial(n, c, std::move(e)));
      }
    }
    sandwich = pmul(pmul(f, h), bp).is_zero();
  }
  if (trials > 0 && coefficientwise != sandwich)
    throw Error(ErrorKind::PreconditionFailed, "coefficientwise and sandwich annihilation disagree");
  return coefficientwise;
}

Obstruction operator_obstruction(const GenNumber& a, const MultiPoly& lf, const MultiPoly& target) {
  if (!a.is_exact() || a == GenNumber())
    throw Error(ErrorKind::PreconditionFailed, "the annihilating scalar must be exact and nonzero");
  if (!scale(lf, a).is_zero())
    throw Error(ErrorKind::PreconditionFailed, to_string(a) + " does not annihilate the operator symbol");
  return scale(target, a).is_zero() ? Obstruction::NoVerdict : Obstruction::Unsolvable;
}

std::string_view to_string(Obstruction o) { return o == Obstruction::Unsolvable ? "unsolvable" : "no_verdict"; }

std::string to_string(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    if (!out.empty()) out += ", ";
    out += "(" + to_string(c) + ")";
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      out += "*x" + std::to_string(v + 1);
      if (e[v] > 1) out += "^" + std::to_string(e[v]);
    }
  }
  return out;
}

}  // namespace colombeau
