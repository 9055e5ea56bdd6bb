#include "oracle.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <map>
#include <stdexcept>

namespace colombeau::testkit {

namespace {

using MpReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<620>>;

const Piece& piece_at(const GenNumber& x, std::uint64_t n) {
  for (const auto& p : x.pieces())
    if (p.region.contains(n)) return p;
  throw std::logic_error("pieces do not cover index " + std::to_string(n));
}

std::size_t piece_index(const GenNumber& x, std::uint64_t n) {
  for (std::size_t i = 0; i < x.pieces().size(); ++i)
    if (x.pieces()[i].region.contains(n)) return i;
  throw std::logic_error("pieces do not cover index " + std::to_string(n));
}

MpReal to_mp(const Rational& q) { return MpReal(q.get_num().get_str()) / MpReal(q.get_den().get_str()); }

MpReal eval_mp(const PuiseuxSeries& s, std::uint64_t n) {
  MpReal sum = 0;
  for (const auto& t : s.terms()) {
    if (!t.coeff.is_real()) throw std::invalid_argument("mesh oracle needs real coefficients");
    const MpReal e = -to_mp(t.exponent) * MpReal(n);
    sum += to_mp(t.coeff.re()) * boost::multiprecision::pow(MpReal(2), e);
  }
  return sum;
}

}  // namespace

Rational eval_exact(const PuiseuxSeries& s, std::uint64_t n) {
  Rational sum = 0;
  for (const auto& t : s.terms()) {
    if (!t.coeff.is_real()) throw std::invalid_argument("exact evaluation needs real coefficients");
    const Rational e = t.exponent * Rational(Integer(n));
    if (e.get_den() != 1) throw std::invalid_argument("n*q is not an integer");
    const long k = e.get_num().get_si();
    Rational power(1);
    if (k >= 0) {
      mpz_mul_2exp(power.get_den_mpz_t(), power.get_den_mpz_t(), static_cast<mp_bitcnt_t>(k));
    } else {
      mpz_mul_2exp(power.get_num_mpz_t(), power.get_num_mpz_t(), static_cast<mp_bitcnt_t>(-k));
    }
    sum += t.coeff.re() * power;
  }
  return sum;
}

Rational eval_exact(const GenNumber& x, std::uint64_t n) { return eval_exact(piece_at(x, n).series, n); }

std::optional<double> mesh_slope(const std::vector<GenNumber>& components, std::uint64_t lo, std::uint64_t hi) {
  std::map<std::vector<std::size_t>, std::vector<std::uint64_t>> regions;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    std::vector<std::size_t> signature;
    for (const auto& c : components) signature.push_back(piece_index(c, n));
    regions[signature].push_back(n);
  }
  std::optional<double> best;
  for (const auto& [signature, ns] : regions) {
    if (ns.size() < 2) throw std::invalid_argument("region has fewer than two sampled indices");
    const std::uint64_t na = ns[ns.size() - 2];
    const std::uint64_t nb = ns.back();
    auto norm_sq = [&](std::uint64_t n) {
      MpReal acc = 0;
      for (const auto& c : components) {
        const MpReal v = eval_mp(piece_at(c, n).series, n);
        acc += v * v;
      }
      return acc;
    };
    const MpReal a = norm_sq(na);
    const MpReal b = norm_sq(nb);
    if (a == 0 && b == 0) continue;
    if (a == 0 || b == 0) throw std::runtime_error("isolated zero of a nonzero representative");
    const MpReal slope = (log(a) - log(b)) / (MpReal(2) * MpReal(nb - na) * log(MpReal(2)));
    const double s = slope.convert_to<double>();
    if (!best || s < *best) best = s;
  }
  return best;
}

std::vector<IndexSet> atoms(const std::vector<GenNumber>& xs) {
  std::vector<IndexSet> out{IndexSet::all()};
  for (const auto& x : xs) {
    std::vector<IndexSet> next;
    for (const auto& a : out)
      for (const auto& p : x.pieces()) {
        auto both = a.intersect(p.region);
        if (!both.is_empty()) next.push_back(std::move(both));
      }
    out = std::move(next);
  }
  return out;
}

bool vanishes_on(const GenNumber& x, const IndexSet& s, std::uint64_t lo, std::uint64_t hi) {
  bool sampled = false;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (!s.contains(n)) continue;
    sampled = true;
    MpReal re = 0, im = 0;
    for (const auto& t : piece_at(x, n).series.terms()) {
      const MpReal scale = boost::multiprecision::pow(MpReal(2), -to_mp(t.exponent) * MpReal(n));
      re += to_mp(t.coeff.re()) * scale;
      im += to_mp(t.coeff.im()) * scale;
    }
    if (re != 0 || im != 0) return false;
  }
  if (!sampled) throw std::invalid_argument("index set misses the sampling range");
  return true;
}

}  // namespace colombeau::testkit
