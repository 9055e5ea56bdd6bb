#include "colombeau/gen_number.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "colombeau/error.hpp"

namespace colombeau {

namespace {

void require_same_field(const GenNumber& a, const GenNumber& b) {
  if (a.field() != b.field())
    throw Error(ErrorKind::FieldMismatch, "operands live over different scalar fields");
}

}  // namespace

GenNumber::GenNumber() : pieces_{{IndexSet::all(), PuiseuxSeries()}} {}

GenNumber::GenNumber(long n) : GenNumber(constant(Coefficient(n))) {}

GenNumber::GenNumber(Field field, std::vector<Piece> pieces) : field_(field), pieces_(std::move(pieces)) {}

GenNumber GenNumber::canonical(Field field, std::vector<Piece> pieces) {
  std::vector<Piece> out;
  for (auto& p : pieces) {
    IndexSet region = p.region.eventual();
    if (region.is_empty()) continue;
    auto same = std::find_if(out.begin(), out.end(), [&](const Piece& q) { return q.series == p.series; });
    if (same != out.end()) {
      same->region = same->region.unite(region);
    } else {
      out.push_back({std::move(region), std::move(p.series)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Piece& a, const Piece& b) { return a.region.min_element() < b.region.min_element(); });
  return GenNumber(field, std::move(out));
}

GenNumber GenNumber::constant(const Coefficient& c) {
  return from_series(PuiseuxSeries::constant(c), c.is_real() ? Field::Real : Field::Complex);
}

GenNumber GenNumber::from_series(PuiseuxSeries s, Field field) {
  if (field == Field::Real && !s.is_real())
    throw Error(ErrorKind::FieldMismatch, "complex coefficient in a real generalized number");
  return GenNumber(field, {{IndexSet::all(), std::move(s)}});
}

GenNumber GenNumber::from_pieces(std::vector<Piece> pieces, Field field) {
  if (pieces.empty()) throw Error(ErrorKind::InvalidArgument, "a generalized number needs at least one piece");
  IndexSet covered;
  for (const auto& p : pieces) {
    if (!covered.intersect(p.region).is_empty())
      throw Error(ErrorKind::InvalidArgument, "piece regions overlap at " + p.region.to_string());
    covered = covered.unite(p.region);
    if (field == Field::Real && !p.series.is_real())
      throw Error(ErrorKind::FieldMismatch, "complex coefficient in a real generalized number");
  }
  if (!covered.is_all())
    throw Error(ErrorKind::InvalidArgument, "piece regions do not cover every index");
  return canonical(field, std::move(pieces));
}

GenNumber GenNumber::big_o(const Rational& order) { return from_series(PuiseuxSeries::big_o(order)); }

bool GenNumber::is_exact() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const Piece& p) { return p.series.is_exact(); });
}

bool GenNumber::is_real_valued() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const Piece& p) { return p.series.is_real(); });
}

GenNumber GenNumber::to_field(Field field) const {
  if (field == Field::Real && !is_real_valued())
    throw Error(ErrorKind::FieldMismatch, "cannot view a non-real generalized number over the reals");
  return GenNumber(field, pieces_);
}

template <class Op>
GenNumber GenNumber::zip(const GenNumber& a, const GenNumber& b, Op op) {
  require_same_field(a, b);
  std::vector<Piece> out;
  for (const auto& pa : a.pieces_) {
    for (const auto& pb : b.pieces_) {
      IndexSet region = pa.region.intersect(pb.region);
      if (region.is_empty()) continue;
      out.push_back({std::move(region), op(pa.series, pb.series)});
    }
  }
  return canonical(a.field_, std::move(out));
}

template <class Op>
GenNumber GenNumber::map(Op op) const {
  std::vector<Piece> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) out.push_back({p.region, op(p.series)});
  return canonical(field_, std::move(out));
}

GenNumber GenNumber::conj() const {
  return map([](const PuiseuxSeries& s) { return s.conj(); });
}

GenNumber GenNumber::scaled(const Coefficient& c) const {
  if (field_ == Field::Real && !c.is_real())
    throw Error(ErrorKind::FieldMismatch, "complex scalar applied to a real generalized number");
  return map([&](const PuiseuxSeries& s) { return s.scaled(c); });
}

IndexSet GenNumber::support() const {
  IndexSet s;
  for (const auto& p : pieces_)
    if (!p.series.is_exact_zero()) s = s.unite(p.region);
  return s;
}

GenNumber GenNumber::operator-() const {
  return map([](const PuiseuxSeries& s) { return -s; });
}

GenNumber operator+(const GenNumber& a, const GenNumber& b) {
  return GenNumber::zip(a, b, [](const PuiseuxSeries& x, const PuiseuxSeries& y) { return x + y; });
}

GenNumber operator-(const GenNumber& a, const GenNumber& b) {
  return GenNumber::zip(a, b, [](const PuiseuxSeries& x, const PuiseuxSeries& y) { return x - y; });
}

GenNumber operator*(const GenNumber& a, const GenNumber& b) {
  return GenNumber::zip(a, b, [](const PuiseuxSeries& x, const PuiseuxSeries& y) { return x * y; });
}

GenNumber alpha(const Rational& r) { return GenNumber::from_series(PuiseuxSeries::monomial(1, r)); }

GenNumber chi(const IndexSet& s, Field field) {
  return GenNumber::from_pieces({{s, PuiseuxSeries::constant(1)}, {s.complement(), PuiseuxSeries()}}, field);
}

std::string to_string(const Valuation& v) { return to_string(v.value); }

std::string display_norm(const Valuation& v) {
  if (!v.value) return "0";
  const double e = std::exp(-v.value->get_d());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", e);
  return buf;
}

Negligibility is_negligible(const GenNumber& x) {
  bool inexact = false;
  for (const auto& p : x.pieces()) {
    if (p.series.has_terms()) return Negligibility::No;
    inexact = inexact || !p.series.is_exact();
  }
  return inexact ? Negligibility::ZeroUpToPrecision : Negligibility::Yes;
}

Valuation valuation(const GenNumber& x) {
  ExtRational lead, order;
  for (const auto& p : x.pieces()) {
    if (p.series.has_terms()) {
      lead = ext_min(lead, p.series.leading_exponent());
    } else if (!p.series.is_exact()) {
      order = ext_min(order, p.series.order());
    }
  }
  // A termless region bounds V from below by its order only.
  return {ext_min(lead, order), !ext_less(order, lead)};
}

Equality equals(const GenNumber& x, const GenNumber& y) {
  switch (is_negligible(x - y)) {
    case Negligibility::Yes: return Equality::Equal;
    case Negligibility::No: return Equality::NotEqual;
    case Negligibility::ZeroUpToPrecision: break;
  }
  return Equality::EqualUpToPrecision;
}

Classification classify(const GenNumber& x, const Rational& window) {
  bool any_terms = false;
  for (const auto& p : x.pieces()) {
    if (!p.series.has_terms() && !p.series.is_exact()) return Indeterminate{};
    any_terms = any_terms || p.series.has_terms();
  }
  if (!any_terms) return Zero{};
  const IndexSet zeros = x.zero_set();
  if (!zeros.is_empty()) return ZeroDivisor{chi(zeros, x.field())};
  return Unit<GenNumber>{invert(x, window)};
}

GenNumber invert(const GenNumber& x, const Rational& window) {
  if (sgn(window) <= 0) throw Error(ErrorKind::InvalidArgument, "window must be positive");
  std::vector<Piece> out;
  for (const auto& p : x.pieces()) {
    if (!p.series.has_terms())
      throw Error(ErrorKind::NotAUnit, to_string(x) + " vanishes on " + p.region.to_string());
    out.push_back({p.region, p.series.reciprocal(window)});
  }
  return GenNumber::from_pieces(std::move(out), x.field());
}

namespace {

void require_real(const GenNumber& x) {
  if (x.field() != Field::Real)
    throw Error(ErrorKind::ComplexOrderUndefined, "the order is only defined over the reals");
}

}  // namespace

Tristate is_qpositive(const GenNumber& x) {
  require_real(x);
  bool indeterminate = false;
  for (const auto& p : x.pieces()) {
    if (p.series.has_terms()) {
      if (sgn(p.series.leading_coefficient().re()) < 0) return Tristate::No;
    } else if (!p.series.is_exact()) {
      indeterminate = true;
    }
  }
  return indeterminate ? Tristate::Indeterminate : Tristate::Yes;
}

GenNumber abs(const GenNumber& x) {
  require_real(x);
  std::vector<Piece> out;
  for (const auto& p : x.pieces()) {
    if (!p.series.has_terms() && !p.series.is_exact())
      throw Error(ErrorKind::IndeterminateSign, "sign undetermined on " + p.region.to_string());
    const bool negative = p.series.has_terms() && sgn(p.series.leading_coefficient().re()) < 0;
    out.push_back({p.region, negative ? -p.series : p.series});
  }
  return GenNumber::from_pieces(std::move(out), Field::Real);
}

GenNumber abs_sq(const GenNumber& x) { return x * x.conj(); }

GenNumber sqrt(const GenNumber& x, const Rational& window) {
  if (sgn(window) <= 0) throw Error(ErrorKind::InvalidArgument, "window must be positive");
  if (is_qpositive(x) != Tristate::Yes)
    throw Error(ErrorKind::NotQPositive, to_string(x) + " is not q-positive");
  std::vector<Piece> out;
  for (const auto& p : x.pieces()) {
    if (!p.series.has_terms()) {
      out.push_back(p);
      continue;
    }
    // Relative window W + max(0, -q) gives both relative precision W and
    // valuation(sqrt(x)^2 - x) >= W.
    const Rational& q = p.series.terms().front().exponent;
    const Rational rel = sgn(q) < 0 ? Rational(window - q) : window;
    out.push_back({p.region, p.series.sqrt(rel)});
  }
  return GenNumber::from_pieces(std::move(out), Field::Real);
}

GenNumber unit_near(const GenNumber& x, const Rational& n) {
  if (!x.is_exact()) throw Error(ErrorKind::Indeterminate, "unit_near needs an exact element");
  const IndexSet zeros = x.zero_set();
  if (zeros.is_empty()) return x;
  return x + chi(zeros, x.field()) * alpha(n).to_field(x.field());
}

std::string to_string(const GenNumber& x) {
  const auto& pieces = x.pieces();
  if (pieces.size() == 1) return to_string(pieces.front().series);
  std::string out;
  for (const auto& p : pieces) {
    if (p.series.is_exact_zero()) continue;
    if (!out.empty()) out += " + ";
    out += p.region.to_string();
    if (p.series != PuiseuxSeries::constant(1)) out += "*(" + to_string(p.series) + ")";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GenNumber& x) { return os << to_string(x); }

}  // namespace colombeau
