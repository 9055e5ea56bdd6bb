#include "json_io.hpp"

namespace colombeau::cli {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Valuation& v) {
  Json j;
  j["valuation"] = to_string(v);
  j["exact"] = v.exact;
  j["display"] = display_norm(v);
  return j;
}

Json to_json(const GenNumber& x) {
  Json j;
  j["text"] = to_string(x);
  j["field"] = x.field() == Field::Real ? "real" : "complex";
  j["exact"] = x.is_exact();
  Json pieces = Json::array();
  for (const auto& p : x.pieces()) {
    Json terms = Json::array();
    for (const auto& t : p.series.terms())
      terms.push_back({{"exponent", to_string(t.exponent)}, {"re", to_string(t.coeff.re())}, {"im", to_string(t.coeff.im())}});
    pieces.push_back({{"region", p.region.to_string()}, {"terms", terms}, {"order", to_string(p.series.order())}});
  }
  j["pieces"] = pieces;
  return j;
}

Json to_json(const GenQuaternion& x) {
  Json j;
  j["text"] = to_string(x);
  Json comps = Json::array();
  for (const auto& c : x.components()) comps.push_back(to_json(c));
  j["quat"] = comps;
  return j;
}

Json to_json(const Value& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

}  // namespace colombeau::cli
