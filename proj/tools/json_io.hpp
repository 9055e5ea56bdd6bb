// Canonical JSON documents for values. Field order is fixed; rationals are
// strings so decisions never pass through floating point.
#pragma once

#include <json.hpp>

#include "colombeau/expr.hpp"

namespace colombeau::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Valuation& v);
Json to_json(const GenNumber& x);
Json to_json(const GenQuaternion& x);
Json to_json(const Value& v);

}  // namespace colombeau::cli
