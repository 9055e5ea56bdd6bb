/*
 * Expression language for generalized numbers and quaternions.
 *
 * parse() builds a syntax tree; evaluate() folds it into a scalar or a
 * quaternion. The printers of GenNumber and GenQuaternion emit text in this
 * language, and parsing printed text gives back the same value. GRAMMAR.md
 * has the grammar.
 */
#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "colombeau/gen_number.hpp"
#include "colombeau/quaternion.hpp"

namespace colombeau {

inline constexpr std::string_view kGrammarVersion = "1";

struct Node {
  enum class Kind {
    Number,     // rational literal
    Alpha,      // eps^(q), eps, alpha(q)
    BigO,       // O(eps^(q))
    Imaginary,  // I
    Unit,       // i, j, k (name holds which)
    Chi,        // chi{...}
    Quat,       // quat(a; b; c; d)
    Piece,      // piece[chi{..}: e; ...]
    Call,       // abs, sqrt, conj, normsq
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    Pow,        // integer power
  };

  Kind kind;
  std::size_t offset = 0;
  Rational number;              // literal value, exponent, or power
  std::string name;             // unit or function name
  std::vector<IndexSet> regions;  // Chi: one set; Piece: one per child
  std::vector<Node> children;
};

/// Throws ParseError.
Node parse(std::string_view text);

using Value = std::variant<GenNumber, GenQuaternion>;

/// Division and sqrt use the given window.
Value evaluate(const Node& node, const Rational& window = kDefaultWindow);
inline Value evaluate(std::string_view text, const Rational& window = kDefaultWindow) {
  return evaluate(parse(text), window);
}

/// Throws InvalidArgument for a quaternion.
GenNumber as_scalar(const Value& v);
/// Real scalars become scalar quaternions.
GenQuaternion as_quaternion(const Value& v);

std::string to_string(const Value& v);

}  // namespace colombeau
