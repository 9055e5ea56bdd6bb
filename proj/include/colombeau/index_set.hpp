/*
 * Index sets on the dyadic mesh eps_n = 2^-n.
 *
 * A subset S of the naturals stands for the set {2^-n : n in S} of mesh
 * points, extended piecewise-constantly to (0,1]. Only eventually periodic
 * sets with finitely many exceptions are represented:
 *
 *   n in S  <=>  n in in_            (n < threshold)
 *           <=>  n not in out_ and pattern[n mod m]   (otherwise)
 *
 * where exceptions are only stored below the threshold. The class is closed
 * under the Boolean operations and every value is kept in canonical form
 * (least period, least threshold, no redundant exceptions), so structural
 * equality is set equality.
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace colombeau {

class IndexSet {
 public:
  /// The empty set.
  IndexSet();

  /// Builds {n : n mod m in residues}, then patches membership below
  /// `threshold`: indices in `ins` are added, indices in `outs` removed.
  /// Throws on a residue >= m, an exception >= threshold, or ins/outs overlap.
  static IndexSet make_periodic(std::uint32_t modulus, const std::vector<std::uint32_t>& residues,
                                std::uint64_t threshold = 0, const std::vector<std::uint64_t>& ins = {},
                                const std::vector<std::uint64_t>& outs = {});

  static IndexSet all();
  static IndexSet none() { return IndexSet(); }
  static IndexSet finite(const std::vector<std::uint64_t>& members);
  static IndexSet evens() { return make_periodic(2, {0}); }
  static IndexSet odds() { return make_periodic(2, {1}); }

  /// Parses the textual form `chi{m=2; T=[0]; N=0; in=[]; out=[]}`; the
  /// N/in/out fields are optional.
  static IndexSet parse(std::string_view text);

  bool contains(std::uint64_t n) const;

  IndexSet complement() const;
  IndexSet unite(const IndexSet& other) const;
  IndexSet intersect(const IndexSet& other) const;
  IndexSet minus(const IndexSet& other) const { return intersect(other.complement()); }

  bool is_empty() const { return is_finite() && ins_.empty(); }
  bool is_all() const { return is_cofinite() && outs_.empty(); }
  bool is_finite() const { return modulus_ == 1 && !pattern_[0]; }
  bool is_cofinite() const { return modulus_ == 1 && pattern_[0]; }
  /// Both the set and its complement are infinite: the support of a
  /// nontrivial idempotent.
  bool is_sharp() const { return !is_finite() && !is_cofinite(); }
  bool subset_of(const IndexSet& other) const { return minus(other).is_empty(); }

  /// The purely periodic set that agrees with this one for all large n.
  IndexSet eventual() const;

  /// Least member; requires !is_empty().
  std::uint64_t min_element() const;

  std::uint32_t modulus() const noexcept { return modulus_; }
  std::vector<std::uint32_t> residues() const;
  std::uint64_t threshold() const noexcept { return threshold_; }
  const std::vector<std::uint64_t>& exceptions_in() const noexcept { return ins_; }
  const std::vector<std::uint64_t>& exceptions_out() const noexcept { return outs_; }

  /// `chi{m=2;T=[0];N=0}`, with `;in=[..]` / `;out=[..]` only when nonempty.
  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  IndexSet(std::uint32_t modulus, std::vector<bool> pattern, std::uint64_t threshold,
           std::vector<std::uint64_t> ins, std::vector<std::uint64_t> outs);

  // Canonical form from an arbitrary pattern and a membership table for
  // n < prefix.size().
  static IndexSet canonical(std::vector<bool> pattern, const std::vector<bool>& prefix);

  std::uint32_t modulus_ = 1;
  std::vector<bool> pattern_{false};
  std::uint64_t threshold_ = 0;
  std::vector<std::uint64_t> ins_;
  std::vector<std::uint64_t> outs_;
};

}  // namespace colombeau
