#include "colombeau/index_set.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "colombeau/error.hpp"

namespace colombeau {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 22;

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

template <class Op>
IndexSet combine(const IndexSet& a, const IndexSet& b, Op op);

}  // namespace

IndexSet::IndexSet() = default;

IndexSet::IndexSet(std::uint32_t modulus, std::vector<bool> pattern, std::uint64_t threshold,
                   std::vector<std::uint64_t> ins, std::vector<std::uint64_t> outs)
    : modulus_(modulus),
      pattern_(std::move(pattern)),
      threshold_(threshold),
      ins_(std::move(ins)),
      outs_(std::move(outs)) {}

IndexSet IndexSet::canonical(std::vector<bool> pattern, const std::vector<bool>& prefix) {
  const std::size_t m = pattern.size();
  std::size_t period = m;
  for (std::size_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < m && ok; ++i) ok = pattern[i] == pattern[i % d];
    if (ok) {
      period = d;
      break;
    }
  }
  pattern.resize(period);
  std::vector<std::uint64_t> ins, outs;
  for (std::uint64_t n = 0; n < prefix.size(); ++n) {
    const bool periodic = pattern[n % period];
    if (prefix[n] && !periodic) ins.push_back(n);
    if (!prefix[n] && periodic) outs.push_back(n);
  }
  std::uint64_t threshold = 0;
  if (!ins.empty()) threshold = std::max(threshold, ins.back() + 1);
  if (!outs.empty()) threshold = std::max(threshold, outs.back() + 1);
  return IndexSet(static_cast<std::uint32_t>(period), std::move(pattern), threshold, std::move(ins),
                  std::move(outs));
}

IndexSet IndexSet::make_periodic(std::uint32_t modulus, const std::vector<std::uint32_t>& residues,
                                 std::uint64_t threshold, const std::vector<std::uint64_t>& ins,
                                 const std::vector<std::uint64_t>& outs) {
  if (modulus == 0 || modulus > kMaxModulus)
    throw Error(ErrorKind::InvalidArgument, "modulus must be in [1, 2^22]");
  std::vector<bool> pattern(modulus, false);
  for (auto r : residues) {
    if (r >= modulus)
      throw Error(ErrorKind::InvalidArgument,
                  "residue " + std::to_string(r) + " out of range for modulus " + std::to_string(modulus));
    pattern[r] = true;
  }
  std::vector<bool> prefix(threshold);
  for (std::uint64_t n = 0; n < threshold; ++n) prefix[n] = pattern[n % modulus];
  for (auto n : ins) {
    if (n >= threshold)
      throw Error(ErrorKind::InvalidArgument, "exception " + std::to_string(n) + " not below threshold");
    if (std::find(outs.begin(), outs.end(), n) != outs.end())
      throw Error(ErrorKind::InvalidArgument, "index " + std::to_string(n) + " is in both in and out");
    prefix[n] = true;
  }
  for (auto n : outs) {
    if (n >= threshold)
      throw Error(ErrorKind::InvalidArgument, "exception " + std::to_string(n) + " not below threshold");
    prefix[n] = false;
  }
  return canonical(std::move(pattern), prefix);
}

IndexSet IndexSet::all() { return make_periodic(1, {0}); }

IndexSet IndexSet::finite(const std::vector<std::uint64_t>& members) {
  std::uint64_t threshold = 0;
  for (auto n : members) threshold = std::max(threshold, n + 1);
  return make_periodic(1, {}, threshold, members, {});
}

bool IndexSet::contains(std::uint64_t n) const {
  if (n < threshold_) {
    if (std::binary_search(ins_.begin(), ins_.end(), n)) return true;
    if (std::binary_search(outs_.begin(), outs_.end(), n)) return false;
  }
  return pattern_[n % modulus_];
}

namespace {

template <class Op>
IndexSet combine(const IndexSet& a, const IndexSet& b, Op op) {
  const std::uint64_t l = std::lcm<std::uint64_t>(a.modulus(), b.modulus());
  if (l > kMaxModulus) throw Error(ErrorKind::InvalidArgument, "combined modulus exceeds 2^22");
  std::vector<std::uint32_t> residues;
  for (std::uint64_t i = 0; i < l; ++i) {
    // Evaluate the periodic parts only; exceptions live below the threshold.
    const std::uint64_t probe = i + l * ((std::max(a.threshold(), b.threshold()) + l - 1) / l + 1);
    if (op(a.contains(probe), b.contains(probe))) residues.push_back(static_cast<std::uint32_t>(i));
  }
  const std::uint64_t n_max = std::max(a.threshold(), b.threshold());
  std::vector<std::uint64_t> ins, outs;
  for (std::uint64_t n = 0; n < n_max; ++n) {
    const bool member = op(a.contains(n), b.contains(n));
    const bool periodic = std::binary_search(residues.begin(), residues.end(), static_cast<std::uint32_t>(n % l));
    if (member && !periodic) ins.push_back(n);
    if (!member && periodic) outs.push_back(n);
  }
  return IndexSet::make_periodic(static_cast<std::uint32_t>(l), residues, n_max, ins, outs);
}

}  // namespace

IndexSet IndexSet::complement() const {
  std::vector<bool> pattern(pattern_.size());
  for (std::size_t i = 0; i < pattern_.size(); ++i) pattern[i] = !pattern_[i];
  // Exceptions swap roles.
  return IndexSet(modulus_, std::move(pattern), threshold_, outs_, ins_);
}

IndexSet IndexSet::unite(const IndexSet& other) const {
  return combine(*this, other, [](bool x, bool y) { return x || y; });
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
  return combine(*this, other, [](bool x, bool y) { return x && y; });
}

IndexSet IndexSet::eventual() const { return IndexSet(modulus_, pattern_, 0, {}, {}); }

std::uint64_t IndexSet::min_element() const {
  for (std::uint64_t n = 0; n < threshold_ + modulus_; ++n)
    if (contains(n)) return n;
  throw Error(ErrorKind::InvalidArgument, "min_element of the empty set");
}

std::vector<std::uint32_t> IndexSet::residues() const {
  std::vector<std::uint32_t> r;
  for (std::uint32_t i = 0; i < modulus_; ++i)
    if (pattern_[i]) r.push_back(i);
  return r;
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  os << "chi{m=" << modulus_ << ";T=[";
  const auto t = residues();
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << "];N=" << threshold_;
  if (!ins_.empty()) os << ";in=[" << join(ins_) << "]";
  if (!outs_.empty()) os << ";out=[" << join(outs_) << "]";
  os << "}";
  return os.str();
}

namespace {

class SetScanner {
 public:
  explicit SetScanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  std::string key() {
    skip_ws();
    std::string k;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) k += s_[pos_++];
    if (k.empty()) fail("a field name (m, T, N, in, out)");
    return k;
  }
  std::uint64_t number() {
    skip_ws();
    std::uint64_t v = 0;
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
      if (v > (std::uint64_t{1} << 40)) fail("a smaller natural number");
    }
    if (pos_ == start) fail("a natural number");
    return v;
  }
  std::vector<std::uint64_t> list() {
    expect('[');
    std::vector<std::uint64_t> xs;
    if (accept(']')) return xs;
    do xs.push_back(number());
    while (accept(','));
    expect(']');
    return xs;
  }
  bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(pos_, {expected});
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

IndexSet IndexSet::parse(std::string_view text) {
  SetScanner sc(text);
  if (!sc.accept_word("chi")) sc.fail("'chi'");
  sc.expect('{');
  std::uint64_t m = 0, n = 0;
  std::vector<std::uint64_t> t, ins, outs;
  bool have_m = false, have_t = false;
  while (!sc.accept('}')) {
    const std::string k = sc.key();
    sc.expect('=');
    if (k == "m") {
      m = sc.number();
      have_m = true;
    } else if (k == "T") {
      t = sc.list();
      have_t = true;
    } else if (k == "N") {
      n = sc.number();
    } else if (k == "in") {
      ins = sc.list();
    } else if (k == "out") {
      outs = sc.list();
    } else {
      sc.fail("a field name (m, T, N, in, out)");
    }
    if (!sc.accept(';')) {
      sc.expect('}');
      break;
    }
  }
  if (!sc.at_end()) sc.fail("end of index set");
  if (!have_m || !have_t) throw ParseError(text.size(), {have_m ? "T=" : "m="});
  if (m == 0 || m > kMaxModulus) throw Error(ErrorKind::InvalidArgument, "modulus must be in [1, 2^22]");
  std::vector<std::uint32_t> residues;
  for (auto r : t) {
    if (r >= m) throw Error(ErrorKind::InvalidArgument, "residue " + std::to_string(r) + " out of range");
    residues.push_back(static_cast<std::uint32_t>(r));
  }
  return make_periodic(static_cast<std::uint32_t>(m), residues, n, ins, outs);
}

}  // namespace colombeau
