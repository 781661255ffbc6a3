#include "unimodal/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

namespace unimodal {

Permutation::Permutation(std::vector<int> one_line) : images_(std::move(one_line)) {
  const int n = degree();
  if (n < 1) throw NotABijectionError("a permutation needs degree >= 1");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : images_) {
    if (v < 1 || v > n)
      throw IndexOutOfRangeError("value " + std::to_string(v) +
                                 " outside 1.." + std::to_string(n));
    if (seen[static_cast<size_t>(v) - 1])
      throw NotABijectionError("value " + std::to_string(v) +
                               " appears more than once");
    seen[static_cast<size_t>(v) - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= degree(); ++i) inv[static_cast<size_t>((*this)(i)) - 1] = i;
  return Permutation(std::move(inv));
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  return a.images_ <=> b.images_;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatchError("compose needs equal degrees, got " +
                              std::to_string(p.degree()) + " and " +
                              std::to_string(q.degree()));
  std::vector<int> v(static_cast<size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) v[static_cast<size_t>(i) - 1] = p(q(i));
  return Permutation(std::move(v));
}

std::vector<OrientedCycle> cycles(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> used(static_cast<size_t>(n), 0);
  std::vector<OrientedCycle> out;
  for (int start = 1; start <= n; ++start) {
    if (used[static_cast<size_t>(start) - 1]) continue;
    OrientedCycle c;
    int x = start;
    do {
      used[static_cast<size_t>(x) - 1] = 1;
      c.support.push_back(x);
      x = p(x);
    } while (x != start);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> cycle_lengths(const Permutation& p) {
  std::vector<int> lens;
  for (const auto& c : cycles(p)) lens.push_back(c.length());
  std::sort(lens.begin(), lens.end());
  return lens;
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ','))
    ++i;
}

std::optional<long> read_int(const std::string& s, size_t& i) {
  skip_ws(s, i);
  size_t j = i;
  while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
  if (j == i) return std::nullopt;
  long v = std::stol(s.substr(i, j - i));
  i = j;
  return v;
}

Permutation parse_cycles(const std::string& s, size_t i, std::optional<long> declared_n) {
  std::vector<std::vector<int>> groups;
  long max_elem = 0;
  skip_ws(s, i);
  while (i < s.size() && s[i] == '(') {
    ++i;
    std::vector<int> group;
    while (true) {
      auto v = read_int(s, i);
      if (!v) break;
      if (*v < 1) throw IndexOutOfRangeError("cycle elements must be >= 1");
      group.push_back(static_cast<int>(*v));
      max_elem = std::max(max_elem, *v);
    }
    skip_ws(s, i);
    if (i >= s.size() || s[i] != ')')
      throw MalformedTextError("unterminated cycle in \"" + s + "\"");
    ++i;
    if (group.empty()) throw MalformedTextError("empty cycle in \"" + s + "\"");
    groups.push_back(std::move(group));
    skip_ws(s, i);
  }
  if (groups.empty()) throw MalformedTextError("no cycles found in \"" + s + "\"");
  if (i != s.size()) throw MalformedTextError("trailing text in \"" + s + "\"");

  long n = declared_n ? *declared_n : max_elem;
  if (n < 1) throw MalformedTextError("degree must be >= 1");
  if (max_elem > n)
    throw IndexOutOfRangeError("cycle element " + std::to_string(max_elem) +
                               " exceeds declared degree " + std::to_string(n));
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<char> seen(static_cast<size_t>(n), 0);
  long listed = 0;
  for (const auto& g : groups) {
    for (size_t k = 0; k < g.size(); ++k) {
      int from = g[k];
      int to = g[(k + 1) % g.size()];
      if (seen[static_cast<size_t>(from) - 1])
        throw NotABijectionError("element " + std::to_string(from) +
                                 " appears in two cycles");
      seen[static_cast<size_t>(from) - 1] = 1;
      img[static_cast<size_t>(from) - 1] = to;
      ++listed;
    }
  }
  if (!declared_n && listed != n)
    throw NotABijectionError(
        "cycle text omits elements; list fixed points or use an \"n=...;\" prefix");
  return Permutation(std::move(img));
}

}  // namespace

Permutation parse_permutation(const std::string& text) {
  size_t i = 0;
  skip_ws(text, i);
  std::optional<long> declared_n;
  if (i < text.size() && text[i] == 'n') {
    ++i;
    skip_ws(text, i);
    if (i >= text.size() || text[i] != '=')
      throw MalformedTextError("expected '=' after 'n' in \"" + text + "\"");
    ++i;
    auto v = read_int(text, i);
    if (!v) throw MalformedTextError("expected degree after \"n=\"");
    declared_n = *v;
    skip_ws(text, i);
    if (i >= text.size() || text[i] != ';')
      throw MalformedTextError("expected ';' after \"n=...\"");
    ++i;
    skip_ws(text, i);
  }
  if (i >= text.size()) throw MalformedTextError("empty permutation text");

  if (text[i] == '(') return parse_cycles(text, i, declared_n);

  bool bracketed = text[i] == '[';
  if (bracketed) ++i;
  std::vector<int> vals;
  while (true) {
    auto v = read_int(text, i);
    if (!v) break;
    if (*v < 1) throw IndexOutOfRangeError("one-line values must be >= 1");
    vals.push_back(static_cast<int>(*v));
  }
  skip_ws(text, i);
  if (bracketed) {
    if (i >= text.size() || text[i] != ']')
      throw MalformedTextError("expected ']' in \"" + text + "\"");
    ++i;
    skip_ws(text, i);
  }
  if (i != text.size()) throw MalformedTextError("trailing text in \"" + text + "\"");
  if (vals.empty()) throw MalformedTextError("no values in \"" + text + "\"");
  if (declared_n && *declared_n != static_cast<long>(vals.size()))
    throw MalformedTextError("declared degree disagrees with value count");
  return Permutation(std::move(vals));
}

std::string format_one_line(const Permutation& p) {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= p.degree(); ++i) {
    if (i > 1) os << ',';
    os << p(i);
  }
  os << ']';
  return os.str();
}

std::string format_cycles(const Permutation& p) {
  std::ostringstream os;
  for (const auto& c : cycles(p)) {
    os << '(';
    for (size_t k = 0; k < c.support.size(); ++k) {
      if (k) os << ' ';
      os << c.support[k];
    }
    os << ')';
  }
  return os.str();
}

namespace {

// Order-isomorphism of p restricted to idx (ascending positions) with sigma.
bool matches_at(const Permutation& p, const Permutation& sigma,
                const std::vector<int>& idx) {
  const int k = sigma.degree();
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b) {
      bool host = p(idx[static_cast<size_t>(a) - 1]) < p(idx[static_cast<size_t>(b) - 1]);
      bool pat = sigma(a) < sigma(b);
      if (host != pat) return false;
    }
  return true;
}

}  // namespace

bool contains_pattern(const Permutation& p, const Permutation& sigma) {
  const int n = p.degree();
  const int k = sigma.degree();
  if (k > n)
    throw PatternLargerThanHostError("pattern degree " + std::to_string(k) +
                                     " exceeds host degree " + std::to_string(n));
  // Lexicographic walk over all k-subsets of 1..n.
  std::vector<int> idx(static_cast<size_t>(k));
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    if (matches_at(p, sigma, idx)) return true;
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - (k - 1 - pos)) --pos;
    if (pos < 0) return false;
    ++idx[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < k; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j) - 1] + 1;
  }
}

bool avoids_pattern(const Permutation& p, const Permutation& sigma) {
  return !contains_pattern(p, sigma);
}

std::vector<Permutation> enumerate_avoiding(int n,
                                            const std::vector<Permutation>& patterns) {
  if (n < 1) throw DegreeTooLargeForFactorialScanError("degree must be >= 1");
  if (n > 10)
    throw DegreeTooLargeForFactorialScanError(
        "factorial scan guarded at n <= 10, got n = " + std::to_string(n));
  std::vector<int> line(static_cast<size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation p(line);
    bool ok = true;
    for (const auto& sigma : patterns) {
      if (sigma.degree() > n) continue;  // cannot occur
      if (contains_pattern(p, sigma)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(std::move(p));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

namespace {

Permutation iota_perm(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i) - 1] = n + 1 - i;
  return Permutation(std::move(v));
}

}  // namespace

D4Op d4_op_from_name(std::string_view name) {
  if (name == "id" || name == "identity") return D4Op::Identity;
  if (name == "inverse") return D4Op::Inverse;
  if (name == "reverse") return D4Op::Reverse;
  if (name == "complement") return D4Op::Complement;
  if (name == "conjugate" || name == "conjugate-by-iota") return D4Op::Conjugate;
  if (name == "reverse-inverse") return D4Op::ReverseInverse;
  if (name == "complement-inverse") return D4Op::ComplementInverse;
  if (name == "conjugate-inverse") return D4Op::ConjugateInverse;
  throw UnknownSymmetryNameError("unknown symmetry name \"" + std::string(name) + "\"");
}

std::string_view d4_op_name(D4Op op) {
  switch (op) {
    case D4Op::Identity: return "id";
    case D4Op::Inverse: return "inverse";
    case D4Op::Reverse: return "reverse";
    case D4Op::Complement: return "complement";
    case D4Op::Conjugate: return "conjugate";
    case D4Op::ReverseInverse: return "reverse-inverse";
    case D4Op::ComplementInverse: return "complement-inverse";
    case D4Op::ConjugateInverse: return "conjugate-inverse";
  }
  throw UnknownSymmetryNameError("bad D4Op value");
}

const std::vector<D4Op>& d4_all_ops() {
  static const std::vector<D4Op> ops = {
      D4Op::Identity,       D4Op::Inverse,           D4Op::Reverse,
      D4Op::Complement,     D4Op::Conjugate,         D4Op::ReverseInverse,
      D4Op::ComplementInverse, D4Op::ConjugateInverse};
  return ops;
}

const std::vector<D4Op>& d4_cyclic_ops() {
  static const std::vector<D4Op> ops = {D4Op::Identity, D4Op::Inverse,
                                        D4Op::Conjugate, D4Op::ConjugateInverse};
  return ops;
}

Permutation d4_apply(D4Op op, const Permutation& p) {
  const Permutation iota = iota_perm(p.degree());
  switch (op) {
    case D4Op::Identity: return p;
    case D4Op::Inverse: return p.inverse();
    case D4Op::Reverse: return compose(p, iota);
    case D4Op::Complement: return compose(iota, p);
    case D4Op::Conjugate: return compose(iota, compose(p, iota));
    case D4Op::ReverseInverse: return compose(p, iota).inverse();
    case D4Op::ComplementInverse: return compose(iota, p).inverse();
    case D4Op::ConjugateInverse: return compose(iota, compose(p, iota)).inverse();
  }
  throw UnknownSymmetryNameError("bad D4Op value");
}

}  // namespace unimodal
