#include "unimodal/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>

namespace unimodal {

namespace {

int classify_term(int x, int y, int m1, int m2) {
  const bool right1 = x > m1;
  const bool high2 = y >= m2;
  if (right1 && high2) return 1;
  if (!right1 && !high2) return 2;
  if (right1) return 3;
  return 4;
}

}  // namespace

SignSequence sign_sequence(const UnimodalPerm& d1, const UnimodalPerm& d2, int a,
                           int b) {
  const int n1 = d1.degree();
  const int n2 = d2.degree();
  if (a < 1 || a > n1)
    throw IndexOutOfRangeError("element " + std::to_string(a) + " outside 1.." +
                               std::to_string(n1));
  if (b < 1 || b > n2)
    throw IndexOutOfRangeError("element " + std::to_string(b) + " outside 1.." +
                               std::to_string(n2));
  const int m1 = d1.max_pos();
  const int m2 = d2.max_pos();
  const long cap = static_cast<long>(n1) * n2 + n1 + n2;

  SignSequence s;
  int x = a;
  int y = b;
  for (long step = 0; step <= cap; ++step) {
    const int term = classify_term(x, y, m1, m2);
    s.terms.push_back(term);
    if (term == 1 || term == 3) ++s.parity_count;
    if (term >= 3) return s;
    x = d1(x);
    y = d2(y);
    if (x == a && y == b) {
      // Joint iteration is a bijection on pairs, so the orbit closes at its
      // start; the comparison carries no finite verdict.
      s.periodic = true;
      s.period = static_cast<int>(s.terms.size());
      s.preperiod = 0;
      s.parity_count = 0;
      return s;
    }
  }
  throw InternalOrderInconsistencyError("sign sequence exceeded the iteration cap");
}

Permutation oplus(const Permutation& p1, const Permutation& p2,
                  const std::vector<int>& J) {
  const int n1 = p1.degree();
  const int n2 = p2.degree();
  const int n = n1 + n2;
  if (static_cast<int>(J.size()) != n1)
    throw BadSubsetSizeError("subset size " + std::to_string(J.size()) +
                             " != first degree " + std::to_string(n1));
  std::vector<int> inside = J;
  std::sort(inside.begin(), inside.end());
  std::vector<char> member(static_cast<size_t>(n) + 1, 0);
  for (int v : inside) {
    if (v < 1 || v > n)
      throw BadSubsetSizeError("subset element " + std::to_string(v) +
                               " outside 1.." + std::to_string(n));
    if (member[static_cast<size_t>(v)])
      throw BadSubsetSizeError("subset element " + std::to_string(v) + " repeated");
    member[static_cast<size_t>(v)] = 1;
  }
  std::vector<int> outside;
  outside.reserve(static_cast<size_t>(n2));
  for (int v = 1; v <= n; ++v)
    if (!member[static_cast<size_t>(v)]) outside.push_back(v);

  std::vector<int> line(static_cast<size_t>(n));
  for (int i = 1; i <= n1; ++i)
    line[static_cast<size_t>(inside[static_cast<size_t>(i) - 1]) - 1] =
        inside[static_cast<size_t>(p1(i)) - 1];
  for (int j = 1; j <= n2; ++j)
    line[static_cast<size_t>(outside[static_cast<size_t>(j) - 1]) - 1] =
        outside[static_cast<size_t>(p2(j)) - 1];
  return Permutation(std::move(line));
}

namespace {

// Classification of every pair (a, b) of elements of the two summands.
// decided: 0 = tied, 1 = the first summand's element comes first, 2 = second.
// Tied pairs sit on joint orbits that never reach a mixed quadrant; their
// relative order is linked along the orbit with a flip at every term-1 step.
struct PairTable {
  int n1 = 0;
  int n2 = 0;
  std::vector<int8_t> term;
  std::vector<int8_t> decided;
  std::vector<int> orbit;
  std::vector<int8_t> parity;
  std::vector<char> orbit_odd;  // flips around the orbit do not close up
  int orbit_count = 0;

  size_t id(int a, int b) const {
    return static_cast<size_t>(a - 1) * static_cast<size_t>(n2) +
           static_cast<size_t>(b - 1);
  }
};

PairTable classify_pairs(const UnimodalPerm& d1, const UnimodalPerm& d2) {
  PairTable t;
  t.n1 = d1.degree();
  t.n2 = d2.degree();
  const int m1 = d1.max_pos();
  const int m2 = d2.max_pos();
  const size_t total = static_cast<size_t>(t.n1) * static_cast<size_t>(t.n2);
  t.term.resize(total);
  t.decided.assign(total, 0);
  t.orbit.assign(total, -1);
  t.parity.assign(total, 0);
  for (int a = 1; a <= t.n1; ++a)
    for (int b = 1; b <= t.n2; ++b)
      t.term[t.id(a, b)] = static_cast<int8_t>(classify_term(a, b, m1, m2));

  std::vector<char> visited(total, 0);
  for (int a0 = 1; a0 <= t.n1; ++a0) {
    for (int b0 = 1; b0 <= t.n2; ++b0) {
      if (visited[t.id(a0, b0)]) continue;
      // Joint iteration is a bijection, so the pair graph is a union of pure
      // cycles; collect the one through (a0, b0).
      std::vector<size_t> cyc;
      int x = a0;
      int y = b0;
      do {
        cyc.push_back(t.id(x, y));
        visited[t.id(x, y)] = 1;
        x = d1(x);
        y = d2(y);
      } while (!(x == a0 && y == b0));

      const size_t len = cyc.size();
      bool has_terminal = false;
      for (size_t idx : cyc)
        if (t.term[idx] >= 3) {
          has_terminal = true;
          break;
        }

      if (has_terminal) {
        for (size_t s = 0; s < len; ++s) {
          int flips = 0;
          for (size_t off = 0; off < len; ++off) {
            const size_t idx = cyc[(s + off) % len];
            const int tm = t.term[idx];
            if (tm == 1 || tm == 3) flips ^= 1;
            if (tm >= 3) break;
          }
          t.decided[cyc[s]] = static_cast<int8_t>(flips == 0 ? 1 : 2);
        }
      } else {
        const int oid = t.orbit_count++;
        int par = 0;
        for (size_t idx : cyc) {
          t.orbit[idx] = oid;
          t.parity[idx] = static_cast<int8_t>(par);
          if (t.term[idx] == 1) par ^= 1;
        }
        t.orbit_odd.resize(static_cast<size_t>(t.orbit_count), 0);
        t.orbit_odd[static_cast<size_t>(oid)] = static_cast<char>(par != 0);
      }
    }
  }
  return t;
}

// Iterative Tarjan-based 2-SAT. Variables encode tied orbits.
class TwoSat {
 public:
  explicit TwoSat(int vars) : n_(vars), adj_(static_cast<size_t>(2 * vars)) {}

  static int lit(int v, bool value) { return 2 * v + (value ? 0 : 1); }
  static int neg(int l) { return l ^ 1; }

  void implies(int u, int v) {
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(neg(v))].push_back(neg(u));
  }
  void must(int l) { adj_[static_cast<size_t>(neg(l))].push_back(l); }

  std::optional<std::vector<char>> solve() const {
    const int N = 2 * n_;
    std::vector<int> comp(static_cast<size_t>(N), -1);
    std::vector<int> num(static_cast<size_t>(N), -1);
    std::vector<int> low(static_cast<size_t>(N), 0);
    std::vector<int> stk;
    std::vector<char> onstk(static_cast<size_t>(N), 0);
    std::vector<std::pair<int, size_t>> call;
    int counter = 0;
    int ncomp = 0;

    for (int s = 0; s < N; ++s) {
      if (num[static_cast<size_t>(s)] != -1) continue;
      call.emplace_back(s, 0);
      while (!call.empty()) {
        const int u = call.back().first;
        size_t ei = call.back().second;
        if (ei == 0) {
          num[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = counter++;
          stk.push_back(u);
          onstk[static_cast<size_t>(u)] = 1;
        }
        bool descended = false;
        const auto& edges = adj_[static_cast<size_t>(u)];
        while (ei < edges.size()) {
          const int v = edges[ei];
          ++ei;
          if (num[static_cast<size_t>(v)] == -1) {
            call.back().second = ei;
            call.emplace_back(v, 0);
            descended = true;
            break;
          }
          if (onstk[static_cast<size_t>(v)])
            low[static_cast<size_t>(u)] =
                std::min(low[static_cast<size_t>(u)], num[static_cast<size_t>(v)]);
        }
        if (descended) continue;
        if (low[static_cast<size_t>(u)] == num[static_cast<size_t>(u)]) {
          while (true) {
            const int w = stk.back();
            stk.pop_back();
            onstk[static_cast<size_t>(w)] = 0;
            comp[static_cast<size_t>(w)] = ncomp;
            if (w == u) break;
          }
          ++ncomp;
        }
        call.pop_back();
        if (!call.empty())
          low[static_cast<size_t>(call.back().first)] =
              std::min(low[static_cast<size_t>(call.back().first)],
                       low[static_cast<size_t>(u)]);
      }
    }

    std::vector<char> value(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      if (comp[static_cast<size_t>(2 * v)] == comp[static_cast<size_t>(2 * v + 1)])
        return std::nullopt;
      value[static_cast<size_t>(v)] =
          comp[static_cast<size_t>(2 * v)] < comp[static_cast<size_t>(2 * v + 1)];
    }
    return value;
  }

 private:
  int n_;
  std::vector<std::vector<int>> adj_;
};

// Builds the unique unimodal sum with the first maximum left of the second.
// Pairwise verdicts come from the quadrant walk; tied orbits are resolved by
// 2-SAT over the orbit-parity links plus the monotone-consistency rules
// "a before b forces a-1 before b and a before b+1".
BoxedSum engine_sum(const UnimodalPerm& p1, const UnimodalPerm& p2,
                    bool forbid_ties) {
  const PairTable t = classify_pairs(p1, p2);
  const int n1 = t.n1;
  const int n2 = t.n2;

  if (forbid_ties && t.orbit_count > 0)
    throw InternalOrderInconsistencyError(
        "periodic sign sequence for transitive inputs");

  TwoSat sat(t.orbit_count);
  // Literal meaning: orbit variable true = representative pair has the first
  // summand's element in front; a pair with parity 1 reads the negation.
  auto pair_lit = [&](size_t idx) {
    return TwoSat::lit(t.orbit[idx], t.parity[idx] == 0);
  };

  for (int o = 0; o < t.orbit_count; ++o)
    if (t.orbit_odd[static_cast<size_t>(o)]) {
      sat.must(TwoSat::lit(o, true));
      sat.must(TwoSat::lit(o, false));
    }

  auto add_implication = [&](size_t src, size_t dst) {
    const int8_t ds = t.decided[src];
    const int8_t dd = t.decided[dst];
    if (ds == 2) return;  // source false: nothing to propagate
    if (ds == 1) {
      if (dd == 1) return;
      if (dd == 2)
        throw InternalOrderInconsistencyError(
            "decided pair order violates monotone consistency");
      sat.must(pair_lit(dst));
      return;
    }
    // source tied
    if (dd == 1) return;
    if (dd == 2) {
      sat.must(TwoSat::neg(pair_lit(src)));
      return;
    }
    sat.implies(pair_lit(src), pair_lit(dst));
  };

  for (int a = 1; a <= n1; ++a)
    for (int b = 1; b <= n2; ++b) {
      const size_t idx = t.id(a, b);
      if (a > 1) add_implication(idx, t.id(a - 1, b));
      if (b < n2) add_implication(idx, t.id(a, b + 1));
    }

  std::vector<char> assignment;
  if (t.orbit_count > 0) {
    auto solved = sat.solve();
    if (!solved)
      throw InternalOrderInconsistencyError(
          "tied pair orbits admit no consistent interleaving");
    assignment = std::move(*solved);
  }

  auto a_first = [&](int a, int b) {
    const size_t idx = t.id(a, b);
    if (t.decided[idx] != 0) return t.decided[idx] == 1;
    const bool rep = assignment[static_cast<size_t>(t.orbit[idx])] != 0;
    return t.parity[idx] == 0 ? rep : !rep;
  };

  const int n = n1 + n2;
  std::vector<int> position_used(static_cast<size_t>(n) + 1, 0);
  std::vector<int> J;
  J.reserve(static_cast<size_t>(n1));
  for (int a = 1; a <= n1; ++a) {
    int later = 0;
    for (int b = 1; b <= n2; ++b)
      if (!a_first(a, b)) ++later;
    const int pos = a + later;
    ++position_used[static_cast<size_t>(pos)];
    J.push_back(pos);
  }
  for (int b = 1; b <= n2; ++b) {
    int earlier = 0;
    for (int a = 1; a <= n1; ++a)
      if (a_first(a, b)) ++earlier;
    ++position_used[static_cast<size_t>(b + earlier)];
  }
  for (int pos = 1; pos <= n; ++pos)
    if (position_used[static_cast<size_t>(pos)] != 1)
      throw InternalOrderInconsistencyError(
          "pairwise verdicts do not linearize to a position assignment");
  std::sort(J.begin(), J.end());

  Permutation sum = oplus(p1.perm(), p2.perm(), J);
  try {
    UnimodalPerm checked = UnimodalPerm::check(std::move(sum));
    return BoxedSum{std::move(checked), std::move(J)};
  } catch (const NotUnimodalError& e) {
    throw PostValidationFailedError(std::string("constructed sum is not unimodal: ") +
                                    e.what());
  }
}

std::optional<SumObstruction> find_obstruction(const AGSets& s1, const AGSets& s2) {
  for (const auto& [shape, mult] : s1.acute_right)
    if (s2.acute_right.count(shape))
      return SumObstruction{SumObstruction::Kind::NoSumEitherOrder, 1, shape};
  for (const auto& [shape, mult] : s1.grave_left)
    if (s2.grave_left.count(shape))
      return SumObstruction{SumObstruction::Kind::NoSumEitherOrder, 1, shape};
  if (s2.grave_left.count(s1.top))
    return SumObstruction{SumObstruction::Kind::NoSumThisOrder, 2, s1.top};
  if (s1.acute_right.count(s2.top))
    return SumObstruction{SumObstruction::Kind::NoSumThisOrder, 2, s2.top};
  return std::nullopt;
}

}  // namespace

std::string SumObstruction::describe() const {
  std::string text = kind == Kind::NoSumEitherOrder
                         ? "no unimodal sum exists in either order"
                         : "no unimodal sum exists in this order";
  text += ", rule (";
  text += rule == 1 ? "i" : "ii";
  text += ") fired on shape ";
  text += format_cycles(offender.perm());
  return text;
}

BoxedSum transitive_sum(const Shape& s1, const Shape& s2) {
  return engine_sum(s1.unimodal(), s2.unimodal(), /*forbid_ties=*/true);
}

SumOutcome boxed_plus(const UnimodalPerm& p1, const UnimodalPerm& p2) {
  const AGSets sets1 = ag_sets(p1);
  const AGSets sets2 = ag_sets(p2);
  if (auto obstruction = find_obstruction(sets1, sets2)) return *obstruction;
  return engine_sum(p1, p2, /*forbid_ties=*/false);
}

SumOutcome reversed_sum(const UnimodalPerm& p1, const UnimodalPerm& p2) {
  SumOutcome swapped = boxed_plus(p2, p1);
  if (auto* obstruction = std::get_if<SumObstruction>(&swapped)) return *obstruction;
  BoxedSum& sum = std::get<BoxedSum>(swapped);
  const int n = sum.sum.degree();
  std::vector<char> member(static_cast<size_t>(n) + 1, 0);
  for (int v : sum.subset) member[static_cast<size_t>(v)] = 1;
  std::vector<int> complement;
  complement.reserve(static_cast<size_t>(p1.degree()));
  for (int v = 1; v <= n; ++v)
    if (!member[static_cast<size_t>(v)]) complement.push_back(v);
  return BoxedSum{std::move(sum.sum), std::move(complement)};
}

Shape double_shape(const Shape& s) {
  const int m = s.max_pos();
  BoxedSum ss = transitive_sum(s, s);
  std::vector<int> line = ss.sum.perm().one_line();
  std::swap(line[static_cast<size_t>(2 * m) - 2], line[static_cast<size_t>(2 * m) - 1]);
  return Shape::check(UnimodalPerm::check(Permutation(std::move(line))));
}

std::optional<Shape> undouble(const Shape& s) {
  const int n = s.length();
  if (n % 2 != 0) return std::nullopt;
  const int p = s.max_pos();
  const int m = (p + 1) / 2;
  std::vector<int> line = s.perm().one_line();
  std::swap(line[static_cast<size_t>(2 * m) - 2], line[static_cast<size_t>(2 * m) - 1]);
  try {
    UnimodalPerm unswapped = UnimodalPerm::check(Permutation(std::move(line)));
    auto parts = decompose_shapes(unswapped);
    if (parts.size() != 2 || !(parts[0].shape == parts[1].shape)) return std::nullopt;
    const Shape candidate = parts[0].shape;
    if (!(double_shape(candidate) == s)) return std::nullopt;
    return candidate;
  } catch (const NotUnimodalError&) {
    return std::nullopt;
  }
}

namespace {

UnimodalPerm squeeze_out(const UnimodalPerm& p, const std::vector<int>& support) {
  const int n = p.degree();
  std::vector<char> drop(static_cast<size_t>(n) + 1, 0);
  for (int v : support) drop[static_cast<size_t>(v)] = 1;
  std::vector<int> keep;
  keep.reserve(static_cast<size_t>(n - support.size()));
  for (int v = 1; v <= n; ++v)
    if (!drop[static_cast<size_t>(v)]) keep.push_back(v);
  std::vector<int> line(keep.size());
  for (size_t i = 0; i < keep.size(); ++i) {
    const int image = p(keep[i]);
    line[i] = static_cast<int>(std::lower_bound(keep.begin(), keep.end(), image) -
                               keep.begin()) +
              1;
  }
  // Restricting to an invariant set preserves unimodality.
  return UnimodalPerm::check(Permutation(std::move(line)));
}

}  // namespace

UnimodalPerm extended_sum(const UnimodalPerm& p, const Shape& s) {
  const AGSets sets = ag_sets(p);
  if (!sets.acute_right.count(s)) {
    SumOutcome out = boxed_plus(p, s.unimodal());
    auto* sum = std::get_if<BoxedSum>(&out);
    if (!sum)
      throw InternalOrderInconsistencyError(
          "unobstructed extended sum failed to build");
    return sum->sum;
  }
  // The obstacle: the unique subcycle of shape s with maximum right of p's.
  const auto parts = decompose_shapes(p);
  const DecomposedCycle* obstacle = nullptr;
  for (const auto& part : parts)
    if (part.shape == s && part.max_pos_in_parent > p.max_pos()) {
      obstacle = &part;
      break;
    }
  if (!obstacle)
    throw InternalOrderInconsistencyError("obstacle subcycle not found");
  const UnimodalPerm squeezed = squeeze_out(p, obstacle->support);
  SumOutcome out = boxed_plus(squeezed, double_shape(s).unimodal());
  auto* sum = std::get_if<BoxedSum>(&out);
  if (!sum)
    throw InternalOrderInconsistencyError("squeezed extended sum failed to build");
  return sum->sum;
}

UnimodalPerm extended_sum_general(const UnimodalPerm& p1, const UnimodalPerm& p2) {
  UnimodalPerm acc = p1;
  for (const Shape& factor : factorize(p2)) acc = extended_sum(acc, factor);
  return acc;
}

std::vector<Shape> factorize(const UnimodalPerm& u) {
  std::vector<Shape> shapes;
  for (const auto& part : decompose_shapes(u)) shapes.push_back(part.shape);
  // Round trip: the left fold of the boxed sum must rebuild u exactly.
  UnimodalPerm acc = shapes.front().unimodal();
  for (size_t i = 1; i < shapes.size(); ++i) {
    SumOutcome out = boxed_plus(acc, shapes[i].unimodal());
    auto* sum = std::get_if<BoxedSum>(&out);
    if (!sum)
      throw ReconstructionMismatchError("factor fold hit an obstruction at index " +
                                        std::to_string(i));
    acc = sum->sum;
  }
  if (!(acc.perm() == u.perm()))
    throw ReconstructionMismatchError("factor fold does not rebuild the input");
  return shapes;
}

}  // namespace unimodal
