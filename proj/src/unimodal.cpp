#include "unimodal/unimodal.hpp"

#include <algorithm>
#include <numeric>

namespace unimodal {

UnimodalPerm UnimodalPerm::check(Permutation p) {
  const int n = p.degree();
  int m = 0;
  for (int i = 1; i <= n; ++i)
    if (p(i) == n) {
      m = i;
      break;
    }
  for (int a = 1; a < m; ++a)
    if (p(a) >= p(a + 1))
      throw NotUnimodalError("not increasing before the maximum at positions " +
                                 std::to_string(a) + "," + std::to_string(a + 1),
                             a, a + 1);
  for (int a = m; a < n; ++a)
    if (p(a) <= p(a + 1))
      throw NotUnimodalError("not decreasing after the maximum at positions " +
                                 std::to_string(a) + "," + std::to_string(a + 1),
                             a, a + 1);
  return UnimodalPerm(std::move(p), m);
}

UnimodalPerm check_unimodal(const Permutation& p) { return UnimodalPerm::check(p); }

Shape Shape::check(UnimodalPerm u) {
  const int n = u.degree();
  int x = 1;
  int len = 0;
  do {
    x = u(x);
    ++len;
  } while (x != 1);
  if (len != n)
    throw NotTransitiveError("the orbit of 1 has length " + std::to_string(len) +
                             " < degree " + std::to_string(n));
  return Shape(std::move(u));
}

UnimodalPerm from_ascent_set(int n, const std::vector<int>& S) {
  if (n < 1) throw ElementOutOfRangeError("degree must be >= 1");
  std::uint64_t mask = 0;
  for (int v : S) {
    if (v < 1 || v >= n)
      throw ElementOutOfRangeError("ascent-set element " + std::to_string(v) +
                                   " outside 1.." + std::to_string(n - 1));
    std::uint64_t bit = std::uint64_t{1} << (v - 1);
    if (mask & bit)
      throw ElementOutOfRangeError("ascent-set element " + std::to_string(v) +
                                   " repeated");
    mask |= bit;
  }
  return from_ascent_mask(n, mask);
}

UnimodalPerm from_ascent_mask(int n, std::uint64_t mask) {
  if (n < 1 || n > 64) throw ElementOutOfRangeError("degree outside 1..64");
  if (n < 64 && (mask >> (n - 1)) != 0)
    throw ElementOutOfRangeError("ascent mask has bits at or above the degree");
  std::vector<int> line;
  line.reserve(static_cast<size_t>(n));
  for (int v = 1; v < n; ++v)
    if (mask & (std::uint64_t{1} << (v - 1))) line.push_back(v);
  line.push_back(n);
  for (int v = n - 1; v >= 1; --v)
    if (!(mask & (std::uint64_t{1} << (v - 1)))) line.push_back(v);
  // Unimodal by construction.
  return UnimodalPerm::check(Permutation(std::move(line)));
}

std::vector<int> to_ascent_set(const UnimodalPerm& u) {
  std::vector<int> S;
  for (int i = 1; i < u.max_pos(); ++i) S.push_back(u(i));
  return S;
}

std::uint64_t to_ascent_mask(const UnimodalPerm& u) {
  std::uint64_t mask = 0;
  for (int i = 1; i < u.max_pos(); ++i) mask |= std::uint64_t{1} << (u(i) - 1);
  return mask;
}

std::string ascent_mask_bits(int n, std::uint64_t mask) {
  std::string bits(static_cast<size_t>(n > 0 ? n - 1 : 0), '0');
  for (int v = 1; v < n; ++v)
    if (mask & (std::uint64_t{1} << (v - 1))) bits[static_cast<size_t>(v) - 1] = '1';
  return bits;
}

UnimodalRange::UnimodalRange(int n) : n_(n) {
  if (n < 1) throw DegreeTooLargeError("degree must be >= 1");
  if (n > 24)
    throw DegreeTooLargeError("2^(n-1) enumeration guarded at n <= 24, got n = " +
                              std::to_string(n));
  count_ = std::uint64_t{1} << (n - 1);
}

UnimodalRange enumerate_unimodal(int n) { return UnimodalRange(n); }

std::vector<Shape> enumerate_transitive(int n) {
  std::vector<Shape> out;
  for (UnimodalPerm u : enumerate_unimodal(n)) {
    int x = 1;
    int len = 0;
    do {
      x = u(x);
      ++len;
    } while (x != 1);
    if (len == n) out.push_back(Shape::check(std::move(u)));
  }
  return out;
}

std::vector<DecomposedCycle> decompose_shapes(const UnimodalPerm& u) {
  std::vector<DecomposedCycle> out;
  for (const auto& c : cycles(u.perm())) {
    std::vector<int> support = c.support;
    std::sort(support.begin(), support.end());
    const int k = static_cast<int>(support.size());
    // Omega_J is the sorted support; conjugate the restriction through it.
    std::vector<int> shape_line(static_cast<size_t>(k));
    int max_pos_in_parent = 0;
    for (int a = 1; a <= k; ++a) {
      int image = u(support[static_cast<size_t>(a) - 1]);
      int b = static_cast<int>(std::lower_bound(support.begin(), support.end(), image) -
                               support.begin()) +
              1;
      shape_line[static_cast<size_t>(a) - 1] = b;
      if (image == support.back()) max_pos_in_parent = support[static_cast<size_t>(a) - 1];
    }
    Shape shape = Shape::check(UnimodalPerm::check(Permutation(std::move(shape_line))));
    out.push_back(DecomposedCycle{std::move(support), std::move(shape), max_pos_in_parent});
  }
  std::sort(out.begin(), out.end(), [](const DecomposedCycle& a, const DecomposedCycle& b) {
    return a.max_pos_in_parent < b.max_pos_in_parent;
  });
  return out;
}

int CycleCounter::degree() const {
  int n = 0;
  for (const auto& [shape, mult] : entries) n += shape.length() * mult;
  return n;
}

CycleCounter cycle_counter(const UnimodalPerm& u) {
  CycleCounter counter;
  for (const auto& part : decompose_shapes(u)) counter.entries[part.shape] += 1;
  return counter;
}

bool is_acute(const Shape& s) { return (s.length() - s.max_pos()) % 2 == 0; }

AGSets ag_sets(const UnimodalPerm& u) {
  const int n = u.degree();
  const int m = u.max_pos();
  auto parts = decompose_shapes(u);
  const DecomposedCycle* top = nullptr;
  for (const auto& part : parts)
    if (part.support.back() == n) top = &part;
  AGSets sets{{}, {}, {}, {}, top->shape};
  for (const auto& part : parts) {
    if (&part == top) continue;
    bool acute = is_acute(part.shape);
    bool right = part.max_pos_in_parent > m;
    auto& bucket = acute ? (right ? sets.acute_right : sets.acute_left)
                         : (right ? sets.grave_right : sets.grave_left);
    bucket[part.shape] += 1;
  }
  return sets;
}

}  // namespace unimodal
