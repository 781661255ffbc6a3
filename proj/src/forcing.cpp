#include "unimodal/forcing.hpp"

#include <algorithm>

namespace unimodal {

ForcingOrder forcing_compare(const Shape& s1, const Shape& s2) {
  if (s1 == s2) return ForcingOrder::Equal;
  const SignSequence s = sign_sequence(s1.unimodal(), s2.unimodal(), s1.length(),
                                       s2.length());
  switch (s.verdict()) {
    case OrderVerdict::Prec: return ForcingOrder::Less;
    case OrderVerdict::Succ: return ForcingOrder::Greater;
    case OrderVerdict::Tie: break;
  }
  throw InternalOrderInconsistencyError(
      "periodic sign sequence while comparing transitive shapes");
}

Shape min_shape(int k) {
  if (k < 1) throw LengthTooLargeError("length must be >= 1");
  if (k > 12)
    throw LengthTooLargeError("minimum search guarded at k <= 12, got k = " +
                              std::to_string(k));
  const auto shapes = enumerate_transitive(k);
  const Shape* best = &shapes.front();
  for (const Shape& s : shapes)
    if (forcing_compare(s, *best) == ForcingOrder::Less) best = &s;
  return *best;
}

bool sarkovskii_less(int k, int l) {
  if (k == l) return false;
  return forcing_compare(min_shape(k), min_shape(l)) == ForcingOrder::Less;
}

std::vector<int> sarkovskii_sort(std::vector<int> lengths) {
  for (int k : lengths)
    if (k < 1 || k > 12)
      throw LengthTooLargeError("lengths must lie in 1..12, got " +
                                std::to_string(k));
  std::sort(lengths.begin(), lengths.end(),
            [](int k, int l) { return sarkovskii_less(k, l); });
  return lengths;
}

Shape successor(const Shape& s) { return double_shape(s); }

std::optional<Shape> predecessor(const Shape& s) { return undouble(s); }

}  // namespace unimodal
