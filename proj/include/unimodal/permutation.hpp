#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "unimodal/errors.hpp"

namespace unimodal {

// A permutation of I_n = {1,...,n} in one-line form: image(i) = value at
// position i, 1-based everywhere in the public API. Immutable after
// construction; construction validates bijectivity.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& one_line() const { return images_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  // Degree-major, then lexicographic on the one-line form.
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b);

 private:
  std::vector<int> images_;
};

// compose(p, q)(i) = p(q(i)); degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);

// One cycle of a permutation: support listed in orbit order starting at the
// smallest element of the orbit.
struct OrientedCycle {
  std::vector<int> support;
  int length() const { return static_cast<int>(support.size()); }
};

// Disjoint cycles, fixed points included, sorted by minimum element.
std::vector<OrientedCycle> cycles(const Permutation& p);

// Sorted multiset of cycle lengths.
std::vector<int> cycle_lengths(const Permutation& p);

// Accepts one-line ("3 5 4 2 1" or "[3,5,4,2,1]") and cycle text
// ("(1 3 4 2 5)" or "(1)(2 6)(3 5)(4)"). Cycle text must either list fixed
// points or carry an explicit "n=...;" prefix.
Permutation parse_permutation(const std::string& text);

std::string format_one_line(const Permutation& p);
std::string format_cycles(const Permutation& p);

// Classical pattern containment: sigma occurs in p iff some index subset of p
// is order-isomorphic to sigma. Exhaustive over index subsets.
bool contains_pattern(const Permutation& p, const Permutation& sigma);
bool avoids_pattern(const Permutation& p, const Permutation& sigma);

// All permutations of I_n avoiding every given pattern, in lexicographic
// one-line order. Factorial scan, guarded at n <= 10.
std::vector<Permutation> enumerate_avoiding(
    int n, const std::vector<Permutation>& patterns);

// The dihedral symmetries generated by inverse and the order-reversing
// involution iota = [n, n-1, ..., 1].
enum class D4Op {
  Identity,           // p
  Inverse,            // p^-1
  Reverse,            // p o iota
  Complement,         // iota o p
  Conjugate,          // iota o p o iota
  ReverseInverse,     // (p o iota)^-1 = iota o p^-1... see table in .cpp
  ComplementInverse,  // (iota o p)^-1
  ConjugateInverse,   // (iota o p o iota)^-1
};

D4Op d4_op_from_name(std::string_view name);
std::string_view d4_op_name(D4Op op);
const std::vector<D4Op>& d4_all_ops();
// The four operations that preserve cycle structure: id, inverse,
// conjugate, conjugate-inverse.
const std::vector<D4Op>& d4_cyclic_ops();

Permutation d4_apply(D4Op op, const Permutation& p);

}  // namespace unimodal
