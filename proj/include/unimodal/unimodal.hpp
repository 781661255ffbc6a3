#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "unimodal/permutation.hpp"

namespace unimodal {

// A permutation verified to be unimodal: strictly increasing up to the
// position of n, strictly decreasing afterwards.
class UnimodalPerm {
 public:
  static UnimodalPerm check(Permutation p);

  const Permutation& perm() const { return perm_; }
  int degree() const { return perm_.degree(); }
  int max_pos() const { return max_pos_; }
  int operator()(int i) const { return perm_(i); }

  friend bool operator==(const UnimodalPerm& a, const UnimodalPerm& b) {
    return a.perm_ == b.perm_;
  }
  friend std::strong_ordering operator<=>(const UnimodalPerm& a,
                                          const UnimodalPerm& b) {
    return a.perm_ <=> b.perm_;
  }

 private:
  UnimodalPerm(Permutation p, int max_pos) : perm_(std::move(p)), max_pos_(max_pos) {}
  Permutation perm_;
  int max_pos_;
};

UnimodalPerm check_unimodal(const Permutation& p);

// A transitive unimodal permutation (a single k-cycle). The ordering is
// (length, one-line lexicographic): canonical storage order only, not the
// forcing order.
class Shape {
 public:
  static Shape check(UnimodalPerm u);

  const UnimodalPerm& unimodal() const { return u_; }
  const Permutation& perm() const { return u_.perm(); }
  int length() const { return u_.degree(); }
  int max_pos() const { return u_.max_pos(); }

  friend bool operator==(const Shape& a, const Shape& b) { return a.u_ == b.u_; }
  friend std::strong_ordering operator<=>(const Shape& a, const Shape& b) {
    return a.u_ <=> b.u_;
  }

 private:
  explicit Shape(UnimodalPerm u) : u_(std::move(u)) {}
  UnimodalPerm u_;
};

// Ascent-set codec realizing the bijection between subsets of {1..n-1} and
// unimodal permutations of I_n: one-line form is sorted(S) ++ [n] ++
// sorted(complement, descending).
UnimodalPerm from_ascent_set(int n, const std::vector<int>& S);
UnimodalPerm from_ascent_mask(int n, std::uint64_t mask);
std::vector<int> to_ascent_set(const UnimodalPerm& u);
std::uint64_t to_ascent_mask(const UnimodalPerm& u);
// Bitstring with character i-1 set iff value i lies in the ascent set.
std::string ascent_mask_bits(int n, std::uint64_t mask);

// Lazy stream over all of Delta(n) in ascending codec-mask order.
// Guarded at n <= 24.
class UnimodalRange {
 public:
  explicit UnimodalRange(int n);

  class iterator {
   public:
    iterator(int n, std::uint64_t mask) : n_(n), mask_(mask) {}
    UnimodalPerm operator*() const { return from_ascent_mask(n_, mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    std::uint64_t mask() const { return mask_; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.mask_ == b.mask_;
    }

   private:
    int n_;
    std::uint64_t mask_;
  };

  iterator begin() const { return iterator(n_, 0); }
  iterator end() const { return iterator(n_, count_); }
  std::uint64_t size() const { return count_; }
  int degree() const { return n_; }

 private:
  int n_;
  std::uint64_t count_;
};

UnimodalRange enumerate_unimodal(int n);
// Filters the stream down to the n-cycles Delta_n.
std::vector<Shape> enumerate_transitive(int n);

// One subcycle of a unimodal permutation: its support J, its shape
// (conjugation through the increasing bijection I_k -> J), and the position
// in the parent mapping to max J.
struct DecomposedCycle {
  std::vector<int> support;
  Shape shape;
  int max_pos_in_parent;
};

// Subcycles sorted by max_pos_in_parent ascending.
std::vector<DecomposedCycle> decompose_shapes(const UnimodalPerm& u);

// Multiset of subcycle shapes: the cycle-counter N_delta.
struct CycleCounter {
  std::map<Shape, int> entries;

  int degree() const;
  int distinct_shapes() const { return static_cast<int>(entries.size()); }
  friend bool operator==(const CycleCounter& a, const CycleCounter& b) {
    return a.entries == b.entries;
  }
  friend std::strong_ordering operator<=>(const CycleCounter& a,
                                          const CycleCounter& b) {
    return a.entries <=> b.entries;
  }
};

CycleCounter cycle_counter(const UnimodalPerm& u);

// A shape of length k with maximum position m is acute iff k = m (mod 2);
// grave otherwise.
bool is_acute(const Shape& s);

// Subcycle shapes bucketed by acute/grave and by side of the parent's
// maximum position; the cycle holding the global maximum is reported
// separately as `top`.
struct AGSets {
  std::map<Shape, int> acute_right;  // A_>
  std::map<Shape, int> acute_left;   // A_<
  std::map<Shape, int> grave_right;  // G_>
  std::map<Shape, int> grave_left;   // G_<
  Shape top;
};

AGSets ag_sets(const UnimodalPerm& u);

}  // namespace unimodal
