#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "unimodal/unimodal.hpp"

namespace unimodal {

enum class OrderVerdict { Prec, Succ, Tie };

// The joint-iterate classification of a pair (a, b) under (d1, d2). Terms 1..4
// label the quadrants (>,>=), (<=,<), (>,<), (<=,>=) relative to the maximum
// positions. A finite sequence ends at its first term in {3,4}; a periodic one
// cycles through {1,2} forever (possible only for non-transitive inputs).
struct SignSequence {
  std::vector<int> terms;  // finite: indices 0..L; periodic: one full period
  bool periodic = false;
  int period = 0;     // period length when periodic
  int preperiod = 0;  // always 0: joint iteration is a bijection on pairs
  int parity_count = 0;  // M: number of terms in {1,3} (finite case)

  int length() const { return static_cast<int>(terms.size()) - 1; }  // L
  OrderVerdict verdict() const {
    if (periodic) return OrderVerdict::Tie;
    return parity_count % 2 == 0 ? OrderVerdict::Prec : OrderVerdict::Succ;
  }
};

SignSequence sign_sequence(const UnimodalPerm& d1, const UnimodalPerm& d2, int a,
                           int b);

// The raw intertwining sum of Eq-style placement: p1 on positions J, p2 on the
// complement, both conjugated through the increasing bijections. The result
// need not be unimodal.
Permutation oplus(const Permutation& p1, const Permutation& p2,
                  const std::vector<int>& J);

struct BoxedSum {
  UnimodalPerm sum;
  std::vector<int> subset;  // positions holding the first summand, sorted
};

// Unique unimodal sum of two transitive shapes with the first maximum left of
// the second.
BoxedSum transitive_sum(const Shape& s1, const Shape& s2);

// Why a unimodal sum cannot be formed: rule 1 blocks both orders, rule 2
// blocks only the requested order. `offender` is the shape the rule fired on.
struct SumObstruction {
  enum class Kind { NoSumEitherOrder, NoSumThisOrder };
  Kind kind;
  int rule;  // 1 or 2
  Shape offender;

  std::string describe() const;
};

using SumOutcome = std::variant<BoxedSum, SumObstruction>;

// The unique unimodal sum with m1 < m2 (first summand's maximum to the left),
// or the obstruction that rules it out. Obstruction checks run before any
// ordering work; the result is post-validated for unimodality.
SumOutcome boxed_plus(const UnimodalPerm& p1, const UnimodalPerm& p2);

// The unique unimodal sum with m1 > m2; computed by argument swap plus subset
// complementation.
SumOutcome reversed_sum(const UnimodalPerm& p1, const UnimodalPerm& p2);

// The 2k-cycle obtained from s [+] s by swapping the two positions around the
// maximum. The immediate forcing successor of s; flips acute <-> grave.
Shape double_shape(const Shape& s);

// Inverse of double_shape when one exists.
std::optional<Shape> undouble(const Shape& s);

// Total extension of the boxed sum: an obstructing subcycle equal in shape to
// s and right of the maximum is squeezed out and replaced by the double.
UnimodalPerm extended_sum(const UnimodalPerm& p, const Shape& s);
// Folds extended_sum over the factorization of p2, left to right.
UnimodalPerm extended_sum_general(const UnimodalPerm& p1, const UnimodalPerm& p2);

// Shapes of the subcycles ordered by max position ascending; the left fold of
// boxed_plus over the list rebuilds the permutation (verified internally).
std::vector<Shape> factorize(const UnimodalPerm& u);

}  // namespace unimodal
