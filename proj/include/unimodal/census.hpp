#pragma once

#include <map>
#include <string>
#include <vector>

#include "unimodal/unimodal.hpp"

namespace unimodal {

using uint128 = unsigned __int128;

std::string u128_to_string(uint128 v);

// Exact count plus the closed form that produced it. Counts never wrap:
// any overflow of the 128-bit width raises OverflowError.
struct CountResult {
  uint128 value = 0;
  std::string formula;

  std::string str() const { return u128_to_string(value); }
};

// Number of transitive unimodal permutations of I_n: the Moebius sum over odd
// divisors of n. Exact for n <= 127.
CountResult count_transitive(int n);

// Number of unimodal permutations with the maximum at position m: the
// binomial C(n-1, m-1).
CountResult count_by_max_position(int n, int m);

// Number of unimodal permutations sharing a given cycle-counter: 2^(l-1)
// where l counts the distinct shapes present.
CountResult class_size(const CycleCounter& counter);

// All members of Delta(n) with the given counter; n <= 16.
std::vector<UnimodalPerm> enumerate_with_counter(const CycleCounter& counter);

// Number of unimodal permutations of I_n containing a subcycle of the given
// shape: (2^n - 2^l (-1)^[n/k]) / (2^k + 1) with l = n mod k.
CountResult count_containing_shape(const Shape& s, int n);

struct Rational {
  long long num = 0;
  long long den = 1;

  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Limiting fraction of unimodal permutations containing the shape: 2/(2^k+1).
Rational asymptotic_density(const Shape& s);
Rational asymptotic_density_for_length(int k);

// Symmetric-group reference values for side-by-side comparison tables.
// Number of permutations in S_n with the prescribed cycle-length counts:
// n! / prod_k (k^{n_k} n_k!).
CountResult sn_class_size(const std::map<int, int>& length_counts);
// Number of permutations in S_n with no k-cycles at all:
// n! sum_{s=0}^{[n/k]} (-1/k)^s / s!. Limiting density e^{-1/k}.
CountResult sn_without_k_cycles(int n, int k);

}  // namespace unimodal
