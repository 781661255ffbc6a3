#include "unimodal/census.hpp"

#include <algorithm>
#include <numeric>

namespace unimodal {

using int128 = __int128;

std::string u128_to_string(uint128 v) {
  if (v == 0) return "0";
  std::string digits;
  while (v > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

namespace {

uint128 pow2_checked(int e) {
  if (e < 0 || e > 127) throw OverflowError("2^" + std::to_string(e) +
                                            " exceeds 128 bits");
  return uint128{1} << e;
}

// Moebius function by trial factorization; trivial at this scale.
int mobius(int d) {
  int result = 1;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    result = -result;
  }
  if (d > 1) result = -result;
  return result;
}

}  // namespace

CountResult count_transitive(int n) {
  if (n < 1) throw OverflowError("degree must be >= 1");
  if (n > 127)
    throw OverflowError("transitive count guarded at n <= 127, got n = " +
                        std::to_string(n));
  int128 sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0 || d % 2 == 0) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    const int128 term = static_cast<int128>(pow2_checked(n / d - 1));
    sum += mu > 0 ? term : -term;
  }
  if (sum < 0 || sum % n != 0)
    throw InternalOrderInconsistencyError("divisor sum failed to divide evenly");
  return CountResult{static_cast<uint128>(sum / n), "eq1"};
}

CountResult count_by_max_position(int n, int m) {
  if (n < 1 || m < 1 || m > n)
    throw IndexOutOfRangeError("need 1 <= m <= n");
  if (n > 127) throw OverflowError("binomial guarded at n <= 127");
  // C(n-1, m-1), exact at every step.
  uint128 r = 1;
  const int top = n - 1;
  int k = m - 1;
  if (k > top - k) k = top - k;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<uint128>(top - k + i);
    r /= static_cast<uint128>(i);
  }
  return CountResult{r, "binomial"};
}

CountResult class_size(const CycleCounter& counter) {
  if (counter.entries.empty())
    throw InconsistentCounterError("empty cycle counter");
  for (const auto& [shape, mult] : counter.entries)
    if (mult <= 0) throw InconsistentCounterError("counter multiplicities must be positive");
  const int l = counter.distinct_shapes();
  return CountResult{pow2_checked(l - 1), "eq2"};
}

std::vector<UnimodalPerm> enumerate_with_counter(const CycleCounter& counter) {
  const int n = counter.degree();
  if (n < 1) throw InconsistentCounterError("empty cycle counter");
  if (n > 16)
    throw DegreeTooLargeError("counter enumeration guarded at n <= 16, got n = " +
                              std::to_string(n));
  std::vector<UnimodalPerm> out;
  for (UnimodalPerm u : enumerate_unimodal(n))
    if (cycle_counter(u) == counter) out.push_back(std::move(u));
  return out;
}

CountResult count_containing_shape(const Shape& s, int n) {
  if (n < 1) throw OverflowError("degree must be >= 1");
  if (n > 126) throw OverflowError("containment count guarded at n <= 126");
  const int k = s.length();
  const int l = n % k;
  const int q = n / k;
  const uint128 denom = pow2_checked(k) + 1;
  uint128 numer;
  if (q % 2 == 0)
    numer = pow2_checked(n) - pow2_checked(l);
  else
    numer = pow2_checked(n) + pow2_checked(l);
  if (numer % denom != 0)
    throw InternalOrderInconsistencyError("containment formula failed to divide evenly");
  return CountResult{numer / denom, "eq7"};
}

Rational asymptotic_density_for_length(int k) {
  if (k < 1 || k > 61) throw OverflowError("density guarded at k <= 61");
  return Rational{2, (1LL << k) + 1};
}

Rational asymptotic_density(const Shape& s) {
  return asymptotic_density_for_length(s.length());
}

namespace {

uint128 factorial_checked(int n) {
  if (n > 33) throw OverflowError("factorial guarded at n <= 33");
  uint128 f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<uint128>(i);
  return f;
}

}  // namespace

CountResult sn_class_size(const std::map<int, int>& length_counts) {
  int n = 0;
  for (const auto& [k, mult] : length_counts) {
    if (k < 1 || mult < 0)
      throw InconsistentCounterError("cycle lengths must be >= 1 with counts >= 0");
    n += k * mult;
  }
  if (n < 1) throw InconsistentCounterError("empty cycle type");
  uint128 value = factorial_checked(n);
  for (const auto& [k, mult] : length_counts) {
    for (int i = 0; i < mult; ++i) {
      if (value % static_cast<uint128>(k) != 0)
        throw InternalOrderInconsistencyError("class-size product failed to divide");
      value /= static_cast<uint128>(k);
    }
    for (int i = 2; i <= mult; ++i) {
      if (value % static_cast<uint128>(i) != 0)
        throw InternalOrderInconsistencyError("class-size product failed to divide");
      value /= static_cast<uint128>(i);
    }
  }
  return CountResult{value, "sn-class"};
}

CountResult sn_without_k_cycles(int n, int k) {
  if (n < 1 || k < 1) throw InconsistentCounterError("need n >= 1 and k >= 1");
  if (n > 33) throw OverflowError("factorial guarded at n <= 33");
  // sum_{s=0}^{[n/k]} (-1)^s n! / (k^s s!), each term exact.
  int128 sum = 0;
  int128 term = static_cast<int128>(factorial_checked(n));
  for (int s = 0; s <= n / k; ++s) {
    sum += (s % 2 == 0) ? term : -term;
    if (s < n / k) {
      const int128 div = static_cast<int128>(k) * (s + 1);
      if (term % div != 0)
        throw InternalOrderInconsistencyError("derangement-style term failed to divide");
      term /= div;
    }
  }
  if (sum < 0)
    throw InternalOrderInconsistencyError("negative count from alternating sum");
  return CountResult{static_cast<uint128>(sum), "sn-no-k-cycle"};
}

}  // namespace unimodal
