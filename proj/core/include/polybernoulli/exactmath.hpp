#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polybernoulli {

/// Arbitrary-precision nonnegative integer. Every count produced by this
/// library is exact; there is no fixed-width fast path.
using BigNat = boost::multiprecision::cpp_int;

/// Signed companion, used where cancellation can occur (alternating sums).
using BigInt = boost::multiprecision::cpp_int;

std::string to_decimal(const BigNat& value);

/// Parses a decimal string of digits. Throws std::invalid_argument on
/// anything that is not a plain nonnegative decimal integer.
BigNat bignat_from_decimal(std::string_view text);

/// C(n,m); 0 when m > n.
BigNat binomial(int n, int m);

/// Stirling number of the second kind: partitions of an a-set into b
/// nonempty classes. Boundary conventions: S(0,0)=1, S(a,0)=0 for a>0,
/// S(a,b)=0 for b>a.
BigNat stirling2(int a, int b);

/// B_n^(-k) via the closed formula
///   sum_{m=0}^{min(n,k)} m! S(n+1,m+1) m! S(k+1,m+1).
BigNat polybernoulli_formula(int n, int k);

/// B_n^(-k) via the recursion
///   B_n^(-k) = B_n^(-(k-1)) + sum_{j=1}^{n} C(n,j) B_{n-(j-1)}^(-(k-1)),
/// with base column B_n^(0) = 1. Memoized internally; the memo behaves as a
/// thread-safe cache.
BigNat polybernoulli_recursion(int n, int k);

struct SymmetryReport {
  int max_n = 0;
  int max_k = 0;
  std::vector<std::pair<int, int>> violations;  // (n,k) with B_n^(-k) != B_k^(-n)
  bool ok() const { return violations.empty(); }
};

/// Checks B_n^(-k) = B_k^(-n) for all n <= max_n, k <= max_k. Both sides are
/// evaluated through the recursion, which is not manifestly symmetric.
SymmetryReport check_symmetry(int max_n, int max_k);

struct AlternatingSumReport {
  int weight = 0;   // N; the sum runs over n+k = N
  BigInt sum = 0;   // sum_{n=0}^{N} (-1)^n B_n^(-(N-n))
  bool degenerate = false;  // N = 0 has a single term and cannot vanish
  bool ok() const { return sum == 0; }
};

/// Evaluates sum_{n+k=N} (-1)^n B_n^(-k). Vanishes for every N >= 1; N = 0
/// is flagged as the excluded degenerate case (the sum is 1).
AlternatingSumReport check_alternating_sum(int weight);

}  // namespace polybernoulli
