#include "polybernoulli/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

namespace polybernoulli {

std::string to_decimal(const BigNat& value) { return value.str(); }

BigNat bignat_from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("not a nonnegative decimal integer");
  return BigNat(std::string(text));
}

BigNat binomial(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("binomial: negative argument");
  if (m > n) return 0;
  m = std::min(m, n - m);
  BigNat result = 1;
  for (int i = 0; i < m; ++i) {
    result *= n - i;
    result /= i + 1;  // exact: the partial product is always divisible
  }
  return result;
}

BigNat stirling2(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("stirling2: negative argument");
  if (b > a) return 0;
  if (a == 0) return 1;  // S(0,0)
  if (b == 0) return 0;  // S(a,0), a > 0
  // One row of S(i, *) at a time via S(i,j) = j S(i-1,j) + S(i-1,j-1).
  std::vector<BigNat> row(static_cast<std::size_t>(b) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= a; ++i) {
    for (int j = std::min(i, b); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[b];
}

BigNat polybernoulli_formula(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("polybernoulli: negative index");
  BigNat total = 0;
  BigNat mfact = 1;
  for (int m = 0; m <= std::min(n, k); ++m) {
    if (m > 0) mfact *= m;
    total += mfact * stirling2(n + 1, m + 1) * mfact * stirling2(k + 1, m + 1);
  }
  return total;
}

namespace {

std::mutex g_recursion_mutex;
std::map<std::pair<int, int>, BigNat> g_recursion_memo;

BigNat recursion_locked(int n, int k) {
  if (k == 0) return 1;
  auto it = g_recursion_memo.find({n, k});
  if (it != g_recursion_memo.end()) return it->second;
  BigNat value = recursion_locked(n, k - 1);
  for (int j = 1; j <= n; ++j)
    value += binomial(n, j) * recursion_locked(n - (j - 1), k - 1);
  g_recursion_memo.emplace(std::pair{n, k}, value);
  return value;
}

}  // namespace

BigNat polybernoulli_recursion(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("polybernoulli: negative index");
  std::lock_guard lock(g_recursion_mutex);
  return recursion_locked(n, k);
}

SymmetryReport check_symmetry(int max_n, int max_k) {
  SymmetryReport report{max_n, max_k, {}};
  for (int n = 0; n <= max_n; ++n)
    for (int k = 0; k <= max_k; ++k)
      if (polybernoulli_recursion(n, k) != polybernoulli_recursion(k, n))
        report.violations.emplace_back(n, k);
  return report;
}

AlternatingSumReport check_alternating_sum(int weight) {
  if (weight < 0) throw std::invalid_argument("alternating sum: negative weight");
  AlternatingSumReport report;
  report.weight = weight;
  report.degenerate = (weight == 0);
  for (int n = 0; n <= weight; ++n) {
    BigInt term = polybernoulli_formula(n, weight - n);
    report.sum += (n % 2 == 0) ? term : -term;
  }
  return report;
}

}  // namespace polybernoulli
