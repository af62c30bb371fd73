#pragma once

#include <string>
#include <vector>

namespace polybernoulli {

/// A pair of ordered set partitions with matching class counts.
///
/// The row side partitions [n+1] = {1,...,n+1}: one special class containing
/// n+1 plus m ordered ordinary classes. The column side partitions [k+1] the
/// same way around k+1. This is the "obvious" poly-Bernoulli set and the
/// common target of the lonesum and Callan codings.
///
/// Member order below defines the canonical comparison used for enumeration:
/// (m, rowSpecial, rowOrdinary, colSpecial, colOrdinary), classes as sorted
/// index vectors compared lexicographically.
struct OrderedPartitionPair {
  int n = 0;
  int k = 0;
  int m = 0;
  std::vector<int> row_special;                  // sorted, contains n+1
  std::vector<std::vector<int>> row_ordinary;    // m classes, each sorted, in class order
  std::vector<int> col_special;                  // sorted, contains k+1
  std::vector<std::vector<int>> col_ordinary;    // m classes, each sorted, in class order

  /// Checks the type invariants: both sides have exactly m nonempty ordinary
  /// classes, classes are pairwise disjoint, each side covers its ground set,
  /// and the special classes contain the added element. On failure, stores a
  /// human-readable reason when `reason` is non-null.
  bool well_formed(std::string* reason = nullptr) const;

  auto operator<=>(const OrderedPartitionPair&) const = default;
};

}  // namespace polybernoulli
