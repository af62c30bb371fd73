#pragma once

#include <string>
#include <vector>

#include "polybernoulli/matrix01.hpp"
#include "polybernoulli/partition_pair.hpp"
#include "polybernoulli/permutation.hpp"

namespace polybernoulli {

// ---------------------------------------------------------------------------
// Lonesum coding (sum classes of the extended matrix)
// ---------------------------------------------------------------------------

/// Extends m with an all-0 row and column, partitions rows/columns by equal
/// sum (zero-sum classes are the specials), and orders ordinary classes by
/// decreasing sum. Throws std::invalid_argument when m is not lonesum.
OrderedPartitionPair lonesum_encode(const Matrix01& m);

/// Inverse of lonesum_encode. A cell (i,j) is 1 iff the class ranks satisfy
/// rowrank(i) + colrank(j) <= m+1 (rank 1 = largest sum); special rows and
/// columns are all-0. Throws on malformed pairs.
Matrix01 lonesum_decode(const OrderedPartitionPair& pair);

// ---------------------------------------------------------------------------
// Callan coding and the max-ascending duality
// ---------------------------------------------------------------------------

/// Reads off the maximal left-value and right-value blocks of a Callan
/// permutation. The block of 0 / of n+k+1 becomes the special class; the
/// remaining blocks become the ordinary classes in order of appearance.
/// Left values are shifted to the [n+1] ground-set convention (0 -> n+1),
/// right values to [k+1] (v -> v-n). Throws when p is not Callan.
OrderedPartitionPair callan_encode(const ExtPermutation& p);

/// Inverse of callan_encode: emits the special left block ascending, then
/// for i = 1..m the i-th ordinary right block followed by the i-th ordinary
/// left block (each ascending), then the special right block ascending.
ExtPermutation callan_decode(const OrderedPartitionPair& pair);

/// The functional inverse of p as a bijection on {0,...,n+k+1}. Maps Callan
/// permutations onto max-ascending permutations. Throws when p is not Callan.
ExtPermutation callan_to_maxascending(const ExtPermutation& p);

// ---------------------------------------------------------------------------
// Orientation coding
// ---------------------------------------------------------------------------

/// The identity map, exposed for API symmetry. Documents the bit convention
/// used by is_acyclic_orientation: 1 = row-vertex -> column-vertex.
Matrix01 orientation_matrix_roundtrip(const Matrix01& m);

// ---------------------------------------------------------------------------
// Gamma coding (the main bijection)
// ---------------------------------------------------------------------------

/// Code of a Gamma-free matrix: matched ordered partitions of the extended
/// rows/columns plus the information word of the revealing process.
///
/// col_classes[i] and row_classes[i] are the i-th matched pair, listed by
/// ascending important-column index (= max element of col_classes[i], which
/// also fixes the column order of M_0). info_word[i] = 0 encodes "no 1 under
/// or after the crucial 1 of column i+1"; info_word[i] = v >= 1 selects the
/// questionable position associated with M_0 column i+1+v.
struct GammaCode {
  int n = 0;
  int k = 0;
  int m = 0;
  std::vector<std::vector<int>> col_classes;  // each sorted; subsets of [k+1]
  std::vector<std::vector<int>> row_classes;  // each sorted; subsets of [n+1]
  std::vector<int> col_special;               // sorted; contains k+1
  std::vector<int> row_special;               // sorted; contains n+1
  std::vector<int> info_word;                 // size m; info_word[i] in [0, m-1-i]

  bool well_formed(std::string* reason = nullptr) const;
  auto operator<=>(const GammaCode&) const = default;
};

/// Encodes a Gamma-free matrix: extends it by an all-0 row and column,
/// classes columns by equal height and rows by equal indentation, pairs the
/// classes through the top-1 matching, and runs the information-revealing
/// process over the important columns. Throws when m is not Gamma-free.
GammaCode gamma_encode(const Matrix01& m);

/// Reconstructs the unique Gamma-free matrix of a well-formed code: places
/// top-1s and leading 1s from the partitions, replays the information word
/// to recover the hiding 1s, and strips the extension. Throws on malformed
/// codes or out-of-range info word components.
Matrix01 gamma_decode(const GammaCode& code);

// ---------------------------------------------------------------------------
// Recursion decomposition (first-column split)
// ---------------------------------------------------------------------------

/// Decomposition of a Gamma-free matrix along its first column.
/// chosen_count == 0 means the first column was all-0 and `remainder` is the
/// n x (k-1) rest. Otherwise chosen_rows lists (1-based, ascending) the rows
/// whose first entry is 1, and `remainder` is the (n-j+1) x (k-1) matrix left
/// after dropping the first column and the first j-1 chosen rows (those are
/// forced to carry no further 1s; the last chosen row is kept).
struct RecursionSplit {
  int chosen_count = 0;
  std::vector<int> chosen_rows;
  Matrix01 remainder;

  bool operator==(const RecursionSplit&) const = default;
};

/// Splits a Gamma-free matrix with k >= 1. Throws std::invalid_argument on
/// precondition violations; a type-C row among the first j-1 chosen rows is
/// impossible for Gamma-free input and raises std::logic_error.
RecursionSplit recursion_split(const Matrix01& m);

/// Exact inverse of recursion_split for an n x k result. Throws on dimension
/// mismatches and on remainders that would create a Gamma.
Matrix01 recursion_join(const RecursionSplit& split, int n, int k);

// ---------------------------------------------------------------------------
// The parity-reversing phi map
// ---------------------------------------------------------------------------

/// The alternating-sum bijection C_n^(k)(l) -> C_{n-1}^(k+1)(r): the left
/// value 1 becomes a new smallest right value; if 1 did not immediately
/// follow the leading 0, the right block preceding it moves to just after
/// the leading 0. The image is relabeled to the (n-1, k+1) convention.
/// Requires n >= 1, p Callan, and a left value right after the leading 0.
ExtPermutation phi(const ExtPermutation& p);

/// Exact inverse of phi. Requires k >= 1, p Callan, and a right value right
/// after the leading 0.
ExtPermutation phi_inverse(const ExtPermutation& p);

}  // namespace polybernoulli
