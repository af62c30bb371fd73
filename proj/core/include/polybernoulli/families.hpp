#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string_view>
#include <variant>

#include "polybernoulli/exactmath.hpp"
#include "polybernoulli/matrix01.hpp"
#include "polybernoulli/partition_pair.hpp"
#include "polybernoulli/permutation.hpp"

namespace polybernoulli {

// ---------------------------------------------------------------------------
// Membership predicates
// ---------------------------------------------------------------------------

/// Ryser characterization: no 2x2 submatrix (rows i<i', columns j<j') equals
/// (1 0 / 0 1) or (0 1 / 1 0). Equivalently, row supports form a chain.
bool is_lonesum(const Matrix01& m);

/// Reconstruction-uniqueness oracle: true iff m is the unique 0-1 matrix
/// with its row-sum and column-sum vectors, decided by enumerating all
/// 2^(rows*cols) candidates. Guard: rows*cols <= 25 (throws otherwise).
bool is_lonesum_oracle(const Matrix01& m);

/// Sorts rows by row sum descending and columns by column sum descending.
/// For a lonesum matrix the result is a Young staircase (leading blocks of
/// 1s with non-increasing widths). Throws std::invalid_argument when the
/// input is not lonesum (the staircase shape would fail).
Matrix01 young_normal_form(const Matrix01& m);

/// Non-throwing variant: nullopt when the sorted matrix is not a staircase,
/// i.e. exactly when the input is not lonesum.
std::optional<Matrix01> try_young_normal_form(const Matrix01& m);

/// True iff no three 1s form a Gamma: positions (i,j), (i,j'), (i',j) with
/// i<i', j<j'. The fourth cell of the 2x2 submatrix is unconstrained.
bool is_gamma_free(const Matrix01& m);

/// Callan permutation: within every maximal run of left values and every
/// maximal run of right values, values increase.
bool is_callan(const ExtPermutation& p);

/// Max-ascending permutation: positions are split into left positions (the
/// first n+1) and right positions (the last k+1); two left positions are
/// equivalent iff every value between their values sits at a left position
/// (likewise for right). Within every equivalence class, values must
/// increase with position.
bool is_max_ascending(const ExtPermutation& p);

/// Vesztergombi permutation of [n+k]: every displacement p(i)-i lies in
/// [-k, n] (the non-strict bounds of the theorem).
bool is_vesztergombi(const PlainPermutation& p, int n, int k);

/// Interprets m[i][j]=1 as the edge oriented row_i -> col_j and 0 as
/// col_j -> row_i in K_{n,k}, and runs a cycle search on the resulting
/// digraph. Agrees with is_lonesum on every matrix.
bool is_acyclic_orientation(const Matrix01& m);

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

enum class FamilyId {
  Lonesum,
  GammaFree,
  Callan,
  MaxAscending,
  Vesztergombi,
  AcyclicOrientation,
  OrderedPartitionPairs,
};

inline constexpr std::array<FamilyId, 7> kAllFamilies = {
    FamilyId::Lonesum,       FamilyId::GammaFree,
    FamilyId::Callan,        FamilyId::MaxAscending,
    FamilyId::Vesztergombi,  FamilyId::AcyclicOrientation,
    FamilyId::OrderedPartitionPairs,
};

std::string_view family_name(FamilyId f);
std::optional<FamilyId> parse_family(std::string_view name);

inline bool is_matrix_family(FamilyId f) {
  return f == FamilyId::Lonesum || f == FamilyId::GammaFree ||
         f == FamilyId::AcyclicOrientation;
}
inline bool is_permutation_family(FamilyId f) {
  return f == FamilyId::Callan || f == FamilyId::MaxAscending ||
         f == FamilyId::Vesztergombi;
}

/// Size guards for exhaustive enumeration. Configuration values, not
/// constants; the CLI exposes them as --max-matrix / --max-perm.
struct EnumerationGuards {
  int max_matrix_dim = 6;  // matrix families and partition pairs: n,k <= this
  int max_perm_total = 9;  // permutation families: n+k <= this
};

using FamilyMember =
    std::variant<Matrix01, ExtPermutation, PlainPermutation, OrderedPartitionPair>;
using MemberVisitor = std::function<void(const FamilyMember&)>;

/// Calls `visit` once per member of the family, in the canonical order:
/// matrices row-major lexicographic, permutations lexicographic on seq,
/// partition pairs lexicographic on the canonical block serialization.
/// Returns the exact member count. Throws std::invalid_argument on guard
/// violations. n=0 or k=0 yields exactly one member per family.
BigNat enumerate_family(FamilyId f, int n, int k, const MemberVisitor& visit,
                        const EnumerationGuards& guards = {});

/// Count without visiting. With threads > 1 the search tree is partitioned
/// by fixed prefixes and explored concurrently; the count is independent of
/// the thread count.
BigNat count_family(FamilyId f, int n, int k, const EnumerationGuards& guards = {},
                    int threads = 1);

}  // namespace polybernoulli
