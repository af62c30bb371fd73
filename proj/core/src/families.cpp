#include "polybernoulli/families.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>

#include "partition_detail.hpp"

namespace polybernoulli {

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

bool is_lonesum(const Matrix01& m) {
  // Row supports must form a chain: two incomparable rows exhibit one of the
  // forbidden 2x2 patterns and vice versa.
  for (int a = 0; a < m.rows(); ++a) {
    for (int b = a + 1; b < m.rows(); ++b) {
      bool a_minus_b = false, b_minus_a = false;
      for (int c = 0; c < m.cols(); ++c) {
        const bool va = m.at(a, c), vb = m.at(b, c);
        a_minus_b |= (va && !vb);
        b_minus_a |= (!va && vb);
        if (a_minus_b && b_minus_a) return false;
      }
    }
  }
  return true;
}

bool is_lonesum_oracle(const Matrix01& m) {
  const int n = m.rows(), k = m.cols();
  if (static_cast<long long>(n) * k > 25)
    throw std::invalid_argument("is_lonesum_oracle: guard rows*cols <= 25 violated");
  std::vector<int> row_target(n), col_target(k);
  for (int r = 0; r < n; ++r) row_target[r] = m.row_sum(r);
  for (int c = 0; c < k; ++c) col_target[c] = m.col_sum(c);

  const std::uint64_t limit = 1ULL << (n * k);
  const std::uint64_t row_mask = (k == 64) ? ~0ULL : ((1ULL << k) - 1);
  int matches = 0;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    bool same = true;
    for (int r = 0; r < n && same; ++r)
      same = std::popcount((mask >> (r * k)) & row_mask) == row_target[r];
    for (int c = 0; c < k && same; ++c) {
      int s = 0;
      for (int r = 0; r < n; ++r) s += (mask >> (r * k + c)) & 1;
      same = (s == col_target[c]);
    }
    if (same && ++matches > 1) return false;
  }
  return matches == 1;
}

std::optional<Matrix01> try_young_normal_form(const Matrix01& m) {
  const int n = m.rows(), k = m.cols();
  std::vector<int> row_order(n), col_order(k);
  for (int r = 0; r < n; ++r) row_order[r] = r;
  for (int c = 0; c < k; ++c) col_order[c] = c;
  std::stable_sort(row_order.begin(), row_order.end(),
                   [&](int a, int b) { return m.row_sum(a) > m.row_sum(b); });
  std::stable_sort(col_order.begin(), col_order.end(),
                   [&](int a, int b) { return m.col_sum(a) > m.col_sum(b); });
  Matrix01 sorted(n, k);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < k; ++c)
      sorted.set(r, c, m.at(row_order[r], col_order[c]));
  // Staircase: each row is a leading block of 1s, block widths non-increasing.
  int previous_width = k;
  for (int r = 0; r < n; ++r) {
    const int width = sorted.row_sum(r);
    if (width > previous_width) return std::nullopt;
    for (int c = 0; c < k; ++c)
      if (sorted.at(r, c) != (c < width)) return std::nullopt;
    previous_width = width;
  }
  return sorted;
}

Matrix01 young_normal_form(const Matrix01& m) {
  auto result = try_young_normal_form(m);
  if (!result)
    throw std::invalid_argument("young_normal_form: input is not lonesum");
  return *std::move(result);
}

bool is_gamma_free(const Matrix01& m) {
  for (int r = 0; r < m.rows(); ++r) {
    int last_one = -1;
    for (int c = m.cols() - 1; c >= 0; --c)
      if (m.at(r, c)) { last_one = c; break; }
    for (int c = 0; c < last_one; ++c) {
      if (!m.at(r, c)) continue;
      for (int r2 = r + 1; r2 < m.rows(); ++r2)
        if (m.at(r2, c)) return false;
    }
  }
  return true;
}

namespace {

void require_well_formed(const ExtPermutation& p) {
  if (!p.well_formed())
    throw std::invalid_argument("malformed extended permutation");
}

}  // namespace

bool is_callan(const ExtPermutation& p) {
  require_well_formed(p);
  const int total = p.size();
  int start = 0;
  while (start < total) {
    int end = start;
    while (end + 1 < total && p.is_left(p.seq[end + 1]) == p.is_left(p.seq[start]))
      ++end;
    for (int t = start; t < end; ++t)
      if (p.seq[t] >= p.seq[t + 1]) return false;
    start = end + 1;
  }
  return true;
}

bool is_max_ascending(const ExtPermutation& p) {
  require_well_formed(p);
  const int total = p.size();
  // Values occupying left positions (the first n+1); maximal runs of
  // consecutive integers on one side are the position-equivalence classes.
  std::vector<char> at_left_position(total, 0);
  for (int pos = 0; pos < total; ++pos)
    at_left_position[p.seq[pos]] = pos <= p.n;
  std::vector<int> run_of(total, 0);
  int run = 0;
  for (int v = 1; v < total; ++v) {
    if (at_left_position[v] != at_left_position[v - 1]) ++run;
    run_of[v] = run;
  }
  std::vector<int> last_value(run + 1, -1);
  auto ascending_within_runs = [&](int first_pos, int last_pos) {
    std::fill(last_value.begin(), last_value.end(), -1);
    for (int pos = first_pos; pos <= last_pos; ++pos) {
      const int v = p.seq[pos];
      if (last_value[run_of[v]] > v) return false;
      last_value[run_of[v]] = v;
    }
    return true;
  };
  return ascending_within_runs(0, p.n) && ascending_within_runs(p.n + 1, total - 1);
}

bool is_vesztergombi(const PlainPermutation& p, int n, int k) {
  if (n < 0 || k < 0 || p.size() != n + k)
    throw std::invalid_argument("is_vesztergombi: size must equal n+k");
  if (!p.well_formed())
    throw std::invalid_argument("malformed permutation");
  for (int i = 0; i < p.size(); ++i) {
    const int displacement = p.seq[i] - (i + 1);
    if (displacement < -k || displacement > n) return false;
  }
  return true;
}

bool is_acyclic_orientation(const Matrix01& m) {
  // Vertices: rows 0..n-1, columns n..n+k-1. Bit 1 orients row -> column.
  const int n = m.rows(), k = m.cols(), vertices = n + k;
  std::vector<int> indegree(vertices, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < k; ++c)
      ++indegree[m.at(r, c) ? n + c : r];
  std::vector<int> ready;
  for (int v = 0; v < vertices; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  int processed = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++processed;
    if (v < n) {
      for (int c = 0; c < k; ++c)
        if (m.at(v, c) && --indegree[n + c] == 0) ready.push_back(n + c);
    } else {
      for (int r = 0; r < n; ++r)
        if (!m.at(r, v - n) && --indegree[r] == 0) ready.push_back(r);
    }
  }
  return processed == vertices;
}

// ---------------------------------------------------------------------------
// OrderedPartitionPair invariants
// ---------------------------------------------------------------------------

bool OrderedPartitionPair::well_formed(std::string* reason) const {
  if (n < 0 || k < 0 || m < 0) {
    if (reason) *reason = "negative dimension";
    return false;
  }
  return detail::partition_side_ok(n + 1, m, row_special, row_ordinary, "rows", reason) &&
         detail::partition_side_ok(k + 1, m, col_special, col_ordinary, "cols", reason);
}

// ---------------------------------------------------------------------------
// Family names
// ---------------------------------------------------------------------------

std::string_view family_name(FamilyId f) {
  switch (f) {
    case FamilyId::Lonesum: return "lonesum";
    case FamilyId::GammaFree: return "gammafree";
    case FamilyId::Callan: return "callan";
    case FamilyId::MaxAscending: return "maxascending";
    case FamilyId::Vesztergombi: return "vesztergombi";
    case FamilyId::AcyclicOrientation: return "acyclicorientation";
    case FamilyId::OrderedPartitionPairs: return "orderedpartitionpairs";
  }
  return "?";
}

std::optional<FamilyId> parse_family(std::string_view name) {
  std::string flat;
  for (char c : name)
    if (c != '-' && c != '_') flat.push_back(static_cast<char>(std::tolower(c)));
  for (FamilyId f : kAllFamilies)
    if (flat == family_name(f)) return f;
  if (flat == "orientation" || flat == "acyclic") return FamilyId::AcyclicOrientation;
  if (flat == "pairs" || flat == "partitionpairs") return FamilyId::OrderedPartitionPairs;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

enum class MatrixRule { Lonesum, GammaFree, AcyclicOrientation };

// Does writing `value` at (r,c) complete a forbidden configuration whose
// other cells were already placed (row-major fill order)?
bool completes_violation(const Matrix01& m, int r, int c, bool value, MatrixRule rule) {
  if (rule == MatrixRule::GammaFree) {
    // Gamma closes on its bottom-left cell.
    if (!value) return false;
    for (int i = 0; i < r; ++i) {
      if (!m.at(i, c)) continue;
      for (int j = c + 1; j < m.cols(); ++j)
        if (m.at(i, j)) return true;
    }
    return false;
  }
  // Lonesum patterns and oriented C4s close on their bottom-right cell; for
  // orientations, (1,0/0,1) read as edges is exactly a directed 4-cycle.
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      const bool tl = m.at(i, j), tr = m.at(i, c), bl = m.at(r, j);
      if (value ? (tl && !tr && !bl) : (!tl && tr && bl)) return true;
    }
  }
  return false;
}

template <typename Visit>
std::uint64_t backtrack_cells(Matrix01& work, int cell, MatrixRule rule, Visit&& visit) {
  const int total = work.rows() * work.cols();
  if (cell == total) {
    visit(const_cast<const Matrix01&>(work));
    return 1;
  }
  const int r = cell / work.cols(), c = cell % work.cols();
  std::uint64_t count = 0;
  for (int value = 0; value <= 1; ++value) {
    if (completes_violation(work, r, c, value != 0, rule)) continue;
    work.set(r, c, value != 0);
    count += backtrack_cells(work, cell + 1, rule, visit);
  }
  work.set(r, c, false);
  return count;
}

template <typename Visit>
std::uint64_t enumerate_matrix_family(int n, int k, MatrixRule rule, Visit&& visit) {
  Matrix01 work(n, k);
  if (n == 0 || k == 0) {
    visit(const_cast<const Matrix01&>(work));
    return 1;
  }
  return backtrack_cells(work, 0, rule, visit);
}

template <typename Pred, typename Visit>
std::uint64_t enumerate_ext_permutations(int n, int k, Pred&& pred, Visit&& visit) {
  ExtPermutation p = ExtPermutation::identity(n, k);
  std::uint64_t count = 0;
  if (n + k == 0) {
    if (pred(p)) { visit(p); ++count; }
    return count;
  }
  const auto first = p.seq.begin() + 1, last = p.seq.end() - 1;
  do {
    if (pred(p)) { visit(p); ++count; }
  } while (std::next_permutation(first, last));
  return count;
}

template <typename Visit>
std::uint64_t enumerate_vesztergombi(int n, int k, Visit&& visit) {
  PlainPermutation p = PlainPermutation::identity(n + k);
  std::uint64_t count = 0;
  do {
    if (is_vesztergombi(p, n, k)) { visit(p); ++count; }
  } while (std::next_permutation(p.seq.begin(), p.seq.end()));
  return count;
}

struct SidePartition {
  std::vector<int> special;
  std::vector<std::vector<int>> ordinary;
  auto operator<=>(const SidePartition&) const = default;
};

// Ordered partitions of {1..ground} into one special class containing
// `ground` plus m ordered ordinary classes, in canonical order.
std::vector<SidePartition> ordered_side_partitions(int ground, int m) {
  std::vector<SidePartition> result;
  std::vector<std::vector<int>> blocks;
  auto assign = [&](auto&& self, int element) -> void {
    if (element > ground) {
      if (static_cast<int>(blocks.size()) != m + 1) return;
      SidePartition base;
      std::vector<std::vector<int>> ordinary;
      for (const auto& b : blocks) {
        if (std::find(b.begin(), b.end(), ground) != b.end()) base.special = b;
        else ordinary.push_back(b);
      }
      std::sort(ordinary.begin(), ordinary.end());
      do {
        base.ordinary = ordinary;
        result.push_back(base);
      } while (std::next_permutation(ordinary.begin(), ordinary.end()));
      return;
    }
    // Index-based: the recursive call grows and shrinks `blocks`.
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i].push_back(element);
      self(self, element + 1);
      blocks[i].pop_back();
    }
    if (static_cast<int>(blocks.size()) <= m) {
      blocks.push_back({element});
      self(self, element + 1);
      blocks.pop_back();
    }
  };
  assign(assign, 1);
  std::sort(result.begin(), result.end());
  return result;
}

template <typename Visit>
std::uint64_t enumerate_partition_pairs(int n, int k, Visit&& visit) {
  std::uint64_t count = 0;
  for (int m = 0; m <= std::min(n, k); ++m) {
    const auto rows = ordered_side_partitions(n + 1, m);
    const auto cols = ordered_side_partitions(k + 1, m);
    for (const auto& row_side : rows) {
      for (const auto& col_side : cols) {
        OrderedPartitionPair pair{n, k, m, row_side.special, row_side.ordinary,
                                  col_side.special, col_side.ordinary};
        visit(const_cast<const OrderedPartitionPair&>(pair));
        ++count;
      }
    }
  }
  return count;
}

void check_guards(FamilyId f, int n, int k, const EnumerationGuards& guards) {
  if (n < 0 || k < 0) throw std::invalid_argument("enumerate_family: negative size");
  if (is_permutation_family(f)) {
    if (n + k > guards.max_perm_total)
      throw std::invalid_argument("enumerate_family: permutation guard n+k <= " +
                                  std::to_string(guards.max_perm_total) + " violated");
  } else if (n > guards.max_matrix_dim || k > guards.max_matrix_dim) {
    throw std::invalid_argument("enumerate_family: matrix guard n,k <= " +
                                std::to_string(guards.max_matrix_dim) + " violated");
  }
}

}  // namespace

BigNat enumerate_family(FamilyId f, int n, int k, const MemberVisitor& visit,
                        const EnumerationGuards& guards) {
  check_guards(f, n, k, guards);
  auto forward = [&](const auto& member) { if (visit) visit(FamilyMember(member)); };
  std::uint64_t count = 0;
  switch (f) {
    case FamilyId::Lonesum:
      count = enumerate_matrix_family(n, k, MatrixRule::Lonesum, forward);
      break;
    case FamilyId::GammaFree:
      count = enumerate_matrix_family(n, k, MatrixRule::GammaFree, forward);
      break;
    case FamilyId::AcyclicOrientation:
      count = enumerate_matrix_family(n, k, MatrixRule::AcyclicOrientation, forward);
      break;
    case FamilyId::Callan:
      count = enumerate_ext_permutations(n, k, [](const ExtPermutation& p) { return is_callan(p); }, forward);
      break;
    case FamilyId::MaxAscending:
      count = enumerate_ext_permutations(n, k, [](const ExtPermutation& p) { return is_max_ascending(p); }, forward);
      break;
    case FamilyId::Vesztergombi:
      count = enumerate_vesztergombi(n, k, forward);
      break;
    case FamilyId::OrderedPartitionPairs:
      count = enumerate_partition_pairs(n, k, forward);
      break;
  }
  return BigNat(count);
}

namespace {

// Partitioned counting: split the search tree by a fixed prefix and explore
// the parts on a small thread pool. Addition makes the result independent of
// the thread count.
std::uint64_t count_matrix_partitioned(int n, int k, MatrixRule rule, int threads) {
  std::vector<std::uint64_t> prefixes(static_cast<std::size_t>(1) << k);
  for (std::uint64_t p = 0; p < prefixes.size(); ++p) prefixes[p] = p;
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> total{0};
  auto worker = [&] {
    Matrix01 work(n, k);
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= prefixes.size()) return;
      for (int c = 0; c < k; ++c) work.set(0, c, (prefixes[t] >> c) & 1);
      total += backtrack_cells(work, k, rule, [](const Matrix01&) {});
      for (int c = 0; c < k; ++c) work.set(0, c, false);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return total.load();
}

std::uint64_t count_permutations_partitioned(FamilyId f, int n, int k, int threads) {
  // One task per choice of the first free element.
  const int total_values = n + k;
  std::atomic<int> next{0};
  std::atomic<std::uint64_t> total{0};
  auto worker = [&] {
    for (;;) {
      const int t = next.fetch_add(1);
      if (t >= total_values) return;
      std::uint64_t local = 0;
      if (f == FamilyId::Vesztergombi) {
        PlainPermutation p = PlainPermutation::identity(total_values);
        std::swap(p.seq[0], p.seq[t]);
        std::sort(p.seq.begin() + 1, p.seq.end());
        do {
          if (is_vesztergombi(p, n, k)) ++local;
        } while (std::next_permutation(p.seq.begin() + 1, p.seq.end()));
      } else {
        ExtPermutation p = ExtPermutation::identity(n, k);
        std::swap(p.seq[1], p.seq[1 + t]);
        std::sort(p.seq.begin() + 2, p.seq.end() - 1);
        do {
          if (f == FamilyId::Callan ? is_callan(p) : is_max_ascending(p)) ++local;
        } while (std::next_permutation(p.seq.begin() + 2, p.seq.end() - 1));
      }
      total += local;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return total.load();
}

}  // namespace

BigNat count_family(FamilyId f, int n, int k, const EnumerationGuards& guards, int threads) {
  check_guards(f, n, k, guards);
  if (threads <= 1 || n == 0 || k == 0 ||
      (is_permutation_family(f) && n + k < 2) ||
      f == FamilyId::OrderedPartitionPairs) {
    return enumerate_family(f, n, k, MemberVisitor{}, guards);
  }
  if (is_matrix_family(f)) {
    const MatrixRule rule = f == FamilyId::Lonesum        ? MatrixRule::Lonesum
                            : f == FamilyId::GammaFree    ? MatrixRule::GammaFree
                                                          : MatrixRule::AcyclicOrientation;
    return BigNat(count_matrix_partitioned(n, k, rule, threads));
  }
  return BigNat(count_permutations_partitioned(f, n, k, threads));
}

}  // namespace polybernoulli
