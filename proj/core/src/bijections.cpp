#include "polybernoulli/bijections.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "polybernoulli/families.hpp"

namespace polybernoulli {

// ---------------------------------------------------------------------------
// Lonesum coding
// ---------------------------------------------------------------------------

OrderedPartitionPair lonesum_encode(const Matrix01& m) {
  if (!is_lonesum(m))
    throw std::invalid_argument("lonesum_encode: input is not lonesum");
  const int n = m.rows(), k = m.cols();

  // Sums of the extended matrix; the added row n+1 / column k+1 have sum 0.
  auto classify = [](int ground, auto&& sum_of) {
    std::map<int, std::vector<int>, std::greater<int>> by_sum;
    for (int i = 1; i <= ground; ++i) by_sum[sum_of(i)].push_back(i);
    std::vector<int> special = by_sum.count(0) ? by_sum.at(0) : std::vector<int>{};
    by_sum.erase(0);
    std::vector<std::vector<int>> ordinary;
    for (auto& [sum, members] : by_sum) ordinary.push_back(members);
    return std::pair{special, ordinary};
  };
  auto [row_special, row_ordinary] =
      classify(n + 1, [&](int r) { return r <= n ? m.row_sum(r - 1) : 0; });
  auto [col_special, col_ordinary] =
      classify(k + 1, [&](int c) { return c <= k ? m.col_sum(c - 1) : 0; });
  if (row_ordinary.size() != col_ordinary.size())
    throw std::logic_error("lonesum_encode: class count mismatch on a lonesum matrix");
  return OrderedPartitionPair{n, k, static_cast<int>(row_ordinary.size()),
                              row_special, row_ordinary, col_special, col_ordinary};
}

Matrix01 lonesum_decode(const OrderedPartitionPair& pair) {
  std::string why;
  if (!pair.well_formed(&why))
    throw std::invalid_argument("lonesum_decode: malformed pair: " + why);
  // rank 1 = largest sum; cell is 1 iff rowrank + colrank <= m+1.
  std::vector<int> row_rank(pair.n + 2, 0), col_rank(pair.k + 2, 0);
  for (int i = 0; i < pair.m; ++i)
    for (int x : pair.row_ordinary[i]) row_rank[x] = i + 1;
  for (int i = 0; i < pair.m; ++i)
    for (int x : pair.col_ordinary[i]) col_rank[x] = i + 1;
  Matrix01 m(pair.n, pair.k);
  for (int r = 1; r <= pair.n; ++r)
    for (int c = 1; c <= pair.k; ++c)
      m.set(r - 1, c - 1,
            row_rank[r] > 0 && col_rank[c] > 0 && row_rank[r] + col_rank[c] <= pair.m + 1);
  return m;
}

// ---------------------------------------------------------------------------
// Callan coding and duality
// ---------------------------------------------------------------------------

namespace {

struct Blocks {
  std::vector<std::vector<int>> left;   // in order of appearance
  std::vector<std::vector<int>> right;  // in order of appearance
};

Blocks maximal_blocks(const ExtPermutation& p) {
  Blocks b;
  int start = 0;
  const int total = p.size();
  while (start < total) {
    int end = start;
    while (end + 1 < total && p.is_left(p.seq[end + 1]) == p.is_left(p.seq[start]))
      ++end;
    std::vector<int> block(p.seq.begin() + start, p.seq.begin() + end + 1);
    (p.is_left(p.seq[start]) ? b.left : b.right).push_back(std::move(block));
    start = end + 1;
  }
  return b;
}

}  // namespace

OrderedPartitionPair callan_encode(const ExtPermutation& p) {
  if (!is_callan(p))
    throw std::invalid_argument("callan_encode: input is not a Callan permutation");
  Blocks blocks = maximal_blocks(p);
  // Left values shift to the [n+1] convention (0 -> n+1), right values to
  // [k+1] (v -> v-n). The block of 0 / of n+k+1 is the special class.
  auto map_left = [&](std::vector<int> block) {
    for (int& v : block) v = (v == 0) ? p.n + 1 : v;
    std::sort(block.begin(), block.end());
    return block;
  };
  auto map_right = [&](std::vector<int> block) {
    for (int& v : block) v -= p.n;
    std::sort(block.begin(), block.end());
    return block;
  };
  OrderedPartitionPair pair;
  pair.n = p.n;
  pair.k = p.k;
  pair.row_special = map_left(blocks.left.front());
  for (std::size_t i = 1; i < blocks.left.size(); ++i)
    pair.row_ordinary.push_back(map_left(blocks.left[i]));
  pair.col_special = map_right(blocks.right.back());
  for (std::size_t i = 0; i + 1 < blocks.right.size(); ++i)
    pair.col_ordinary.push_back(map_right(blocks.right[i]));
  pair.m = static_cast<int>(pair.row_ordinary.size());
  if (pair.row_ordinary.size() != pair.col_ordinary.size())
    throw std::logic_error("callan_encode: block counts diverged");
  return pair;
}

ExtPermutation callan_decode(const OrderedPartitionPair& pair) {
  std::string why;
  if (!pair.well_formed(&why))
    throw std::invalid_argument("callan_decode: malformed pair: " + why);
  ExtPermutation p;
  p.n = pair.n;
  p.k = pair.k;
  auto emit_left = [&](const std::vector<int>& block) {
    std::vector<int> values;
    for (int v : block) values.push_back(v == pair.n + 1 ? 0 : v);
    std::sort(values.begin(), values.end());
    p.seq.insert(p.seq.end(), values.begin(), values.end());
  };
  auto emit_right = [&](const std::vector<int>& block) {
    std::vector<int> values;
    for (int v : block) values.push_back(v + pair.n);
    std::sort(values.begin(), values.end());
    p.seq.insert(p.seq.end(), values.begin(), values.end());
  };
  emit_left(pair.row_special);
  for (int i = 0; i < pair.m; ++i) {
    emit_right(pair.col_ordinary[i]);
    emit_left(pair.row_ordinary[i]);
  }
  emit_right(pair.col_special);
  return p;
}

ExtPermutation callan_to_maxascending(const ExtPermutation& p) {
  if (!is_callan(p))
    throw std::invalid_argument("callan_to_maxascending: input is not Callan");
  ExtPermutation inverse{p.n, p.k, std::vector<int>(p.seq.size())};
  for (int pos = 0; pos < p.size(); ++pos) inverse.seq[p.seq[pos]] = pos;
  return inverse;
}

// ---------------------------------------------------------------------------
// Orientation coding
// ---------------------------------------------------------------------------

Matrix01 orientation_matrix_roundtrip(const Matrix01& m) { return m; }

// ---------------------------------------------------------------------------
// Recursion decomposition
// ---------------------------------------------------------------------------

namespace {

Matrix01 drop_first_column(const Matrix01& m, const std::vector<char>& keep_row) {
  int kept = 0;
  for (char c : keep_row) kept += c;
  Matrix01 out(kept, m.cols() - 1);
  int r_out = 0;
  for (int r = 0; r < m.rows(); ++r) {
    if (!keep_row[r]) continue;
    for (int c = 1; c < m.cols(); ++c) out.set(r_out, c - 1, m.at(r, c));
    ++r_out;
  }
  return out;
}

}  // namespace

RecursionSplit recursion_split(const Matrix01& m) {
  if (m.cols() < 1)
    throw std::invalid_argument("recursion_split: k >= 1 required");
  if (!is_gamma_free(m))
    throw std::invalid_argument("recursion_split: input contains a Gamma");
  std::vector<int> chosen;  // 1-based rows whose first entry is 1
  for (int r = 0; r < m.rows(); ++r)
    if (m.at(r, 0)) chosen.push_back(r + 1);

  std::vector<char> keep(m.rows(), 1);
  // All chosen rows but the last are forced type B (one leading 1, rest 0s).
  for (std::size_t i = 0; i + 1 < chosen.size(); ++i) {
    const int r = chosen[i] - 1;
    if (m.row_sum(r) != 1)
      throw std::logic_error("recursion_split: type-C row among the first j-1 chosen rows");
    keep[r] = 0;
  }
  return RecursionSplit{static_cast<int>(chosen.size()), chosen,
                        drop_first_column(m, keep)};
}

Matrix01 recursion_join(const RecursionSplit& split, int n, int k) {
  if (n < 0 || k < 1)
    throw std::invalid_argument("recursion_join: need n >= 0, k >= 1");
  const int j = split.chosen_count;
  if (j < 0 || static_cast<int>(split.chosen_rows.size()) != j)
    throw std::invalid_argument("recursion_join: chosen row count mismatch");
  if (!std::is_sorted(split.chosen_rows.begin(), split.chosen_rows.end()) ||
      std::adjacent_find(split.chosen_rows.begin(), split.chosen_rows.end()) !=
          split.chosen_rows.end())
    throw std::invalid_argument("recursion_join: chosen rows must be strictly ascending");
  for (int r : split.chosen_rows)
    if (r < 1 || r > n) throw std::invalid_argument("recursion_join: chosen row out of range");
  const int expected_rows = (j == 0) ? n : n - j + 1;
  if (split.remainder.rows() != expected_rows || split.remainder.cols() != k - 1)
    throw std::invalid_argument("recursion_join: remainder dimension mismatch");
  if (!is_gamma_free(split.remainder))
    throw std::invalid_argument("recursion_join: remainder would create a Gamma");

  std::vector<char> chosen_mask(n + 1, 0), dropped(n + 1, 0);
  for (int r : split.chosen_rows) chosen_mask[r] = 1;
  for (int i = 0; i + 1 < j; ++i) dropped[split.chosen_rows[i]] = 1;

  Matrix01 m(n, k);
  int r_in = 0;
  for (int r = 1; r <= n; ++r) {
    m.set(r - 1, 0, chosen_mask[r]);
    if (dropped[r]) continue;  // forced type B: nothing after the leading 1
    for (int c = 1; c < k; ++c) m.set(r - 1, c, split.remainder.at(r_in, c - 1));
    ++r_in;
  }
  return m;
}

// ---------------------------------------------------------------------------
// phi
// ---------------------------------------------------------------------------

namespace {

// Tagged value: .first is true for right values. The fresh right value
// created by phi sorts below every existing right value; the restored left 1
// created by phi_inverse slots between 0 and 2.
using Tagged = std::pair<bool, int>;

}  // namespace

ExtPermutation phi(const ExtPermutation& p) {
  if (!is_callan(p)) throw std::invalid_argument("phi: input is not Callan");
  if (p.n < 1) throw std::invalid_argument("phi: n >= 1 required");
  if (!p.is_left(p.seq[1]))
    throw std::invalid_argument("phi: input must lie in the left class C_n^(k)(l)");

  std::vector<Tagged> s;
  for (int v : p.seq) s.emplace_back(!p.is_left(v), v);
  const Tagged fresh_right{true, -1};
  const int pos1 =
      static_cast<int>(std::find(s.begin(), s.end(), Tagged{false, 1}) - s.begin());

  std::vector<Tagged> out;
  if (pos1 == 1) {
    // `1` immediately follows the leading 0: substitute it in place.
    out = s;
    out[pos1] = fresh_right;
  } else {
    // `1` opens a left block preceded by a right block R; substitute it and
    // move R right after the leading 0.
    int begin = pos1 - 1;
    while (s[begin - 1].first) --begin;
    out.push_back(s[0]);
    out.insert(out.end(), s.begin() + begin, s.begin() + pos1);  // R
    out.insert(out.end(), s.begin() + 1, s.begin() + begin);
    out.push_back(fresh_right);
    out.insert(out.end(), s.begin() + pos1 + 1, s.end());
  }

  // Relabel to the (n-1, k+1) convention: left {0,2,...,n} collapses to
  // {0,...,n-1}; the fresh right value becomes n, old rights keep their value.
  ExtPermutation image;
  image.n = p.n - 1;
  image.k = p.k + 1;
  for (const auto& [right, v] : out)
    image.seq.push_back(right ? (v == -1 ? p.n : v) : (v == 0 ? 0 : v - 1));
  return image;
}

ExtPermutation phi_inverse(const ExtPermutation& p) {
  if (!is_callan(p)) throw std::invalid_argument("phi_inverse: input is not Callan");
  if (p.k < 1) throw std::invalid_argument("phi_inverse: k >= 1 required");
  if (p.is_left(p.seq[1]))
    throw std::invalid_argument("phi_inverse: input must lie in the right class C_n^(k)(r)");

  const int smallest_right = p.n + 1;
  std::vector<Tagged> s;
  for (int v : p.seq) s.emplace_back(!p.is_left(v), v);
  const Tagged restored_one{false, -1};  // becomes left value 1 after relabeling
  const int pos0 = static_cast<int>(
      std::find(s.begin(), s.end(), Tagged{true, smallest_right}) - s.begin());

  std::vector<Tagged> out;
  if (pos0 == 1) {
    out = s;
    out[pos0] = restored_one;
  } else {
    // The block right after the leading 0 is the moved R; put it back just
    // before the restored 1.
    int end = 1;
    while (s[end + 1].first) ++end;
    out.push_back(s[0]);
    out.insert(out.end(), s.begin() + end + 1, s.begin() + pos0);
    out.insert(out.end(), s.begin() + 1, s.begin() + end + 1);  // R
    out.push_back(restored_one);
    out.insert(out.end(), s.begin() + pos0 + 1, s.end());
  }

  ExtPermutation preimage;
  preimage.n = p.n + 1;
  preimage.k = p.k - 1;
  for (const auto& [right, v] : out)
    preimage.seq.push_back(right ? v : (v == -1 ? 1 : (v == 0 ? 0 : v + 1)));
  return preimage;
}

}  // namespace polybernoulli
