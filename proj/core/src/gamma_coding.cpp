#include <algorithm>
#include <map>
#include <stdexcept>

#include "polybernoulli/bijections.hpp"
#include "polybernoulli/families.hpp"
#include "partition_detail.hpp"

// The Gamma coding works on the extended matrix: the input with one all-0
// row below and one all-0 column to the right. All indices in this file are
// 1-based over that extension (rows 1..n+1, columns 1..k+1), matching the
// combinatorial description; conversion to the 0-based Matrix01 happens at
// the cell accessors.

namespace polybernoulli {

bool GammaCode::well_formed(std::string* reason) const {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  if (n < 0 || k < 0 || m < 0) return fail("negative dimension");
  if (static_cast<int>(col_classes.size()) != m ||
      static_cast<int>(row_classes.size()) != m)
    return fail("class count != m");
  if (static_cast<int>(info_word.size()) != m) return fail("info word length != m");
  if (!detail::partition_side_ok(k + 1, m, col_special, col_classes, "cols", reason))
    return false;
  if (!detail::partition_side_ok(n + 1, m, row_special, row_classes, "rows", reason))
    return false;
  for (int i = 0; i + 1 < m; ++i)
    if (col_classes[i].back() >= col_classes[i + 1].back())
      return fail("classes not in ascending important-column order");
  for (int i = 0; i < m; ++i)
    if (info_word[i] < 0 || info_word[i] > m - 1 - i)
      return fail("info word component out of range");
  return true;
}

namespace {

struct ColumnClass {
  std::vector<int> columns;  // sorted; the last one is the important column
  int important = 0;
  int top_row = 0;  // row of the class's top-1s in the extended matrix
};

}  // namespace

GammaCode gamma_encode(const Matrix01& m) {
  if (!is_gamma_free(m))
    throw std::invalid_argument("gamma_encode: input contains a Gamma");
  const int n = m.rows(), k = m.cols();
  auto cell = [&](int r, int c) {  // extended matrix, 1-based
    return r <= n && c <= k && m.at(r - 1, c - 1);
  };

  // Columns classed by height, i.e. by the row of their top-1; all-0 columns
  // form the special class (nonempty thanks to the extension column).
  std::vector<int> col_special;
  std::map<int, std::vector<int>> by_top_row;
  for (int c = 1; c <= k + 1; ++c) {
    int top = 0;
    for (int r = 1; r <= n + 1 && top == 0; ++r)
      if (cell(r, c)) top = r;
    if (top == 0) col_special.push_back(c);
    else by_top_row[top].push_back(c);
  }
  std::vector<ColumnClass> classes;
  for (auto& [top, cols] : by_top_row)
    classes.push_back({cols, cols.back(), top});
  std::sort(classes.begin(), classes.end(),
            [](const ColumnClass& a, const ColumnClass& b) { return a.important < b.important; });
  const int mc = static_cast<int>(classes.size());

  // Row label = M_0 column of the row's important 1: the top-1 when the row
  // holds one, otherwise the leading 1 among important columns. Rows with no
  // important-column 1 must be all-0 and form the special row class.
  std::vector<std::vector<int>> row_classes(mc);
  std::vector<int> row_special;
  for (int r = 1; r <= n + 1; ++r) {
    int label = -1;
    for (int i = 0; i < mc && label < 0; ++i)
      if (classes[i].top_row == r) label = i;
    for (int i = 0; i < mc && label < 0; ++i)
      if (cell(r, classes[i].important)) label = i;
    if (label < 0) {
      for (int c = 1; c <= k + 1; ++c)
        if (cell(r, c))
          throw std::logic_error("gamma_encode: nonzero row escaped the labeling");
      row_special.push_back(r);
    } else {
      row_classes[label].push_back(r);
    }
  }

  // The information-revealing process over M_0. crucial_row[i] tracks the
  // current crucial 1 of column i; it starts at the lowest important 1 and
  // only ever moves to a lower revealed 1.
  std::vector<int> crucial_row(mc);
  for (int i = 0; i < mc; ++i) crucial_row[i] = row_classes[i].back();
  std::vector<int> info(mc, 0);
  for (int i = 0; i < mc; ++i) {
    const int rho = crucial_row[i];
    int first_right = -1, below = -1;
    for (int j = i + 1; j < mc; ++j) {
      if (classes[j].top_row < rho) {
        // top-1 of column j is higher: questionable position (rho, j)
        if (first_right < 0 && cell(rho, classes[j].important)) first_right = j;
      } else {
        // lower: questionable position (top_row[j], i)
        if (cell(classes[j].top_row, classes[i].important)) {
          if (below >= 0)
            throw std::logic_error("gamma_encode: two 1s below a crucial 1");
          below = j;
        }
      }
    }
    if (first_right >= 0 && below >= 0)
      throw std::logic_error("gamma_encode: 1s both right of and below a crucial 1");
    if (first_right >= 0) {
      info[i] = first_right - i;
      crucial_row[first_right] = std::max(crucial_row[first_right], rho);
    } else if (below >= 0) {
      info[i] = below - i;
    }
  }

  GammaCode code;
  code.n = n;
  code.k = k;
  code.m = mc;
  for (const auto& cls : classes) code.col_classes.push_back(cls.columns);
  code.row_classes = std::move(row_classes);
  code.col_special = std::move(col_special);
  code.row_special = std::move(row_special);
  code.info_word = std::move(info);
  return code;
}

Matrix01 gamma_decode(const GammaCode& code) {
  std::string why;
  if (!code.well_formed(&why))
    throw std::invalid_argument("gamma_decode: malformed code: " + why);
  const int n = code.n, k = code.k, mc = code.m;
  std::vector<int> important(mc), top_row(mc);
  for (int i = 0; i < mc; ++i) {
    important[i] = code.col_classes[i].back();
    top_row[i] = code.row_classes[i].front();
  }

  Matrix01 ext(n + 1, k + 1);
  for (int i = 0; i < mc; ++i) {
    // Top-1s of the whole class sit in the top row of the matched row class;
    // every other row of the class leads with a 1 in the important column.
    for (int c : code.col_classes[i]) ext.set(top_row[i] - 1, c - 1, true);
    for (int r : code.row_classes[i])
      if (r != top_row[i]) ext.set(r - 1, important[i] - 1, true);
  }

  // Replay the information word to restore the hiding 1s.
  std::vector<int> crucial_row(mc);
  for (int i = 0; i < mc; ++i) crucial_row[i] = code.row_classes[i].back();
  for (int i = 0; i < mc; ++i) {
    const int offset = code.info_word[i];
    if (offset == 0) continue;
    const int j = i + offset;
    const int rho = crucial_row[i];
    if (top_row[j] < rho) {
      ext.set(rho - 1, important[j] - 1, true);
      crucial_row[j] = std::max(crucial_row[j], rho);
    } else {
      ext.set(top_row[j] - 1, important[i] - 1, true);
    }
  }

  Matrix01 out(n, k);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < k; ++c) out.set(r, c, ext.at(r, c));
  return out;
}

}  // namespace polybernoulli
