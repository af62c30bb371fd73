#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace polybernoulli {

/// An n x k matrix over {0,1}, stored row-major. Indices are 0-based in
/// code; the combinatorial conventions (row 1 at the top, heights counted
/// from the bottom) live in the algorithms, not here.
class Matrix01 {
 public:
  Matrix01() = default;

  Matrix01(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    bits_.assign(static_cast<std::size_t>(rows) * cols, 0);
  }

  Matrix01(int rows, int cols, std::vector<std::uint8_t> bits)
      : rows_(rows), cols_(cols), bits_(std::move(bits)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    if (bits_.size() != static_cast<std::size_t>(rows) * cols)
      throw std::invalid_argument("bit count does not match dimensions");
    for (auto& b : bits_) b = b ? 1 : 0;
  }

  /// Convenience for literals: Matrix01::from_rows({"01", "11"}).
  static Matrix01 from_rows(std::initializer_list<std::string_view> rows) {
    Matrix01 m(static_cast<int>(rows.size()),
               rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
    int r = 0;
    for (auto line : rows) {
      if (static_cast<int>(line.size()) != m.cols_)
        throw std::invalid_argument("ragged rows");
      for (int c = 0; c < m.cols_; ++c) {
        if (line[c] != '0' && line[c] != '1')
          throw std::invalid_argument("matrix rows must consist of '0'/'1'");
        m.set(r, c, line[c] == '1');
      }
      ++r;
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  bool at(int r, int c) const { return bits_[index(r, c)] != 0; }
  void set(int r, int c, bool v) { bits_[index(r, c)] = v ? 1 : 0; }

  int row_sum(int r) const {
    int s = 0;
    for (int c = 0; c < cols_; ++c) s += at(r, c);
    return s;
  }
  int col_sum(int c) const {
    int s = 0;
    for (int r = 0; r < rows_; ++r) s += at(r, c);
    return s;
  }
  int ones() const { return std::accumulate(bits_.begin(), bits_.end(), 0); }

  bool operator==(const Matrix01&) const = default;
  /// Row-major lexicographic; the canonical enumeration order for matrices.
  auto operator<=>(const Matrix01&) const = default;

 private:
  std::size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("matrix index");
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace polybernoulli
