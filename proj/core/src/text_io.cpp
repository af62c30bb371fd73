#include "polybernoulli/text_io.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

namespace polybernoulli {

namespace {

std::string join_ints(const std::vector<int>& values, char separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(separator);
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<int> split_ints(std::string_view text, char separator) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(separator, start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) {
      std::size_t used = 0;
      int value = std::stoi(std::string(token), &used);
      if (used != token.size()) throw std::invalid_argument("bad integer token");
      out.push_back(value);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::string braces(const std::vector<int>& cls) { return "{" + join_ints(cls, ',') + "}"; }

}  // namespace

std::string to_text(const Matrix01& m) {
  if (m.empty()) return "";
  std::string out;
  out.reserve(static_cast<std::size_t>(m.rows()) * (m.cols() + 1));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

Matrix01 matrix_from_text(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty()) lines.push_back(line);
    start = end + 1;
  }
  if (lines.empty())
    throw std::invalid_argument("matrix_from_text: no rows (degenerate matrices have no text form)");
  const int rows = static_cast<int>(lines.size());
  const int cols = static_cast<int>(lines.front().size());
  Matrix01 m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(lines[r].size()) != cols)
      throw std::invalid_argument("matrix_from_text: ragged rows");
    for (int c = 0; c < cols; ++c) {
      const char ch = lines[r][c];
      if (ch != '0' && ch != '1')
        throw std::invalid_argument("matrix_from_text: cells must be '0' or '1'");
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

std::string to_text(const ExtPermutation& p) { return join_ints(p.seq, ' '); }

std::string to_text(const PlainPermutation& p) { return join_ints(p.seq, ' '); }

std::string to_text(const OrderedPartitionPair& pair) {
  std::string out = "m=" + std::to_string(pair.m);
  out += " rows=" + braces(pair.row_special) + "|";
  for (int i = 0; i < pair.m; ++i) {
    if (i) out.push_back(',');
    out += braces(pair.row_ordinary[i]);
  }
  out += " cols=" + braces(pair.col_special) + "|";
  for (int i = 0; i < pair.m; ++i) {
    if (i) out.push_back(',');
    out += braces(pair.col_ordinary[i]);
  }
  return out;
}

std::string to_text(const GammaCode& code) {
  std::string out = std::to_string(code.m) + "\n";
  for (int i = 0; i < code.m; ++i)
    out += join_ints(code.col_classes[i], ',') + " | " + join_ints(code.row_classes[i], ',') + "\n";
  out += join_ints(code.col_special, ',') + " | " + join_ints(code.row_special, ',') + "\n";
  out += join_ints(code.info_word, ' ') + "\n";
  return out;
}

namespace {

std::pair<std::vector<int>, std::vector<int>> parse_class_line(const std::string& line) {
  const auto bar = line.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("gamma code record: missing '|' in class line");
  return {split_ints(std::string_view(line).substr(0, bar), ','),
          split_ints(std::string_view(line).substr(bar + 1), ',')};
}

}  // namespace

GammaCode read_gamma_code(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("gamma code record: missing count line");
  int m = 0;
  try {
    m = std::stoi(line);
  } catch (const std::exception&) {
    throw std::invalid_argument("gamma code record: bad count line");
  }
  if (m < 0) throw std::invalid_argument("gamma code record: negative m");

  GammaCode code;
  code.m = m;
  for (int i = 0; i < m; ++i) {
    if (!std::getline(in, line))
      throw std::invalid_argument("gamma code record: truncated class lines");
    auto [cols, rows] = parse_class_line(line);
    code.col_classes.push_back(std::move(cols));
    code.row_classes.push_back(std::move(rows));
  }
  if (!std::getline(in, line))
    throw std::invalid_argument("gamma code record: missing specials line");
  std::tie(code.col_special, code.row_special) = parse_class_line(line);
  if (!std::getline(in, line))
    throw std::invalid_argument("gamma code record: missing info word line");
  code.info_word = split_ints(line, ' ');

  // Ground sets are implicit: [n+1] / [k+1] must be covered exactly.
  int row_ground = 0, col_ground = 0;
  for (int x : code.row_special) row_ground = std::max(row_ground, x);
  for (const auto& cls : code.row_classes)
    for (int x : cls) row_ground = std::max(row_ground, x);
  for (int x : code.col_special) col_ground = std::max(col_ground, x);
  for (const auto& cls : code.col_classes)
    for (int x : cls) col_ground = std::max(col_ground, x);
  code.n = row_ground - 1;
  code.k = col_ground - 1;

  std::string why;
  if (!code.well_formed(&why))
    throw std::invalid_argument("gamma code record: " + why);
  return code;
}

GammaCode gamma_code_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_gamma_code(in);
}

}  // namespace polybernoulli
