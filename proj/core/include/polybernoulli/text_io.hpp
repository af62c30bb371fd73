#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "polybernoulli/bijections.hpp"
#include "polybernoulli/matrix01.hpp"
#include "polybernoulli/partition_pair.hpp"
#include "polybernoulli/permutation.hpp"

namespace polybernoulli {

// Matrix text format: one line per row, characters '0'/'1', no separators.
// A stream of matrices separates consecutive matrices by one blank line.
std::string to_text(const Matrix01& m);
Matrix01 matrix_from_text(std::string_view text);

// Permutation text format: space-separated decimal values of seq.
std::string to_text(const ExtPermutation& p);
std::string to_text(const PlainPermutation& p);

// Canonical one-line serialization of a partition pair, e.g.
//   m=1 rows={2,3}|{1} cols={3}|{1,2}
std::string to_text(const OrderedPartitionPair& pair);

// GammaCode record: line `m`, then m lines `colClass | rowClass` (sorted
// comma-separated indices), then `colSpecial | rowSpecial`, then the info
// word as space-separated integers on one line (empty line when m = 0).
// Records are self-delimiting and concatenate without separators.
std::string to_text(const GammaCode& code);
GammaCode gamma_code_from_text(std::string_view text);
GammaCode read_gamma_code(std::istream& in);

}  // namespace polybernoulli
