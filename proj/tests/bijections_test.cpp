#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "polybernoulli/bijections.hpp"
#include "polybernoulli/checks.hpp"
#include "polybernoulli/exactmath.hpp"
#include "polybernoulli/families.hpp"
#include "polybernoulli/text_io.hpp"
#include "oracles.hpp"

using namespace polybernoulli;

namespace {

ExtPermutation ext(int n, int k, std::vector<int> seq) {
  return ExtPermutation{n, k, std::move(seq)};
}

const Matrix01 kExampleMatrix = Matrix01::from_rows({
    "01000000",
    "00000001",
    "10100000",
    "01010100",
    "00100000",
    "00000010",
});

std::vector<Matrix01> gamma_free_matrices(int n, int k) {
  std::vector<Matrix01> out;
  enumerate_family(FamilyId::GammaFree, n, k,
                   [&](const FamilyMember& m) { out.push_back(std::get<Matrix01>(m)); });
  return out;
}

std::vector<Matrix01> lonesum_matrices(int n, int k) {
  std::vector<Matrix01> out;
  enumerate_family(FamilyId::Lonesum, n, k,
                   [&](const FamilyMember& m) { out.push_back(std::get<Matrix01>(m)); });
  return out;
}

std::vector<OrderedPartitionPair> all_pairs(int n, int k) {
  std::vector<OrderedPartitionPair> out;
  enumerate_family(FamilyId::OrderedPartitionPairs, n, k, [&](const FamilyMember& m) {
    out.push_back(std::get<OrderedPartitionPair>(m));
  });
  return out;
}

Matrix01 extend(const Matrix01& m) {
  Matrix01 e(m.rows() + 1, m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) e.set(r, c, m.at(r, c));
  return e;
}

Matrix01 important_submatrix(const Matrix01& extended, const GammaCode& code) {
  Matrix01 m0(extended.rows(), code.m);
  for (int i = 0; i < code.m; ++i)
    for (int r = 0; r < extended.rows(); ++r)
      m0.set(r, i, extended.at(r, code.col_classes[i].back() - 1));
  return m0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Lonesum coding
// ---------------------------------------------------------------------------

TEST_CASE("lonesum_encode examples") {
  const OrderedPartitionPair zero = lonesum_encode(Matrix01(3, 2));
  CHECK(zero.m == 0);
  CHECK(zero.row_special == std::vector<int>{1, 2, 3, 4});
  CHECK(zero.col_special == std::vector<int>{1, 2, 3});

  const OrderedPartitionPair p = lonesum_encode(Matrix01::from_rows({"11", "10"}));
  CHECK(p.m == 2);
  CHECK(p.row_ordinary == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(p.col_ordinary == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(p.row_special == std::vector<int>{3});
  CHECK(p.col_special == std::vector<int>{3});

  const OrderedPartitionPair ones = lonesum_encode(Matrix01::from_rows({"11", "11"}));
  CHECK(ones.m == 1);
  CHECK(ones.row_ordinary == std::vector<std::vector<int>>{{1, 2}});
  CHECK(ones.col_ordinary == std::vector<std::vector<int>>{{1, 2}});

  CHECK_THROWS_AS(lonesum_encode(Matrix01::from_rows({"10", "01"})), std::invalid_argument);
}

TEST_CASE("lonesum_decode examples") {
  OrderedPartitionPair zero{2, 2, 0, {1, 2, 3}, {}, {1, 2, 3}, {}};
  CHECK(lonesum_decode(zero) == Matrix01(2, 2));

  OrderedPartitionPair full{2, 2, 1, {3}, {{1, 2}}, {3}, {{1, 2}}};
  CHECK(lonesum_decode(full) == Matrix01::from_rows({"11", "11"}));

  OrderedPartitionPair bad{2, 2, 1, {3}, {{1}}, {3}, {{1, 2}}};  // row 2 uncovered
  CHECK_THROWS_AS(lonesum_decode(bad), std::invalid_argument);
}

TEST_CASE("lonesum coding round-trips") {
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k)
      for (const auto& m : lonesum_matrices(n, k)) {
        const OrderedPartitionPair code = lonesum_encode(m);
        CHECK(code.well_formed());
        CHECK(lonesum_decode(code) == m);
      }
  // The other direction runs over the whole code space.
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k) {
      const auto pairs = all_pairs(n, k);
      CHECK(BigNat(pairs.size()) == polybernoulli_formula(n, k));
      for (const auto& pair : pairs) {
        const Matrix01 m = lonesum_decode(pair);
        CHECK(is_lonesum(m));
        CHECK(lonesum_encode(m) == pair);
      }
    }
}

// ---------------------------------------------------------------------------
// Callan coding and duality
// ---------------------------------------------------------------------------

TEST_CASE("callan_encode examples") {
  const OrderedPartitionPair trivial = callan_encode(ext(2, 2, {0, 1, 2, 3, 4, 5}));
  CHECK(trivial.m == 0);
  CHECK(trivial.row_special == std::vector<int>{1, 2, 3});
  CHECK(trivial.col_special == std::vector<int>{1, 2, 3});

  // Blocks {0},{3},{1},{4},{2},{5}; right values shifted to the [k+1] range.
  const OrderedPartitionPair interleaved = callan_encode(ext(2, 2, {0, 3, 1, 4, 2, 5}));
  CHECK(interleaved.m == 2);
  CHECK(interleaved.row_ordinary == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(interleaved.col_ordinary == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(interleaved.row_special == std::vector<int>{3});
  CHECK(interleaved.col_special == std::vector<int>{3});

  // Blocks {0,2},{3,4},{1},{5}.
  const OrderedPartitionPair merged = callan_encode(ext(2, 2, {0, 2, 3, 4, 1, 5}));
  CHECK(merged.m == 1);
  CHECK(merged.row_ordinary == std::vector<std::vector<int>>{{1}});
  CHECK(merged.col_ordinary == std::vector<std::vector<int>>{{1, 2}});
  CHECK(merged.row_special == std::vector<int>{2, 3});

  CHECK_THROWS_AS(callan_encode(ext(2, 2, {0, 2, 1, 3, 4, 5})), std::invalid_argument);
}

TEST_CASE("callan_decode examples and round-trips") {
  OrderedPartitionPair trivial{2, 3, 0, {1, 2, 3}, {}, {1, 2, 3, 4}, {}};
  CHECK(callan_decode(trivial).seq == std::vector<int>{0, 1, 2, 3, 4, 5, 6});

  // decode is injective over the whole pair space and lands in the family.
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k) {
      std::set<std::vector<int>> images;
      const auto pairs = all_pairs(n, k);
      for (const auto& pair : pairs) {
        const ExtPermutation p = callan_decode(pair);
        CHECK(is_callan(p));
        CHECK(images.insert(p.seq).second);
        CHECK(callan_encode(p) == pair);
      }
      if (n == 2 && k == 2) CHECK(images.size() == 14);
      // decode is onto: the image count equals the family size.
      std::size_t members = 0;
      enumerate_family(FamilyId::Callan, n, k,
                       [&](const FamilyMember&) { ++members; });
      CHECK(members == images.size());
    }
}

TEST_CASE("callan_to_maxascending") {
  const ExtPermutation identity = ExtPermutation::identity(2, 2);
  CHECK(callan_to_maxascending(identity) == identity);
  CHECK(callan_to_maxascending(ext(2, 2, {0, 3, 1, 4, 2, 5})).seq ==
        std::vector<int>{0, 2, 4, 1, 3, 5});
  CHECK_THROWS_AS(callan_to_maxascending(ext(2, 2, {0, 2, 1, 3, 4, 5})),
                  std::invalid_argument);

  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k) {
      std::vector<std::vector<int>> mapped, ascending;
      enumerate_family(FamilyId::Callan, n, k, [&](const FamilyMember& member) {
        const ExtPermutation image =
            callan_to_maxascending(std::get<ExtPermutation>(member));
        CHECK(is_max_ascending(image));
        mapped.push_back(image.seq);
      });
      enumerate_family(FamilyId::MaxAscending, n, k, [&](const FamilyMember& member) {
        ascending.push_back(std::get<ExtPermutation>(member).seq);
      });
      std::sort(mapped.begin(), mapped.end());
      std::sort(ascending.begin(), ascending.end());
      CHECK(mapped == ascending);
    }
}

// ---------------------------------------------------------------------------
// Orientation coding
// ---------------------------------------------------------------------------

TEST_CASE("orientation_matrix_roundtrip is the identity") {
  CHECK(orientation_matrix_roundtrip(kExampleMatrix) == kExampleMatrix);
  const Matrix01 ones = Matrix01::from_rows({"11", "11"});
  CHECK(orientation_matrix_roundtrip(ones) == ones);
  oracles::for_all_matrices(2, 3, [](const Matrix01& m) {
    CHECK(orientation_matrix_roundtrip(m) == m);
  });
}

// ---------------------------------------------------------------------------
// Gamma coding
// ---------------------------------------------------------------------------

TEST_CASE("gamma_encode on the worked 6x8 example") {
  const GammaCode code = gamma_encode(kExampleMatrix);
  CHECK(code.n == 6);
  CHECK(code.k == 8);
  CHECK(code.m == 5);
  CHECK(code.col_classes ==
        std::vector<std::vector<int>>{{2}, {1, 3}, {4, 6}, {7}, {8}});
  CHECK(code.row_classes ==
        std::vector<std::vector<int>>{{1}, {3, 5}, {4}, {6}, {2}});
  CHECK(code.row_special == std::vector<int>{7});
  CHECK(code.col_special == std::vector<int>{5, 9});
  // The lone hiding 1 (row 4, column 2) is revealed while processing the
  // first important column, two columns ahead.
  CHECK(code.info_word == std::vector<int>{2, 0, 0, 0, 0});
  CHECK(gamma_decode(code) == kExampleMatrix);
}

TEST_CASE("gamma_encode trivial cases") {
  const GammaCode zero = gamma_encode(Matrix01(3, 2));
  CHECK(zero.m == 0);
  CHECK(zero.info_word.empty());
  CHECK(zero.row_special == std::vector<int>{1, 2, 3, 4});
  CHECK(zero.col_special == std::vector<int>{1, 2, 3});
  CHECK(gamma_decode(zero) == Matrix01(3, 2));

  const GammaCode unit = gamma_encode(Matrix01::from_rows({"1"}));
  CHECK(unit.m == 1);
  CHECK(unit.col_classes == std::vector<std::vector<int>>{{1}});
  CHECK(unit.row_classes == std::vector<std::vector<int>>{{1}});
  CHECK(unit.info_word == std::vector<int>{0});

  CHECK_THROWS_AS(gamma_encode(Matrix01::from_rows({"11", "10"})), std::invalid_argument);
}

TEST_CASE("gamma code well-formedness rejects malformed codes") {
  GammaCode good = gamma_encode(Matrix01::from_rows({"10", "01"}));
  CHECK(good.well_formed());

  GammaCode swapped = good;
  std::swap(swapped.col_classes[0], swapped.col_classes[1]);
  CHECK_FALSE(swapped.well_formed());  // important columns out of order
  CHECK_THROWS_AS(gamma_decode(swapped), std::invalid_argument);

  GammaCode out_of_range = good;
  out_of_range.info_word[0] = 2;
  CHECK_FALSE(out_of_range.well_formed());
  CHECK_THROWS_AS(gamma_decode(out_of_range), std::invalid_argument);

  GammaCode overlapping = good;
  overlapping.row_special.push_back(1);
  CHECK_FALSE(overlapping.well_formed());
}

TEST_CASE("gamma coding round-trips exhaustively") {
  for (int n = 0; n <= 4; ++n) {
    for (int k = 0; k <= 4; ++k) {
      const auto matrices = gamma_free_matrices(n, k);
      CHECK(BigNat(matrices.size()) == polybernoulli_formula(n, k));
      for (const auto& m : matrices) {
        const GammaCode code = gamma_encode(m);
        CHECK(code.well_formed());
        CHECK(gamma_decode(code) == m);
      }
      std::size_t codes = 0;
      for_each_gamma_code(n, k, [&](const GammaCode& code) {
        ++codes;
        const Matrix01 m = gamma_decode(code);
        CHECK(is_gamma_free(m));
        CHECK(gamma_encode(m) == code);
      });
      CHECK(BigNat(codes) == polybernoulli_formula(n, k));
    }
  }
}

TEST_CASE("gamma coding round-trips at the 5x5 frontier") {
  const EnumerationGuards guards{6, 9};
  std::uint64_t matrices = 0, codes = 0;
  enumerate_family(FamilyId::GammaFree, 5, 5, [&](const FamilyMember& member) {
    const auto& m = std::get<Matrix01>(member);
    const GammaCode code = gamma_encode(m);
    if (gamma_decode(code) != m) {
      CHECK(gamma_decode(code) == m);
      return;
    }
    // The extension and its important submatrix stay Gamma-free together.
    const Matrix01 ext_m = extend(m);
    if (!is_gamma_free(ext_m) || !is_gamma_free(important_submatrix(ext_m, code))) {
      CHECK(false);
      return;
    }
    ++matrices;
  }, guards);
  for_each_gamma_code(5, 5, [&](const GammaCode& code) {
    if (gamma_encode(gamma_decode(code)) == code) ++codes;
  });
  CHECK(BigNat(matrices) == polybernoulli_formula(5, 5));
  CHECK(BigNat(codes) == polybernoulli_formula(5, 5));
}

TEST_CASE("fixed partitions and matching admit exactly m! information words") {
  for (int n = 2; n <= 3; ++n) {
    for (int k = 2; k <= 3; ++k) {
      // Group the code space by everything except the info word.
      std::map<std::string, std::vector<Matrix01>> groups;
      for_each_gamma_code(n, k, [&](const GammaCode& code) {
        GammaCode skeleton = code;
        skeleton.info_word.assign(code.m, 0);
        groups[to_text(skeleton) + "#" + std::to_string(code.m)].push_back(
            gamma_decode(code));
      });
      for (auto& [skeleton, decodes] : groups) {
        const int m = std::stoi(skeleton.substr(skeleton.rfind('#') + 1));
        std::uint64_t factorial = 1;
        for (int i = 2; i <= m; ++i) factorial *= i;
        CHECK(decodes.size() == factorial);
        std::sort(decodes.begin(), decodes.end());
        CHECK(std::adjacent_find(decodes.begin(), decodes.end()) == decodes.end());
      }
    }
  }
}

TEST_CASE("lemma dichotomy: every hiding 1 fits exactly one case") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= 3; ++k) {
      for (const auto& m : gamma_free_matrices(n, k)) {
        const GammaCode code = gamma_encode(m);
        const Matrix01 ext_m = extend(m);
        std::vector<int> imp(code.m), top(code.m), crucial(code.m);
        for (int i = 0; i < code.m; ++i) {
          imp[i] = code.col_classes[i].back();
          top[i] = code.row_classes[i].front();
          crucial[i] = code.row_classes[i].back();
        }
        int hiding_count = 0;
        for (int j = 0; j < code.m; ++j) {
          for (int r = 1; r <= n + 1; ++r) {
            if (!ext_m.at(r - 1, imp[j] - 1)) continue;
            const bool is_top = (r == top[j]);
            const bool is_leading =
                std::find(code.row_classes[j].begin(), code.row_classes[j].end(), r) !=
                code.row_classes[j].end();
            if (is_top || is_leading) continue;  // important 1
            ++hiding_count;
            // Case 1: crucial above in the same column, top-1 to the right.
            bool case1 = crucial[j] < r;
            if (case1) {
              bool top_right = false;
              for (int j2 = j + 1; j2 < code.m; ++j2) top_right |= (top[j2] == r);
              case1 = top_right;
            }
            // Case 2: crucial on the left in the same row (top-1 above is
            // automatic for a non-top 1).
            bool case2 = false;
            for (int i = 0; i < j; ++i) case2 |= (crucial[i] == r);
            CHECK(case1 != case2);
          }
        }
        int reveals = 0;
        for (int v : code.info_word) reveals += (v != 0);
        CHECK(hiding_count == reveals);
      }
    }
  }
}

TEST_CASE("the extension contains a Gamma iff its important submatrix does") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= 3; ++k) {
      for (const auto& m : gamma_free_matrices(n, k)) {
        const GammaCode code = gamma_encode(m);
        const Matrix01 ext_m = extend(m);
        const Matrix01 m0 = important_submatrix(ext_m, code);
        CHECK(is_gamma_free(ext_m));
        CHECK(is_gamma_free(m0));
        // Toggling any single important-column cell preserves the
        // equivalence between the two views.
        for (int i = 0; i < code.m; ++i) {
          for (int r = 0; r <= n; ++r) {
            Matrix01 ext_flip = ext_m;
            Matrix01 m0_flip = m0;
            ext_flip.set(r, code.col_classes[i].back() - 1,
                         !ext_flip.at(r, code.col_classes[i].back() - 1));
            m0_flip.set(r, i, !m0_flip.at(r, i));
            CHECK(is_gamma_free(ext_flip) == is_gamma_free(m0_flip));
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Recursion decomposition
// ---------------------------------------------------------------------------

TEST_CASE("recursion_split examples") {
  const RecursionSplit empty = recursion_split(Matrix01(3, 3));
  CHECK(empty.chosen_count == 0);
  CHECK(empty.chosen_rows.empty());
  CHECK(empty.remainder == Matrix01(3, 2));

  const RecursionSplit chosen = recursion_split(Matrix01::from_rows({"10", "00"}));
  CHECK(chosen.chosen_count == 1);
  CHECK(chosen.chosen_rows == std::vector<int>{1});
  CHECK(chosen.remainder == Matrix01(2, 1));

  CHECK_THROWS_AS(recursion_split(Matrix01(2, 0)), std::invalid_argument);
  CHECK_THROWS_AS(recursion_split(Matrix01::from_rows({"11", "10"})),
                  std::invalid_argument);
}

TEST_CASE("recursion_join examples and errors") {
  CHECK(recursion_join(RecursionSplit{0, {}, Matrix01(3, 2)}, 3, 3) == Matrix01(3, 3));
  CHECK(recursion_join(RecursionSplit{1, {1}, Matrix01(2, 1)}, 2, 2) ==
        Matrix01::from_rows({"10", "00"}));
  CHECK_THROWS_AS(recursion_join(RecursionSplit{0, {}, Matrix01(2, 2)}, 3, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(recursion_join(RecursionSplit{2, {1, 2}, Matrix01(1, 1)}, 2, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      recursion_join(RecursionSplit{0, {}, Matrix01::from_rows({"11", "10"})}, 2, 3),
      std::invalid_argument);
}

TEST_CASE("split/join round-trip and the recursion count identity") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= 3; ++k) {
      std::map<int, std::uint64_t> by_j;
      for (const auto& m : gamma_free_matrices(n, k)) {
        const RecursionSplit split = recursion_split(m);
        CHECK(is_gamma_free(split.remainder));
        CHECK(recursion_join(split, n, k) == m);
        ++by_j[split.chosen_count];
      }
      BigNat total = 0;
      for (int j = 0; j <= n; ++j) {
        const BigNat expected =
            j == 0 ? polybernoulli_formula(n, k - 1)
                   : binomial(n, j) * polybernoulli_formula(n - j + 1, k - 1);
        CHECK(BigNat(by_j.count(j) ? by_j[j] : 0) == expected);
        total += expected;
      }
      CHECK(total == polybernoulli_formula(n, k));
    }
  }
  // 230 = sum over j of C(3,j) |G(4-j,2)| plus |G(3,2)|.
  BigNat sum = polybernoulli_formula(3, 2);
  for (int j = 1; j <= 3; ++j) sum += binomial(3, j) * polybernoulli_formula(4 - j, 2);
  CHECK(sum == 230);
}

// ---------------------------------------------------------------------------
// phi
// ---------------------------------------------------------------------------

namespace {

// C_3^(1)(l) and C_2^(2)(r), in the integer encoding.
const std::vector<std::vector<int>> kLeftClass31 = {
    {0, 1, 4, 2, 3, 5}, {0, 2, 4, 1, 3, 5}, {0, 3, 4, 1, 2, 5},
    {0, 1, 2, 4, 3, 5}, {0, 1, 3, 4, 2, 5}, {0, 2, 3, 4, 1, 5},
    {0, 1, 2, 3, 4, 5},
};
const std::vector<std::vector<int>> kRightClass22 = {
    {0, 3, 1, 4, 2, 5}, {0, 3, 2, 4, 1, 5}, {0, 3, 1, 2, 4, 5},
    {0, 3, 4, 1, 2, 5}, {0, 4, 1, 3, 2, 5}, {0, 4, 2, 3, 1, 5},
    {0, 4, 1, 2, 3, 5},
};

}  // namespace

TEST_CASE("phi reproduces the worked examples") {
  // 012 1 3 2  ->  0 1 1 2 2 3 (right values in the second convention)
  CHECK(phi(ext(3, 1, {0, 1, 2, 4, 3, 5})).seq == std::vector<int>{0, 3, 1, 4, 2, 5});
  // 03 1 12 2  ->  0 2 2 1 1 3
  CHECK(phi(ext(3, 1, {0, 3, 4, 1, 2, 5})).seq == std::vector<int>{0, 4, 2, 3, 1, 5});
}

TEST_CASE("phi maps C_3^(1)(l) onto C_2^(2)(r)") {
  std::vector<std::vector<int>> left_listed = kLeftClass31;
  std::vector<std::vector<int>> enumerated;
  enumerate_family(FamilyId::Callan, 3, 1, [&](const FamilyMember& member) {
    const auto& p = std::get<ExtPermutation>(member);
    if (p.is_left(p.seq[1])) enumerated.push_back(p.seq);
  });
  std::sort(left_listed.begin(), left_listed.end());
  std::sort(enumerated.begin(), enumerated.end());
  CHECK(left_listed == enumerated);
  CHECK(enumerated.size() == 7);

  std::vector<std::vector<int>> images;
  for (const auto& seq : kLeftClass31) images.push_back(phi(ext(3, 1, seq)).seq);
  std::vector<std::vector<int>> right_listed = kRightClass22;
  std::sort(images.begin(), images.end());
  std::sort(right_listed.begin(), right_listed.end());
  CHECK(images == right_listed);
}

TEST_CASE("phi and phi_inverse are mutually inverse") {
  for (int total = 1; total <= 6; ++total) {
    for (int n = 1; n <= total; ++n) {
      const int k = total - n;
      std::vector<ExtPermutation> images, right_class;
      enumerate_family(FamilyId::Callan, n, k, [&](const FamilyMember& member) {
        const auto& p = std::get<ExtPermutation>(member);
        if (!p.is_left(p.seq[1])) return;
        const ExtPermutation image = phi(p);
        CHECK(image.n == n - 1);
        CHECK(image.k == k + 1);
        CHECK(is_callan(image));
        CHECK_FALSE(image.is_left(image.seq[1]));
        CHECK(phi_inverse(image) == p);
        images.push_back(image);
      });
      enumerate_family(FamilyId::Callan, n - 1, k + 1, [&](const FamilyMember& member) {
        const auto& p = std::get<ExtPermutation>(member);
        if (!p.is_left(p.seq[1])) {
          right_class.push_back(p);
          CHECK(phi(phi_inverse(p)) == p);
        }
      });
      std::sort(images.begin(), images.end());
      std::sort(right_class.begin(), right_class.end());
      CHECK(images == right_class);
    }
  }
}

TEST_CASE("phi precondition violations") {
  CHECK_THROWS_AS(phi(ext(0, 2, {0, 1, 2, 3})), std::invalid_argument);   // n = 0
  CHECK_THROWS_AS(phi(ext(2, 2, {0, 3, 1, 4, 2, 5})), std::invalid_argument);  // right class
  CHECK_THROWS_AS(phi(ext(2, 2, {0, 2, 1, 3, 4, 5})), std::invalid_argument);  // not Callan
  CHECK_THROWS_AS(phi_inverse(ext(2, 0, {0, 1, 2, 3})), std::invalid_argument);  // k = 0
  CHECK_THROWS_AS(phi_inverse(ext(2, 2, {0, 1, 2, 3, 4, 5})),
                  std::invalid_argument);  // left class
}
