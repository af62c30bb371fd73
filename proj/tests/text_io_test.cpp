#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "polybernoulli/bijections.hpp"
#include "polybernoulli/families.hpp"
#include "polybernoulli/text_io.hpp"
#include "oracles.hpp"

using namespace polybernoulli;

TEST_CASE("matrix text format") {
  const Matrix01 m = Matrix01::from_rows({"010", "110"});
  CHECK(to_text(m) == "010\n110\n");
  CHECK(matrix_from_text("010\n110\n") == m);
  CHECK(matrix_from_text("010\n110") == m);  // trailing newline optional
  CHECK(to_text(Matrix01(0, 3)).empty());
  CHECK(to_text(Matrix01(3, 0)).empty());

  CHECK_THROWS_AS(matrix_from_text(""), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_text("01\n011\n"), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_text("0x\n01\n"), std::invalid_argument);

  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k)
      oracles::for_all_matrices(n, k, [](const Matrix01& m2) {
        CHECK(matrix_from_text(to_text(m2)) == m2);
      });
}

TEST_CASE("permutation text format") {
  CHECK(to_text(ExtPermutation{2, 2, {0, 3, 1, 4, 2, 5}}) == "0 3 1 4 2 5");
  CHECK(to_text(PlainPermutation{{2, 1, 3}}) == "2 1 3");
}

TEST_CASE("partition pair text format") {
  OrderedPartitionPair pair{2, 2, 1, {2, 3}, {{1}}, {3}, {{1, 2}}};
  CHECK(to_text(pair) == "m=1 rows={2,3}|{1} cols={3}|{1,2}");
  OrderedPartitionPair zero{1, 1, 0, {1, 2}, {}, {1, 2}, {}};
  CHECK(to_text(zero) == "m=0 rows={1,2}| cols={1,2}|");
}

TEST_CASE("gamma code records are byte-identical through parse/serialize") {
  const GammaCode unit = gamma_encode(Matrix01::from_rows({"1"}));
  CHECK(to_text(unit) == "1\n1 | 1\n2 | 2\n0\n");
  const GammaCode zero = gamma_encode(Matrix01(1, 1));
  CHECK(to_text(zero) == "0\n1,2 | 1,2\n\n");

  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k)
      enumerate_family(FamilyId::GammaFree, n, k, [&](const FamilyMember& member) {
        const GammaCode code = gamma_encode(std::get<Matrix01>(member));
        const std::string text = to_text(code);
        const GammaCode parsed = gamma_code_from_text(text);
        CHECK(parsed == code);
        CHECK(to_text(parsed) == text);
      });
}

TEST_CASE("gamma code records are self-delimiting in a stream") {
  std::string all;
  std::vector<GammaCode> written;
  enumerate_family(FamilyId::GammaFree, 2, 2, [&](const FamilyMember& member) {
    written.push_back(gamma_encode(std::get<Matrix01>(member)));
    all += to_text(written.back());
  });
  std::istringstream in(all);
  for (const auto& expected : written) CHECK(read_gamma_code(in) == expected);
}

TEST_CASE("malformed gamma code records are rejected") {
  CHECK_THROWS_AS(gamma_code_from_text(""), std::invalid_argument);
  CHECK_THROWS_AS(gamma_code_from_text("x\n"), std::invalid_argument);
  CHECK_THROWS_AS(gamma_code_from_text("1\n1 | 1\n"), std::invalid_argument);  // truncated
  CHECK_THROWS_AS(gamma_code_from_text("1\n1 | 1\n2 | 2\n5\n"),
                  std::invalid_argument);  // info word out of range
  CHECK_THROWS_AS(gamma_code_from_text("1\n1,2 | 1\n2 | 2\n0\n"),
                  std::invalid_argument);  // overlap with the special class
}
