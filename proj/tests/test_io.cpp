#include <doctest.h>

#include "permclass/errors.hpp"
#include "permclass/io.hpp"

using namespace permclass;

TEST_CASE("parse_permutation_text") {
  CHECK(parse_permutation_text("6 5 3 4 2 1 6") ==
        Permutation::from_images({5, 3, 4, 2, 1, 6}));
  CHECK(parse_permutation_text("  3\t2 3 1\n") ==
        Permutation::from_images({2, 3, 1}));
  CHECK(parse_permutation_text("0") == Permutation());
  CHECK_THROWS_AS(parse_permutation_text(""), ParseError);
  CHECK_THROWS_AS(parse_permutation_text("2 1"), ParseError);       // missing image
  CHECK_THROWS_AS(parse_permutation_text("2 1 2 9"), ParseError);   // trailing
  CHECK_THROWS_AS(parse_permutation_text("2 0 1"), ParseError);     // range
  CHECK_THROWS_AS(parse_permutation_text("2 1 1"), NotPermutation); // repeat
  CHECK_THROWS_AS(parse_permutation_text("x 1"), ParseError);
}

TEST_CASE("parse_binary_matrix_text") {
  const auto m = parse_binary_matrix_text("0 1\n1 0\n");
  CHECK(m == std::vector<std::vector<long>>{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(parse_binary_matrix_text(""), ParseError);
  CHECK_THROWS_AS(parse_binary_matrix_text("0 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_binary_matrix_text("0 2\n1 0\n"), ParseError);

  // the error names the offending line
  try {
    parse_binary_matrix_text("1 0 0\n0 1\n0 0 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("dense order limit") {
  ParseOptions opts;
  opts.max_dense_order = 3;
  std::string big;
  for (int i = 0; i < 4; ++i) big += "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n";
  CHECK_THROWS_AS(parse_binary_matrix_text("1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n", opts),
                  ParseError);
  CHECK(parse_binary_matrix_text("1 0\n0 1\n", opts).size() == 2);
}

TEST_CASE("parse_rational_matrix_text") {
  const auto m = parse_rational_matrix_text("0 3/2\n-2.5 0\n");
  CHECK(m[0][1] == Rational(3, 2));
  CHECK(m[1][0] == Rational(-5, 2));
  try {
    parse_rational_matrix_text("1 0\n0 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 3);
  }
}

TEST_CASE("input auto-detection") {
  // a one-line permutation wins when it parses
  CHECK(parse_permutation_input("3 2 3 1") ==
        Permutation::from_images({2, 3, 1}));
  // a dense 0-1 matrix does not parse as a permutation and falls through
  CHECK(parse_permutation_input("0 1\n1 0\n") ==
        Permutation::from_images({2, 1}));
  CHECK(parse_permutation_input("1") == Permutation::identity(1));
  // forcing the interpretation
  CHECK(parse_permutation_input("1 1", InputKind::Permutation) ==
        Permutation::identity(1));
  CHECK_THROWS_AS(parse_permutation_input("1 1", InputKind::Matrix), ParseError);
  CHECK_THROWS_AS(parse_permutation_input("garbage", InputKind::Auto), ParseError);
}

TEST_CASE("parse_monomial_input") {
  const MonomialMatrix m = parse_monomial_input("0 3\n2 0\n");
  CHECK(m.perm() == Permutation::from_images({2, 1}));
  CHECK(m.col_weights() == std::vector<Rational>{Rational(2), Rational(3)});
  CHECK_THROWS_AS(parse_monomial_input("0 0\n1 1\n"), NotMonomial);
}

TEST_CASE("format_permutation") {
  CHECK(format_permutation(Permutation::from_images({5, 3, 4, 2, 1, 6})) ==
        "6 5 3 4 2 1 6");
  CHECK(format_permutation(Permutation()) == "0");
  CHECK(parse_permutation_text(
            format_permutation(Permutation::from_images({2, 3, 1}))) ==
        Permutation::from_images({2, 3, 1}));
}
