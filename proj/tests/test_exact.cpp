#include <doctest.h>

#include "gammalab/exact.hpp"
#include "test_support.hpp"

using namespace gammalab;
using gammalab::testing::m;

TEST_CASE("entry grammar parses and prints canonical forms") {
  CHECK(parse_entry("0").str() == "0");
  CHECK(parse_entry("i") == GaussianRational(0, 1));
  CHECK(parse_entry("-i") == GaussianRational(0, -1));
  CHECK(parse_entry("1/2+1/2i") == GaussianRational(Rational(1, 2), Rational(1, 2)));
  CHECK(parse_entry("2/4").str() == "1/2");
  CHECK(parse_entry("-3/6-2/4i").str() == "-1/2-1/2i");
  CHECK(parse_entry("3i").str() == "3i");
  CHECK(parse_entry("0+i").str() == "i");
  CHECK(parse_entry("5-0i").str() == "5");
  CHECK(GaussianRational(Rational(-1, 3), 1).str() == "-1/3+i");

  CHECK_THROWS_AS(parse_entry(""), ParseError);
  CHECK_THROWS_AS(parse_entry("1/0"), ParseError);
  CHECK_THROWS_AS(parse_entry("+1"), ParseError);
  CHECK_THROWS_AS(parse_entry("i+1"), ParseError);
  CHECK_THROWS_AS(parse_entry("1+2"), ParseError);
  CHECK_THROWS_AS(parse_entry("1 + i"), ParseError);
}

TEST_CASE("gaussian identities") {
  GaussianRational i = GaussianRational::i();
  CHECK((1 + i) * (1 - i) == GaussianRational(2));
  CHECK(i * i * i * i == GaussianRational(1));
  CHECK((i * i) == GaussianRational(-1));
  CHECK_THROWS_AS(GaussianRational().inverse(), std::domain_error);
}

TEST_CASE("field axioms on random gaussian rationals") {
  std::mt19937_64 rng(gammalab::testing::seed());
  for (int trial = 0; trial < 300; ++trial) {
    auto a = gammalab::testing::random_gaussian(rng);
    auto b = gammalab::testing::random_gaussian(rng);
    auto c = gammalab::testing::random_gaussian(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == GaussianRational(1));
    CHECK(parse_entry(a.str()) == a);
  }
}

TEST_CASE("mat_mul examples") {
  using namespace gammalab::testing;
  CHECK(sigma_x() * sigma_x() == ExactMatrix::identity(2));
  CHECK(sigma_z() * sigma_y() == m("[[0,-i],[-i,0]]"));
  CHECK(ExactMatrix::identity(2) * sigma_y() == sigma_y());
  CHECK_THROWS_AS(mat_mul(ExactMatrix::identity(2), ExactMatrix::identity(3)), DimensionError);
}

TEST_CASE("trace and adjoint") {
  using namespace gammalab::testing;
  CHECK(mat_trace(sigma_z()) == GaussianRational(0));
  CHECK(mat_trace(ExactMatrix::identity(4)) == GaussianRational(4));
  CHECK(mat_trace(ExactMatrix::scalar(2, GaussianRational::i())) == GaussianRational(0, 2));
  CHECK(mat_adjoint(sigma_y()) == sigma_y());
  CHECK(mat_adjoint(ExactMatrix::scalar(2, GaussianRational::i())) == ExactMatrix::scalar(2, GaussianRational(0, -1)));
  CHECK(mat_adjoint(m("[[0,1],[-1,0]]")) == m("[[0,-1],[1,0]]"));
}

TEST_CASE("matrix text format") {
  using namespace gammalab::testing;
  CHECK(parse_matrix("[[0,1],[1,0]]") == sigma_x());
  auto one = parse_matrix("[[1/2+1/2i]]");
  CHECK(one.dim() == 1);
  CHECK(one(0, 0) == GaussianRational(Rational(1, 2), Rational(1, 2)));
  CHECK(format_matrix(parse_matrix("[[0,-i],[-i,0]]")) == "[[0,-i],[-i,0]]");
  CHECK(parse_matrix(R"([["0", "-i"], ["i", "0"]])") == sigma_y());
  CHECK(parse_matrix(" [ [ 1 , 0 ] , [ 0 , 1 ] ] ") == ExactMatrix::identity(2));

  SUBCASE("syntax errors carry a position") {
    try {
      parse_matrix("[[1,0],[0,x]]");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.row() == 1);
      CHECK(e.col() == 1);
    }
    try {
      parse_matrix("[[1,2/0],[0,1]]");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.row() == 0);
      CHECK(e.col() == 1);
    }
    CHECK_THROWS_AS(parse_matrix("[[1,0],[0]]"), ParseError);
    CHECK_THROWS_AS(parse_matrix("[[1,0],[0,1]"), ParseError);
    CHECK_THROWS_AS(parse_matrix("[[1,0],[0,1]] x"), ParseError);
  }
}

TEST_CASE("matrix product is associative and format round-trips") {
  std::mt19937_64 rng(gammalab::testing::seed());
  for (int trial = 0; trial < 40; ++trial) {
    auto a = gammalab::testing::random_matrix(rng, 4);
    auto b = gammalab::testing::random_matrix(rng, 4);
    auto c = gammalab::testing::random_matrix(rng, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(parse_matrix(format_matrix(a)) == a);
  }
}

TEST_CASE("elimination helpers") {
  using namespace gammalab::testing;
  CHECK(mat_rank(m("[[1,2],[2,4]]")) == 1);
  CHECK(!is_invertible(m("[[1,i],[i,-1]]")));
  CHECK(mat_inverse(sigma_y()) == sigma_y());
  std::mt19937_64 rng(gammalab::testing::seed() + 1);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_matrix(rng, 3);
    if (!is_invertible(a)) continue;
    CHECK(a * mat_inverse(a) == ExactMatrix::identity(3));
  }
  // x + y = 0 over two unknowns has a one-dimensional kernel
  auto ker = nullspace({{1, 1}}, 2);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] + ker[0][1] == GaussianRational(0));
}

TEST_CASE("kronecker and direct sums") {
  using namespace gammalab::testing;
  auto k = kronecker(sigma_z(), sigma_x());
  CHECK(k == m("[[0,1,0,0],[1,0,0,0],[0,0,0,-1],[0,0,-1,0]]"));
  CHECK(direct_sum(sigma_x(), -sigma_x()) == k);
  CHECK(mat_pow(sigma_y(), -3) == sigma_y());
}
