#include <doctest.h>

#include "cuspidal/params.hpp"

#include <stdexcept>

using namespace cuspidal;

TEST_CASE("space constants for the three reference spaces") {
  const auto a = make_space(4, 2);
  CHECK(a.rho == Rational(5, 2));
  CHECK(a.rho_c == Rational(1, 2));
  CHECK(a.rho1 == Rational(1, 2));
  CHECK(a.case_tag == SpaceCase::A);
  CHECK(a.alpha == 0);
  CHECK(a.beta == 1);
  CHECK_FALSE(a.degenerate_x);

  const auto b = make_space(1, 3);
  CHECK(b.rho == Rational(3, 2));
  CHECK(b.rho_c == Rational(1));
  CHECK(b.rho1 == Rational(3, 2));
  CHECK(b.case_tag == SpaceCase::B);
  CHECK(b.alpha == -1);
  CHECK(b.beta == 2);
  CHECK(b.degenerate_x);

  const auto c = make_space(2, 2);
  CHECK(c.rho == Rational(3, 2));
  CHECK(c.rho_c == Rational(1, 2));
  CHECK(c.rho1 == Rational(1, 2));
  CHECK(c.case_tag == SpaceCase::B);
  CHECK(c.alpha == 0);
  CHECK(c.beta == 0);
}

TEST_CASE("exponent identities hold on a grid of spaces") {
  for (int p = 1; p <= 9; ++p) {
    for (int q = 1; q <= 9; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      const auto s = make_space(p, q);
      CHECK(s.alpha >= -1);
      CHECK(s.beta >= 0);
      CHECK(s.degenerate_x == (s.alpha == -1));
      if (s.case_tag == SpaceCase::A) {
        CHECK(Rational(s.alpha + 1, 2) + s.beta + 1 == s.rho);
      } else {
        CHECK(s.alpha + s.beta + 2 == q);
        CHECK(s.rho1 > 0);
      }
    }
  }
}

TEST_CASE("make_space rejects nonpositive dimensions") {
  CHECK_THROWS_AS(make_space(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_space(2, 0), std::invalid_argument);
}

TEST_CASE("enumeration on (1,5) up to 3") {
  const auto list = enumerate_discrete_series(make_space(1, 5), Rational(3));
  REQUIRE(list.size() == 3);
  CHECK(list[0].lambda == Rational(1, 2));
  CHECK(list[0].mu == -1);
  CHECK(list[0].tag == SeriesTag::ExceptionalOdd);
  CHECK(list[0].n == 1);
  CHECK(list[0].m == 1);
  CHECK(list[1].lambda == Rational(3, 2));
  CHECK(list[1].mu == 0);
  CHECK(list[1].tag == SeriesTag::SphericalNonCuspidal);
  CHECK(list[2].lambda == Rational(5, 2));
  CHECK(list[2].mu == 1);
  CHECK(list[2].tag == SeriesTag::Cuspidal);
}

TEST_CASE("enumeration on (2,2) up to 2 is all cuspidal") {
  const auto list = enumerate_discrete_series(make_space(2, 2), Rational(2));
  REQUIRE(list.size() == 2);
  CHECK(list[0].mu == 1);
  CHECK(list[1].mu == 2);
  for (const auto& ds : list) CHECK(ds.cuspidal());
}

TEST_CASE("enumeration on (1,7) up to 1 has one even exceptional parameter") {
  const auto list = enumerate_discrete_series(make_space(1, 7), Rational(1));
  REQUIRE(list.size() == 1);
  CHECK(list[0].lambda == Rational(1, 2));
  CHECK(list[0].mu == -2);
  CHECK(list[0].tag == SeriesTag::ExceptionalEven);
  CHECK(list[0].n == 2);
  CHECK(list[0].m == 1);
}

TEST_CASE("q = 1 admits negative parameters and they are cuspidal") {
  const auto space = make_space(3, 1);
  const auto list = enumerate_discrete_series(space, Rational(3));
  bool saw_negative = false;
  for (const auto& ds : list) {
    CHECK(ds.cuspidal());
    if (ds.lambda < 0) {
      saw_negative = true;
      CHECK(ds.mu < 0);
    }
  }
  CHECK(saw_negative);
  CHECK(classify(space, make_discrete_series(space, Rational(-1, 2))) == SeriesTag::Cuspidal);
}

TEST_CASE("negative lambda is rejected for q > 1, non-integral mu everywhere") {
  const auto space = make_space(2, 2);
  CHECK_THROWS_AS(make_discrete_series(space, Rational(-1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(make_discrete_series(space, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(make_discrete_series(space, Rational(0)), std::invalid_argument);
}

TEST_CASE("classify on the reference parameters") {
  const auto s13 = make_space(1, 3);
  CHECK(classify(s13, make_discrete_series(s13, Rational(1, 2))) == SeriesTag::SphericalNonCuspidal);
  const auto s15 = make_space(1, 5);
  const auto ds = make_discrete_series(s15, Rational(1, 2));
  CHECK(classify(s15, ds) == SeriesTag::ExceptionalOdd);
  CHECK_FALSE(ds.cuspidal());
}

TEST_CASE("classify rejects a record from another space") {
  const auto ds = make_discrete_series(make_space(1, 5), Rational(1, 2));
  CHECK_THROWS_AS(classify(make_space(2, 2), ds), std::invalid_argument);
}

TEST_CASE("mu is exactly lambda + rho - 2 rho_c for q > 1") {
  for (int p = 1; p <= 6; ++p) {
    for (int q = 2; q <= 8; ++q) {
      const auto space = make_space(p, q);
      for (const auto& ds : enumerate_discrete_series(space, Rational(6))) {
        CHECK(Rational(ds.mu) - (ds.lambda + space.rho - 2 * space.rho_c) == 0);
        if (ds.exceptional()) CHECK(q > p + 3);
        if (ds.tag == SeriesTag::SphericalNonCuspidal) {
          CHECK(ds.mu <= 0);
          CHECK(ds.mu % 2 == 0);
          CHECK(q > p + 1);
        }
      }
    }
  }
}

TEST_CASE("exceptional parameters stay below 2 rho_c - rho") {
  for (int p = 1; p <= 4; ++p) {
    for (int q = p + 4; q <= 11; ++q) {
      const auto space = make_space(p, q);
      for (const auto& ds : enumerate_discrete_series(space, Rational(20))) {
        if (ds.mu < 0) CHECK(ds.lambda < 2 * space.rho_c - space.rho);
      }
    }
  }
}

TEST_CASE("enumeration is prefix-stable in lambda_max") {
  const auto space = make_space(2, 7);
  const auto small = enumerate_discrete_series(space, Rational(3));
  const auto large = enumerate_discrete_series(space, Rational(9));
  REQUIRE(small.size() <= large.size());
  for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i] == large[i]);
}
