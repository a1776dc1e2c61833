#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qll/number/algebraic_real.hpp"
#include "qll/number/arith.hpp"
#include "qll/number/cyclotomic.hpp"
#include "qll/number/linalg.hpp"
#include "qll/number/polynomial.hpp"

using namespace qll;

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("-4")) == "-4/1");
  CHECK(to_string(parse_rational("+2/-4")) == "-1/2");
  CHECK(to_string(parse_rational("0.125")) == "1/8");
  CHECK(to_string(parse_rational("-1.5")) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e5"), std::invalid_argument);
}

TEST_CASE("rational arithmetic does not overflow") {
  Rational big = pow(make_rational(3, 2), 200);
  Rational back = big * pow(make_rational(2, 3), 200);
  CHECK(back == 1);
  CHECK(is_integer(make_rational(10, 5)));
  CHECK_THROWS(inverse(Rational(0)));
}

TEST_CASE("arithmetic helpers against trial division") {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::uint64_t prod = 1;
    for (auto [p, e] : factorize(n))
      for (unsigned k = 0; k < e; ++k) prod *= p;
    CHECK(prod == n);
    bool prime = n > 1;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) prime = false;
    CHECK(is_prime(n) == prime);
    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) divs.push_back(d);
    CHECK(divisors(n) == divs);
    const auto [s, r] = squarefree_split(n);
    CHECK(s * s * r == n);
    CHECK(is_squarefree(r));
    CHECK(isqrt(n) * isqrt(n) <= n);
    CHECK((isqrt(n) + 1) * (isqrt(n) + 1) > n);
    CHECK((odd_part(n) << two_adic_valuation(n)) == n);
  }
}

TEST_CASE("algebraic reals: radicals normalize") {
  const auto s8 = AlgebraicReal::sqrt_of(std::uint64_t{8});
  CHECK(s8 == AlgebraicReal::radical(2, 2));
  CHECK(s8 * s8 == AlgebraicReal(8));
  CHECK(AlgebraicReal::sqrt_of(make_rational(1, 2)) == AlgebraicReal::radical(2, make_rational(1, 2)));
  const auto s2 = AlgebraicReal::sqrt_of(std::uint64_t{2});
  const auto s3 = AlgebraicReal::sqrt_of(std::uint64_t{3});
  CHECK((s2 * s3) == AlgebraicReal::sqrt_of(std::uint64_t{6}));
  CHECK((s2 + s3).conjugate_at(3) == s2 - s3);
  CHECK(std::abs((s2 + s3).to_double() - (std::sqrt(2.0) + std::sqrt(3.0))) < 1e-12);
  CHECK_THROWS_AS(AlgebraicReal().inverse(), std::domain_error);
}

TEST_CASE("algebraic reals: inverse on random elements") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    AlgebraicReal a = AlgebraicReal(dist(rng)) + AlgebraicReal::radical(2, dist(rng)) +
                      AlgebraicReal::radical(3, dist(rng)) + AlgebraicReal::radical(6, dist(rng));
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == AlgebraicReal(1));
  }
}

TEST_CASE("cyclotomic field Q(zeta_8)") {
  const auto z = CyclotomicValue::zeta_power(1);
  CHECK(pow(z, 8) == CyclotomicValue(1));
  CHECK(pow(z, 4) == CyclotomicValue(-1));
  CHECK(CyclotomicValue::sqrt2() * CyclotomicValue::sqrt2() == CyclotomicValue(2));
  CHECK(z + z.conj() == CyclotomicValue::sqrt2());
  CHECK(root_of_unity_index(CyclotomicValue::zeta_power(13)) == 5);
  CHECK(root_of_unity_index(CyclotomicValue(2)) == -1);
  const auto w = CyclotomicValue(std::array<Rational, 4>{1, 2, make_rational(-1, 3), 5});
  CHECK(w * w.inverse() == CyclotomicValue(1));
  CHECK(std::abs(w.to_complex() - (1.0 + 2.0 * std::polar(1.0, M_PI / 4) - std::polar(1.0, M_PI / 2) / 3.0 +
                                   5.0 * std::polar(1.0, 3 * M_PI / 4))) < 1e-12);
  CHECK(CyclotomicValue::from_algebraic(AlgebraicReal::radical(2, 3)) == CyclotomicValue(3) * CyclotomicValue::sqrt2());
  CHECK_THROWS_AS(CyclotomicValue::from_algebraic(AlgebraicReal::sqrt_of(std::uint64_t{3})), std::domain_error);
}

TEST_CASE("polynomials: eps squares to one, substitution") {
  const auto e = sym_epsilon();
  CHECK(e * e == SymbolicValue(1));
  const auto x = sym_coeff(3) + sym_lambda(5) * AlgebraicReal::sqrt_of(std::uint64_t{2});
  CHECK(Indeterminate::parse("lambda_5") == Indeterminate::lambda(5));
  CHECK(Indeterminate::parse(Indeterminate::coeff(12).name()) == Indeterminate::coeff(12));
  const auto v = substitute(x, {{Indeterminate::coeff(3), AlgebraicReal(1)}, {Indeterminate::lambda(5), AlgebraicReal(2)}});
  CHECK(v == AlgebraicReal(1) + AlgebraicReal::radical(2, 2));
  CHECK_THROWS_AS(substitute(x, {{Indeterminate::coeff(3), AlgebraicReal(1)}}), std::invalid_argument);
  CHECK((x - x).is_zero());
}

TEST_CASE("linear algebra: HNF, determinant, solve") {
  Matrix<Integer> m{{2, 4, 6}, {1, 3, 5}, {0, 0, 1}};
  CHECK(determinant(m) == 2);
  const auto h = hermite_normal_form(m);
  CHECK(h.size() == 3);
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) CHECK(h[i][j] == 0);
  Matrix<Rational> a{{2, 1}, {1, 3}};
  std::vector<Rational> x;
  REQUIRE(solve_rational(a, {3, 4}, x));
  CHECK(x[0] == 1);
  CHECK(x[1] == 1);
  Matrix<Rational> singular{{1, 2}, {2, 4}};
  CHECK_FALSE(solve_rational(singular, {1, 1}, x));
  CHECK(nullspace(singular, 2).size() == 1);
}
