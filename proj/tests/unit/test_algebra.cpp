#include <doctest.h>

#include <cmath>
#include <random>

#include "regspec/algebra/algebraic.hpp"
#include "regspec/algebra/charpoly.hpp"
#include "regspec/algebra/factor.hpp"
#include "regspec/algebra/kernel_basis.hpp"
#include "regspec/algebra/roots.hpp"
#include "regspec/error.hpp"
#include "regspec/kernels/kernels.hpp"
#include "support/oracles.hpp"

using namespace regspec;

namespace {

IntMatrix complete(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m(i, j) = 1;
  return m;
}

IntMatrix cycle(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, (i + 1) % n) = 1;
    m((i + 1) % n, i) = 1;
  }
  return m;
}

Integer edge_count(const IntMatrix& m) {
  Integer e = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) e += m(i, j);
  return e;
}

}  // namespace

TEST_CASE("polynomial basics") {
  const IntPolynomial p{-3, -8, -6, 0, 1};
  CHECK(p.degree() == 4);
  CHECK(p.is_monic());
  CHECK(p.evaluate(Integer(3)) == 0);
  CHECK(p.evaluate(Integer(-1)) == 0);
  CHECK(p.to_string() == "x^4 - 6x^2 - 8x - 3");
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(p.sign_at(Rational(1, 2)) < 0);
  CHECK(IntPolynomial{-2, 0, 1}.compose_affine(2, 1) == IntPolynomial{-1, 4, 4});
  CHECK(gcd(IntPolynomial{-1, 0, 1}, IntPolynomial{1, 2, 1}) == IntPolynomial{1, 1});
  CHECK_THROWS_AS(exact_quotient(IntPolynomial{1, 0, 1}, IntPolynomial{1, 1}), Error);
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(complete(2)) == IntPolynomial{-1, 0, 1});
  CHECK(char_poly(complete(4)) == IntPolynomial{-3, -8, -6, 0, 1});
  CHECK(char_poly(complete(4)) == oracle::cofactor_charpoly(complete(4)));
  CHECK(char_poly(IntMatrix(3)) == IntPolynomial::monomial(3));
  CHECK(char_poly(IntMatrix(0)) == IntPolynomial::constant(1));
}

TEST_CASE("char_poly matches the cofactor oracle on random matrices") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> entry(-40, 40);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 7;
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    CHECK(char_poly(m) == oracle::cofactor_charpoly(m));
  }
}

TEST_CASE("char_poly is independent of the kernel variant") {
  std::mt19937_64 rng(5);
  const kernels::Isa before = kernels::active().isa;
  for (int trial = 0; trial < 10; ++trial) {
    const IntMatrix a = oracle::random_adjacency(rng, 14, 0.4);
    std::vector<IntPolynomial> results;
    for (kernels::Isa isa : kernels::supported_isas()) {
      kernels::select(isa);
      results.push_back(char_poly(a));
    }
    for (const auto& r : results) CHECK(r == results.front());
  }
  kernels::select(before);
}

TEST_CASE("char_poly invariants on random graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 15;
    const IntMatrix a = oracle::random_adjacency(rng, n, 0.5);
    const IntPolynomial p = char_poly(a);
    CHECK(p.degree() == static_cast<int>(n));
    CHECK(p.is_monic());
    const Integer sign = n % 2 == 0 ? 1 : -1;
    CHECK(p.coefficient(0) == sign * determinant(a));
    CHECK(p.coefficient(n - 1) == 0);
    CHECK(p.coefficient(n - 2) == -edge_count(a));
  }
}

TEST_CASE("char_poly with large entries uses several primes") {
  IntMatrix m(3);
  m(0, 0) = Integer("123456789012345678901234567890");
  m(1, 2) = Integer("-98765432109876543210");
  m(2, 1) = 7;
  m(2, 2) = Integer("55555555555555555555555");
  CHECK(char_poly(m) == oracle::cofactor_charpoly(m));
}

TEST_CASE("factor_over_rationals examples") {
  const auto k4 = factor_over_rationals(IntPolynomial{-3, -8, -6, 0, 1});
  REQUIRE(k4.size() == 2);
  CHECK(k4[0].poly == IntPolynomial::linear_root(3));
  CHECK(k4[0].multiplicity == 1);
  CHECK(k4[1].poly == IntPolynomial::linear_root(-1));
  CHECK(k4[1].multiplicity == 3);

  const IntPolynomial golden{-1, -1, 1};
  const auto g = factor_over_rationals(golden);
  REQUIRE(g.size() == 1);
  CHECK(g[0].poly == golden);
  CHECK_FALSE(g[0].unsplit);

  const IntPolynomial cubic{-1, -3, 0, 1};
  // Rational root theorem: only +-1 could be roots.
  CHECK(cubic.evaluate(Integer(1)) != 0);
  CHECK(cubic.evaluate(Integer(-1)) != 0);
  const auto c = factor_over_rationals(cubic);
  REQUIRE(c.size() == 1);
  CHECK(c[0].poly == cubic);
  CHECK_FALSE(c[0].unsplit);

  CHECK_THROWS_AS(factor_over_rationals(IntPolynomial{1, 2}), Error);
}

TEST_CASE("factor_over_rationals re-multiplies to its input") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> root(-6, 6);
  std::uniform_int_distribution<int> mult(1, 3);
  const IntPolynomial irreducibles[] = {{-2, 0, 1}, {-1, -1, 1}, {-1, -2, 1, 1}, {1, 0, 1}, {-5, 0, 0, 1}};
  for (int trial = 0; trial < 50; ++trial) {
    IntPolynomial p = IntPolynomial::constant(1);
    for (int i = 0; i < 3; ++i) p = p * pow(IntPolynomial::linear_root(root(rng)), mult(rng));
    p = p * pow(irreducibles[trial % 5], mult(rng));
    const auto f = factor_over_rationals(p);
    CHECK(multiply_out(f) == p);
    CHECK_FALSE(has_unsplit(f));
    for (const auto& fac : f) {
      CHECK(fac.poly.is_monic());
      if (fac.poly.degree() == 1) CHECK(p.evaluate(Integer(-fac.poly.coefficient(0))) == 0);
    }
  }
}

TEST_CASE("factor_over_rationals splits totally real quartics") {
  const IntPolynomial a{-2, 0, 1}, b{-3, 0, 1};
  const auto f = factor_over_rationals(a * b * IntPolynomial::linear_root(4));
  REQUIRE(f.size() == 3);
  CHECK(f[0].poly == IntPolynomial::linear_root(4));
  CHECK(((f[1].poly == a && f[2].poly == b) || (f[1].poly == b && f[2].poly == a)));
  CHECK_FALSE(has_unsplit(f));
}

TEST_CASE("factor_over_rationals keeps irreducible real quintics whole") {
  // minimal polynomial of 2cos(2pi/11)
  const IntPolynomial q{1, 3, -3, -4, 1, 1};
  const auto f = factor_over_rationals(pow(q, 2) * IntPolynomial{-5, 0, 1});
  REQUIRE(f.size() == 2);
  CHECK(f[0].poly == IntPolynomial{-5, 0, 1});
  CHECK(f[1].poly == q);
  CHECK(f[1].multiplicity == 2);
  CHECK_FALSE(has_unsplit(f));
}

TEST_CASE("factor_over_rationals flags residuals with non-real roots") {
  const IntPolynomial q{1, 0, 0, 0, 1};  // x^4 + 1
  const auto f = factor_over_rationals(q * IntPolynomial::linear_root(4));
  REQUIRE(f.size() == 2);
  CHECK(f[1].unsplit);
  CHECK(has_unsplit(f));
}

TEST_CASE("integer roots with large coefficients") {
  const Integer big("1000000007");
  const IntPolynomial p = IntPolynomial::linear_root(big) * IntPolynomial::linear_root(-3) * IntPolynomial{-2, 0, 1};
  const auto roots = integer_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == big);
  CHECK(roots[1].first == -3);
}

TEST_CASE("squarefree decomposition") {
  const IntPolynomial a = IntPolynomial::linear_root(1);
  const IntPolynomial b{-2, 0, 1};
  const auto d = squarefree_decomposition(a * pow(b, 3));
  REQUIRE(d.size() == 2);
  CHECK(d[0] == std::pair{a, 1u});
  CHECK(d[1] == std::pair{b, 3u});
  CHECK(squarefree_part(pow(a, 2) * pow(b, 2)) == a * b);
}

TEST_CASE("isolate_real_roots examples") {
  auto r = isolate_real_roots(IntPolynomial{-2, 0, 1});
  REQUIRE(r.size() == 2);
  CHECK(r[0] == RationalInterval{Rational(-2), Rational(-1)});
  CHECK(r[1] == RationalInterval{Rational(1), Rational(2)});

  r = isolate_real_roots(IntPolynomial{-5, 1});
  REQUIRE(r.size() == 1);
  CHECK(r[0] == RationalInterval{Rational(5), Rational(5)});

  const IntPolynomial cubic{-1, -3, 0, 1};
  r = isolate_real_roots(cubic);
  REQUIRE(r.size() == 3);
  const double expected[] = {-1.5320888862, -0.3472963553, 1.8793852416};
  for (int i = 0; i < 3; ++i) {
    // Independent check: the cubic changes sign across the interval.
    CHECK(cubic.sign_at(r[i].lo) * cubic.sign_at(r[i].hi) < 0);
    const auto fine = refine_root(cubic, r[i], Rational(1, 1 << 20));
    CHECK(fine.width() <= Rational(1, 1 << 20));
    CHECK(std::abs((fine.lo.get_d() + fine.hi.get_d()) / 2 - expected[i]) < 1e-5);
  }
}

TEST_CASE("isolate_real_roots handles clustered and rational roots") {
  // (2x-1)(2x-3)(x^2-2)(x+7) has rational roots at dyadic midpoints.
  const IntPolynomial p = IntPolynomial{-1, 2} * IntPolynomial{-3, 2} * IntPolynomial{-2, 0, 1} * IntPolynomial{7, 1};
  const auto r = isolate_real_roots(p);
  REQUIRE(r.size() == 5);
  for (std::size_t i = 0; i + 1 < r.size(); ++i) CHECK(r[i].hi <= r[i + 1].lo);
  int points = 0;
  for (const auto& iv : r) {
    if (iv.is_point()) {
      ++points;
      CHECK(p.sign_at(iv.lo) == 0);
    }
  }
  CHECK(points >= 1);
}

TEST_CASE("isolation count equals degree for symmetric characteristic factors") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const IntMatrix a = oracle::random_adjacency(rng, 4 + trial % 8, 0.5);
    const IntPolynomial s = squarefree_part(char_poly(a));
    const auto r = isolate_real_roots(s);
    CHECK(r.size() == static_cast<std::size_t>(s.degree()));
  }
}

TEST_CASE("compare_to_rational examples") {
  const auto golden = AlgebraicNumber::quadratic(-1, 5, 1);
  CHECK(compare_to_rational(golden, Rational(-1)) == std::strong_ordering::greater);
  CHECK(compare_to_rational(AlgebraicNumber(-2), Rational(-1)) == std::strong_ordering::less);
  CHECK(compare_to_rational(AlgebraicNumber(-1), Rational(-1)) == std::strong_ordering::equal);

  const auto roots = AlgebraicNumber::roots_of(IntPolynomial{-1, -3, 0, 1});
  REQUIRE(roots.size() == 3);
  CHECK(compare_to_rational(roots[2], Rational(1)) == std::strong_ordering::greater);
  CHECK(compare_to_rational(roots[0], Rational(-3, 2)) == std::strong_ordering::less);
  CHECK(compare_to_rational(roots[1], Rational(-1, 3)) == std::strong_ordering::less);
}

TEST_CASE("quadratic representation") {
  const auto roots = AlgebraicNumber::roots_of(IntPolynomial{-2, 0, 1});
  REQUIRE(roots.size() == 2);
  CHECK(roots[1].a() == 0);
  CHECK(roots[1].b() == 8);
  CHECK(roots[1].sign() == 1);
  CHECK(roots[0] < roots[1]);
  CHECK_THROWS_AS(AlgebraicNumber::quadratic(0, 4, 1), Error);
  CHECK_THROWS_AS(AlgebraicNumber::quadratic(1, 8, 1), Error);
  CHECK(std::abs(roots[1].approx() - std::sqrt(2.0)) < 1e-12);
  CHECK(roots[1].to_string() == "(0+sqrt(8))/2");
}

TEST_CASE("compare is a total order consistent with refinement") {
  std::vector<AlgebraicNumber> xs;
  for (const IntPolynomial& p : {IntPolynomial{-1, -3, 0, 1}, IntPolynomial{-1, -2, 1, 1}, IntPolynomial{-2, 0, 1},
                                 IntPolynomial{-1, -1, 1}, IntPolynomial{-3, 0, 1}}) {
    for (auto& r : AlgebraicNumber::roots_of(p)) xs.push_back(r);
  }
  for (int z = -3; z <= 3; ++z) xs.emplace_back(z);
  for (const auto& x : xs) {
    CHECK(compare(x, x) == std::strong_ordering::equal);
    for (const auto& y : xs) {
      CHECK(compare(x, y) == (compare(y, x) == std::strong_ordering::less      ? std::strong_ordering::greater
                              : compare(y, x) == std::strong_ordering::greater ? std::strong_ordering::less
                                                                                : std::strong_ordering::equal));
      const bool apart = std::abs(x.approx() - y.approx()) > 1e-9;
      const bool consistent = apart ? (compare(x, y) < 0) == (x.approx() < y.approx()) : compare(x, y) == 0;
      CHECK(consistent);
    }
    // Refining an isolating interval never changes a comparison with a rational.
    if (x.kind() == AlgebraicNumber::Kind::Isolated) {
      const auto fine = AlgebraicNumber::isolated(x.poly(), refine_root(x.poly(), x.interval(), Rational(1, 4096)));
      for (int num = -40; num <= 40; ++num) {
        const Rational q(num, 10);
        CHECK(compare_to_rational(x, q) == compare_to_rational(fine, q));
      }
      CHECK(compare(x, fine) == std::strong_ordering::equal);
    }
  }
}

TEST_CASE("affine_map") {
  const auto s2 = AlgebraicNumber::quadratic(0, 8, 1);
  const auto m = affine_map(s2, 2, 1);  // 2 sqrt2 + 1
  CHECK(m.a() == 2);
  CHECK(m.b() == 32);
  CHECK(std::abs(m.approx() - (2 * std::sqrt(2.0) + 1)) < 1e-12);
  const auto neg = affine_map(s2, -1, -1);
  CHECK(neg.sign() == -1);
  CHECK(std::abs(neg.approx() - (-1 - std::sqrt(2.0))) < 1e-12);

  const auto roots = AlgebraicNumber::roots_of(IntPolynomial{-1, -3, 0, 1});
  const auto t = affine_map(roots[0], -3, 2);
  CHECK(is_root_of(t, t.poly()));
  CHECK(std::abs(t.approx() - (-3 * roots[0].approx() + 2)) < 1e-9);
  CHECK(affine_map(AlgebraicNumber(4), 3, 2) == AlgebraicNumber(14));
}

TEST_CASE("is_root_of") {
  const auto s2 = AlgebraicNumber::quadratic(0, 8, 1);
  CHECK(is_root_of(s2, IntPolynomial{-2, 0, 1} * IntPolynomial{1, 1}));
  CHECK_FALSE(is_root_of(s2, IntPolynomial{-3, 0, 1}));
  CHECK_FALSE(is_root_of(AlgebraicNumber::quadratic(0, 8, -1), IntPolynomial{-2, 1} * IntPolynomial{0, 1}));
}

TEST_CASE("rational_kernel_basis examples") {
  auto k2 = rational_kernel_basis(complete(2), 1);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == IntVector{1, 1});

  const IntMatrix c4 = cycle(4);
  CHECK(rational_kernel_basis(c4, 0).size() == 2);

  const IntMatrix k4 = complete(4);
  const auto basis = rational_kernel_basis(k4, -1);
  CHECK(basis.size() == 3);
  for (const auto& v : basis) {
    Integer sum = 0;
    for (const auto& z : v) sum += z;
    CHECK(sum == 0);
    // (M + I) v = 0 by direct multiplication.
    for (std::size_t i = 0; i < 4; ++i) {
      Integer acc = v[i];
      for (std::size_t j = 0; j < 4; ++j) acc += k4(i, j) * v[j];
      CHECK(acc == 0);
    }
  }
  try {
    rational_kernel_basis(k4, 2);
    FAIL("expected NotAnEigenvalue");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAnEigenvalue);
  }
}
