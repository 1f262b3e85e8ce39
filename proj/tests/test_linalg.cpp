#include <doctest.h>

#include "lieq/errors.hpp"
#include "lieq/linalg.hpp"
#include "lieq/subspace.hpp"

#include <random>

using namespace lieq;

namespace {

// Annihilator search by increasing degree over flattened powers; independent
// of the Krylov method used by the library.
Polynomial minpoly_oracle(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<Vector> powers{RationalMatrix::identity(n).flatten()};
  RationalMatrix p = RationalMatrix::identity(n);
  for (std::size_t d = 1; d <= n; ++d) {
    p = p * m;
    powers.push_back(p.flatten());
    const RationalMatrix k = kernel(RationalMatrix::from_columns(n * n, powers));
    if (k.cols() > 0) return Polynomial(k.column(0)).monic();
  }
  FAIL("no annihilator found");
  return {};
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

} // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK_THROWS_AS(parse_rational("10/-5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
}

TEST_CASE("kernel") {
  CHECK(kernel(RationalMatrix::identity(3)).cols() == 0);
  CHECK(Subspace(2, kernel(RationalMatrix::zero(2, 2))) == Subspace::whole(2));
  const RationalMatrix m{{1, 1}, {1, 1}};
  const RationalMatrix k = kernel(m);
  REQUIRE(k.cols() == 1);
  CHECK(Subspace(2, k) == Subspace::span(2, {{Rational(1), Rational(-1)}}));
  CHECK((m * k).is_zero());
}

TEST_CASE("kernel and rank on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 6;
    RationalMatrix m = random_matrix(rng, n, 2);
    if (trial % 3 == 0 && n > 1) m.set_column(0, m.column(1));
    const RationalMatrix k = kernel(m);
    CHECK((m * k).is_zero());
    CHECK(rank(k) == k.cols());
    CHECK(k.cols() == n - rank(m));
    if (k.cols() == 0) CHECK(inverse(m) * m == RationalMatrix::identity(n));
    else CHECK(sgn(determinant(m)) == 0);
  }
}

TEST_CASE("subspace operations") {
  const std::size_t n = 3;
  const auto a = Subspace::span(n, {unit_vector(n, 0), unit_vector(n, 1)});
  const auto b = Subspace::span(n, {unit_vector(n, 1), unit_vector(n, 2)});
  CHECK(intersect(a, b) == Subspace::span(n, {unit_vector(n, 1)}));
  CHECK((a + b).is_whole());
  CHECK(standard_complement(a) == Subspace::span(n, {unit_vector(n, 2)}));
  const auto c = Subspace::span(n, {{Rational(2), Rational(4), Rational(0)}, {Rational(1), Rational(1), Rational(0)}});
  CHECK(c == a);
  CHECK(a.contains(Vector{Rational(3), Rational(-1, 2), Rational(0)}));
  CHECK_FALSE(a.contains(unit_vector(n, 2)));
  const Vector v{Rational(3), Rational(5), Rational(0)};
  const Vector x = a.coordinates(v);
  CHECK(a.basis() * x == v);
}

TEST_CASE("polynomials") {
  const Polynomial p({Rational(2), Rational(-3), Rational(1)});  // (t-1)(t-2)
  CHECK(rational_roots(p) == std::vector<Rational>{1, 2});
  CHECK(gcd(p, Polynomial::linear(1)) == Polynomial::linear(1));
  const Polynomial sq = Polynomial::linear(1) * Polynomial::linear(1) * Polynomial::linear(3);
  CHECK(squarefree_part(sq) == Polynomial::linear(1) * Polynomial::linear(3));
  CHECK_FALSE(is_squarefree(sq));

  const Polynomial t2p1({Rational(1), Rational(0), Rational(1)});
  const Polynomial t2m2({Rational(-2), Rational(0), Rational(1)});
  const auto f = factor_low_degree(t2p1 * t2m2 * Polynomial::linear(Rational(1, 3)));
  CHECK(f.size() == 3);
  Polynomial prod = Polynomial::constant(1);
  for (const auto& x : f) {
    CHECK(x.degree() <= 2);
    prod = prod * x;
  }
  CHECK(prod == (t2p1 * t2m2 * Polynomial::linear(Rational(1, 3))).monic());

  const Polynomial quartic = Polynomial({Rational(1, 4), Rational(0), Rational(1)}) * Polynomial({Rational(5), Rational(2), Rational(1)});
  CHECK(factor_low_degree(quartic).size() == 2);

  const Polynomial cubic({Rational(-2), Rational(0), Rational(0), Rational(1)});
  CHECK_THROWS_AS(factor_low_degree(cubic), UnsupportedEigenvalueField);
  const Polynomial quartic_irreducible({Rational(-2), Rational(0), Rational(0), Rational(0), Rational(1)});
  CHECK_THROWS_AS(factor_low_degree(quartic_irreducible), UnsupportedEigenvalueField);
}

TEST_CASE("minimal polynomial") {
  CHECK(minimal_polynomial(RationalMatrix::identity(4)) == Polynomial::linear(1));
  const RationalMatrix jordan{{0, 1}, {0, 0}};
  CHECK(minimal_polynomial(jordan) == Polynomial::monomial(2));
  const RationalMatrix d = RationalMatrix::diagonal({Rational(1), Rational(2)});
  CHECK(minimal_polynomial(d) == Polynomial::linear(1) * Polynomial::linear(2));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    RationalMatrix m = random_matrix(rng, n, 1);
    if (trial % 2 == 0) m = m * m;
    const Polynomial p = minimal_polynomial(m);
    CHECK(p == minpoly_oracle(m));
    CHECK(p(m).is_zero());
    CHECK(characteristic_polynomial(m)(m).is_zero());
    CHECK((characteristic_polynomial(m) % p).is_zero());
  }
}

TEST_CASE("Jordan-Chevalley") {
  const RationalMatrix diag = RationalMatrix::diagonal({Rational(3), Rational(-1), Rational(3)});
  auto jc = jordan_chevalley(diag);
  CHECK(jc.semisimple == diag);
  CHECK(jc.nilpotent.is_zero());

  const RationalMatrix upper{{0, 1, 2}, {0, 0, 5}, {0, 0, 0}};
  jc = jordan_chevalley(upper);
  CHECK(jc.semisimple.is_zero());
  CHECK(jc.nilpotent == upper);

  const RationalMatrix block{{1, 1}, {0, 1}};
  jc = jordan_chevalley(block);
  CHECK(jc.semisimple == RationalMatrix::identity(2));
  CHECK(jc.nilpotent == RationalMatrix({{0, 1}, {0, 0}}));
}

TEST_CASE("imaginary and real-split parts") {
  const RationalMatrix rot{{0, -1}, {1, 0}};
  auto s = split_imaginary_parts(rot);
  CHECK(s.imaginary == rot);
  CHECK(s.real_split.is_zero());

  const RationalMatrix d = RationalMatrix::diagonal({Rational(1), Rational(2)});
  s = split_imaginary_parts(d);
  CHECK(s.imaginary.is_zero());
  CHECK(s.real_split == d);

  // minimal polynomial t^2 - 2t + 2, so -p/2 = 1
  const RationalMatrix m{{1, -1}, {1, 1}};
  CHECK(minimal_polynomial(m) == Polynomial({Rational(2), Rational(-2), Rational(1)}));
  s = split_imaginary_parts(m);
  CHECK(s.real_split == RationalMatrix::identity(2));
  CHECK(s.imaginary == rot);

  // positive discriminant: eigenvalues +-sqrt 2 stay in the real-split part
  const RationalMatrix r2{{0, 2}, {1, 0}};
  s = split_imaginary_parts(r2);
  CHECK(s.real_split == r2);
  CHECK(s.imaginary.is_zero());

  CHECK_THROWS_AS(split_imaginary_parts(RationalMatrix({{0, 1}, {0, 0}})), InvalidStructure);
  const RationalMatrix companion{{0, 0, 2}, {1, 0, 0}, {0, 1, 0}};
  CHECK_THROWS_AS(split_imaginary_parts(companion), UnsupportedEigenvalueField);
}

TEST_CASE("full decomposition on conjugated block matrices") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    // block diag(rotation-dilation, Jordan block, scalar) conjugated
    RationalMatrix b(5, 5);
    b(0, 0) = 1; b(0, 1) = -2; b(1, 0) = 2; b(1, 1) = 1;
    b(2, 2) = 3; b(2, 3) = 1; b(3, 3) = 3;
    b(4, 4) = -1;
    RationalMatrix p = random_matrix(rng, 5, 2);
    if (sgn(determinant(p)) == 0) continue;
    const RationalMatrix m = p * b * inverse(p);
    const auto d = decompose(m);
    CHECK(decomposition_violations(m, d).empty());
    CHECK(minimal_polynomial(d.imaginary) == Polynomial({Rational(0), Rational(4), Rational(0), Rational(1)}));
  }
}

TEST_CASE("Fitting decomposition") {
  const RationalMatrix inv{{2, 1}, {0, 1}};
  auto f = fitting_decomposition(inv);
  CHECK(f.e0.cols() == 0);
  CHECK(f.e1.cols() == 2);
  const RationalMatrix nil{{0, 1}, {0, 0}};
  f = fitting_decomposition(nil);
  CHECK(f.e0.cols() == 2);
  CHECK(f.e1.cols() == 0);
  const RationalMatrix mixed{{0, 1, 0}, {0, 0, 0}, {0, 0, 5}};
  f = fitting_decomposition(mixed);
  CHECK(Subspace(3, f.e0) == Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 1)}));
  CHECK(Subspace(3, f.e1) == Subspace::span(3, {unit_vector(3, 2)}));
}

TEST_CASE("inertia") {
  const auto i1 = inertia(RationalMatrix({{0, 1}, {1, 0}}));
  CHECK(i1.positive == 1);
  CHECK(i1.negative == 1);
  const auto i2 = inertia(RationalMatrix::diagonal({Rational(-2), Rational(-2), Rational(0)}));
  CHECK(i2.negative == 2);
  CHECK(i2.zero == 1);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 5;
    RationalMatrix a = random_matrix(rng, n, 2);
    const RationalMatrix s = a + a.transpose();
    const auto in = inertia(s);
    CHECK(in.positive + in.negative == rank(s));
    // congruence preserves inertia
    RationalMatrix p = random_matrix(rng, n, 2);
    if (sgn(determinant(p)) == 0) continue;
    const auto in2 = inertia(p.transpose() * s * p);
    CHECK(in2.positive == in.positive);
    CHECK(in2.negative == in.negative);
  }
}
