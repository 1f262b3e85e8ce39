#include "lieq/polynomial.hpp"

#include "lieq/errors.hpp"

#include <algorithm>
#include <sstream>

namespace lieq {

namespace {

// Divisor enumeration is by trial division; beyond this bound the factor
// search gives up instead of stalling.
const Integer kDivisorBound("1000000000000");

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  if (n == 0) throw UnsupportedEigenvalueField("divisor search on zero");
  if (n > kDivisorBound) throw UnsupportedEigenvalueField("coefficients too large for factor search");
  std::vector<Integer> small;
  std::vector<Integer> large;
  for (Integer i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      small.push_back(i);
      if (i * i != n) large.push_back(n / i);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<Integer> signed_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (const auto& d : positive_divisors(n)) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

Integer lcm_of_denominators(const std::vector<Rational>& c) {
  Integer l = 1;
  for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

// Integer coefficients proportional to p, with content one.
std::vector<Integer> primitive_integer(const Polynomial& p) {
  const Integer l = lcm_of_denominators(p.coefficients());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& x : p.coefficients()) {
    Rational y = x * l;
    out.push_back(y.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g != 0 && g != 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

} // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const Rational& root) { return Polynomial({-root, Rational(1)}); }

Polynomial Polynomial::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Rational inv = 1 / leading();
  return inv * *this;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return Polynomial(std::move(d));
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

RationalMatrix Polynomial::operator()(const RationalMatrix& m) const {
  if (!m.is_square()) throw DimensionMismatch("polynomial of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix r(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r = r * m;
    for (std::size_t i = 0; i < n; ++i) r(i, i) += *it;
  }
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coefficients().size(), b.coefficients().size()), Rational(0));
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) c[i] += a.coefficients()[i];
  for (std::size_t i = 0; i < b.coefficients().size(); ++i) c[i] += b.coefficients()[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Rational> c(x.size() + y.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] += x[i] * y[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  std::vector<Rational> c = a.coefficients();
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DimensionMismatch("polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational lb = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational f = r[static_cast<std::size_t>(k + db)] / lb;
    q[static_cast<std::size_t>(k)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= f * b.coefficients()[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return ((a * b) / gcd(a, b)).monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return (p / gcd(p, p.derivative())).monic();
}

bool is_squarefree(const Polynomial& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

std::vector<Rational> rational_roots(const Polynomial& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  Polynomial rest = p.monic();
  if (sgn(rest.coefficient(0)) == 0) {
    roots.push_back(0);
    while (rest.degree() > 0 && sgn(rest.coefficient(0)) == 0) rest = rest / Polynomial::monomial(1);
  }
  if (rest.degree() > 0) {
    const auto ints = primitive_integer(rest);
    const auto nums = signed_divisors(ints.front());
    const auto dens = positive_divisors(ints.back());
    for (const auto& a : nums) {
      for (const auto& b : dens) {
        Rational candidate(a, b);
        candidate.canonicalize();
        if (candidate.get_den() != b) continue;
        if (sgn(rest(candidate)) == 0) roots.push_back(candidate);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<Polynomial> factor_low_degree(const Polynomial& p) {
  std::vector<Polynomial> factors;
  if (p.degree() <= 0) return factors;
  Polynomial rest = squarefree_part(p);
  for (const auto& r : rational_roots(rest)) {
    factors.push_back(Polynomial::linear(r));
    rest = rest / Polynomial::linear(r);
  }
  rest = rest.monic();

  // Substituting t = s / D makes the remaining cofactor monic with integer
  // coefficients, so any monic quadratic factor has integer coefficients too.
  while (rest.degree() > 2) {
    const std::size_t n = static_cast<std::size_t>(rest.degree());
    const Integer d = lcm_of_denominators(rest.coefficients());
    std::vector<Rational> hc(n + 1);
    Integer dp = 1;
    for (std::size_t k = n + 1; k-- > 0;) {
      hc[k] = rest.coefficient(k) * dp;
      dp *= d;
    }
    const Polynomial h(hc);
    const Integer h0 = h.coefficient(0).get_num();
    const Integer h1 = h(Rational(1)).get_num();
    const Integer hm1 = h(Rational(-1)).get_num();
    bool found = false;
    for (const auto& c : signed_divisors(h0)) {
      for (const auto& e : signed_divisors(h1)) {
        const Integer b = e - 1 - c;
        const Integer at_minus_one = 1 - b + c;
        if (at_minus_one == 0 || hm1 % at_minus_one != 0) continue;
        const Polynomial q({Rational(c), Rational(b), Rational(1)});
        if (!(h % q).is_zero()) continue;
        const Rational dq(d);
        const Polynomial factor({Rational(c) / (dq * dq), Rational(b) / dq, Rational(1)});
        factors.push_back(factor);
        rest = (rest / factor).monic();
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) {
      throw UnsupportedEigenvalueField("irreducible factor of degree " + std::to_string(n) + ": " + to_string(rest));
    }
  }
  if (rest.degree() >= 1) factors.push_back(rest);
  return factors;
}

Rational quadratic_discriminant(const Polynomial& quadratic) {
  if (quadratic.degree() != 2) throw DimensionMismatch("discriminant of a non-quadratic");
  const Polynomial q = quadratic.monic();
  return q.coefficient(1) * q.coefficient(1) - 4 * q.coefficient(0);
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = p.coefficient(static_cast<std::size_t>(k));
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << '-';
    first = false;
    if (k == 0 || a != 1) os << to_string(a);
    if (k >= 1) os << 't';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

} // namespace lieq
