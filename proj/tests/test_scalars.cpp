#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace suzuki;

namespace {

using Poly = std::vector<long long>;

Poly trim(Poly p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

// Exact division by a monic integer polynomial.
Poly divide_monic(Poly a, const Poly& b) {
  Poly q(a.size() - b.size() + 1, 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
    long long c = a[i];
    q[i - b.size() + 1] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[i - b.size() + 1 + j] -= c * b[j];
  }
  for (long long r : a) REQUIRE(r == 0);
  return q;
}

// x^L - 1 divided by the cyclotomic polynomials of the proper divisors.
Poly naive_phi(int L) {
  Poly p(L + 1, 0);
  p[0] = -1;
  p[L] = 1;
  for (int d = 1; d < L; ++d)
    if (L % d == 0) p = divide_monic(p, naive_phi(d));
  return trim(p);
}

}  // namespace

TEST_CASE("cyclotomic polynomials match recursive division") {
  CHECK(cyclotomic_polynomial(1) == Poly{-1, 1});
  CHECK(cyclotomic_polynomial(2) == Poly{1, 1});
  CHECK(cyclotomic_polynomial(12) == Poly{1, 0, -1, 0, 1});
  for (int L = 1; L <= 90; ++L) {
    CAPTURE(L);
    auto phi = naive_phi(L);
    CHECK(cyclotomic_polynomial(L) == phi);
    CHECK(euler_phi(L) == static_cast<int>(phi.size()) - 1);
  }
}

TEST_CASE("root arithmetic in the reduced basis") {
  auto ord = CycOrder::get(12);
  auto w = [&](long long e) { return CycScalar::root(ord, e); };
  CHECK((w(6) * w(6)).is_one());
  CHECK((w(4) + (-w(4))).is_zero());
  // modulo x^4 - x^2 + 1: x^4 = x^2 - 1 and x^8 = (x^2 - 1)^2 = -x^2
  CHECK(w(4) == w(2) - CycScalar(ord, 1));
  CHECK(w(4) * w(4) == -w(2));
  REQUIRE(w(8).terms().size() == 1);
  CHECK(w(8).terms()[0].first == 2);
  CHECK(w(8).terms()[0].second == -1);
  CHECK(w(0).is_one());
  CHECK(w(6) == CycScalar(ord, -1));
  CHECK(w(12).is_one());
  for (const auto& L : {4, 12, 20, 24, 60}) {
    auto o = CycOrder::get(L);
    for (int e = 0; e < 3 * L; ++e) {
      auto x = CycScalar::root(o, e);
      for (const auto& t : x.terms()) CHECK(t.first < o->degree());
      CHECK(x.root_exponent() == e % L);
    }
    CHECK(CycScalar::root(o, L / 2) == CycScalar(o, -1));
  }
}

TEST_CASE("field axioms on random elements") {
  auto ord = CycOrder::get(20);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5), ex(0, 19);
  auto rnd = [&] {
    CycScalar s(ord, 0);
    for (int i = 0; i < 4; ++i) s += CycScalar(ord, coef(rng)) * CycScalar::root(ord, ex(rng));
    return s;
  };
  for (int it = 0; it < 40; ++it) {
    auto a = rnd(), b = rnd(), c = rnd();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("order of roots of unity") {
  auto ord = CycOrder::get(12);
  CHECK(order_of(CycScalar(ord, 1)) == 1);
  CHECK(order_of(CycScalar(ord, -1)) == 2);
  CHECK(order_of(CycScalar::root(ord, 4)) == 3);
  for (int L : {12, 30, 36}) {
    auto o = CycOrder::get(L);
    for (int e = 0; e < L; ++e) CHECK(order_of(CycScalar::root(o, e)) == L / std::gcd(e, L));
  }
  CHECK_FALSE(order_of(CycScalar(ord, 2)).has_value());
}

TEST_CASE("modular images are ring homomorphisms") {
  // brute-force order of 2 mod 13
  int ord2 = 1;
  for (std::uint64_t x = 2; x != 1; x = x * 2 % 13) ++ord2;
  CHECK(ord2 == 12);
  auto ord = CycOrder::get(12);
  PrimeRoot pr{13, 2};
  CHECK(modular_image(CycScalar::root(ord, 1), pr) == 2);
  CHECK(modular_image(CycScalar(ord, -1), pr) == 12);
  CHECK(modular_image(CycScalar(ord, 1), pr) == 1);

  for (int L : {12, 20, 24}) {
    auto o = CycOrder::get(L);
    for (const auto& p : find_primes(L, 2, 1u << 20)) {
      CHECK(p.p % L == 1);
      CHECK(is_prime(p.p));
      CHECK(powmod(p.g, L, p.p) == 1);
      for (int q : prime_factors(L)) CHECK(powmod(p.g, L / q, p.p) != 1);
      std::mt19937 rng(L);
      std::uniform_int_distribution<int> coef(-9, 9), ex(0, L - 1);
      for (int it = 0; it < 30; ++it) {
        CycScalar a = CycScalar(o, coef(rng)) * CycScalar::root(o, ex(rng)) + CycScalar::root(o, ex(rng));
        CycScalar b = CycScalar(o, Rational(coef(rng), 7)) * CycScalar::root(o, ex(rng));
        auto ma = modular_image(a, p), mb = modular_image(b, p);
        CHECK(modular_image(a * b, p) == mulmod(ma, mb, p.p));
        CHECK(modular_image(a + b, p) == (ma + mb) % p.p);
      }
    }
  }
}

TEST_CASE("radical conventions square correctly") {
  for (const auto& g : testing::grid({{1, 1}, {1, 2}, {2, 1}, {3, 2}})) {
    auto P = testing::params(g);
    auto ord = CycOrder::get(P.L());
    auto cv = SignConventions::make(P.N, P.n, P.mu, P.lambda, ord);
    CycScalar la(ord, P.lambda);
    CHECK(cv.sqrt_lambda * cv.sqrt_lambda == la);
    CHECK(cv.mu_tilde * cv.mu_tilde == cv.mu_bar);
    CHECK(cv.sqrt_mu_bar * cv.sqrt_mu_bar == cv.mu_bar);
    CHECK(cv.sqrt_lambda_mu_bar * cv.sqrt_lambda_mu_bar == la * cv.mu_bar);
  }
}

TEST_CASE("scalar JSON round trip") {
  auto ord = CycOrder::get(24);
  CycScalar a = CycScalar(ord, Rational(3, 5)) * CycScalar::root(ord, 7) + CycScalar::root(ord, 2);
  CHECK(cyc_from_json(to_json(a)) == a);
}
