#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

namespace suzuki {

using Rational = mpq_class;

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integer coefficients of the L-th cyclotomic polynomial, index = degree.
std::vector<long long> cyclotomic_polynomial(int L);

int euler_phi(int L);
std::vector<int> prime_factors(int m);
std::vector<int> divisors(int m);

// Shared reduction data for Q(w), w a primitive L-th root of unity.
class CycOrder {
 public:
  static std::shared_ptr<const CycOrder> get(int L);

  int L() const { return L_; }
  int degree() const { return deg_; }
  const std::vector<long long>& phi() const { return phi_; }
  // x^e reduced mod Phi_L for e in [0, L), as sparse (exponent, coefficient) rows.
  const std::vector<std::pair<int, mpz_class>>& power(int e) const { return pow_[e]; }
  // Exponent e with w^e equal to the given canonical row, if any.
  std::optional<int> exponent_of(const std::string& key) const;

  explicit CycOrder(int L);

 private:
  int L_;
  int deg_;
  std::vector<long long> phi_;
  std::vector<std::vector<std::pair<int, mpz_class>>> pow_;
  std::unordered_map<std::string, int> by_key_;
};

using CycOrderPtr = std::shared_ptr<const CycOrder>;

// Element of Q(w) in the basis 1, w, ..., w^{deg-1}.  A scalar with a null
// order is a plain rational (only exponent 0 used) and adopts the order of
// whatever it is combined with.
class CycScalar {
 public:
  using Term = std::pair<int, Rational>;

  CycScalar() = default;
  CycScalar(long v);  // NOLINT: rational constants convert implicitly
  CycScalar(const Rational& v);  // NOLINT
  CycScalar(CycOrderPtr ord, const Rational& v);

  static CycScalar root(CycOrderPtr ord, long long k);

  const CycOrderPtr& order() const { return ord_; }
  int L() const { return ord_ ? ord_->L() : 0; }
  const std::vector<Term>& terms() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_rational() const { return c_.empty() || (c_.size() == 1 && c_[0].first == 0); }
  Rational rational_value() const;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator/=(const CycScalar& o);
  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  CycScalar inverse() const;
  CycScalar pow(long long k) const;

  // e with *this == w^e, when this is a power of w.
  std::optional<int> root_exponent() const;

  std::string key() const;
  std::string to_string() const;

 private:
  static CycOrderPtr common(const CycScalar& a, const CycScalar& b);
  void reduce_dense(const std::vector<Rational>& dense);

  CycOrderPtr ord_;
  std::vector<Term> c_;  // sorted by exponent, no zero coefficients
};

CycScalar cyc_arith(const CycScalar& a, const CycScalar& b, char op);
CycScalar root_power(long long k, const CycOrderPtr& ord);

// Smallest m >= 1 with a^m = 1, or nullopt when no divisor of L works.
std::optional<int> order_of(const CycScalar& a);

struct PrimeRoot {
  std::uint64_t p;
  std::uint64_t g;  // element of multiplicative order exactly L
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);

// Primes p = 1 (mod L), p >= start, each with a generator of order L.
std::vector<PrimeRoot> find_primes(int L, int count, std::uint64_t start = 0);
void check_prime_root(int L, const PrimeRoot& pr);

// Ring homomorphism Z[w][1/den] -> F_p, w -> g.
std::uint64_t modular_image(const CycScalar& a, const PrimeRoot& pr);
std::uint64_t modular_image(const CycScalar& a, std::uint64_t p, std::uint64_t g);

// Radical conventions attached to (mu, lambda). Exponents are mod L.
struct SignConventions {
  int mu = 1;
  int lambda = 1;
  int e_lambda = 0;
  int e_sqrt_lambda = 0;
  int e_mu_tilde = 0;
  int e_mu_bar = 0;
  int e_sqrt_mu_bar = 0;
  int e_sqrt_lambda_mu_bar = 0;
  CycScalar sqrt_lambda, mu_tilde, mu_bar, sqrt_mu_bar, sqrt_lambda_mu_bar;

  static SignConventions make(int N, int n, int mu, int lambda, const CycOrderPtr& ord);
};

nlohmann::json to_json(const CycScalar& a);
CycScalar cyc_from_json(const nlohmann::json& j);

}  // namespace suzuki
