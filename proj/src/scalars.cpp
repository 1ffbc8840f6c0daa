#include "suzuki/scalars.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace suzuki {

namespace {

using Poly = std::vector<long long>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division by a monic integer polynomial.
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() - 1 < dn) throw ArithmeticError("cyclotomic division underflow");
  Poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw ArithmeticError("cyclotomic division not exact");
  trim(q);
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace

std::vector<int> prime_factors(int m) {
  std::vector<int> out;
  for (int q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      out.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

std::vector<int> divisors(int m) {
  std::vector<int> out;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) out.push_back(d);
  return out;
}

int euler_phi(int L) {
  int r = L;
  for (int q : prime_factors(L)) r = r / q * (q - 1);
  return r;
}

std::vector<long long> cyclotomic_polynomial(int L) {
  if (L < 1) throw std::invalid_argument("cyclotomic_polynomial: L must be >= 1");
  static std::mutex mu;
  static std::map<int, Poly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(L);
    if (it != cache.end()) return it->second;
  }
  Poly p(L + 1, 0);
  p[0] = -1;
  p[L] = 1;
  for (int d = 1; d < L; ++d)
    if (L % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mu);
  cache[L] = p;
  return p;
}

CycOrder::CycOrder(int L) : L_(L) {
  if (L < 1) throw std::invalid_argument("CycOrder: L must be >= 1");
  phi_ = cyclotomic_polynomial(L);
  deg_ = static_cast<int>(phi_.size()) - 1;
  std::vector<mpz_class> cur(deg_, 0);
  pow_.resize(L);
  for (int e = 0; e < L; ++e) {
    if (e < deg_) {
      std::fill(cur.begin(), cur.end(), 0);
      cur[e] = 1;
    } else {
      // multiply previous row by x and fold x^deg back
      mpz_class top = cur[deg_ - 1];
      for (int i = deg_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (int i = 0; i < deg_; ++i) cur[i] -= top * static_cast<long>(phi_[i]);
    }
    auto& row = pow_[e];
    std::ostringstream key;
    for (int i = 0; i < deg_; ++i) {
      if (cur[i] != 0) {
        row.emplace_back(i, cur[i]);
        key << i << ':' << cur[i].get_str() << ';';
      }
    }
    by_key_.emplace(key.str(), e);
  }
}

std::shared_ptr<const CycOrder> CycOrder::get(int L) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CycOrder>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(L);
  if (it != cache.end()) return it->second;
  auto p = std::make_shared<const CycOrder>(L);
  cache[L] = p;
  return p;
}

std::optional<int> CycOrder::exponent_of(const std::string& key) const {
  auto it = by_key_.find(key);
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

CycScalar::CycScalar(long v) {
  if (v != 0) c_.emplace_back(0, Rational(v));
}

CycScalar::CycScalar(const Rational& v) {
  if (v != 0) c_.emplace_back(0, v);
}

CycScalar::CycScalar(CycOrderPtr ord, const Rational& v) : ord_(std::move(ord)) {
  if (v != 0) c_.emplace_back(0, v);
}

CycScalar CycScalar::root(CycOrderPtr ord, long long k) {
  if (!ord) throw std::invalid_argument("root: null order");
  long long L = ord->L();
  int e = static_cast<int>(((k % L) + L) % L);
  CycScalar r;
  r.ord_ = ord;
  for (const auto& [i, c] : ord->power(e)) r.c_.emplace_back(i, Rational(c));
  return r;
}

bool CycScalar::is_one() const {
  return c_.size() == 1 && c_[0].first == 0 && c_[0].second == 1;
}

Rational CycScalar::rational_value() const {
  if (!is_rational()) throw ArithmeticError("scalar is not rational");
  return c_.empty() ? Rational(0) : c_[0].second;
}

CycOrderPtr CycScalar::common(const CycScalar& a, const CycScalar& b) {
  if (!a.ord_) return b.ord_;
  if (!b.ord_) return a.ord_;
  if (a.ord_.get() != b.ord_.get() && a.ord_->L() != b.ord_->L())
    throw ArithmeticError("mismatched cyclotomic orders " + std::to_string(a.ord_->L()) +
                          " and " + std::to_string(b.ord_->L()));
  return a.ord_;
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& t : r.c_) t.second = -t.second;
  return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  ord_ = common(*this, o);
  if (o.c_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(c_.size() + o.c_.size());
  std::size_t i = 0, j = 0;
  while (i < c_.size() || j < o.c_.size()) {
    if (j == o.c_.size() || (i < c_.size() && c_[i].first < o.c_[j].first)) {
      out.push_back(std::move(c_[i++]));
    } else if (i == c_.size() || o.c_[j].first < c_[i].first) {
      out.push_back(o.c_[j++]);
    } else {
      Rational s = c_[i].second + o.c_[j].second;
      if (s != 0) out.emplace_back(c_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  c_ = std::move(out);
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) { return *this += -o; }

void CycScalar::reduce_dense(const std::vector<Rational>& dense) {
  c_.clear();
  for (int i = 0; i < static_cast<int>(dense.size()); ++i)
    if (dense[i] != 0) c_.emplace_back(i, dense[i]);
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  CycScalar r;
  r.ord_ = CycScalar::common(a, b);
  if (a.c_.empty() || b.c_.empty()) return r;
  if (a.is_rational()) {
    r.c_ = b.c_;
    for (auto& t : r.c_) t.second *= a.c_[0].second;
    return r;
  }
  if (b.is_rational()) {
    r.c_ = a.c_;
    for (auto& t : r.c_) t.second *= b.c_[0].second;
    return r;
  }
  const CycOrder& ord = *r.ord_;
  std::vector<Rational> dense(ord.degree(), 0);
  Rational prod;
  for (const auto& [ea, ca] : a.c_) {
    for (const auto& [eb, cb] : b.c_) {
      prod = ca * cb;
      for (const auto& [i, c] : ord.power(ea + eb)) dense[i] += prod * c;
    }
  }
  r.reduce_dense(dense);
  return r;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  *this = *this * o;
  return *this;
}

CycScalar& CycScalar::operator/=(const CycScalar& o) {
  *this = *this * o.inverse();
  return *this;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.ord_ && b.ord_ && a.ord_->L() != b.ord_->L())
    throw ArithmeticError("comparing scalars of different orders");
  return a.c_ == b.c_;
}

CycScalar CycScalar::inverse() const {
  if (c_.empty()) throw ArithmeticError("division by zero");
  if (is_rational()) {
    CycScalar r(ord_, 1 / c_[0].second);
    return r;
  }
  const int d = ord_->degree();
  // column j of M holds the coefficients of this * x^j
  std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d + 1, 0));
  for (int j = 0; j < d; ++j) {
    CycScalar xj = root(ord_, j);
    CycScalar col = *this * xj;
    for (const auto& [i, c] : col.c_) M[i][j] = c;
  }
  M[0][d] = 1;
  for (int col = 0, row = 0; col < d; ++col, ++row) {
    int piv = row;
    while (piv < d && M[piv][col] == 0) ++piv;
    if (piv == d) throw ArithmeticError("singular multiplication matrix");
    std::swap(M[piv], M[row]);
    Rational inv = 1 / M[row][col];
    for (int k = col; k <= d; ++k) M[row][k] *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == row || M[r][col] == 0) continue;
      Rational f = M[r][col];
      for (int k = col; k <= d; ++k) M[r][k] -= f * M[row][k];
    }
  }
  CycScalar r;
  r.ord_ = ord_;
  for (int i = 0; i < d; ++i)
    if (M[i][d] != 0) r.c_.emplace_back(i, M[i][d]);
  return r;
}

CycScalar CycScalar::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  CycScalar result(ord_, 1);
  CycScalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::string CycScalar::key() const {
  std::ostringstream os;
  for (const auto& [e, c] : c_) os << e << ':' << rational_str(c) << ';';
  return os.str();
}

std::optional<int> CycScalar::root_exponent() const {
  if (c_.empty()) return std::nullopt;
  if (!ord_) {
    if (is_one()) return 0;
    return std::nullopt;
  }
  return ord_->exponent_of(key());
}

std::string CycScalar::to_string() const {
  if (c_.empty()) return "0";
  if (auto e = root_exponent()) return "w^" + std::to_string(*e);
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << rational_str(c);
    if (e > 0) os << "*w^" << e;
  }
  return os.str();
}

CycScalar cyc_arith(const CycScalar& a, const CycScalar& b, char op) {
  switch (op) {
    case '+': return a + b;
    case '-': return a - b;
    case '*': return a * b;
    case '/': return a / b;
    default: throw std::invalid_argument(std::string("cyc_arith: unknown op ") + op);
  }
}

CycScalar root_power(long long k, const CycOrderPtr& ord) { return CycScalar::root(ord, k); }

std::optional<int> order_of(const CycScalar& a) {
  if (a.is_zero()) throw ArithmeticError("order_of: zero has no multiplicative order");
  if (!a.order()) {
    if (a.is_one()) return 1;
    if (a == CycScalar(-1)) return 2;
    return std::nullopt;
  }
  for (int m : divisors(a.L()))
    if (a.pow(m).is_one()) return m;
  return std::nullopt;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw ArithmeticError("invmod: zero is not invertible");
  return powmod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

void check_prime_root(int L, const PrimeRoot& pr) {
  if (!is_prime(pr.p)) throw std::invalid_argument("modulus " + std::to_string(pr.p) + " is not prime");
  if ((pr.p - 1) % L != 0)
    throw std::invalid_argument("prime " + std::to_string(pr.p) + " is not 1 mod " + std::to_string(L));
  if (powmod(pr.g, L, pr.p) != 1)
    throw std::invalid_argument("generator does not satisfy g^L = 1");
  for (int q : prime_factors(L))
    if (powmod(pr.g, L / q, pr.p) == 1)
      throw std::invalid_argument("generator order is a proper divisor of L");
}

std::vector<PrimeRoot> find_primes(int L, int count, std::uint64_t start) {
  if (L < 1 || count < 0) throw std::invalid_argument("find_primes: bad arguments");
  if (start == 0) start = 2ull * L + 1;
  std::uint64_t p = start;
  std::uint64_t r = (p - 1) % L;
  if (r != 0) p += L - r;
  std::vector<PrimeRoot> out;
  const auto qs = prime_factors(L);
  for (; static_cast<int>(out.size()) < count; p += L) {
    if (!is_prime(p)) continue;
    for (std::uint64_t h = 2; h < p; ++h) {
      std::uint64_t g = powmod(h, (p - 1) / L, p);
      bool ok = true;
      for (int q : qs)
        if (powmod(g, L / q, p) == 1) ok = false;
      if (L == 1) ok = (g == 1);
      if (ok) {
        out.push_back({p, g});
        break;
      }
    }
  }
  return out;
}

std::uint64_t modular_image(const CycScalar& a, const PrimeRoot& pr) {
  const std::uint64_t p = pr.p;
  std::uint64_t acc = 0;
  mpz_class pz(std::to_string(p));
  for (const auto& [e, c] : a.terms()) {
    mpz_class num = c.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = c.get_den() % pz;
    if (den == 0) throw ArithmeticError("denominator not invertible mod " + std::to_string(p));
    std::uint64_t v = mulmod(num.get_ui(), invmod(den.get_ui(), p), p);
    v = mulmod(v, powmod(pr.g, static_cast<std::uint64_t>(e), p), p);
    acc = (acc + v) % p;
  }
  return acc;
}

std::uint64_t modular_image(const CycScalar& a, std::uint64_t p, std::uint64_t g) {
  PrimeRoot pr{p, g};
  if (a.order()) check_prime_root(a.L(), pr);
  return modular_image(a, pr);
}

SignConventions SignConventions::make(int N, int n, int mu, int lambda, const CycOrderPtr& ord) {
  if ((mu != 1 && mu != -1) || (lambda != 1 && lambda != -1))
    throw std::invalid_argument("mu and lambda must be +1 or -1");
  const int K = 2 * n + 1;
  const int L = 4 * N * K;
  if (ord->L() != L) throw std::invalid_argument("conventions: order mismatch");
  SignConventions sc;
  sc.mu = mu;
  sc.lambda = lambda;
  sc.e_lambda = lambda == -1 ? L / 2 : 0;
  sc.e_sqrt_lambda = lambda == -1 ? N * K : 0;
  sc.e_mu_tilde = mu == -1 ? K : 0;
  sc.e_mu_bar = mu == -1 ? 2 * K : 0;
  sc.e_sqrt_mu_bar = sc.e_mu_tilde;
  sc.e_sqrt_lambda_mu_bar = (sc.e_sqrt_lambda + sc.e_sqrt_mu_bar) % L;
  sc.sqrt_lambda = CycScalar::root(ord, sc.e_sqrt_lambda);
  sc.mu_tilde = CycScalar::root(ord, sc.e_mu_tilde);
  sc.mu_bar = CycScalar::root(ord, sc.e_mu_bar);
  sc.sqrt_mu_bar = CycScalar::root(ord, sc.e_sqrt_mu_bar);
  sc.sqrt_lambda_mu_bar = CycScalar::root(ord, sc.e_sqrt_lambda_mu_bar);
  return sc;
}

namespace {

nlohmann::json int_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class int_from_json(const nlohmann::json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(std::to_string(j.get<long long>()));
}

}  // namespace

nlohmann::json to_json(const CycScalar& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : a.terms())
    terms.push_back({e, int_json(c.get_num()), int_json(c.get_den())});
  return {{"order", a.L()}, {"terms", terms}};
}

CycScalar cyc_from_json(const nlohmann::json& j) {
  int L = j.at("order").get<int>();
  CycOrderPtr ord = L > 0 ? CycOrder::get(L) : nullptr;
  CycScalar out = ord ? CycScalar(ord, 0) : CycScalar(0L);
  for (const auto& t : j.at("terms")) {
    int e = t.at(0).get<int>();
    Rational c(int_from_json(t.at(1)), int_from_json(t.at(2)));
    c.canonicalize();
    if (ord && (e < 0 || e >= ord->degree()))
      throw std::invalid_argument("scalar exponent outside the reduced basis");
    CycScalar term = ord ? CycScalar::root(ord, e) * CycScalar(c) : CycScalar(c);
    out += term;
  }
  return out;
}

}  // namespace suzuki
