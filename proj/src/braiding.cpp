#include "suzuki/braiding.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace suzuki {

namespace {

int md(long long x, long long L) { return static_cast<int>(((x % L) + L) % L); }

int sign_exp(int p, int L) { return p % 2 ? L / 2 : 0; }

MonomialBraiding from_diag(const CycOrderPtr& ord, const std::vector<std::vector<CycScalar>>& q) {
  DiagonalBraiding d{static_cast<int>(q.size()), q};
  (void)ord;
  return diagonal_braiding(d);
}

}  // namespace

MonomialBraiding::MonomialBraiding(int d, CycOrderPtr ord)
    : d_(d), ord_(std::move(ord)), t_(static_cast<std::size_t>(d) * d) {
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) t_[i * d + j] = {j, i, CycScalar(ord_, 0)};
}

bool MonomialBraiding::invertible() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : t_) {
    if (e.scalar.is_zero()) return false;
    if (!seen.insert({e.k, e.l}).second) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> first_difference(const MonomialBraiding& a, const MonomialBraiding& b) {
  if (a.dim() != b.dim()) return std::make_pair(-1, -1);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (!(a.at(i, j) == b.at(i, j))) return std::make_pair(i, j);
  return std::nullopt;
}

MonomialBraiding diagonal_braiding(const DiagonalBraiding& q) {
  CycOrderPtr ord;
  for (const auto& row : q.q)
    for (const auto& x : row)
      if (!ord) ord = x.order();
  MonomialBraiding c(q.dim, ord);
  for (int i = 0; i < q.dim; ++i)
    for (int j = 0; j < q.dim; ++j) c.set(i, j, j, i, q.q[i][j]);
  return c;
}

MonomialBraiding derive_braiding(const SuzukiAlgebra& A, const YDModule& y) {
  const int r = y.dim;
  std::vector<std::vector<std::optional<CycMatrix>>> M(r, std::vector<std::optional<CycMatrix>>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (!y.coaction[i][j].is_zero()) M[i][j] = act_element(A, y.action, y.coaction[i][j], r);
  MonomialBraiding c(r, A.order());
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      int found = 0;
      for (int j = 0; j < r; ++j) {
        if (!M[i][j]) continue;
        for (int l = 0; l < r; ++l) {
          const CycScalar& v = (*M[i][j])(l, k);
          if (v.is_zero()) continue;
          ++found;
          c.set(i, k, l, j, v);
        }
      }
      if (found != 1)
        throw NonMonomialError("braiding of " + y.label() + " is not monomial at (" + std::to_string(i + 1) + "," +
                               std::to_string(k + 1) + ")");
    }
  return c;
}

// ---------------------------------------------------------------------------

int exponent_A(const SuzukiParams& P, int s, int k, int) { return md(4LL * k * s * P.K(), P.L()); }

int exponent_B(const SuzukiParams& P, int s, int k, int p) {
  const int L = P.L(), K = P.K(), n = P.n, N = P.N;
  long long e = sign_exp(p, L);
  if (P.lambda == -1) e += N * K + static_cast<long long>(n) * (L / 2);
  if (P.mu == -1) e += static_cast<long long>(K) * (2 * s + 1 + 2 * n);
  e += 2LL * k * K * (2 * s + 1 + 2 * n);
  return md(e, L);
}

int exponent_E(const SuzukiParams& P, int s, int, int k, int) { return md(4LL * k * P.K() * s, P.L()); }

int exponent_F(const SuzukiParams& P, int s, int t, int k, int) {
  return md(2LL * k * P.K() * (2 * s + 2 * t + 2), P.L());
}

int exponent_F_as_printed(const SuzukiParams& P, int s, int t, int k, int) {
  return md(2LL * k * P.K() * (2 * s + 2 * t + 1), P.L());
}

int exponent_G(const SuzukiParams& P, int s, int t, int k, int p) {
  const int L = P.L(), K = P.K(), N = P.N;
  long long e = sign_exp(p, L);
  if (P.lambda == -1) e += static_cast<long long>(t + 1) * (L / 2) + N * K;
  if (P.mu == -1) e += static_cast<long long>(K) * (2 * s + 2 * t + 1);
  e += 2LL * k * K * (2 * s + 2 * t + 1);
  return md(e, L);
}

VabeExponents vabe_exponents_H(const SuzukiParams& P, int s, int t, int j, int k, int p) {
  const int L = P.L(), K = P.K(), N = P.N;
  const long long el = P.lambda == -1 ? L / 2 : 0, esl = P.lambda == -1 ? N * K : 0;
  const long long emb = P.mu == -1 ? 2 * K : 0, esmb = P.mu == -1 ? K : 0;
  long long ae = el + emb * (2 * s + 2 * t + 1) + 2LL * k * K * (4 * s + 4 * t + 2) + 1LL * j * N * (4 * t + 2);
  long long b = sign_exp(p, L) + t * el + esl + emb * (s + t) + esmb + 2LL * k * K * (2 * s + 2 * t + 1) -
                1LL * j * N * (2 * t + 1);
  return {md(ae, L), md(b, L)};
}

VabeExponents vabe_exponents_I(const SuzukiParams& P, int s, int t, int j, int k, int p) {
  const int L = P.L(), K = P.K(), N = P.N;
  const long long el = P.lambda == -1 ? L / 2 : 0, esl = P.lambda == -1 ? N * K : 0;
  const long long emb = P.mu == -1 ? 2 * K : 0, esmb = P.mu == -1 ? K : 0;
  long long ae = el + emb * (2 * s + 2 * t + 1) + 4LL * k * K * (2 * s + 2 * t + 1) - 2LL * j * N * (2 * t + 1);
  long long b = sign_exp(p, L) + t * el - esl + emb * (s + t) + esmb + 2LL * k * K * (2 * s + 2 * t + 1) +
                1LL * j * N * (2 * t + 1);
  return {md(ae, L), md(b, L)};
}

MonomialBraiding braiding_A(const SuzukiAlgebra& A, int s, int k, int p) {
  return from_diag(A.order(), {{A.w(exponent_A(A.params(), s, k, p))}});
}

MonomialBraiding braiding_B(const SuzukiAlgebra& A, int s, int k, int p) {
  return from_diag(A.order(), {{A.w(exponent_B(A.params(), s, k, p))}});
}

MonomialBraiding braiding_C(const SuzukiAlgebra& A, int s, int t, int j, int k, int) {
  const auto& P = A.params();
  const long long K = P.K(), N = P.N;
  CycScalar x = A.w((2 * j * N + 4 * k * K) * (t + 1) + 4 * k * K * s);
  CycScalar y = A.w((4 * k * K - 2 * j * N) * (t + 1) + 4 * k * K * s);
  return from_diag(A.order(), {{x, y}, {y, x}});
}

MonomialBraiding braiding_D(const SuzukiAlgebra& A, int s, int t, int j, int k, int) {
  const auto& P = A.params();
  const long long K = P.K(), N = P.N;
  CycScalar x = A.w((4 * k * K - 2 * j * N) * (t + 1) + 4 * k * K * s);
  CycScalar y = A.w((4 * k * K + 2 * j * N) * (t + 1) + 4 * k * K * s);
  return from_diag(A.order(), {{x, y}, {y, x}});
}

MonomialBraiding braiding_E(const SuzukiAlgebra& A, int s, int j, int k, int p) {
  CycScalar q = A.w(exponent_E(A.params(), s, j, k, p));
  return from_diag(A.order(), {{q, q}, {q, q}});
}

MonomialBraiding braiding_F(const SuzukiAlgebra& A, int s, int t, int k, int p) {
  CycScalar q = A.w(exponent_F(A.params(), s, t, k, p));
  return from_diag(A.order(), {{q, q}, {q, q}});
}

MonomialBraiding braiding_G(const SuzukiAlgebra& A, int s, int t, int k, int p) {
  CycScalar q = A.w(exponent_G(A.params(), s, t, k, p));
  return braiding_vabe(q, q, q);
}

MonomialBraiding braiding_vabe(const CycScalar& a, const CycScalar& b, const CycScalar& e) {
  if (a.is_zero() || b.is_zero() || e.is_zero()) throw std::invalid_argument("V_abe parameters must be nonzero");
  CycOrderPtr ord = a.order() ? a.order() : (b.order() ? b.order() : e.order());
  MonomialBraiding c(2, ord);
  c.set(0, 0, 1, 1, a);
  c.set(0, 1, 0, 1, b);
  c.set(1, 0, 1, 0, b);
  c.set(1, 1, 0, 0, e);
  return c;
}

// c(m_a (x) m_b) = scalar m_target (x) m_a, split by the parity of a+b.
MonomialBraiding braiding_L(const SuzukiAlgebra& A, int s, int k, int p, int) {
  const auto& P = A.params();
  const int n = P.n, K = P.K();
  const long long B = 2LL * k * K;  // exponent of w^{2k(2n+1)}
  const CycScalar Ps = A.scalar(p % 2 ? -1 : 1);
  MonomialBraiding c(K, A.order());
  for (int a = 1; a <= K; ++a)
    for (int b = 1; b <= K; ++b) {
      CycScalar v;
      int tgt;
      if ((a + b) % 2 == 1) {
        int d = (b + 2 * a - 1) / K, r = (b + 2 * a - 1) % K;
        if (d == 0) {
          v = A.w(2 * B * (s - a));
          tgt = b + 2 * a - 1;
        } else if (d == 1 && r == 0) {
          v = A.w(2 * B * (s - a));
          tgt = K;
        } else if (d == 1) {
          v = Ps * A.w(B * (2 * (s - a) + 2 * (r - 1) + 1));
          tgt = K - (r - 1);
        } else if (d == 2 && r == 0) {
          v = Ps * A.w(B * (2 * (s - a) + 4 * n + 1));
          tgt = 1;
        } else {
          v = A.w(2 * B * ((s - a) + 2 * n + 1));
          tgt = r;
        }
      } else {
        if (2 * a - 1 < b) {
          v = A.w(2 * B * (s - a + 2 * a - 1));
          tgt = b - (2 * a - 1);
        } else if (2 * a - 1 == b) {
          v = Ps * A.w(B * (2 * (s - a) + 2 * b - 1));
          tgt = 1;
        } else {
          int d = (2 * a - 1 - b) / K, r = (2 * a - 1 - b) % K;
          if (d == 0) {
            v = Ps * A.w(B * (2 * (s - a) + 2 * b - 1));
            tgt = r + 1;
          } else {
            v = A.w(2 * B * (s - a + b + r));
            tgt = K - r;
          }
        }
      }
      c.set(a - 1, b - 1, tgt - 1, a - 1, v);
    }
  return c;
}

MonomialBraiding braiding_N(const SuzukiAlgebra& A, int s, int k, int p, int q) {
  const auto& P = A.params();
  const int n = P.n, K = P.K();
  const long long eX = A.conventions().e_sqrt_mu_bar + 2LL * k * K;  // X = mu_bar^{1/2} w^{2k(2n+1)}
  auto X = [&](long long m) { return A.w(m * eX); };
  const CycScalar Ps = A.scalar(p % 2 ? -1 : 1), Qs = A.scalar(q % 2 ? -1 : 1), lam = A.scalar(P.lambda);
  struct T {
    CycScalar c;
    int x, y;
  };
  auto R = [&](int g, int al, int be) -> T {
    int t = 2 * n - al + 2, sb = be + g;
    if (sb <= K) return {A.scalar(1), sb, t};
    if (sb == K + 1) return {Ps * lam * X(1), K, t};
    if (sb <= 4 * n + 2) return {Ps * lam * X(2 * sb - 4 * n - 3), 4 * n + 3 - sb, t};
    return {lam * X(4 * n + 2), 1 + sb - (4 * n + 3), t};
  };
  auto Lg = [&](int g, int al, int be) -> T {
    int t = 2 * n - al + 2;
    if (g < be) return {X(2 * g), be - g, t};
    if (g <= be + 2 * n) return {Ps * X(2 * be - 1), g - be + 1, t};
    if (g == be + 2 * n + 1) return {lam * X(2 * be), K, t};
    return {lam * X(2 * (g - 2 * n - 1)), 4 * n + 2 + be - g, t};
  };
  MonomialBraiding c(K, A.order());
  for (int al = 1; al <= K; ++al)
    for (int be = 1; be <= K; ++be) {
      T r;
      if (al == n + 1) {
        r = {Qs * X(2 * (al + s - 1)), be, 2 * n - al + 2};
      } else if (al < n + 1) {
        CycScalar f = Qs * X(2 * (2 * al + s - n - 2));
        r = (al + be) % 2 == 0 ? Lg(2 * (n - al + 1), al, be) : R(2 * (n - al + 1), al, be);
        r.c = f * r.c;
      } else {
        CycScalar f = Qs * X(2 * (s + n));
        r = (al + be) % 2 == 1 ? Lg(2 * (al - 1 - n), al, be) : R(2 * (al - 1 - n), al, be);
        r.c = f * r.c;
      }
      c.set(al - 1, be - 1, r.x - 1, r.y - 1, r.c);
    }
  return c;
}

std::optional<MonomialBraiding> closed_form_braiding(const SuzukiAlgebra& A, const YDModule& y) {
  const auto& f = y.family;
  const auto& q = y.params;
  if (f == "A") return braiding_A(A, q[0], q[1], q[2]);
  if (f == "B") return braiding_B(A, q[0], q[1], q[2]);
  if (f == "C") return braiding_C(A, q[0], q[1], q[2], q[3], q[4]);
  if (f == "D") return braiding_D(A, q[0], q[1], q[2], q[3], q[4]);
  if (f == "E") return braiding_E(A, q[0], q[1], q[2], q[3]);
  if (f == "F") return braiding_F(A, q[0], q[1], q[2], q[3]);
  if (f == "G") return braiding_G(A, q[0], q[1], q[2], q[3]);
  if (f == "L") return braiding_L(A, q[0], q[1], q[2], q[3]);
  if (f == "N") return braiding_N(A, q[0], q[1], q[2], q[3]);
  return std::nullopt;
}

std::string closed_form_mismatch(const SuzukiAlgebra& A, const YDModule& y, const MonomialBraiding& derived) {
  if (y.family == "H" || y.family == "I") {
    auto sh = vabe_shape(derived);
    if (!sh) return "derived braiding is not of V_abe shape";
    const auto& q = y.params;
    auto ex = y.family == "H" ? vabe_exponents_H(A.params(), q[0], q[1], q[2], q[3], q[4])
                              : vabe_exponents_I(A.params(), q[0], q[1], q[2], q[3], q[4]);
    if (sh->a * sh->e != A.w(ex.ae)) return "ae differs from closed form";
    if (sh->b != A.w(ex.b)) return "b differs from closed form";
    return {};
  }
  auto c = closed_form_braiding(A, y);
  if (!c) return "no closed form for family " + y.family;
  if (auto d = first_difference(*c, derived)) {
    std::ostringstream os;
    os << "entry (" << d->first + 1 << "," << d->second + 1 << ") differs";
    return os.str();
  }
  return {};
}

std::optional<VabeScalars> vabe_shape(const MonomialBraiding& c) {
  if (c.dim() != 2) return std::nullopt;
  auto is = [&](int i, int j, int k, int l) { return c.at(i, j).k == k && c.at(i, j).l == l; };
  if (!(is(0, 0, 1, 1) && is(1, 1, 0, 0) && is(0, 1, 0, 1) && is(1, 0, 1, 0))) return std::nullopt;
  if (c.at(0, 1).scalar != c.at(1, 0).scalar) return std::nullopt;
  return VabeScalars{c.at(0, 0).scalar, c.at(0, 1).scalar, c.at(1, 1).scalar};
}

// ---------------------------------------------------------------------------

YBResult yang_baxter(const MonomialBraiding& c) {
  const int d = c.dim();
  struct State {
    std::array<int, 3> w;
    CycScalar s;
  };
  auto apply = [&](State st, int pos) {
    const auto& e = c.at(st.w[pos], st.w[pos + 1]);
    st.w[pos] = e.k;
    st.w[pos + 1] = e.l;
    st.s = st.s * e.scalar;
    return st;
  };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        State s0{{i, j, k}, CycScalar(c.order(), 1)};
        State l = apply(apply(apply(s0, 0), 1), 0);
        State r = apply(apply(apply(s0, 1), 0), 1);
        if (l.w != r.w || l.s != r.s) return {false, {i, j, k}};
      }
  return {};
}

Rack extract_rack(const MonomialBraiding& c) {
  const int d = c.dim();
  Rack r;
  r.size = d;
  r.tau.assign(d, -1);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      int l = c.at(x, y).l;
      if (r.tau[x] < 0) r.tau[x] = l;
      if (r.tau[x] != l) throw std::invalid_argument("braiding is not of rack shape");
    }
  std::vector<int> sorted = r.tau;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < d; ++i)
    if (sorted[i] != i) throw std::invalid_argument("braiding is not of rack shape");
  r.table.assign(d, std::vector<int>(d));
  r.cocycle.assign(d, std::vector<CycScalar>(d));
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      const auto& e = c.at(x, r.tau[y]);
      r.table[x][y] = e.k;
      r.cocycle[x][y] = e.scalar;
    }
  return r;
}

std::string rack_defect(const Rack& r) {
  const int d = r.size;
  for (int x = 0; x < d; ++x) {
    std::vector<int> row = r.table[x];
    std::sort(row.begin(), row.end());
    for (int i = 0; i < d; ++i)
      if (row[i] != i) return "left translation by " + std::to_string(x + 1) + " is not bijective";
  }
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z)
        if (r.table[x][r.table[y][z]] != r.table[r.table[x][y]][r.table[x][z]])
          return "self-distributivity fails at (" + std::to_string(x + 1) + "," + std::to_string(y + 1) + "," +
                 std::to_string(z + 1) + ")";
  return {};
}

std::optional<DiagonalBraiding> as_diagonal(const MonomialBraiding& c) {
  DiagonalBraiding q{c.dim(), std::vector<std::vector<CycScalar>>(c.dim(), std::vector<CycScalar>(c.dim()))};
  for (int i = 0; i < c.dim(); ++i)
    for (int j = 0; j < c.dim(); ++j) {
      const auto& e = c.at(i, j);
      if (e.k != j || e.l != i) return std::nullopt;
      q.q[i][j] = e.scalar;
    }
  return q;
}

std::optional<DiagonalBraiding> vabe_diagonal_form(const CycScalar& a, const CycScalar& b, const CycScalar& e) {
  if (a * e != b * b) return std::nullopt;
  CycScalar mb = -b;
  return DiagonalBraiding{2, {{b, mb}, {mb, b}}};
}

// ---------------------------------------------------------------------------

EquivalenceResult monomial_equivalence(const MonomialBraiding& c1, const MonomialBraiding& c2) {
  EquivalenceResult res;
  const int d = c1.dim();
  if (d != c2.dim()) {
    res.verdict = Equivalence::NotFound;
    return res;
  }
  if (d > 4) return res;
  const int L = c1.order() ? c1.order()->L() : 1;
  const int M = 4 * L;
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  struct Eq {
    int i, j, k, l, rhs;
  };
  do {
    std::vector<Eq> eqs;
    bool ok = true;
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j) {
        const auto& e1 = c1.at(i, j);
        const auto& e2 = c2.at(perm[i], perm[j]);
        if (e2.k != perm[e1.k] || e2.l != perm[e1.l]) {
          ok = false;
          break;
        }
        auto ex = (e2.scalar / e1.scalar).root_exponent();
        if (!ex) {
          ok = false;
          break;
        }
        eqs.push_back({i, j, e1.k, e1.l, md(4LL * *ex, M)});
      }
    if (!ok) continue;
    // x_k + x_l - x_i - x_j = rhs (mod M), x_0 = 0, backtracking over the remaining unknowns
    std::vector<int> x(d, 0);
    std::function<bool(int)> search = [&](int pos) -> bool {
      for (const auto& q : eqs) {
        int top = std::max({q.i, q.j, q.k, q.l});
        if (top != pos - 1) continue;
        if (md(static_cast<long long>(x[q.k]) + x[q.l] - x[q.i] - x[q.j] - q.rhs, M) != 0) return false;
      }
      if (pos == d) return true;
      for (int v = 0; v < M; ++v) {
        x[pos] = v;
        if (search(pos + 1)) return true;
      }
      return false;
    };
    x[0] = 0;
    if (search(1)) {
      res.verdict = Equivalence::Equivalent;
      res.perm = perm;
      res.scale_exponents = x;
      return res;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  res.verdict = Equivalence::NotFound;
  return res;
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const MonomialBraiding& c) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < c.dim(); ++i)
    for (int j = 0; j < c.dim(); ++j) {
      const auto& e = c.at(i, j);
      entries.push_back({{"i", i + 1}, {"j", j + 1}, {"k", e.k + 1}, {"l", e.l + 1}, {"scalar", to_json(e.scalar)}});
    }
  return {{"dim", c.dim()}, {"entries", entries}};
}

nlohmann::json to_json(const Rack& r) {
  nlohmann::json table = nlohmann::json::array(), coc = nlohmann::json::array();
  for (int x = 0; x < r.size; ++x) {
    nlohmann::json row = nlohmann::json::array(), crow = nlohmann::json::array();
    for (int y = 0; y < r.size; ++y) {
      row.push_back(r.table[x][y] + 1);
      crow.push_back(to_json(r.cocycle[x][y]));
    }
    table.push_back(row);
    coc.push_back(crow);
  }
  return {{"size", r.size}, {"table", table}, {"cocycle", coc}};
}

MonomialBraiding braiding_from_json(const nlohmann::json& j, const CycOrderPtr& ord) {
  int d = j.at("dim").get<int>();
  MonomialBraiding c(d, ord);
  for (const auto& e : j.at("entries"))
    c.set(e.at("i").get<int>() - 1, e.at("j").get<int>() - 1, e.at("k").get<int>() - 1, e.at("l").get<int>() - 1,
          cyc_from_json(e.at("scalar")));
  return c;
}

}  // namespace suzuki
