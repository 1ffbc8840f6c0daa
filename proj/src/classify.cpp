#include "suzuki/classify.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace suzuki {

namespace {

long long mod(long long x, long long L) { return ((x % L) + L) % L; }

Verdict make(VerdictKind k, std::optional<long long> dim = std::nullopt, int order = 0, std::string note = {}) {
  Verdict v;
  v.kind = k;
  v.dim = dim;
  v.order = order;
  v.note = std::move(note);
  return v;
}

CycScalar w_pow(const CycOrderPtr& ord, long long e) { return CycScalar::root(ord, mod(e, ord->L())); }

}  // namespace

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::A1: return "A1";
    case VerdictKind::A1xA1: return "A1xA1";
    case VerdictKind::A2: return "A2";
    case VerdictKind::SuperA2: return "SuperA2";
    case VerdictKind::Ufo8: return "ufo8";
    case VerdictKind::DiagonalOther: return "DiagonalOther";
    case VerdictKind::NonDiagonal: return "NonDiagonal";
    case VerdictKind::Infinite: return "Infinite";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

bool Verdict::finite() const {
  return kind != VerdictKind::Infinite && kind != VerdictKind::Unknown && kind != VerdictKind::DiagonalOther;
}

std::string Verdict::dim_string() const {
  if (dim) return std::to_string(*dim);
  if (kind == VerdictKind::Infinite) return "inf";
  if (finite()) return "finite";
  return "unknown";
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["kind"] = to_string(v.kind);
  j["dim"] = v.dim_string();
  if (v.order) j["order"] = v.order;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

int root_order(long long e, int L) {
  const long long r = mod(e, L);
  return static_cast<int>(L / std::gcd<long long>(L, r));
}

Verdict classify_rank1(const CycScalar& q) {
  if (q.is_one()) return make(VerdictKind::Infinite, std::nullopt, 1);
  auto m = order_of(q);
  if (!m) return make(VerdictKind::Unknown, std::nullopt, 0, "not a root of unity");
  return make(VerdictKind::A1, *m, *m);
}

Verdict classify_rank1_B(const SuzukiParams& P, int s, int k, int p) {
  const long long N = P.N, n = P.n;
  long long X, M;
  if (P.lambda == 1 && P.mu == 1) {
    X = p * N + k * (2 * s + 1 + 2 * n);
    M = 2 * N;
  } else if (P.lambda == -1 && P.mu == 1) {
    X = N * (2 * p + 2 * n + 1) + 2 * k * (2 * s + 1 + 2 * n);
    M = 4 * N;
  } else if (P.lambda == 1 && P.mu == -1) {
    X = 2 * N * p + (2 * s + 1 + 2 * n) * (2 * k + 1);
    M = 4 * N;
  } else {
    X = N * (2 * p + 2 * n + 1) + (2 * s + 1 + 2 * n) * (2 * k + 1);
    M = 4 * N;
  }
  const long long d = mod(X, M);
  if (d == 0) return make(VerdictKind::Infinite, std::nullopt, 1);
  const long long m = M / std::gcd(M, d);
  return make(VerdictKind::A1, m, static_cast<int>(m));
}

AlphaBeta alpha_beta_C(const SuzukiParams& P, int s, int t, int j, int k) {
  const long long N = P.N, K = P.K(), L = P.L();
  return {static_cast<int>(mod(2 * N * j * (t + 1) + 4 * k * K * (t + 1 + s), L)),
          static_cast<int>(mod(-4 * N * j * (t + 1) + 8 * k * K * (t + 1 + s), L))};
}

AlphaBeta alpha_beta_D(const SuzukiParams& P, int s, int t, int j, int k) {
  const long long N = P.N, K = P.K(), L = P.L();
  return {static_cast<int>(mod(-2 * N * j * (t + 1) + 4 * k * K * (t + 1 + s), L)),
          static_cast<int>(mod(4 * N * j * (t + 1) + 8 * k * K * (t + 1 + s), L))};
}

std::optional<AlphaBeta> alpha_beta_from_braiding(const MonomialBraiding& c) {
  auto q = as_diagonal(c);
  if (!q || q->dim != 2 || q->q[0][0] != q->q[1][1]) return std::nullopt;
  auto a = q->q[0][0].root_exponent();
  auto b = (q->q[0][1] * q->q[1][0]).root_exponent();
  if (!a || !b) return std::nullopt;
  return AlphaBeta{*a, *b};
}

Verdict classify_pair(const AlphaBeta& ab, int L) {
  const long long a = mod(ab.alpha, L), b = mod(ab.beta, L), h = L / 2;
  const int m = root_order(a, L);
  if (a != 0 && b == 0)
    return make(VerdictKind::A1xA1, a == h ? std::optional<long long>(4) : std::nullopt, m);
  if (a != 0 && mod(a + b, L) == 0)
    return make(VerdictKind::A2, mod(3 * a, L) == 0 ? std::optional<long long>(27) : std::nullopt, m);
  if (L % 2 == 0 && a == h && b != 0 && b != h) return make(VerdictKind::SuperA2, std::nullopt, m);
  if (L % 2 == 0 && mod(a - 2 * b, L) == h && mod(6 * b, L) == h && mod(4 * b, L) != 0)
    return make(VerdictKind::Ufo8, std::nullopt, m, "dimension not given in closed form");
  return make(VerdictKind::Infinite, std::nullopt, m);
}

Verdict classify_q_dichotomy(const CycScalar& q) {
  auto m = order_of(q);
  if (!m) return make(VerdictKind::Unknown, std::nullopt, 0, "not a root of unity");
  if (*m == 2) return make(VerdictKind::A1xA1, 4, 2);
  if (*m == 3) return make(VerdictKind::A2, 27, 3);
  return make(VerdictKind::Infinite, std::nullopt, *m);
}

Verdict classify_vabe_exponents(const VabeExponents& x, int L) {
  const long long ae = mod(x.ae, L), b = mod(x.b, L);
  const int ob = root_order(b, L), oae = root_order(ae, L);
  if (mod(ae - 2 * b, L) == 0) {
    if (ob == 2) return make(VerdictKind::A1xA1, 4, 2, "diagonal V_abe");
    if (ob == 3) return make(VerdictKind::A2, 27, 3, "diagonal V_abe");
    return make(VerdictKind::Infinite, std::nullopt, ob, "diagonal V_abe");
  }
  if (ob == 2) return make(VerdictKind::NonDiagonal, 4LL * oae, oae, "V_abe, b=-1, ae in G_m");
  if (ae == 0 && ob >= 2) return make(VerdictKind::NonDiagonal, 1LL * ob * ob, ob, "V_abe, ae=1, b in G_m");
  if (mod(2 * b + ae, L) == 0 && ob >= 3) return make(VerdictKind::Infinite, std::nullopt, ob, "V_abe, b^2=(ae)^-1");
  if (b == 0) return make(VerdictKind::Infinite, std::nullopt, 1, "V_abe, b=1");
  return make(VerdictKind::Unknown, std::nullopt, ob, "V_abe outside the known branches");
}

Verdict classify_vabe(const CycScalar& a, const CycScalar& b, const CycScalar& e) {
  if (a.is_zero() || b.is_zero() || e.is_zero()) throw std::invalid_argument("V_abe parameters must be nonzero");
  CycScalar ae = a * e;
  auto xa = ae.root_exponent();
  auto xb = b.root_exponent();
  if (!xa || !xb) return make(VerdictKind::Unknown, std::nullopt, 0, "parameters are not roots of unity");
  const int L = ae.order() ? ae.L() : (b.order() ? b.L() : 1);
  return classify_vabe_exponents({*xa, *xb}, L);
}

std::string ParamTuple::to_string() const {
  std::ostringstream os;
  os << "(" << n << "," << N << "," << s << "," << t << "," << j << "," << k << "," << p << ")";
  return os.str();
}

VabeExponents hi_exponents(const ParamTuple& tp, char family, int mu, int lambda) {
  if (family != 'H' && family != 'I') throw std::invalid_argument("family must be H or I");
  if (tp.n < 1 || tp.N < 1) throw std::out_of_range("n and N must be positive");
  const int t_max = family == 'I' ? tp.n : tp.n - 1;
  if (tp.s < 1 || tp.s > tp.N || tp.t < 0 || tp.t > t_max || tp.j < 2 || tp.j > 2 * tp.n || tp.j % 2 ||
      tp.k < 0 || tp.k >= tp.N || (tp.p != 0 && tp.p != 1))
    throw std::out_of_range("tuple " + tp.to_string() + " outside the module ranges");
  SuzukiParams P{tp.N, tp.n, mu, lambda};
  P.validate();
  return family == 'H' ? vabe_exponents_H(P, tp.s, tp.t, tp.j, tp.k, tp.p)
                       : vabe_exponents_I(P, tp.s, tp.t, tp.j, tp.k, tp.p);
}

VabeScalarsAeB hi_parameters(const ParamTuple& tp, char family, int mu, int lambda) {
  auto x = hi_exponents(tp, family, mu, lambda);
  auto ord = CycOrder::get(SuzukiParams{tp.N, tp.n, mu, lambda}.L());
  return {w_pow(ord, x.ae), w_pow(ord, x.b)};
}

std::vector<SearchHit> search_tuples(char family, int mu, int lambda, const std::function<bool(const Verdict&)>& pred,
                                     const SearchRanges& r) {
  std::vector<SearchHit> out;
  for (int n = r.n_min; n <= r.n_max; ++n)
    for (int N : r.Ns) {
      const int L = SuzukiParams{N, n, mu, lambda}.L();
      const int t_max = family == 'I' ? n : n - 1;
      for (int s = 1; s <= N; ++s)
        for (int t = 0; t <= t_max; ++t)
          for (int j = 2; j <= 2 * n; j += 2)
            for (int k = 0; k < N; ++k)
              for (int p = 0; p < 2; ++p) {
                ParamTuple tp{n, N, s, t, j, k, p};
                Verdict v = classify_vabe_exponents(hi_exponents(tp, family, mu, lambda), L);
                if (pred(v)) out.push_back({tp, v});
              }
    }
  return out;
}

Verdict classify_module(const SuzukiAlgebra& A, const YDModule& y) {
  const auto& P = A.params();
  const auto& q = y.params;
  const std::string& f = y.family;
  const int L = P.L();
  if (f == "A") return classify_rank1(A.w(exponent_A(P, q[0], q[1], q[2])));
  if (f == "B") return classify_rank1_B(P, q[0], q[1], q[2]);
  if (f == "C") return classify_pair(alpha_beta_C(P, q[0], q[1], q[2], q[3]), L);
  if (f == "D") return classify_pair(alpha_beta_D(P, q[0], q[1], q[2], q[3]), L);
  if (f == "E") return classify_q_dichotomy(A.w(exponent_E(P, q[0], q[1], q[2], q[3])));
  if (f == "F") return classify_q_dichotomy(A.w(exponent_F(P, q[0], q[1], q[2], q[3])));
  if (f == "G") return classify_q_dichotomy(A.w(exponent_G(P, q[0], q[1], q[2], q[3])));
  if (f == "H") return classify_vabe_exponents(vabe_exponents_H(P, q[0], q[1], q[2], q[3], q[4]), L);
  if (f == "I") return classify_vabe_exponents(vabe_exponents_I(P, q[0], q[1], q[2], q[3], q[4]), L);
  // rack-type families: (s, k, p, q)
  auto rack = [&](const std::string& fam, int k, int p, int qq) {
    if (fam == "L") {
      if (P.n == 1 && p == 1 && k == 0) return make(VerdictKind::NonDiagonal, 12, 0, "rack type");
      if (P.n == 1 && P.N == 1 && p == 0) return make(VerdictKind::Infinite, std::nullopt, 0, "rack type");
    } else {
      if (P.n == 1 && P.mu == 1 && k == 0 && qq == 1) return make(VerdictKind::NonDiagonal, 12, 0, "rack type");
      if (P.n == 1 && P.N == 1 && P.mu == 1 && qq == 0)
        return make(VerdictKind::Infinite, std::nullopt, 0, "rack type");
    }
    return make(VerdictKind::Unknown, std::nullopt, 0, "rack type, no closed classification");
  };
  if (f == "L" || f == "N") return rack(f, q[1], q[2], q[3]);
  if (f == "K") return rack("L", q[1], 0, q[2]);
  if (f == "M") return rack("N", q[1], 0, q[2]);
  throw std::invalid_argument("unknown family " + f);
}

std::vector<SummaryRow> theorem_summary(const SuzukiAlgebra& A, const Catalog& cat) {
  std::vector<SummaryRow> rows;
  for (const auto& y : cat.modules) rows.push_back({y.label(), y.family, y.params, y.duplicate_of, classify_module(A, y)});
  return rows;
}

std::vector<SummaryRow> theorem_summary(const SuzukiAlgebra& A) { return theorem_summary(A, build_catalog(A)); }

nlohmann::json to_json(const SummaryRow& r) {
  nlohmann::json j;
  j["label"] = r.label;
  j["family"] = r.family;
  j["params"] = r.params;
  if (r.duplicate_of) j["duplicate_of"] = *r.duplicate_of;
  j["verdict"] = to_json(r.verdict);
  return j;
}

}  // namespace suzuki
