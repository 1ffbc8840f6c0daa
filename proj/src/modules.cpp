#include "suzuki/modules.hpp"

#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace suzuki {

namespace {

CycMatrix zero_matrix(int r, int c, const CycOrderPtr& ord) { return CycMatrix(r, c, CycScalar(ord, 0)); }

CycMatrix identity_matrix(int d, const CycOrderPtr& ord) {
  return CycMatrix::identity(d, CycScalar(ord, 1), CycScalar(ord, 0));
}

CycMatrix scaled(const CycScalar& c, CycMatrix m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) m(i, j) = c * m(i, j);
  return m;
}

CycMatrix mat2(const CycScalar& a, const CycScalar& b, const CycScalar& c, const CycScalar& d, const CycOrderPtr& ord) {
  CycMatrix m = zero_matrix(2, 2, ord);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

Word chi(Letter a, Letter b, int m) { return alternating(a, b, m); }

}  // namespace

CycMatrix act_word(const GenMatrices& g, const Word& w, int dim) {
  CycOrderPtr ord;
  for (const auto& m : g)
    for (int i = 0; i < m.rows() && !ord; ++i)
      for (int j = 0; j < m.cols() && !ord; ++j) ord = m(i, j).order();
  CycMatrix r = identity_matrix(dim, ord);
  for (Letter x : w) r = r * g[x];
  return r;
}

CycMatrix act_element(const SuzukiAlgebra& A, const GenMatrices& g, const SuzukiElement& x, int dim) {
  CycMatrix r = zero_matrix(dim, dim, A.order());
  for (const auto& [i, c] : x.terms) r = r + scaled(c, act_word(g, A.word(i), dim));
  return r;
}

std::vector<CycMatrix> basis_action(const SuzukiAlgebra& A, const GenMatrices& g, int dim) {
  std::vector<CycMatrix> out;
  out.reserve(A.dim());
  for (int i = 0; i < A.dim(); ++i) out.push_back(act_word(g, A.word(i), dim));
  return out;
}

std::string module_defect(const SuzukiAlgebra& A, const GenMatrices& g, int dim) {
  const auto& P = A.params();
  const int N = P.N, n = P.n;
  auto M = [&](const Word& w) { return act_word(g, w, dim); };
  auto eq = [](const CycMatrix& a, const CycMatrix& b) { return a == b; };
  if (!eq(M({X11, X11}), M({X22, X22}))) return "x11^2 != x22^2";
  if (!eq(M({X12, X12}), M({X21, X21}))) return "x12^2 != x21^2";
  for (Letter a : kLetters)
    for (Letter b : kLetters)
      if (letter_even(a) != letter_even(b) && !M({a, b}).is_zero_matrix())
        return "parity product " + letter_name(a) + letter_name(b) + " acts nonzero";
  if (!eq(M(chi(X11, X22, 2 * n + 1)), M(chi(X22, X11, 2 * n + 1)))) return "chi11 != chi22 in top degree";
  if (!eq(M(chi(X21, X12, 2 * n + 1)), scaled(A.scalar(P.lambda), M(chi(X12, X21, 2 * n + 1)))))
    return "chi21 != lambda chi12 in top degree";
  CycMatrix u = M(power_word(X11, 2 * N)) + scaled(A.scalar(P.mu), M(power_word(X12, 2 * N)));
  if (!eq(u, identity_matrix(dim, A.order()))) return "x11^2N + mu x12^2N does not act as 1";
  auto B = basis_action(A, g, dim);
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      auto [k, sg] = A.multiply_basis(i, j);
      CycMatrix lhs = B[i] * B[j];
      CycMatrix rhs = k < 0 ? zero_matrix(dim, dim, A.order()) : scaled(A.scalar(sg), B[k]);
      if (lhs != rhs) return "basis product " + A.basis(i).to_string() + "*" + A.basis(j).to_string();
    }
  return {};
}

std::string SimpleModule::label() const {
  std::ostringstream os;
  switch (kind) {
    case V: os << "V_" << k; break;
    case Vprime: os << "V'_" << k; break;
    case Vj: os << "V_{" << j << "," << k << "}"; break;
    case Vjprime: os << "V'_{" << j << "," << k << "}"; break;
  }
  return os.str();
}

std::vector<SimpleModule> build_simple_modules(const SuzukiAlgebra& A) {
  const auto& P = A.params();
  const auto& cv = A.conventions();
  const auto& ord = A.order();
  const int N = P.N, n = P.n, K = P.K();
  std::vector<SimpleModule> out;
  auto zero1 = zero_matrix(1, 1, ord);
  auto zero2 = zero_matrix(2, 2, ord);
  auto one1 = [&](const CycScalar& c) {
    CycMatrix m = zero_matrix(1, 1, ord);
    m(0, 0) = c;
    return m;
  };
  for (int k = 0; k < 2 * N; ++k) {
    SimpleModule m{SimpleModule::V, 0, k, 1, {}};
    m.action[X11] = m.action[X22] = one1(A.w(2 * k * K));
    m.action[X12] = m.action[X21] = zero1;
    out.push_back(m);
  }
  for (int k = 0; k < 2 * N; ++k) {
    SimpleModule m{SimpleModule::Vprime, 0, k, 1, {}};
    CycScalar x = A.w(2 * k * K) * cv.mu_tilde;
    m.action[X12] = one1(x);
    m.action[X21] = one1(A.scalar(P.lambda) * x);
    m.action[X11] = m.action[X22] = zero1;
    out.push_back(m);
  }
  const CycScalar z = A.scalar(0), one = A.scalar(1), lam = A.scalar(P.lambda);
  for (int k = 0; k < N; ++k)
    for (int j = 2; j <= 2 * n; j += 2) {
      SimpleModule m{SimpleModule::Vj, j, k, 2, {}};
      m.action[X11] = mat2(z, A.w(4 * k * K - 2 * j * N), A.w(2 * j * N), z, ord);
      m.action[X22] = mat2(z, A.w(4 * k * K), one, z, ord);
      m.action[X12] = m.action[X21] = zero2;
      out.push_back(m);
      SimpleModule mp{SimpleModule::Vjprime, j, k, 2, {}};
      mp.action[X21] = mat2(z, lam * cv.mu_bar * A.w(4 * k * K - 2 * j * N), lam * A.w(2 * j * N), z, ord);
      mp.action[X12] = mat2(z, cv.mu_bar * A.w(4 * k * K), one, z, ord);
      mp.action[X11] = mp.action[X22] = zero2;
      out.push_back(mp);
    }
  return out;
}

const SimpleModule& find_simple(const std::vector<SimpleModule>& mods, SimpleModule::Kind kind, int j, int k) {
  for (const auto& m : mods)
    if (m.kind == kind && m.k == k && (m.dim == 1 || m.j == j)) return m;
  throw std::out_of_range("no simple module with the requested label");
}

std::vector<CycMatrix> regular_block_representation(const SuzukiAlgebra& A, const std::vector<SimpleModule>& mods) {
  int total = 0;
  for (const auto& m : mods) total += m.dim;
  std::vector<CycMatrix> out;
  for (int i = 0; i < A.dim(); ++i) {
    CycMatrix big = zero_matrix(total, total, A.order());
    int off = 0;
    for (const auto& m : mods) {
      CycMatrix b = act_word(m.action, A.word(i), m.dim);
      for (int r = 0; r < m.dim; ++r)
        for (int c = 0; c < m.dim; ++c) big(off + r, off + c) = b(r, c);
      off += m.dim;
    }
    out.push_back(std::move(big));
  }
  return out;
}

// ---------------------------------------------------------------------------

RadfordSpace::RadfordSpace(const SuzukiAlgebra& A, const SimpleModule& m) : A_(&A), dv_(m.dim) {
  const int d = A.dim();
  const int D = dim();
  const int N = A.params().N;
  for (Letter h : kLetters) {
    const int a = letter_row(h), b = letter_col(h);
    std::vector<std::map<int, CycScalar>> acc(D);
    for (int c = 1; c <= 2; ++c)
      for (int dd = 1; dd <= 2; ++dd) {
        const CycMatrix& Mcd = m.action[make_letter(c, dd)];
        if (Mcd.is_zero_matrix()) continue;
        SuzukiElement xac = A.normal_form({make_letter(a, c)});
        SuzukiElement sdb = A.normal_form(power_word(make_letter(b, dd), 4 * N - 1));
        for (int g = 0; g < d; ++g) {
          SuzukiElement left = A.multiply(A.multiply(xac, A.basis_element(g)), sdb);
          if (left.is_zero()) continue;
          for (int l = 0; l < dv_; ++l)
            for (int l2 = 0; l2 < dv_; ++l2) {
              const CycScalar& ml = Mcd(l2, l);
              if (ml.is_zero()) continue;
              for (const auto& [bb, v] : left.terms) {
                auto& slot = acc[l * d + g];
                int tgt = l2 * d + bb;
                auto it = slot.find(tgt);
                if (it == slot.end())
                  slot.emplace(tgt, v * ml);
                else
                  it->second += v * ml;
              }
            }
        }
      }
    auto& cols = cols_[h];
    cols.resize(D);
    for (int src = 0; src < D; ++src)
      for (const auto& [tgt, v] : acc[src])
        if (!v.is_zero()) cols[src].emplace_back(tgt, v);
  }
}

Vec RadfordSpace::zero() const { return Vec(dim(), A_->scalar(0)); }

Vec RadfordSpace::vec(int l, const SuzukiElement& g) const {
  Vec v = zero();
  for (const auto& [i, c] : g.terms) v[l * A_->dim() + i] += c;
  return v;
}

Vec RadfordSpace::act(Letter h, const Vec& v) const {
  Vec out = zero();
  for (int src = 0; src < dim(); ++src) {
    if (v[src].is_zero()) continue;
    for (const auto& [tgt, c] : cols_[h][src]) out[tgt] += c * v[src];
  }
  return out;
}

Vec RadfordSpace::act_word(const Word& w, const Vec& v) const {
  Vec r = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = act(*it, r);
  return r;
}

std::map<int, Vec> RadfordSpace::coact(const Vec& v) const {
  const int d = A_->dim();
  std::map<int, Vec> out;
  for (int l = 0; l < dv_; ++l)
    for (int g = 0; g < d; ++g) {
      const CycScalar& c = v[l * d + g];
      if (c.is_zero()) continue;
      for (const auto& [ab, cc] : A_->coproduct(g)) {
        auto it = out.find(ab.first);
        if (it == out.end()) it = out.emplace(ab.first, zero()).first;
        it->second[l * d + ab.second] += c * cc;
      }
    }
  return out;
}

Vec vec_add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec vec_scale(const CycScalar& c, Vec a) {
  for (auto& x : a)
    if (!x.is_zero()) x = c * x;
  return a;
}

// ---------------------------------------------------------------------------

std::vector<std::string> param_names(const std::string& f) {
  if (f == "A" || f == "B" || f == "K" || f == "M") return {"s", "k", "p"};
  if (f == "C" || f == "D" || f == "H" || f == "I") return {"s", "t", "j", "k", "p"};
  if (f == "E") return {"s", "j", "k", "p"};
  if (f == "F" || f == "G") return {"s", "t", "k", "p"};
  if (f == "L" || f == "N") return {"s", "k", "p", "q"};
  throw std::invalid_argument("unknown family " + f);
}

std::string make_label(const std::string& family, const std::vector<int>& params) {
  auto names = param_names(family);
  if (names.size() != params.size()) throw std::invalid_argument("parameter count mismatch for " + family);
  std::ostringstream os;
  os << family << "[";
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i] << "=" << params[i];
  os << "]";
  return os.str();
}

std::string YDModule::label() const { return make_label(family, params); }

SpanAnalysis analyze_span(const RadfordSpace& R, const std::vector<Vec>& ws) {
  const SuzukiAlgebra& A = R.algebra();
  const int r = static_cast<int>(ws.size());
  SpanAnalysis out;
  SpanSolver<CycScalar> solver(ws, R.dim(), A.scalar(1), A.scalar(0));
  out.rank = solver.rank();
  if (out.rank != r) {
    out.failure = "spanning vectors are linearly dependent";
    return out;
  }
  for (Letter h : kLetters) {
    out.action[h] = zero_matrix(r, r, A.order());
    for (int i = 0; i < r; ++i) {
      auto c = solver.solve(R.act(h, ws[i]));
      if (!c) {
        out.failure = "action of " + letter_name(h) + " leaves the span at w" + std::to_string(i + 1);
        return out;
      }
      for (int j = 0; j < r; ++j) out.action[h](j, i) = (*c)[j];
    }
  }
  out.coaction.assign(r, std::vector<SuzukiElement>(r));
  for (int i = 0; i < r; ++i)
    for (const auto& [b, v] : R.coact(ws[i])) {
      auto c = solver.solve(v);
      if (!c) {
        out.failure = "coaction leaves the span at w" + std::to_string(i + 1);
        return out;
      }
      for (int j = 0; j < r; ++j) out.coaction[i][j].add(b, (*c)[j]);
    }
  out.closed = true;
  return out;
}

// ---------------------------------------------------------------------------

YDCheck verify_yd(const SuzukiAlgebra& A, const YDModule& y) {
  using nlohmann::json;
  const int r = y.dim;
  YDCheck res;
  auto fail = [&](const std::string& axiom, json w) {
    res.ok = false;
    res.axiom = axiom;
    res.witness = std::move(w);
    res.witness["module"] = y.label();
    return res;
  };
  if (std::string d = module_defect(A, y.action, r); !d.empty()) return fail("module", {{"detail", d}});
  auto coa = [&](int i, int j) -> const SuzukiElement& { return y.coaction[i][j]; };
  for (int i = 0; i < r; ++i) {
    for (int l = 0; l < r; ++l) {
      TensorElement lhs = A.coproduct(coa(i, l));
      TensorElement rhs;
      for (int j = 0; j < r; ++j)
        for (const auto& [a, ca] : coa(i, j).terms)
          for (const auto& [b, cb] : coa(j, l).terms) tensor_add(rhs, a, b, ca * cb);
      if (lhs != rhs) return fail("coassociativity", {{"vector", i + 1}, {"component", l + 1}});
    }
    for (int j = 0; j < r; ++j)
      if (A.counit(coa(i, j)) != A.scalar(i == j ? 1 : 0))
        return fail("counit", {{"vector", i + 1}, {"component", j + 1}});
  }
  // h_(1) v_(-1) (x) h_(2).v_(0) = (h_(1).v)_(-1) h_(2) (x) (h_(1).v)_(0)
  for (Letter h : kLetters) {
    const int a = letter_row(h), b = letter_col(h);
    for (int v = 0; v < r; ++v) {
      std::map<std::pair<int, int>, CycScalar> lhs, rhs;
      auto put = [](std::map<std::pair<int, int>, CycScalar>& m, int bi, int l, const CycScalar& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(bi, l);
        auto it = m.find(key);
        if (it == m.end())
          m.emplace(key, c);
        else {
          it->second += c;
          if (it->second.is_zero()) m.erase(it);
        }
      };
      for (int k = 1; k <= 2; ++k) {
        Letter h1 = make_letter(a, k), h2 = make_letter(k, b);
        SuzukiElement e1 = A.normal_form({h1}), e2 = A.normal_form({h2});
        const CycMatrix& H1 = y.action[h1];
        const CycMatrix& H2 = y.action[h2];
        for (int j = 0; j < r; ++j) {
          if (coa(v, j).is_zero()) continue;
          SuzukiElement prod = A.multiply(e1, coa(v, j));
          for (int l = 0; l < r; ++l) {
            if (H2(l, j).is_zero()) continue;
            for (const auto& [bi, cb] : prod.terms) put(lhs, bi, l, cb * H2(l, j));
          }
        }
        for (int m = 0; m < r; ++m) {
          if (H1(m, v).is_zero()) continue;
          for (int l = 0; l < r; ++l) {
            if (coa(m, l).is_zero()) continue;
            SuzukiElement prod = A.multiply(coa(m, l), e2);
            for (const auto& [bi, cb] : prod.terms) put(rhs, bi, l, H1(m, v) * cb);
          }
        }
      }
      if (lhs != rhs) {
        json w = {{"generator", letter_name(h)}, {"vector", v + 1}};
        for (const auto& [key, c] : lhs) {
          auto it = rhs.find(key);
          if (it == rhs.end() || it->second != c) {
            w["basis"] = A.basis(key.first).to_string();
            w["component"] = key.second + 1;
            w["lhs"] = to_json(c);
            w["rhs"] = to_json(it == rhs.end() ? A.scalar(0) : it->second);
            return fail("yetter-drinfeld", w);
          }
        }
        for (const auto& [key, c] : rhs) {
          if (lhs.count(key)) continue;
          w["basis"] = A.basis(key.first).to_string();
          w["component"] = key.second + 1;
          w["lhs"] = to_json(A.scalar(0));
          w["rhs"] = to_json(c);
          return fail("yetter-drinfeld", w);
        }
      }
    }
  }
  return res;
}

int intertwiner_dimension(const SuzukiAlgebra& A, const YDModule& y1, const YDModule& y2) {
  if (y1.dim != y2.dim) return 0;
  const int r = y1.dim;
  const CycScalar z = A.scalar(0);
  std::vector<Vec> eqs;
  // unknown T(m,i) at m*r+i, with T w_i = sum_m T(m,i) w'_m
  for (Letter h : kLetters) {
    const CycMatrix& P = y1.action[h];
    const CycMatrix& Q = y2.action[h];
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        Vec row(r * r, z);
        for (int c = 0; c < r; ++c) {
          row[a * r + c] += P(c, b);
          row[c * r + b] -= Q(a, c);
        }
        eqs.push_back(std::move(row));
      }
  }
  for (int i = 0; i < r; ++i)
    for (int bb = 0; bb < A.dim(); ++bb)
      for (int l = 0; l < r; ++l) {
        Vec row(r * r, z);
        bool any = false;
        for (int j = 0; j < r; ++j) {
          auto it = y1.coaction[i][j].terms.find(bb);
          if (it != y1.coaction[i][j].terms.end()) {
            row[l * r + j] += it->second;
            any = true;
          }
        }
        for (int m = 0; m < r; ++m) {
          auto it = y2.coaction[m][l].terms.find(bb);
          if (it != y2.coaction[m][l].terms.end()) {
            row[m * r + i] -= it->second;
            any = true;
          }
        }
        if (any) eqs.push_back(std::move(row));
      }
  return r * r - rank_of(eqs, r * r);
}

// ---------------------------------------------------------------------------

namespace {

class Builder {
 public:
  explicit Builder(const SuzukiAlgebra& A) : A_(A), mods_(build_simple_modules(A)) {}

  const std::vector<SimpleModule>& modules() const { return mods_; }

  YDModule make(const std::string& f, const std::vector<int>& prm, int jbig = 2) {
    const auto& P = A_.params();
    const auto& cv = A_.conventions();
    const int N = P.N, n = P.n, K = P.K();
    auto w = [&](long long e) { return A_.w(e); };
    auto X = [&](int s, int t) { return A_.normal_form(concat(power_word(X11, s), chi(X22, X11, t))); };
    auto Y = [&](int s, int t) { return A_.normal_form(concat(power_word(X12, s), chi(X21, X12, t))); };
    auto sgn = [&](int p) { return A_.scalar(p % 2 == 0 ? 1 : -1); };
    std::vector<Vec> ws;
    const SimpleModule* m = nullptr;
    const RadfordSpace* R = nullptr;
    auto use = [&](SimpleModule::Kind kind, int j, int k) {
      m = &find_simple(mods_, kind, j, k);
      R = &space(*m);
    };
    auto v = [&](int l, const SuzukiElement& g) { return R->vec(l, g); };
    auto grow = [&](Vec w1, Letter even_letter, Letter odd_letter) {
      ws = {std::move(w1)};
      for (int i = 2; i <= K; ++i) ws.push_back(R->act(i % 2 == 0 ? even_letter : odd_letter, ws.back()));
    };
    auto check_range = [&](bool ok) {
      if (!ok) throw std::out_of_range("parameters out of range for " + make_label(f, prm));
    };
    if (f == "A" || f == "B") {
      auto [s, k, p] = std::tuple{prm.at(0), prm.at(1), prm.at(2)};
      check_range(s >= 1 && s <= N && k >= 0 && k < 2 * N && (p == 0 || p == 1));
      if (f == "A") {
        use(SimpleModule::V, 0, k);
        ws = {v(0, X(2 * s, 0) + sgn(p) * Y(2 * s, 0))};
      } else {
        use(SimpleModule::Vprime, 0, k);
        ws = {v(0, X(2 * s + 1, 2 * n) + (sgn(p) * cv.sqrt_lambda) * Y(2 * s + 1, 2 * n))};
      }
    } else if (f == "C" || f == "D" || f == "H" || f == "I") {
      auto [s, t, j, k, p] = std::tuple{prm.at(0), prm.at(1), prm.at(2), prm.at(3), prm.at(4)};
      int tmax = f == "I" ? n : n - 1;
      check_range(s >= 1 && s <= N && t >= 0 && t <= tmax && j >= 2 && j <= 2 * n && j % 2 == 0 && k >= 0 &&
                  k < N && (p == 0 || p == 1));
      CycScalar Ps = sgn(p);
      if (f == "C") {
        use(SimpleModule::Vj, j, k);
        ws = {vec_add(v(0, X(2 * s, 2 * t + 2)), vec_scale(Ps * w(-2 * k * K + j * N), v(1, Y(2 * s, 2 * t + 2)))),
              vec_add(v(1, X(2 * s + 1, 2 * t + 1)),
                      vec_scale(Ps * w(2 * k * K - j * N), v(0, Y(2 * s + 1, 2 * t + 1))))};
      } else if (f == "D") {
        use(SimpleModule::Vj, j, k);
        ws = {vec_add(v(0, X(2 * s + 1, 2 * t + 1)),
                      vec_scale(Ps * w(j * N - 2 * k * K), v(1, Y(2 * s + 1, 2 * t + 1)))),
              vec_add(v(1, X(2 * s, 2 * t + 2)), vec_scale(Ps * w(2 * k * K - j * N), v(0, Y(2 * s, 2 * t + 2))))};
      } else {
        use(SimpleModule::Vjprime, j, k);
        const CycScalar& r = cv.sqrt_lambda_mu_bar;
        int s1 = f == "H" ? 2 * s : 2 * s + 1, t1 = f == "H" ? 2 * t + 1 : 2 * t;
        int s2 = f == "H" ? 2 * s + 1 : 2 * s, t2 = f == "H" ? 2 * t : 2 * t + 1;
        ws = {vec_add(v(0, X(s1, t1)), vec_scale(Ps / r * w(j * N - 2 * k * K), v(1, Y(s1, t1)))),
              vec_add(v(1, X(s2, t2)), vec_scale(Ps * r * w(2 * k * K - j * N), v(0, Y(s2, t2))))};
      }
    } else if (f == "E") {
      auto [s, j, k, p] = std::tuple{prm.at(0), prm.at(1), prm.at(2), prm.at(3)};
      check_range(s >= 1 && s <= N && j >= 2 && j <= 2 * n && j % 2 == 0 && k >= 0 && k < N && (p == 0 || p == 1));
      use(SimpleModule::Vj, j, k);
      ws = {vec_add(v(0, X(2 * s, 0)), vec_scale(sgn(p) * w(j * N - 2 * k * K), v(1, Y(2 * s, 0)))),
            vec_add(v(1, X(2 * s, 0)), vec_scale(sgn(p) * w(2 * k * K - j * N), v(0, Y(2 * s, 0))))};
    } else if (f == "F" || f == "G") {
      auto [s, t, k, p] = std::tuple{prm.at(0), prm.at(1), prm.at(2), prm.at(3)};
      check_range(s >= 1 && s <= N && t >= 0 && t < n && k >= 0 && k < 2 * N && (p == 0 || p == 1));
      if (f == "F") {
        use(SimpleModule::V, 0, k);
        ws = {v(0, X(2 * s + 1, 2 * t + 1) + sgn(p) * Y(2 * s + 1, 2 * t + 1)),
              v(0, X(2 * s, 2 * t + 2) + sgn(p) * Y(2 * s, 2 * t + 2))};
      } else {
        use(SimpleModule::Vprime, 0, k);
        ws = {v(0, X(2 * s, 2 * t + 1) + (sgn(p) * cv.sqrt_lambda) * Y(2 * s, 2 * t + 1)),
              v(0, X(2 * s + 1, 2 * t) + (sgn(p) / cv.sqrt_lambda) * Y(2 * s + 1, 2 * t))};
      }
    } else if (f == "K" || f == "M") {
      auto [s, k, p] = std::tuple{prm.at(0), prm.at(1), prm.at(2)};
      check_range(s >= 1 && s <= N && k >= 0 && k < N && (p == 0 || p == 1));
      if (f == "K") {
        use(SimpleModule::V, 0, k);
        Vec tail = R->act_word(chi(X22, X11, 2 * n),
                               v(0, A_.normal_form(concat(power_word(X12, 2 * s - 2), {X21}))));
        grow(vec_add(v(0, A_.normal_form(power_word(X11, 2 * s - 1))),
                     vec_scale(sgn(p) * cv.sqrt_lambda * w(-4LL * k * n * K), tail)),
             X22, X11);
      } else {
        use(SimpleModule::Vprime, 0, k);
        CycScalar a = sgn(p) * w(-4LL * k * n * K) * cv.mu_tilde.pow(-2 * n);
        Vec tail = R->act_word(chi(X21, X12, 2 * n),
                               v(0, A_.normal_form(concat(power_word(X12, 2 * s + 1), chi(X21, X12, 2 * n - 1)))));
        grow(vec_add(v(0, A_.normal_form(concat(power_word(X11, 2 * s), chi(X22, X11, 2 * n)))), vec_scale(a, tail)),
             X21, X12);
      }
    } else if (f == "L" || f == "N") {
      auto [s, k, p, q] = std::tuple{prm.at(0), prm.at(1), prm.at(2), prm.at(3)};
      check_range(s >= 1 && s <= N && k >= 0 && k < N && (p == 0 || p == 1) && (q == 0 || q == 1) && jbig >= 2 &&
                  jbig <= 2 * n && jbig % 2 == 0);
      const int j = jbig;
      if (f == "L") {
        use(SimpleModule::Vj, j, k);
        CycScalar a = sgn(p) * w(2 * j * N - 2 * k * K);
        CycScalar b = sgn(q) * cv.sqrt_lambda * w(-4LL * k * n * K);
        auto u = [&](const SuzukiElement& g) { return vec_add(v(0, g), vec_scale(a, v(1, g))); };
        Vec tail = R->act_word(chi(X22, X11, 2 * n), u(A_.normal_form(power_word(X21, 2 * s - 1))));
        grow(vec_add(u(A_.normal_form(power_word(X11, 2 * s - 1))), vec_scale(b, tail)), X22, X11);
      } else {
        use(SimpleModule::Vjprime, j, k);
        CycScalar a = sgn(p) / cv.sqrt_mu_bar * w(-2 * k * K);
        CycScalar b = sgn(q) * (cv.mu_bar * w(4 * k * K)).pow(-n);
        auto u = [&](const SuzukiElement& g) { return vec_add(v(0, g), vec_scale(a, v(1, g))); };
        Vec tail = R->act_word(chi(X21, X12, 2 * n),
                               u(A_.normal_form(concat(power_word(X12, 2 * s + 1), chi(X21, X12, 2 * n - 1)))));
        grow(vec_add(u(A_.normal_form(concat(power_word(X11, 2 * s), chi(X22, X11, 2 * n)))), vec_scale(b, tail)),
             X21, X12);
      }
    } else {
      throw std::invalid_argument("unknown family " + f);
    }
    SpanAnalysis an = analyze_span(*R, ws);
    if (!an.closed)
      throw std::runtime_error(make_label(f, prm) + " inside " + m->label() + " is not a sub-object: " + an.failure);
    YDModule y;
    y.family = f;
    y.params = prm;
    y.dim = an.rank;
    y.action = std::move(an.action);
    y.coaction = std::move(an.coaction);
    y.source = m->label() + " (x) A";
    return y;
  }

 private:
  const RadfordSpace& space(const SimpleModule& m) {
    auto key = m.label();
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, std::make_unique<RadfordSpace>(A_, m)).first;
    return *it->second;
  }

  const SuzukiAlgebra& A_;
  std::vector<SimpleModule> mods_;
  std::map<std::string, std::unique_ptr<RadfordSpace>> cache_;
};

}  // namespace

YDModule radford_module(const SuzukiAlgebra& A, const std::string& family, const std::vector<int>& params,
                        int j_big) {
  Builder b(A);
  return b.make(family, params, j_big);
}

YDModule explicit_L(const SuzukiAlgebra& A, int s, int k, int p, int q) {
  const auto& P = A.params();
  const auto& cv = A.conventions();
  const int N = P.N, n = P.n, K = P.K();
  if (s < 1 || s > N || k < 0 || k >= N) throw std::out_of_range("explicit_L parameters");
  const CycScalar Ps = A.scalar(p % 2 ? -1 : 1), Qs = A.scalar(q % 2 ? -1 : 1);
  YDModule y;
  y.family = "L";
  y.params = {s, k, p, q};
  y.dim = K;
  y.source = "explicit table";
  for (Letter h : kLetters) y.action[h] = zero_matrix(K, K, A.order());
  for (int i = 1; i <= K; ++i) {
    if (i == 1)
      y.action[X11](0, 0) = Ps * A.w(2 * k * K);
    else if (i % 2 == 0)
      y.action[X11](i, i - 1) = A.scalar(1);
    else
      y.action[X11](i - 2, i - 1) = A.w(4 * k * K);
    if (i == K)
      y.action[X22](K - 1, K - 1) = Ps * A.w(2 * k * K);
    else if (i % 2 == 1)
      y.action[X22](i, i - 1) = A.scalar(1);
    else
      y.action[X22](i - 2, i - 1) = A.w(4 * k * K);
  }
  y.coaction.assign(K, std::vector<SuzukiElement>(K));
  for (int i = 1; i <= K; ++i) {
    int e = 2 * (s - i), wraps = 0;
    while (e <= 0) {
      e += 2 * N;
      ++wraps;
    }
    Word g1, g2;
    if (i % 2 == 0) {
      g1 = concat(power_word(X11, e), chi(X22, X11, 2 * i - 1));
      g2 = concat(power_word(X12, e), chi(X21, X12, 2 * i - 1));
    } else {
      g1 = concat(power_word(X11, e), chi(X11, X22, 2 * i - 1));
      g2 = concat(power_word(X12, e), chi(X12, X21, 2 * i - 1));
    }
    CycScalar c = Qs * A.scalar(P.lambda) * cv.sqrt_lambda * A.w(4LL * k * K * (i - 1 - n)) *
                  A.scalar(wraps % 2 && P.mu == -1 ? -1 : 1);
    y.coaction[i - 1][i - 1] += A.normal_form(g1);
    y.coaction[i - 1][K - i] += c * A.normal_form(g2);
  }
  return y;
}

YDModule explicit_N(const SuzukiAlgebra& A, int s, int k, int p, int q) {
  const auto& P = A.params();
  const auto& cv = A.conventions();
  const int N = P.N, n = P.n, K = P.K();
  if (s < 1 || s > N || k < 0 || k >= N) throw std::out_of_range("explicit_N parameters");
  const CycScalar Ps = A.scalar(p % 2 ? -1 : 1), Qs = A.scalar(q % 2 ? -1 : 1);
  const CycScalar a = Ps / cv.sqrt_mu_bar * A.w(-2 * k * K);
  const CycScalar b = Qs * (cv.mu_bar * A.w(4 * k * K)).pow(-n);
  const CycScalar ia = a.inverse(), ia2 = ia * ia;
  YDModule y;
  y.family = "N";
  y.params = {s, k, p, q};
  y.dim = K;
  y.source = "explicit table";
  for (Letter h : kLetters) y.action[h] = zero_matrix(K, K, A.order());
  for (int i = 1; i <= K; ++i) {
    if (i == 1)
      y.action[X12](0, 0) = ia;
    else if (i % 2 == 0)
      y.action[X12](i, i - 1) = A.scalar(1);
    else
      y.action[X12](i - 2, i - 1) = ia2;
    if (i == K)
      y.action[X21](K - 1, K - 1) = A.scalar(P.lambda) * ia;
    else if (i % 2 == 0)
      y.action[X21](i - 2, i - 1) = ia2;
    else
      y.action[X21](i, i - 1) = A.scalar(1);
  }
  y.coaction.assign(K, std::vector<SuzukiElement>(K));
  for (int i = 1; i <= K; ++i) {
    Word g1 = power_word(X11, 2 * s), g2 = power_word(X12, 2 * s);
    if (i % 2 == 0) {
      g1 = concat(concat(g1, chi(X22, X11, i - 1)), chi(X22, X11, 2 * n - i + 1));
      g2 = concat(concat(g2, chi(X21, X12, i - 1)), chi(X21, X12, 2 * n - i + 1));
    } else {
      g1 = concat(concat(g1, chi(X22, X11, 2 * n - i + 1)), chi(X11, X22, i - 1));
      g2 = concat(concat(g2, chi(X21, X12, 2 * n - i + 1)), chi(X12, X21, i - 1));
    }
    CycScalar c = b * ia2.pow(i - 1);
    y.coaction[i - 1][i - 1] += A.normal_form(g1);
    y.coaction[i - 1][2 * n - i + 1] += c * A.normal_form(g2);
  }
  return y;
}

// ---------------------------------------------------------------------------

std::map<int, int> CatalogReport::expected_counts() const {
  const int N = params.N, n = params.n;
  return {{1, 8 * N * N}, {2, 8 * N * N * n * (n + 1)}, {2 * n + 1, 8 * N * N}};
}

long long CatalogReport::expected_sum_squares() const {
  long long d = 4LL * params.N * params.K();
  return d * d;
}

std::vector<const YDModule*> Catalog::distinct() const {
  std::vector<const YDModule*> out;
  for (const auto& m : modules)
    if (!m.duplicate_of) out.push_back(&m);
  return out;
}

const YDModule* Catalog::find(const std::string& label) const {
  for (const auto& m : modules)
    if (m.label() == label) return &m;
  return nullptr;
}

Catalog build_catalog(const SuzukiAlgebra& A) {
  const auto& P = A.params();
  const int N = P.N, n = P.n;
  Builder B(A);
  Catalog cat;
  auto& mods = cat.modules;
  for (const char* f : {"A", "B"})
    for (int s = 1; s <= N; ++s)
      for (int k = 0; k < 2 * N; ++k)
        for (int p = 0; p < 2; ++p) mods.push_back(B.make(f, {s, k, p}));
  for (const char* f : {"C", "D", "H", "I"}) {
    int tmax = std::string(f) == "I" ? n : n - 1;
    for (int s = 1; s <= N; ++s)
      for (int t = 0; t <= tmax; ++t)
        for (int j = 2; j <= 2 * n; j += 2)
          for (int k = 0; k < N; ++k)
            for (int p = 0; p < 2; ++p) mods.push_back(B.make(f, {s, t, j, k, p}));
  }
  for (int s = 1; s <= N; ++s)
    for (int j = 2; j <= 2 * n; j += 2)
      for (int k = 0; k < N; ++k)
        for (int p = 0; p < 2; ++p) mods.push_back(B.make("E", {s, j, k, p}));
  std::map<std::string, std::size_t> pos;
  for (const char* f : {"F", "G"})
    for (int s = 1; s <= N; ++s)
      for (int t = 0; t < n; ++t)
        for (int k = 0; k < 2 * N; ++k)
          for (int p = 0; p < 2; ++p) mods.push_back(B.make(f, {s, t, k, p}));
  for (const char* f : {"L", "N"})
    for (int s = 1; s <= N; ++s)
      for (int k = 0; k < N; ++k)
        for (int p = 0; p < 2; ++p)
          for (int q = 0; q < 2; ++q)
            mods.push_back(std::string(f) == "L" ? explicit_L(A, s, k, p, q) : explicit_N(A, s, k, p, q));
  for (const char* f : {"K", "M"})
    for (int s = 1; s <= N; ++s)
      for (int k = 0; k < N; ++k)
        for (int p = 0; p < 2; ++p) mods.push_back(B.make(f, {s, k, p}));

  for (std::size_t i = 0; i < mods.size(); ++i) pos[mods[i].label()] = i;
  auto certify = [&](YDModule& y, const std::string& target) {
    auto it = pos.find(target);
    if (it == pos.end()) return false;
    if (intertwiner_dimension(A, y, mods[it->second]) == 0) return false;
    y.duplicate_of = target;
    return true;
  };
  for (auto& y : mods) {
    if ((y.family == "F" || y.family == "G") && y.params[2] >= N) {
      const auto& pr = y.params;
      certify(y, make_label(y.family, {pr[0], pr[1], pr[2] - N, 1 - pr[3]}));
    } else if (y.family == "K" || y.family == "M") {
      const auto& pr = y.params;
      std::string fam = y.family == "K" ? "L" : "N";
      if (!certify(y, make_label(fam, {pr[0], pr[1], 0, pr[2]}))) {
        for (int p = 0; p < 2 && !y.duplicate_of; ++p)
          for (int q = 0; q < 2 && !y.duplicate_of; ++q) certify(y, make_label(fam, {pr[0], pr[1], p, q}));
      }
    }
  }
  cat.report.params = P;
  for (const auto& y : mods) {
    if (y.duplicate_of) {
      ++cat.report.duplicates;
      continue;
    }
    cat.report.counts[y.dim] += 1;
    cat.report.sum_squares += static_cast<long long>(y.dim) * y.dim;
  }
  return cat;
}

// ---------------------------------------------------------------------------

namespace {
nlohmann::json matrix_json(const CycMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}
}  // namespace

nlohmann::json to_json(const SuzukiAlgebra& A, const YDModule& y) {
  using nlohmann::json;
  json prm = json::object();
  auto names = param_names(y.family);
  for (std::size_t i = 0; i < names.size(); ++i) prm[names[i]] = y.params[i];
  json act = json::object();
  for (Letter h : kLetters) act[letter_name(h)] = matrix_json(y.action[h]);
  json coa = json::array();
  for (int i = 0; i < y.dim; ++i) {
    json row = json::array();
    for (int j = 0; j < y.dim; ++j)
      if (!y.coaction[i][j].is_zero()) row.push_back({to_json(A, y.coaction[i][j]), j});
    coa.push_back(row);
  }
  json out = {{"label", y.label()}, {"family", y.family}, {"params", prm}, {"dim", y.dim},
              {"action", act},      {"coaction", coa},    {"source", y.source}};
  if (y.duplicate_of) out["duplicate_of"] = *y.duplicate_of;
  return out;
}

nlohmann::json to_json(const CatalogReport& r) {
  nlohmann::json counts = nlohmann::json::object(), expected = nlohmann::json::object();
  for (const auto& [d, c] : r.counts) counts[std::to_string(d)] = c;
  for (const auto& [d, c] : r.expected_counts()) expected[std::to_string(d)] = c;
  return {{"params", {{"N", r.params.N}, {"n", r.params.n}, {"mu", r.params.mu}, {"lambda", r.params.lambda}}},
          {"counts", counts},
          {"expected_counts", expected},
          {"sum_squares", r.sum_squares},
          {"expected_sum_squares", r.expected_sum_squares()},
          {"duplicates", r.duplicates},
          {"complete", r.complete()}};
}

}  // namespace suzuki
