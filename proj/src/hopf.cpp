#include "suzuki/hopf.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "suzuki/linalg.hpp"

namespace suzuki {

std::string letter_name(Letter x) {
  switch (x) {
    case X11: return "x11";
    case X12: return "x12";
    case X21: return "x21";
    case X22: return "x22";
  }
  return "?";
}

Word alternating(Letter a, Letter b, int m) {
  Word w;
  w.reserve(m);
  for (int i = 0; i < m; ++i) w.push_back(i % 2 == 0 ? a : b);
  return w;
}

Word power_word(Letter a, int m) { return Word(m, a); }

Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

void SuzukiParams::validate() const {
  if (N < 1 || n < 1) throw std::invalid_argument("need N >= 1 and n >= 1");
  if ((mu != 1 && mu != -1) || (lambda != 1 && lambda != -1))
    throw std::invalid_argument("mu and lambda must be +1 or -1");
}

std::string SuzukiParams::to_string() const {
  std::ostringstream os;
  os << "N=" << N << " n=" << n << " mu=" << mu << " lambda=" << lambda;
  return os.str();
}

std::string SuzukiBasisElement::to_string() const {
  std::ostringstream os;
  os << (family == EVEN ? "E(" : "O(") << s << "," << t << ")";
  return os.str();
}

void SuzukiElement::add(int idx, const CycScalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(idx);
  if (it == terms.end()) {
    terms.emplace(idx, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

SuzukiElement& SuzukiElement::operator+=(const SuzukiElement& o) {
  for (const auto& [i, c] : o.terms) add(i, c);
  return *this;
}

SuzukiElement operator-(SuzukiElement a, const SuzukiElement& b) {
  for (const auto& [i, c] : b.terms) a.add(i, -c);
  return a;
}

SuzukiElement operator*(const CycScalar& c, const SuzukiElement& a) {
  SuzukiElement r;
  if (c.is_zero()) return r;
  for (const auto& [i, v] : a.terms) r.terms.emplace(i, c * v);
  return r;
}

void tensor_add(TensorElement& t, int i, int j, const CycScalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t.erase(it);
}

SuzukiAlgebra::SuzukiAlgebra(SuzukiParams p) : p_(p) {
  p_.validate();
  ord_ = CycOrder::get(p_.L());
  conv_ = SignConventions::make(p_.N, p_.n, p_.mu, p_.lambda, ord_);
  const int d = dim();
  table_.resize(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      NF r = nf(concat(word(i), word(j)));
      table_[i * d + j] = r.kind == 0 ? std::make_pair(-1, 0) : std::make_pair(r.idx, r.sign);
    }
}

int SuzukiAlgebra::index(Family f, int s, int t) const {
  if (s < 1 || s > 2 * p_.N || t < 0 || t > 2 * p_.n)
    throw std::out_of_range("basis index out of range");
  return static_cast<int>(f) * (2 * p_.N * p_.K()) + (s - 1) * p_.K() + t;
}

SuzukiBasisElement SuzukiAlgebra::basis(int idx) const {
  if (idx < 0 || idx >= dim()) throw std::out_of_range("basis index");
  const int half = 2 * p_.N * p_.K();
  Family f = idx < half ? EVEN : ODD;
  int r = idx % half;
  return {f, r / p_.K() + 1, r % p_.K()};
}

Word SuzukiAlgebra::word(int idx) const {
  auto b = basis(idx);
  Letter A = b.family == EVEN ? X11 : X12;
  Letter B = b.family == EVEN ? X22 : X21;
  return concat(power_word(A, b.s), alternating(B, A, b.t));
}

// Stack rewriting on alternating words.  Equal neighbours are the central
// square (x11^2 = x22^2, x12^2 = x21^2) and get counted in m.
SuzukiAlgebra::NF SuzukiAlgebra::nf(const Word& w) const {
  if (w.empty()) return {1, -1, 1};
  const bool even = letter_even(w[0]);
  for (Letter x : w)
    if (letter_even(x) != even) return {0, -1, 0};
  const bool odd = !even;
  const Letter A = odd ? X12 : X11;
  const Letter B = odd ? X21 : X22;
  const int N = p_.N, n = p_.n;
  int m = 0, sign = 1;
  std::vector<Letter> alt;
  alt.reserve(2 * n + 2);
  for (Letter x : w) {
    if (!alt.empty() && alt.back() == x) {
      alt.pop_back();
      ++m;
      continue;
    }
    alt.push_back(x);
    if (static_cast<int>(alt.size()) == 2 * n + 2) {
      // x1 y x1 ... (2n+1 letters) = y x1 y ... ; the trailing y y then cancels
      Letter x1 = alt[0];
      Letter y = x1 == A ? B : A;
      if (odd) sign *= p_.lambda;
      alt = alternating(y, x1, 2 * n);
      ++m;
    }
  }
  if (static_cast<int>(alt.size()) == 2 * n + 1 && alt[0] == B) {
    alt = alternating(A, B, 2 * n + 1);
    if (odd) sign *= p_.lambda;
  }
  int S, t;
  if (!alt.empty() && alt[0] == A) {
    S = 2 * m + 1;
    t = static_cast<int>(alt.size()) - 1;
  } else {
    S = 2 * m;
    t = static_cast<int>(alt.size());
  }
  while (S > 2 * N) {
    S -= 2 * N;
    if (odd) sign *= p_.mu;
  }
  if (S == 0) {
    S = 2 * N;
    if (odd) sign *= p_.mu;
  }
  return {2, index(odd ? ODD : EVEN, S, t), sign};
}

SuzukiElement SuzukiAlgebra::normal_form(const Word& w) const {
  NF r = nf(w);
  SuzukiElement e;
  if (r.kind == 1) return unit();
  if (r.kind == 2) e.add(r.idx, scalar(r.sign));
  return e;
}

SuzukiElement SuzukiAlgebra::basis_element(int idx) const {
  SuzukiElement e;
  e.add(idx, scalar(1));
  return e;
}

SuzukiElement SuzukiAlgebra::unit() const {
  SuzukiElement e;
  e.add(index(EVEN, 2 * p_.N, 0), scalar(1));
  e.add(index(ODD, 2 * p_.N, 0), scalar(p_.mu));
  return e;
}

SuzukiElement SuzukiAlgebra::multiply(const SuzukiElement& a, const SuzukiElement& b) const {
  SuzukiElement r;
  for (const auto& [i, ci] : a.terms)
    for (const auto& [j, cj] : b.terms) {
      auto [k, sg] = multiply_basis(i, j);
      if (k < 0) continue;
      CycScalar c = ci * cj;
      r.add(k, sg > 0 ? c : -c);
    }
  return r;
}

TensorElement SuzukiAlgebra::coproduct(int idx) const {
  auto b = basis(idx);
  TensorElement out;
  auto add_nf = [&](int left, const Word& right) {
    NF r = nf(right);
    if (r.kind != 2) throw std::logic_error("coproduct ghost word did not normalize to a basis element");
    tensor_add(out, left, r.idx, scalar(r.sign));
  };
  const int even = index(EVEN, b.s, b.t);
  const int odd = index(ODD, b.s, b.t);
  if (b.family == EVEN) {
    // x11^s chi22^t (x) x11^s chi22^t + x12^s chi21^t (x) x21^s chi12^t
    tensor_add(out, even, even, scalar(1));
    add_nf(odd, concat(power_word(X21, b.s), alternating(X12, X21, b.t)));
  } else {
    // x11^s chi22^t (x) x12^s chi21^t + x12^s chi21^t (x) x22^s chi11^t
    tensor_add(out, even, odd, scalar(1));
    add_nf(odd, concat(power_word(X22, b.s), alternating(X11, X22, b.t)));
  }
  return out;
}

TensorElement SuzukiAlgebra::coproduct(const SuzukiElement& a) const {
  TensorElement out;
  for (const auto& [i, c] : a.terms)
    for (const auto& [key, v] : coproduct(i)) tensor_add(out, key.first, key.second, c * v);
  return out;
}

TensorElement SuzukiAlgebra::coproduct_of_word(const Word& w) const {
  // sum over k_1..k_m of x_{i1 k1}... (x) x_{k1 j1}...
  std::map<std::pair<Word, Word>, long> terms{{{Word{}, Word{}}, 1}};
  for (Letter x : w) {
    std::map<std::pair<Word, Word>, long> next;
    for (const auto& [uv, c] : terms)
      for (int k = 1; k <= 2; ++k) {
        Word u = uv.first, v = uv.second;
        u.push_back(make_letter(letter_row(x), k));
        v.push_back(make_letter(k, letter_col(x)));
        next[{u, v}] += c;
      }
    terms.swap(next);
  }
  TensorElement out;
  for (const auto& [uv, c] : terms) {
    SuzukiElement a = normal_form(uv.first);
    if (a.is_zero()) continue;
    SuzukiElement b = normal_form(uv.second);
    for (const auto& [i, ci] : a.terms)
      for (const auto& [j, cj] : b.terms) tensor_add(out, i, j, scalar(c) * ci * cj);
  }
  return out;
}

SuzukiElement SuzukiAlgebra::antipode(int idx) const {
  Word w = word(idx);
  Word s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Letter t = make_letter(letter_col(*it), letter_row(*it));
    for (int r = 0; r < 4 * p_.N - 1; ++r) s.push_back(t);
  }
  return normal_form(s);
}

SuzukiElement SuzukiAlgebra::antipode(const SuzukiElement& a) const {
  SuzukiElement r;
  for (const auto& [i, c] : a.terms) r += c * antipode(i);
  return r;
}

CycScalar SuzukiAlgebra::counit(int idx) const { return scalar(basis(idx).family == EVEN ? 1 : 0); }

CycScalar SuzukiAlgebra::counit(const SuzukiElement& a) const {
  CycScalar r = scalar(0);
  for (const auto& [i, c] : a.terms)
    if (basis(i).family == EVEN) r += c;
  return r;
}

std::vector<SuzukiAlgebra::Grouplike> SuzukiAlgebra::grouplikes() const {
  std::vector<Grouplike> out;
  const int n = p_.n;
  for (int s = 1; s <= p_.N; ++s) {
    SuzukiElement x = normal_form(power_word(X11, 2 * s));
    SuzukiElement y = normal_form(power_word(X12, 2 * s));
    out.push_back({"g" + std::to_string(s) + "+", x + y});
    out.push_back({"g" + std::to_string(s) + "-", x - y});
  }
  for (int s = 1; s <= p_.N; ++s) {
    SuzukiElement x = normal_form(concat(power_word(X11, 2 * s + 1), alternating(X22, X11, 2 * n)));
    SuzukiElement y = conv_.sqrt_lambda *
                      normal_form(concat(power_word(X12, 2 * s + 1), alternating(X21, X12, 2 * n)));
    out.push_back({"h" + std::to_string(s) + "+", x + y});
    out.push_back({"h" + std::to_string(s) + "-", x - y});
  }
  return out;
}

bool SuzukiAlgebra::is_grouplike(const SuzukiElement& g) const {
  if (g.is_zero() || !counit(g).is_one()) return false;
  TensorElement gg;
  for (const auto& [i, ci] : g.terms)
    for (const auto& [j, cj] : g.terms) tensor_add(gg, i, j, ci * cj);
  return coproduct(g) == gg;
}

Comodule2 SuzukiAlgebra::simple_comodule(int s, int t) const {
  if (s < 1 || s > p_.N || t < 1 || t > 2 * p_.n)
    throw std::out_of_range("simple comodule index (s,t) outside [1,N] x [1,2n]");
  Comodule2 c{s, t, {}};
  Word a = power_word(X11, 2 * s), b = power_word(X12, 2 * s);
  c.coef[0][0] = normal_form(concat(a, alternating(X11, X22, t)));
  c.coef[0][1] = normal_form(concat(b, alternating(X12, X21, t)));
  c.coef[1][1] = normal_form(concat(a, alternating(X22, X11, t)));
  c.coef[1][0] = normal_form(concat(b, alternating(X21, X12, t)));
  return c;
}

std::string SuzukiAlgebra::comodule_defect(const Comodule2& c) const {
  for (int i = 0; i < 2; ++i) {
    // (Delta (x) id) rho = (id (x) rho) rho, compared per output basis vector
    for (int l = 0; l < 2; ++l) {
      TensorElement lhs = coproduct(c.coef[i][l]);
      TensorElement rhs;
      for (int j = 0; j < 2; ++j)
        for (const auto& [a, ca] : c.coef[i][j].terms)
          for (const auto& [b, cb] : c.coef[j][l].terms) tensor_add(rhs, a, b, ca * cb);
      if (lhs != rhs) return "coassociativity fails at w" + std::to_string(i + 1);
    }
    for (int j = 0; j < 2; ++j) {
      CycScalar e = counit(c.coef[i][j]);
      if (e != scalar(i == j ? 1 : 0)) return "counit fails at w" + std::to_string(i + 1);
    }
  }
  return {};
}

nlohmann::json to_json(const SuzukiAlgebra& A, const SuzukiElement& x) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [i, c] : x.terms) {
    auto b = A.basis(i);
    arr.push_back({{"family", b.family == EVEN ? "even" : "odd"}, {"s", b.s}, {"t", b.t}, {"coeff", to_json(c)}});
  }
  return arr;
}

nlohmann::json SuzukiAlgebra::tables_json() const {
  using nlohmann::json;
  auto key = [&](int i) { return basis(i).to_string(); };
  json mult = json::array();
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      auto [k, sg] = multiply_basis(i, j);
      if (k >= 0) mult.push_back({key(i), key(j), key(k), sg});
    }
  json delta = json::object();
  json anti = json::object();
  for (int i = 0; i < dim(); ++i) {
    json d = json::array();
    for (const auto& [ab, c] : coproduct(i)) d.push_back({key(ab.first), key(ab.second), to_json(c)});
    delta[key(i)] = d;
    anti[key(i)] = to_json(*this, antipode(i));
  }
  return {{"params", {{"N", p_.N}, {"n", p_.n}, {"mu", p_.mu}, {"lambda", p_.lambda}}},
          {"dim", dim()},
          {"multiplication", mult},
          {"coproduct", delta},
          {"antipode", anti}};
}

namespace {

using Triple = std::map<std::array<int, 3>, CycScalar>;

void triple_add(Triple& t, const std::array<int, 3>& k, const CycScalar& c) {
  if (c.is_zero()) return;
  auto& slot = t[k];
  slot += c;
  if (slot.is_zero()) t.erase(k);
}

TensorElement tensor_multiply(const SuzukiAlgebra& A, const TensorElement& x, const TensorElement& y) {
  TensorElement out;
  for (const auto& [ab, c1] : x)
    for (const auto& [cd, c2] : y) {
      auto [l, sl] = A.multiply_basis(ab.first, cd.first);
      auto [r, sr] = A.multiply_basis(ab.second, cd.second);
      if (l < 0 || r < 0) continue;
      CycScalar c = c1 * c2;
      tensor_add(out, l, r, sl * sr > 0 ? c : -c);
    }
  return out;
}

nlohmann::json tensor_json(const SuzukiAlgebra& A, const TensorElement& t) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [ab, c] : t) j.push_back({A.basis(ab.first).to_string(), A.basis(ab.second).to_string(), to_json(c)});
  return j;
}

}  // namespace

AxiomReport check_hopf_axioms(const SuzukiAlgebra& A) {
  AxiomReport rep;
  const int d = A.dim();
  auto fail = [&](const std::string& axiom, nlohmann::json w) {
    rep.ok = false;
    rep.axiom = axiom;
    rep.witness = std::move(w);
  };
  auto name = [&](int i) { return A.basis(i).to_string(); };
  const SuzukiElement one = A.unit();
  for (int i = 0; i < d; ++i) {
    const auto bi = A.basis_element(i);
    ++rep.checks;
    if (A.multiply(one, bi) != bi || A.multiply(bi, one) != bi) {
      fail("unit", {{"element", name(i)}});
      return rep;
    }
    for (int j = 0; j < d; ++j) {
      const auto bij = A.multiply(bi, A.basis_element(j));
      for (int k = 0; k < d; ++k) {
        ++rep.checks;
        const auto bk = A.basis_element(k);
        const auto lhs = A.multiply(bij, bk);
        const auto rhs = A.multiply(bi, A.multiply(A.basis_element(j), bk));
        if (lhs != rhs) {
          fail("associativity", {{"a", name(i)}, {"b", name(j)}, {"c", name(k)},
                                 {"lhs", to_json(A, lhs)}, {"rhs", to_json(A, rhs)}});
          return rep;
        }
      }
    }
  }
  std::vector<TensorElement> delta(d);
  for (int i = 0; i < d; ++i) delta[i] = A.coproduct(i);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      ++rep.checks;
      const auto prod = A.multiply(A.basis_element(i), A.basis_element(j));
      const auto lhs = A.coproduct(prod);
      const auto rhs = tensor_multiply(A, delta[i], delta[j]);
      if (lhs != rhs) {
        fail("bialgebra", {{"a", name(i)}, {"b", name(j)}, {"lhs", tensor_json(A, lhs)}, {"rhs", tensor_json(A, rhs)}});
        return rep;
      }
      if (A.counit(prod) != A.counit(i) * A.counit(j)) {
        fail("counit multiplicativity", {{"a", name(i)}, {"b", name(j)}});
        return rep;
      }
    }
  for (int i = 0; i < d; ++i) {
    ++rep.checks;
    Triple left, right;
    SuzukiElement el, er, sl, sr;
    for (const auto& [ab, c] : delta[i]) {
      for (const auto& [xy, c2] : delta[ab.first]) triple_add(left, {xy.first, xy.second, ab.second}, c * c2);
      for (const auto& [xy, c2] : delta[ab.second]) triple_add(right, {ab.first, xy.first, xy.second}, c * c2);
      el += (c * A.counit(ab.first)) * A.basis_element(ab.second);
      er += (c * A.counit(ab.second)) * A.basis_element(ab.first);
      sl += c * A.multiply(A.antipode(ab.first), A.basis_element(ab.second));
      sr += c * A.multiply(A.basis_element(ab.first), A.antipode(ab.second));
    }
    const auto bi = A.basis_element(i);
    if (left != right) {
      fail("coassociativity", {{"element", name(i)}});
      return rep;
    }
    if (el != bi || er != bi) {
      fail("counit", {{"element", name(i)}});
      return rep;
    }
    const auto target = A.counit(i) * one;
    if (sl != target || sr != target) {
      fail("antipode", {{"element", name(i)}, {"S(h1)h2", to_json(A, sl)}, {"h1S(h2)", to_json(A, sr)}});
      return rep;
    }
  }
  return rep;
}

}  // namespace suzuki
