#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "suzuki/scalars.hpp"

namespace suzuki {

enum Letter : int { X11 = 0, X12 = 1, X21 = 2, X22 = 3 };

inline constexpr std::array<Letter, 4> kLetters = {X11, X12, X21, X22};

// 1-based row/column of a generator x_ij.
inline int letter_row(Letter x) { return (x == X11 || x == X12) ? 1 : 2; }
inline int letter_col(Letter x) { return (x == X11 || x == X21) ? 1 : 2; }
inline Letter make_letter(int i, int j) {
  return static_cast<Letter>((i - 1) * 2 + (j - 1));
}
inline bool letter_even(Letter x) { return x == X11 || x == X22; }
std::string letter_name(Letter x);

using Word = std::vector<Letter>;

// Alternating word a b a b ... of length m.
Word alternating(Letter a, Letter b, int m);
Word power_word(Letter a, int m);
Word concat(const Word& u, const Word& v);

struct SuzukiParams {
  int N = 1;
  int n = 1;  // the second index of the algebra is 2n+1
  int mu = 1;
  int lambda = 1;

  int K() const { return 2 * n + 1; }
  int L() const { return 4 * N * K(); }
  int dim() const { return 4 * N * K(); }
  void validate() const;
  std::string to_string() const;
};

enum Family : int { EVEN = 0, ODD = 1 };

// EVEN(s,t) = x11^s chi22^t, ODD(s,t) = x12^s chi21^t with s in [1,2N], t in [0,2n].
struct SuzukiBasisElement {
  Family family;
  int s;
  int t;
  std::string to_string() const;
};

struct SuzukiElement {
  std::map<int, CycScalar> terms;

  bool is_zero() const { return terms.empty(); }
  void add(int idx, const CycScalar& c);
  SuzukiElement& operator+=(const SuzukiElement& o);
  friend SuzukiElement operator+(SuzukiElement a, const SuzukiElement& b) { return a += b; }
  friend SuzukiElement operator-(SuzukiElement a, const SuzukiElement& b);
  friend SuzukiElement operator*(const CycScalar& c, const SuzukiElement& a);
  friend bool operator==(const SuzukiElement& a, const SuzukiElement& b) { return a.terms == b.terms; }
  friend bool operator!=(const SuzukiElement& a, const SuzukiElement& b) { return !(a == b); }
};

using TensorElement = std::map<std::pair<int, int>, CycScalar>;

void tensor_add(TensorElement& t, int i, int j, const CycScalar& c);

// Two-dimensional left comodule: rho(w_i) = sum_j coef[i][j] (x) w_j.
struct Comodule2 {
  int s, t;
  std::array<std::array<SuzukiElement, 2>, 2> coef;
};

class SuzukiAlgebra {
 public:
  explicit SuzukiAlgebra(SuzukiParams p);

  const SuzukiParams& params() const { return p_; }
  const CycOrderPtr& order() const { return ord_; }
  const SignConventions& conventions() const { return conv_; }
  int dim() const { return p_.dim(); }

  int index(Family f, int s, int t) const;
  SuzukiBasisElement basis(int idx) const;
  Word word(int idx) const;

  CycScalar scalar(long v) const { return CycScalar(ord_, v); }
  CycScalar w(long long e) const { return CycScalar::root(ord_, e); }

  SuzukiElement normal_form(const Word& w) const;
  SuzukiElement basis_element(int idx) const;
  SuzukiElement unit() const;

  // Basis product: target index (or -1 for zero) and sign.
  std::pair<int, int> multiply_basis(int i, int j) const { return table_[i * dim() + j]; }
  SuzukiElement multiply(const SuzukiElement& a, const SuzukiElement& b) const;

  TensorElement coproduct(int idx) const;  // the displayed two-term formula
  TensorElement coproduct(const SuzukiElement& a) const;
  TensorElement coproduct_of_word(const Word& w) const;  // multiplicative expansion

  SuzukiElement antipode(int idx) const;
  SuzukiElement antipode(const SuzukiElement& a) const;
  CycScalar counit(const SuzukiElement& a) const;
  CycScalar counit(int idx) const;

  struct Grouplike {
    std::string name;
    SuzukiElement element;
  };
  std::vector<Grouplike> grouplikes() const;
  bool is_grouplike(const SuzukiElement& g) const;

  Comodule2 simple_comodule(int s, int t) const;
  std::string comodule_defect(const Comodule2& c) const;  // empty when the axioms hold

  nlohmann::json tables_json() const;

 private:
  struct NF {
    int kind;  // 0 zero, 1 unit, 2 basis element
    int idx;
    int sign;
  };
  NF nf(const Word& w) const;

  SuzukiParams p_;
  CycOrderPtr ord_;
  SignConventions conv_;
  std::vector<std::pair<int, int>> table_;
};

nlohmann::json to_json(const SuzukiAlgebra& A, const SuzukiElement& x);

struct AxiomReport {
  bool ok = true;
  std::string axiom;  // first failing axiom
  nlohmann::json witness;
  long long checks = 0;
};

// Associativity and unit on all basis triples, bialgebra compatibility on all basis
// pairs, coassociativity, counit and antipode axioms on every basis element.
AxiomReport check_hopf_axioms(const SuzukiAlgebra& A);

}  // namespace suzuki
