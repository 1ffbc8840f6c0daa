#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "suzuki/modules.hpp"

namespace suzuki {

class NonMonomialError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// c(e_i (x) e_j) = scalar * e_k (x) e_l
struct BraidEntry {
  int k = 0;
  int l = 0;
  CycScalar scalar;
  friend bool operator==(const BraidEntry& a, const BraidEntry& b) {
    return a.k == b.k && a.l == b.l && a.scalar == b.scalar;
  }
};

class MonomialBraiding {
 public:
  MonomialBraiding() = default;
  MonomialBraiding(int d, CycOrderPtr ord);

  int dim() const { return d_; }
  const CycOrderPtr& order() const { return ord_; }
  const BraidEntry& at(int i, int j) const { return t_[i * d_ + j]; }
  void set(int i, int j, int k, int l, const CycScalar& c) { t_[i * d_ + j] = {k, l, c}; }

  // Underlying map on basis pairs is a bijection and all scalars are nonzero.
  bool invertible() const;

  friend bool operator==(const MonomialBraiding& a, const MonomialBraiding& b) {
    return a.d_ == b.d_ && a.t_ == b.t_;
  }
  friend bool operator!=(const MonomialBraiding& a, const MonomialBraiding& b) { return !(a == b); }

 private:
  int d_ = 0;
  CycOrderPtr ord_;
  std::vector<BraidEntry> t_;
};

// Indices of the first differing entry, if any.
std::optional<std::pair<int, int>> first_difference(const MonomialBraiding& a, const MonomialBraiding& b);

struct DiagonalBraiding {
  int dim = 0;
  std::vector<std::vector<CycScalar>> q;  // c(e_i (x) e_j) = q[i][j] e_j (x) e_i
};

MonomialBraiding diagonal_braiding(const DiagonalBraiding& q);

// c(u (x) v) = u_(-1).v (x) u_(0)
MonomialBraiding derive_braiding(const SuzukiAlgebra& A, const YDModule& y);

// Closed forms read off the classification lemmas.
MonomialBraiding braiding_A(const SuzukiAlgebra& A, int s, int k, int p);
MonomialBraiding braiding_B(const SuzukiAlgebra& A, int s, int k, int p);
MonomialBraiding braiding_C(const SuzukiAlgebra& A, int s, int t, int j, int k, int p);
MonomialBraiding braiding_D(const SuzukiAlgebra& A, int s, int t, int j, int k, int p);
MonomialBraiding braiding_E(const SuzukiAlgebra& A, int s, int j, int k, int p);
MonomialBraiding braiding_F(const SuzukiAlgebra& A, int s, int t, int k, int p);
MonomialBraiding braiding_G(const SuzukiAlgebra& A, int s, int t, int k, int p);
MonomialBraiding braiding_L(const SuzukiAlgebra& A, int s, int k, int p, int q);
MonomialBraiding braiding_N(const SuzukiAlgebra& A, int s, int k, int p, int q);
MonomialBraiding braiding_vabe(const CycScalar& a, const CycScalar& b, const CycScalar& e);

// Exponent (mod L) of the diagonal scalar of the rank-one families and of the F/G/E families.
int exponent_A(const SuzukiParams& P, int s, int k, int p);
int exponent_B(const SuzukiParams& P, int s, int k, int p);
int exponent_E(const SuzukiParams& P, int s, int j, int k, int p);
int exponent_F(const SuzukiParams& P, int s, int t, int k, int p);
int exponent_F_as_printed(const SuzukiParams& P, int s, int t, int k, int p);
int exponent_G(const SuzukiParams& P, int s, int t, int k, int p);

// (ae, b) of the two V_abe families as exponents mod L.
struct VabeExponents {
  int ae;
  int b;
};
VabeExponents vabe_exponents_H(const SuzukiParams& P, int s, int t, int j, int k, int p);
VabeExponents vabe_exponents_I(const SuzukiParams& P, int s, int t, int j, int k, int p);

// Closed-form braiding for a catalog entry; none for H, I (only ae and b are
// given in closed form) and for K, M.
std::optional<MonomialBraiding> closed_form_braiding(const SuzukiAlgebra& A, const YDModule& y);
// Empty when the derived braiding of y agrees with its closed form.  H and I are
// compared through their V_abe parameters ae and b.
std::string closed_form_mismatch(const SuzukiAlgebra& A, const YDModule& y, const MonomialBraiding& derived);

// V_abe shape test: returns (a, b, e) when c has that shape with both b entries equal.
struct VabeScalars {
  CycScalar a, b, e;
};
std::optional<VabeScalars> vabe_shape(const MonomialBraiding& c);

struct YBResult {
  bool ok = true;
  std::array<int, 3> triple{};
};
YBResult yang_baxter(const MonomialBraiding& c);

struct Rack {
  int size = 0;
  std::vector<int> tau;                     // second output factor of c(x (x) -)
  std::vector<std::vector<int>> table;      // x |> y
  std::vector<std::vector<CycScalar>> cocycle;
};

// Requires c(e_x (x) e_y) = q e_{f(x,y)} (x) e_{tau(x)}; then x |> y = f(x, tau(y)).
Rack extract_rack(const MonomialBraiding& c);
std::string rack_defect(const Rack& r);  // empty when both rack axioms hold

std::optional<DiagonalBraiding> as_diagonal(const MonomialBraiding& c);

// Diagonal form of V_abe when ae = b^2: q = [[b, -b], [-b, b]] in the basis
// v1 +- sqrt(b) v2 after v1 -> sqrt(e) v1.
std::optional<DiagonalBraiding> vabe_diagonal_form(const CycScalar& a, const CycScalar& b, const CycScalar& e);

// Scaled-permutation equivalence c1 ~ c2 with scalars in the 4L-th roots of unity.
enum class Equivalence { Equivalent, NotFound, Undecided };
struct EquivalenceResult {
  Equivalence verdict = Equivalence::Undecided;
  std::vector<int> perm;
  std::vector<int> scale_exponents;  // mod 4L
};
EquivalenceResult monomial_equivalence(const MonomialBraiding& c1, const MonomialBraiding& c2);

nlohmann::json to_json(const MonomialBraiding& c);
nlohmann::json to_json(const Rack& r);
MonomialBraiding braiding_from_json(const nlohmann::json& j, const CycOrderPtr& ord);

}  // namespace suzuki
