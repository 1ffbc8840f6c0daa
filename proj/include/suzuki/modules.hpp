#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "suzuki/hopf.hpp"
#include "suzuki/linalg.hpp"

namespace suzuki {

// Generator matrices indexed by Letter, column convention: x.e_c = sum_r M(r,c) e_r.
using GenMatrices = std::array<CycMatrix, 4>;
using Vec = std::vector<CycScalar>;

CycMatrix act_word(const GenMatrices& g, const Word& w, int dim);
CycMatrix act_element(const SuzukiAlgebra& A, const GenMatrices& g, const SuzukiElement& x, int dim);
// Matrix of every basis element (indexed like the algebra basis).
std::vector<CycMatrix> basis_action(const SuzukiAlgebra& A, const GenMatrices& g, int dim);
// Empty when the generator matrices satisfy every defining relation.
std::string module_defect(const SuzukiAlgebra& A, const GenMatrices& g, int dim);

struct SimpleModule {
  enum Kind { V, Vprime, Vj, Vjprime } kind;
  int j = 0;  // even, only for the two-dimensional kinds
  int k = 0;
  int dim = 1;
  GenMatrices action;
  std::string label() const;
};

std::vector<SimpleModule> build_simple_modules(const SuzukiAlgebra& A);
const SimpleModule& find_simple(const std::vector<SimpleModule>& mods, SimpleModule::Kind kind, int j, int k);

// Block-diagonal image of each basis element over all simple modules.
std::vector<CycMatrix> regular_block_representation(const SuzukiAlgebra& A, const std::vector<SimpleModule>& mods);

// The tensor space  m (x) A  with action  x_ab.(l (x) g) = sum_cd (x_cd.l) (x) x_ac g S(x_db)
// and coaction  rho(l (x) h) = h_(1) (x) (l (x) h_(2)).  Coordinates: l * dim A + basis index.
class RadfordSpace {
 public:
  RadfordSpace(const SuzukiAlgebra& A, const SimpleModule& m);

  const SuzukiAlgebra& algebra() const { return *A_; }
  int dim() const { return dv_ * A_->dim(); }
  int module_dim() const { return dv_; }

  Vec zero() const;
  Vec vec(int l, const SuzukiElement& g) const;
  Vec act(Letter h, const Vec& v) const;
  Vec act_word(const Word& w, const Vec& v) const;  // rightmost letter acts first
  std::map<int, Vec> coact(const Vec& v) const;    // algebra basis index -> vector

 private:
  const SuzukiAlgebra* A_;
  int dv_;
  // per generator, per source coordinate: list of (target, coefficient)
  std::array<std::vector<std::vector<std::pair<int, CycScalar>>>, 4> cols_;
};

Vec vec_add(Vec a, const Vec& b);
Vec vec_scale(const CycScalar& c, Vec a);

struct YDModule {
  std::string family;       // one of A B C D E F G H I K L M N
  std::vector<int> params;  // family-specific tuple, see param_names
  int dim = 0;
  GenMatrices action;
  // rho(w_i) = sum_j coaction[i][j] (x) w_j
  std::vector<std::vector<SuzukiElement>> coaction;
  std::string source;                  // simple module the space sits in
  std::optional<std::string> duplicate_of;

  std::string label() const;
};

std::vector<std::string> param_names(const std::string& family);
std::string make_label(const std::string& family, const std::vector<int>& params);

struct SpanAnalysis {
  bool closed = false;
  int rank = 0;
  std::string failure;
  GenMatrices action;
  std::vector<std::vector<SuzukiElement>> coaction;
};

// Whether span(ws) is a sub-object of the Radford space, with the induced structure.
SpanAnalysis analyze_span(const RadfordSpace& R, const std::vector<Vec>& ws);

struct YDCheck {
  bool ok = true;
  std::string axiom;
  nlohmann::json witness;
};

YDCheck verify_yd(const SuzukiAlgebra& A, const YDModule& y);

// Dimension of the space of YD morphisms y1 -> y2.
int intertwiner_dimension(const SuzukiAlgebra& A, const YDModule& y1, const YDModule& y2);

// Builds a module from its spanning vectors in the Radford space.  Throws if the
// span is not closed or has the wrong rank.
YDModule radford_module(const SuzukiAlgebra& A, const std::string& family, const std::vector<int>& params,
                        int j_big = 2);

// Direct action/coaction tables of the two (2n+1)-dimensional families.
YDModule explicit_L(const SuzukiAlgebra& A, int s, int k, int p, int q);
YDModule explicit_N(const SuzukiAlgebra& A, int s, int k, int p, int q);

struct CatalogReport {
  SuzukiParams params;
  std::map<int, int> counts;  // dim -> number of distinct modules
  long long sum_squares = 0;
  int duplicates = 0;
  std::map<int, int> expected_counts() const;
  long long expected_sum_squares() const;
  bool complete() const { return counts == expected_counts() && sum_squares == expected_sum_squares(); }
};

struct Catalog {
  std::vector<YDModule> modules;  // includes duplicates (flagged)
  CatalogReport report;
  std::vector<const YDModule*> distinct() const;
  const YDModule* find(const std::string& label) const;
};

Catalog build_catalog(const SuzukiAlgebra& A);

nlohmann::json to_json(const SuzukiAlgebra& A, const YDModule& y);
nlohmann::json to_json(const CatalogReport& r);

}  // namespace suzuki
