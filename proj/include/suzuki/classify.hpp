#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "suzuki/braiding.hpp"

namespace suzuki {

enum class VerdictKind { A1, A1xA1, A2, SuperA2, Ufo8, DiagonalOther, NonDiagonal, Infinite, Unknown };
std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<long long> dim;  // set only where a closed formula gives it
  int order = 0;                 // order of the governing root of unity, 0 if unused
  std::string note;

  bool finite() const;
  std::string dim_string() const;  // number, "inf", "finite" or "unknown"
  friend bool operator==(const Verdict& a, const Verdict& b) {
    return a.kind == b.kind && a.dim == b.dim && a.order == b.order;
  }
};

nlohmann::json to_json(const Verdict& v);

// Order of w_L^e.
int root_order(long long e, int L);

Verdict classify_rank1(const CycScalar& q);
// Rank one family B by its congruence conditions.
Verdict classify_rank1_B(const SuzukiParams& P, int s, int k, int p);

struct AlphaBeta {
  int alpha = 0;
  int beta = 0;
};

AlphaBeta alpha_beta_C(const SuzukiParams& P, int s, int t, int j, int k);
AlphaBeta alpha_beta_D(const SuzukiParams& P, int s, int t, int j, int k);
// (log q11, log q12 q21) of a rank-two diagonal braiding with q11 = q22.
std::optional<AlphaBeta> alpha_beta_from_braiding(const MonomialBraiding& c);

Verdict classify_pair(const AlphaBeta& ab, int L);
// q = -1 gives A1xA1 of dimension 4, q in G_3 gives A2 of dimension 27, otherwise infinite.
Verdict classify_q_dichotomy(const CycScalar& q);
Verdict classify_vabe(const CycScalar& a, const CycScalar& b, const CycScalar& e);
// Same decision from exponents of ae and b in Q(w_L).
Verdict classify_vabe_exponents(const VabeExponents& x, int L);

struct ParamTuple {
  int n, N, s, t, j, k, p;
  std::string to_string() const;  // (n,N,s,t,j,k,p)
  friend bool operator==(const ParamTuple& a, const ParamTuple& b) {
    return a.n == b.n && a.N == b.N && a.s == b.s && a.t == b.t && a.j == b.j && a.k == b.k && a.p == b.p;
  }
};

struct VabeScalarsAeB {
  CycScalar ae, b;
};

// ae and b of family 'H' or 'I'; throws std::out_of_range for tuples outside the module ranges.
VabeScalarsAeB hi_parameters(const ParamTuple& t, char family, int mu, int lambda);
VabeExponents hi_exponents(const ParamTuple& t, char family, int mu, int lambda);

struct SearchRanges {
  int n_min = 1, n_max = 2;
  std::vector<int> Ns = {1, 2};
};

struct SearchHit {
  ParamTuple tuple;
  Verdict verdict;
};

std::vector<SearchHit> search_tuples(char family, int mu, int lambda, const std::function<bool(const Verdict&)>& pred,
                                     const SearchRanges& ranges);

Verdict classify_module(const SuzukiAlgebra& A, const YDModule& y);

struct SummaryRow {
  std::string label;
  std::string family;
  std::vector<int> params;
  std::optional<std::string> duplicate_of;
  Verdict verdict;
};

std::vector<SummaryRow> theorem_summary(const SuzukiAlgebra& A, const Catalog& cat);
std::vector<SummaryRow> theorem_summary(const SuzukiAlgebra& A);

nlohmann::json to_json(const SummaryRow& r);

}  // namespace suzuki
