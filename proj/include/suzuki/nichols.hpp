#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "suzuki/braiding.hpp"

namespace suzuki {

// Words of length k over [0,d), indexed lexicographically (position 0 most significant).
struct DegreeSpace {
  int d;
  int k;
  std::uint64_t size() const;
  std::uint64_t index(const std::vector<int>& w) const;
  std::vector<int> word(std::uint64_t idx) const;
};

// Monomial linear map on a degree space: e_w -> scalar[w] e_{target[w]}.
struct MonomialMap {
  std::vector<std::uint64_t> target;
  std::vector<CycScalar> scalar;
  CycMatrix dense() const;
};

MonomialMap lifted_transposition(const MonomialBraiding& c, int k, int i);  // i in [1, k-1]

// Dense exact S_k from S_k = T_k (S_{k-1} (x) id), T_k = id + c_{k-1} + c_{k-2}c_{k-1} + ... + c_1...c_{k-1}
// (operator composition, rightmost factor applied first).
CycMatrix quantum_symmetrizer(const MonomialBraiding& c, int k);
// Dense exact S_k as the sum over all permutations of lifts of reduced expressions.
CycMatrix quantum_symmetrizer_direct(const MonomialBraiding& c, int k);

struct FreeWordPoly {
  std::map<std::vector<int>, CycScalar> terms;  // letters are 0-based

  void add(const std::vector<int>& w, const CycScalar& c);
  int degree() const;  // throws when not homogeneous; 0 for the zero polynomial
  bool is_zero() const { return terms.empty(); }
  std::string to_string(const std::string& letter = "x") const;
};

enum class Certification { Exact, DualPrime, LowerBound };
std::string to_string(Certification c);

struct NicholsOptions {
  int max_degree = 12;
  int primes = 2;
  bool try_exact = true;             // exact ranks when the cost estimate allows
  double exact_budget = 4e6;         // estimated exact field operations
  double modular_budget = 4e9;       // estimated modular operations before sampling takes over
  int lower_bound_samples = 12;
  std::uint64_t prime_start = 1ULL << 30;
  std::uint64_t seed = 12345;
  bool relations = true;             // degree 2 and 3 kernel bases
  double zero_check_words = 3e5;     // max d^k for the exact zero check
};

struct NicholsReport {
  std::string label;
  int dim = 0;
  int max_degree = 0;
  std::vector<long long> ranks;   // r_0, r_1, ...
  std::vector<Certification> certification;
  std::vector<std::uint64_t> primes;
  bool finite = false;
  long long total = 0;
  int terminating_degree = -1;
  std::optional<bool> zero_check;  // exact S_m = 0 and S_{m+1} = 0 at the terminating degree m
  bool primes_agree = true;
  std::vector<FreeWordPoly> relations2, relations3;
  std::vector<std::string> notes;

  std::string verdict() const;
  nlohmann::json to_json(const std::string& letter = "x") const;
};

NicholsReport hilbert_series(const MonomialBraiding& c, const NicholsOptions& opt = {});

// Ranks of S_k over F_p for k = 0..max_degree, with the orbit-wise image recursion.
std::vector<long long> modular_ranks(const MonomialBraiding& c, int max_degree, std::uint64_t p, std::uint64_t g);
std::vector<long long> exact_ranks(const MonomialBraiding& c, int max_degree);

bool relation_member(const MonomialBraiding& c, const FreeWordPoly& r);
std::vector<FreeWordPoly> relation_basis(const MonomialBraiding& c, int k);
// Whether r is a combination of the given homogeneous polynomials.
bool in_span(const FreeWordPoly& r, const std::vector<FreeWordPoly>& basis);

}  // namespace suzuki
