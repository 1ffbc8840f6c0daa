#include "suzuki/nichols.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace suzuki {

using u64 = std::uint64_t;

std::uint64_t DegreeSpace::size() const {
  u64 s = 1;
  for (int i = 0; i < k; ++i) s *= static_cast<u64>(d);
  return s;
}

std::uint64_t DegreeSpace::index(const std::vector<int>& w) const {
  if (static_cast<int>(w.size()) != k) throw std::invalid_argument("word length mismatch");
  u64 idx = 0;
  for (int x : w) {
    if (x < 0 || x >= d) throw std::out_of_range("letter out of range");
    idx = idx * d + x;
  }
  return idx;
}

std::vector<int> DegreeSpace::word(std::uint64_t idx) const {
  std::vector<int> w(k);
  for (int i = k - 1; i >= 0; --i) {
    w[i] = static_cast<int>(idx % d);
    idx /= d;
  }
  return w;
}

CycMatrix MonomialMap::dense() const {
  const int n = static_cast<int>(target.size());
  CycMatrix m(n, n, CycScalar());
  for (int w = 0; w < n; ++w) m(static_cast<int>(target[w]), w) = scalar[w];
  return m;
}

namespace {

std::vector<u64> powers(int d, int k) {
  std::vector<u64> p(k + 1, 1);
  for (int i = 1; i <= k; ++i) p[i] = p[i - 1] * d;
  return p;
}

// Word code after c acts on 0-based positions (j, j+1); returns the table entry used.
template <class Entry>
inline u64 move_code(u64 code, int j, int k, int d, const std::vector<u64>& pw, const std::vector<Entry>& tab,
                     const Entry*& used) {
  const u64 P0 = pw[k - 1 - j], P1 = pw[k - 2 - j];
  const int a = static_cast<int>((code / P0) % d);
  const int b = static_cast<int>((code / P1) % d);
  used = &tab[a * d + b];
  return code + static_cast<u64>(static_cast<long long>(used->k - a)) * P0 +
         static_cast<u64>(static_cast<long long>(used->l - b)) * P1;
}

struct ModField {
  using T = u64;
  u64 p;
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const { T s = a + b; return s >= p ? s - p : s; }
  T sub(T a, T b) const { return a >= b ? a - b : a + p - b; }
  T mul(T a, T b) const { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
  T inv(T a) const { return invmod(a, p); }
  T from(const CycScalar& c, u64 g) const { return modular_image(c, PrimeRoot{p, g}); }
};

struct CycField {
  using T = CycScalar;
  T zero() const { return CycScalar(); }
  T one() const { return CycScalar(1); }
  bool is_zero(const T& a) const { return a.is_zero(); }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return a.inverse(); }
};

template <class F>
struct FEntry {
  int k, l;
  typename F::T s;
};

// Row reduction over a field policy; returns rank and keeps the reduced rows.
template <class F>
int field_rref(const F& f, std::vector<std::vector<typename F::T>>& rows, int ncols) {
  int r = 0;
  const int m = static_cast<int>(rows.size());
  for (int c = 0; c < ncols && r < m; ++c) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (!f.is_zero(rows[i][c])) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[r]);
    auto inv = f.inv(rows[r][c]);
    for (int k = c; k < ncols; ++k)
      if (!f.is_zero(rows[r][k])) rows[r][k] = f.mul(rows[r][k], inv);
    for (int i = 0; i < m; ++i) {
      if (i == r || f.is_zero(rows[i][c])) continue;
      auto fac = rows[i][c];
      for (int k = c; k < ncols; ++k)
        if (!f.is_zero(rows[r][k])) rows[i][k] = f.sub(rows[i][k], f.mul(fac, rows[r][k]));
    }
    ++r;
  }
  rows.resize(r);
  return r;
}

// Image of S_k computed degree by degree, separately on each braid-group orbit of
// words: Im S_k = T_k (Im S_{k-1} (x) V) and T_k preserves orbits.
template <class F>
class ImageEngine {
 public:
  using T = typename F::T;

  ImageEngine(const MonomialBraiding& c, F f, std::vector<FEntry<F>> tab, double budget, double word_cap)
      : f_(std::move(f)), d_(c.dim()), tab_(std::move(tab)), budget_(budget), word_cap_(word_cap) {
    k_ = 1;
    for (int x = 0; x < d_; ++x) {
      Orbit o;
      o.words = {static_cast<u64>(x)};
      o.basis = {{f_.one()}};
      where_[x] = {static_cast<int>(orbits_.size()), 0};
      orbits_.push_back(std::move(o));
    }
    rank_ = d_;
  }

  int degree() const { return k_; }
  long long rank() const { return rank_; }
  double spent() const { return spent_; }

  // Advances to degree k+1.  Returns false (state unchanged) when the budget would be exceeded.
  bool step() {
    const int k = k_ + 1;
    pw_ = powers(d_, k);
    std::vector<Orbit> next;
    std::unordered_map<u64, std::pair<int, int>> where;
    double words = 0;
    // discover target orbits and count generators
    std::vector<int> gen_count;
    auto orbit_of = [&](u64 seed) -> int {
      auto it = where.find(seed);
      if (it != where.end()) return it->second.first;
      const int id = static_cast<int>(next.size());
      Orbit o;
      std::deque<u64> queue{seed};
      where[seed] = {id, 0};
      while (!queue.empty()) {
        u64 w = queue.front();
        queue.pop_front();
        o.words.push_back(w);
        for (int j = 0; j + 1 < k; ++j) {
          const FEntry<F>* e;
          u64 w2 = move_code(w, j, k, d_, pw_, tab_, e);
          if (where.emplace(w2, std::make_pair(id, 0)).second) queue.push_back(w2);
        }
      }
      std::sort(o.words.begin(), o.words.end());
      for (int i = 0; i < static_cast<int>(o.words.size()); ++i) where[o.words[i]].second = i;
      words += static_cast<double>(o.words.size());
      next.push_back(std::move(o));
      gen_count.push_back(0);
      return id;
    };
    std::vector<std::vector<int>> target(orbits_.size(), std::vector<int>(d_, -1));
    for (std::size_t oi = 0; oi < orbits_.size(); ++oi) {
      const Orbit& o = orbits_[oi];
      if (o.basis.empty()) continue;
      for (int x = 0; x < d_; ++x) {
        int t = orbit_of(o.words[0] * d_ + x);
        target[oi][x] = t;
        gen_count[t] += static_cast<int>(o.basis.size());
        if (words > word_cap_) return false;
      }
    }
    double cost = 0;
    for (std::size_t t = 0; t < next.size(); ++t) {
      const double m = gen_count[t], n = static_cast<double>(next[t].words.size());
      cost += m * n * std::min(m, n) + m * n * k;
    }
    if (spent_ + cost > budget_) return false;
    spent_ += cost;

    for (auto& o : next) build_moves(o, k, where);
    std::vector<std::vector<std::vector<T>>> gens(next.size());
    for (std::size_t oi = 0; oi < orbits_.size(); ++oi) {
      const Orbit& o = orbits_[oi];
      for (int x = 0; x < d_; ++x) {
        const int t = target[oi][x];
        if (t < 0) continue;
        const Orbit& O = next[t];
        for (const auto& b : o.basis) {
          std::vector<T> v(O.words.size(), f_.zero());
          for (std::size_t u = 0; u < o.words.size(); ++u)
            if (!f_.is_zero(b[u])) v[where[o.words[u] * d_ + x].second] = b[u];
          gens[t].push_back(apply_T(O, k, v));
        }
      }
    }
    long long rank = 0;
    for (std::size_t t = 0; t < next.size(); ++t) {
      rank += field_rref(f_, gens[t], static_cast<int>(next[t].words.size()));
      next[t].basis = std::move(gens[t]);
      next[t].tgt.clear();
      next[t].sc.clear();
    }
    orbits_ = std::move(next);
    where_ = std::move(where);
    k_ = k;
    rank_ = rank;
    return true;
  }

 private:
  struct Orbit {
    std::vector<u64> words;
    std::vector<std::uint32_t> tgt;  // (k-1) blocks of size |words|
    std::vector<T> sc;
    std::vector<std::vector<T>> basis;
  };

  void build_moves(Orbit& o, int k, const std::unordered_map<u64, std::pair<int, int>>& where) {
    const std::size_t n = o.words.size();
    o.tgt.resize(n * (k - 1));
    o.sc.resize(n * (k - 1));
    for (int j = 0; j + 1 < k; ++j)
      for (std::size_t u = 0; u < n; ++u) {
        const FEntry<F>* e;
        u64 w2 = move_code(o.words[u], j, k, d_, pw_, tab_, e);
        o.tgt[j * n + u] = static_cast<std::uint32_t>(where.at(w2).second);
        o.sc[j * n + u] = e->s;
      }
  }

  // T_k v = v + c_{k-1} v + c_{k-2} c_{k-1} v + ... + c_1 ... c_{k-1} v
  std::vector<T> apply_T(const Orbit& o, int k, const std::vector<T>& v) {
    const std::size_t n = o.words.size();
    std::vector<T> sum = v, cur = v, tmp(n);
    for (int j = k - 2; j >= 0; --j) {
      std::fill(tmp.begin(), tmp.end(), f_.zero());
      for (std::size_t u = 0; u < n; ++u)
        if (!f_.is_zero(cur[u])) tmp[o.tgt[j * n + u]] = f_.mul(o.sc[j * n + u], cur[u]);
      std::swap(cur, tmp);
      for (std::size_t u = 0; u < n; ++u) sum[u] = f_.add(sum[u], cur[u]);
    }
    return sum;
  }

  F f_;
  int d_;
  std::vector<FEntry<F>> tab_;
  double budget_, word_cap_;
  double spent_ = 0;
  int k_;
  long long rank_;
  std::vector<u64> pw_;
  std::vector<Orbit> orbits_;
  std::unordered_map<u64, std::pair<int, int>> where_;
};

int braid_L(const MonomialBraiding& c) { return c.order() ? c.order()->L() : 1; }

std::vector<FEntry<ModField>> mod_table(const MonomialBraiding& c, const ModField& f, u64 g) {
  std::vector<FEntry<ModField>> tab;
  for (int a = 0; a < c.dim(); ++a)
    for (int b = 0; b < c.dim(); ++b) {
      const auto& e = c.at(a, b);
      tab.push_back({e.k, e.l, f.from(e.scalar, g)});
    }
  return tab;
}

std::vector<FEntry<CycField>> cyc_table(const MonomialBraiding& c) {
  std::vector<FEntry<CycField>> tab;
  for (int a = 0; a < c.dim(); ++a)
    for (int b = 0; b < c.dim(); ++b) {
      const auto& e = c.at(a, b);
      tab.push_back({e.k, e.l, e.scalar});
    }
  return tab;
}

struct RankRun {
  std::vector<long long> ranks;  // r_0 .. r_last
  bool aborted = false;
  bool terminated = false;
  double cost = 0;
};

// Stops after the first zero rank plus one more degree, at max_degree, or when over budget.
template <class F>
RankRun run_engine(ImageEngine<F>& eng, int d, int max_degree) {
  RankRun r;
  r.ranks = {1};
  if (max_degree >= 1) r.ranks.push_back(d);
  int zero_at = -1;
  while (zero_at >= 0 ? eng.degree() <= zero_at : eng.degree() < max_degree) {
    if (!eng.step()) {
      r.aborted = true;
      break;
    }
    r.ranks.push_back(eng.rank());
    if (eng.rank() == 0 && zero_at < 0) zero_at = eng.degree();
  }
  r.terminated = zero_at >= 0;
  r.cost = eng.spent();
  return r;
}

// Sparse vector keyed by word code.
template <class T>
using SparseVec = std::unordered_map<u64, T>;

template <class F>
SparseVec<typename F::T> sparse_T(const F& f, const std::vector<FEntry<F>>& tab, int d, int k,
                                  const std::vector<u64>& pw, const SparseVec<typename F::T>& v) {
  SparseVec<typename F::T> sum = v, cur = v;
  for (int j = k - 2; j >= 0; --j) {
    SparseVec<typename F::T> next;
    for (const auto& [w, a] : cur) {
      const FEntry<F>* e;
      const u64 w2 = move_code(w, j, k, d, pw, tab, e);
      next[w2] = f.mul(e->s, a);
    }
    cur = std::move(next);
    for (const auto& [w, a] : cur) {
      auto& slot = sum[w];
      slot = f.add(slot, a);
    }
  }
  for (auto it = sum.begin(); it != sum.end();)
    it = f.is_zero(it->second) ? sum.erase(it) : std::next(it);
  return sum;
}

// S_k e_w by the factorization, one letter at a time.
template <class F>
SparseVec<typename F::T> symmetrize_word(const F& f, const std::vector<FEntry<F>>& tab, int d,
                                         const std::vector<int>& w) {
  SparseVec<typename F::T> v;
  if (w.empty()) return v;
  v[static_cast<u64>(w[0])] = f.one();
  for (std::size_t j = 1; j < w.size(); ++j) {
    const int k = static_cast<int>(j) + 1;
    auto pw = powers(d, k);
    SparseVec<typename F::T> ext;
    for (const auto& [u, a] : v) ext[u * d + w[j]] = a;
    v = sparse_T(f, tab, d, k, pw, ext);
  }
  return v;
}

// Lower bound for rank S_k mod p from sampled S_k e_w.
long long sampled_rank(const MonomialBraiding& c, int k, const ModField& f, u64 g, int samples, std::mt19937_64& rng) {
  const int d = c.dim();
  auto tab = mod_table(c, f, g);
  std::vector<SparseVec<u64>> vs;
  std::uniform_int_distribution<int> letter(0, d - 1);
  for (int s = 0; s < samples; ++s) {
    std::vector<int> w(k);
    for (int& x : w) x = letter(rng);
    vs.push_back(symmetrize_word(f, tab, d, w));
  }
  std::unordered_map<u64, int> col;
  for (const auto& v : vs)
    for (const auto& [w, a] : v) col.emplace(w, static_cast<int>(col.size()));
  std::vector<std::vector<u64>> rows;
  for (const auto& v : vs) {
    std::vector<u64> r(col.size(), 0);
    for (const auto& [w, a] : v) r[col[w]] = a;
    rows.push_back(std::move(r));
  }
  return field_rref(f, rows, static_cast<int>(col.size()));
}

// Exact S_k e_w for every word of length k, built from the previous degree.
std::vector<SparseVec<CycScalar>> all_symmetrized(const MonomialBraiding& c, int k) {
  const int d = c.dim();
  CycField f;
  auto tab = cyc_table(c);
  std::vector<SparseVec<CycScalar>> cur(d);
  for (int x = 0; x < d; ++x) cur[x][static_cast<u64>(x)] = CycScalar(1);
  for (int j = 2; j <= k; ++j) {
    auto pw = powers(d, j);
    std::vector<SparseVec<CycScalar>> next(cur.size() * d);
    for (std::size_t u = 0; u < cur.size(); ++u)
      for (int x = 0; x < d; ++x) {
        SparseVec<CycScalar> ext;
        for (const auto& [w, a] : cur[u]) ext[w * d + x] = a;
        next[u * d + x] = sparse_T(f, tab, d, j, pw, ext);
      }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

MonomialMap lifted_transposition(const MonomialBraiding& c, int k, int i) {
  if (i < 1 || i >= k) throw std::out_of_range("lifted_transposition: position out of range");
  const int d = c.dim();
  DegreeSpace sp{d, k};
  const u64 n = sp.size();
  MonomialMap m;
  m.target.resize(n);
  m.scalar.resize(n);
  for (u64 idx = 0; idx < n; ++idx) {
    auto w = sp.word(idx);
    const auto& e = c.at(w[i - 1], w[i]);
    w[i - 1] = e.k;
    w[i] = e.l;
    m.target[idx] = sp.index(w);
    m.scalar[idx] = e.scalar;
  }
  return m;
}

namespace {

CycMatrix kron_id(const CycMatrix& a, int d) {
  CycMatrix out(a.rows() * d, a.cols() * d, CycScalar());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero())
        for (int x = 0; x < d; ++x) out(i * d + x, j * d + x) = a(i, j);
  return out;
}

void check_dense_size(const MonomialBraiding& c, int k) {
  if (k < 0) throw std::invalid_argument("degree must be non-negative");
  if (DegreeSpace{c.dim(), k}.size() > 4096) throw std::invalid_argument("dense symmetrizer too large");
}

}  // namespace

CycMatrix quantum_symmetrizer(const MonomialBraiding& c, int k) {
  check_dense_size(c, k);
  const int d = c.dim();
  if (k == 0) return CycMatrix::identity(1, CycScalar(1), CycScalar());
  CycMatrix S = CycMatrix::identity(d, CycScalar(1), CycScalar());
  for (int j = 2; j <= k; ++j) {
    const int n = static_cast<int>(DegreeSpace{d, j}.size());
    CycMatrix T = CycMatrix::identity(n, CycScalar(1), CycScalar());
    CycMatrix prod = T;
    for (int i = j - 1; i >= 1; --i) {
      prod = lifted_transposition(c, j, i).dense() * prod;
      T = T + prod;
    }
    S = T * kron_id(S, d);
  }
  return S;
}

CycMatrix quantum_symmetrizer_direct(const MonomialBraiding& c, int k) {
  check_dense_size(c, k);
  if (k > 7) throw std::invalid_argument("direct symmetrizer limited to k <= 7");
  const int d = c.dim();
  const int n = static_cast<int>(DegreeSpace{d, k}.size());
  std::vector<CycMatrix> gens;
  for (int i = 1; i < k; ++i) gens.push_back(lifted_transposition(c, k, i).dense());
  CycMatrix S(n, n, CycScalar());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // bubble sort to the identity, swapping at the first descent each time
    std::vector<int> a = perm, word;
    for (bool moved = true; moved;) {
      moved = false;
      for (int i = 0; i + 1 < k; ++i)
        if (a[i] > a[i + 1]) {
          std::swap(a[i], a[i + 1]);
          word.push_back(i + 1);
          moved = true;
          break;
        }
    }
    CycMatrix lift = CycMatrix::identity(n, CycScalar(1), CycScalar());
    for (int i : word) lift = lift * gens[i - 1];
    S = S + lift;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return S;
}

void FreeWordPoly::add(const std::vector<int>& w, const CycScalar& c) {
  if (c.is_zero()) return;
  auto& slot = terms[w];
  slot += c;
  if (slot.is_zero()) terms.erase(w);
}

int FreeWordPoly::degree() const {
  if (terms.empty()) return 0;
  const int k = static_cast<int>(terms.begin()->first.size());
  for (const auto& [w, c] : terms)
    if (static_cast<int>(w.size()) != k) throw std::invalid_argument("polynomial is not homogeneous");
  return k;
}

std::string FreeWordPoly::to_string(const std::string& letter) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    std::string cs = c.to_string();
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << "(" << cs << ")*";
    for (int x : w) os << letter << (x + 1);
  }
  return os.str();
}

std::string to_string(Certification c) {
  switch (c) {
    case Certification::Exact: return "EXACT";
    case Certification::DualPrime: return "DUAL_PRIME";
    case Certification::LowerBound: return "LOWER_BOUND";
  }
  return "?";
}

std::string NicholsReport::verdict() const {
  if (finite) return "FINITE";
  return "NOT_TERMINATED_BY(" + std::to_string(max_degree) + ")";
}

nlohmann::json NicholsReport::to_json(const std::string& letter) const {
  nlohmann::json j;
  j["label"] = label;
  j["dim"] = dim;
  j["max_degree"] = max_degree;
  j["ranks"] = ranks;
  std::vector<std::string> certs;
  for (auto c : certification) certs.push_back(suzuki::to_string(c));
  j["certification"] = certs;
  j["primes"] = primes;
  j["primes_agree"] = primes_agree;
  j["verdict"] = verdict();
  if (finite) {
    j["total_dimension"] = total;
    j["terminating_degree"] = terminating_degree;
  }
  if (zero_check) j["exact_zero_check"] = *zero_check;
  auto rel = [&](const std::vector<FreeWordPoly>& rs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : rs) a.push_back(r.to_string(letter));
    return a;
  };
  j["relations_degree2"] = rel(relations2);
  j["relations_degree3"] = rel(relations3);
  j["notes"] = notes;
  return j;
}

std::vector<long long> modular_ranks(const MonomialBraiding& c, int max_degree, std::uint64_t p, std::uint64_t g) {
  ModField f{p};
  ImageEngine<ModField> eng(c, f, mod_table(c, f, g), 1e18, 1e9);
  auto r = run_engine(eng, c.dim(), max_degree).ranks;
  r.resize(max_degree + 1, 0);  // zero ranks propagate through the image recursion
  return r;
}

std::vector<long long> exact_ranks(const MonomialBraiding& c, int max_degree) {
  ImageEngine<CycField> eng(c, CycField{}, cyc_table(c), 1e18, 1e9);
  auto r = run_engine(eng, c.dim(), max_degree).ranks;
  r.resize(max_degree + 1, 0);
  return r;
}

NicholsReport hilbert_series(const MonomialBraiding& c, const NicholsOptions& opt) {
  if (opt.max_degree < 1) throw std::invalid_argument("max degree must be positive");
  if (opt.primes < 1) throw std::invalid_argument("at least one prime is required");
  const int d = c.dim();
  NicholsReport rep;
  rep.dim = d;
  rep.max_degree = opt.max_degree;
  const auto prs = find_primes(braid_L(c), opt.primes, opt.prime_start);

  std::vector<RankRun> runs;
  for (const auto& pr : prs) {
    rep.primes.push_back(pr.p);
    ModField f{pr.p};
    ImageEngine<ModField> eng(c, f, mod_table(c, f, pr.g), opt.modular_budget, 4e6);
    runs.push_back(run_engine(eng, d, opt.max_degree));
  }
  // modular ranks never exceed the true ranks, so take the largest per degree
  RankRun best = runs[0];
  for (const auto& r : runs) {
    if (r.ranks != runs[0].ranks || r.aborted != runs[0].aborted) rep.primes_agree = false;
    if (r.ranks.size() < best.ranks.size()) best.ranks.resize(r.ranks.size());
    for (std::size_t i = 0; i < best.ranks.size(); ++i) best.ranks[i] = std::max(best.ranks[i], r.ranks[i]);
    best.aborted = best.aborted || r.aborted;
    best.terminated = best.terminated && r.terminated && !best.aborted;
  }
  if (!rep.primes_agree) rep.notes.push_back("modular ranks differ between primes");

  rep.ranks = best.ranks;
  Certification cert = opt.primes >= 2 && rep.primes_agree ? Certification::DualPrime : Certification::LowerBound;
  rep.certification.assign(rep.ranks.size(), cert);
  rep.certification[0] = Certification::Exact;
  if (rep.certification.size() > 1) rep.certification[1] = Certification::Exact;

  if (best.aborted) {
    rep.notes.push_back("full rank computation over budget from degree " + std::to_string(rep.ranks.size()) +
                        "; sampled lower bounds beyond");
    std::mt19937_64 rng(opt.seed);
    ModField f{prs[0].p};
    for (int k = static_cast<int>(rep.ranks.size()); k <= opt.max_degree; ++k) {
      long long r = sampled_rank(c, k, f, prs[0].g, opt.lower_bound_samples, rng);
      rep.ranks.push_back(r);
      rep.certification.push_back(Certification::LowerBound);
      if (r == 0) {
        rep.notes.push_back("sampled rank vanished at degree " + std::to_string(k) + "; no conclusion");
        break;
      }
    }
    rep.finite = false;
  } else if (opt.try_exact && best.cost <= opt.exact_budget) {
    auto ex = exact_ranks(c, static_cast<int>(best.ranks.size()) - 1);
    if (ex != best.ranks) rep.notes.push_back("exact ranks differ from modular ranks");
    rep.ranks = ex;
    rep.certification.assign(ex.size(), Certification::Exact);
    best.terminated = !ex.empty() && ex.back() == 0;
    if (best.terminated) rep.zero_check = true;
    rep.finite = best.terminated;
  } else if (best.terminated) {
    const int m = static_cast<int>(rep.ranks.size()) - 2;  // first zero degree
    if (static_cast<double>(DegreeSpace{d, m + 1}.size()) <= opt.zero_check_words) {
      bool zero = true;
      for (int k : {m, m + 1})
        for (const auto& v : all_symmetrized(c, k))
          if (!v.empty()) zero = false;
      rep.zero_check = zero;
      if (!zero) rep.notes.push_back("exact symmetrizer does not vanish where modular ranks do");
      rep.finite = zero;
    } else {
      rep.zero_check.reset();
      rep.notes.push_back("exact zero check skipped (too many words)");
      rep.finite = true;
      for (auto& ce : rep.certification)
        if (ce == Certification::DualPrime) ce = Certification::LowerBound;
    }
  }

  if (rep.finite) {
    int m = 0;
    while (rep.ranks[m] != 0) ++m;
    rep.terminating_degree = m;
    rep.total = std::accumulate(rep.ranks.begin(), rep.ranks.end(), 0LL);
    // the trailing entries are the zero degree and the extra checked degree
  }
  if (opt.relations && static_cast<double>(DegreeSpace{d, 3}.size()) <= 1000) {
    rep.relations2 = relation_basis(c, 2);
    rep.relations3 = relation_basis(c, 3);
  }
  return rep;
}

bool relation_member(const MonomialBraiding& c, const FreeWordPoly& r) {
  const int k = r.degree();
  if (k <= 1) return r.is_zero();
  CycField f;
  auto tab = cyc_table(c);
  SparseVec<CycScalar> total;
  // group by prefix recursively through the factorization: S_k r = T_k (S_{k-1} (x) id) r
  for (const auto& [w, a] : r.terms) {
    auto v = symmetrize_word(f, tab, c.dim(), w);
    for (const auto& [u, b] : v) {
      auto& slot = total[u];
      slot += a * b;
    }
  }
  for (const auto& [u, b] : total)
    if (!b.is_zero()) return false;
  return true;
}

std::vector<FreeWordPoly> relation_basis(const MonomialBraiding& c, int k) {
  if (k < 2) throw std::invalid_argument("relations start in degree 2");
  const int d = c.dim();
  DegreeSpace sp{d, k};
  if (sp.size() > 20000) throw std::invalid_argument("relation_basis: degree space too large");
  auto cols = all_symmetrized(c, k);
  // orbits of words under the lifted transpositions
  auto tab = cyc_table(c);
  auto pw = powers(d, k);
  std::vector<int> orbit(sp.size(), -1);
  std::vector<std::vector<u64>> orbits;
  for (u64 s = 0; s < sp.size(); ++s) {
    if (orbit[s] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<u64> members{s};
    orbit[s] = id;
    for (std::size_t q = 0; q < members.size(); ++q)
      for (int j = 0; j + 1 < k; ++j) {
        const FEntry<CycField>* e;
        u64 w2 = move_code(members[q], j, k, d, pw, tab, e);
        if (orbit[w2] < 0) {
          orbit[w2] = id;
          members.push_back(w2);
        }
      }
    std::sort(members.begin(), members.end());
    orbits.push_back(std::move(members));
  }
  std::vector<std::pair<u64, FreeWordPoly>> out;
  for (const auto& O : orbits) {
    const int n = static_cast<int>(O.size());
    std::unordered_map<u64, int> loc;
    for (int i = 0; i < n; ++i) loc[O[i]] = i;
    // rows = output coordinates, columns = input words
    std::vector<std::vector<CycScalar>> M(n, std::vector<CycScalar>(n));
    for (int col = 0; col < n; ++col)
      for (const auto& [u, a] : cols[O[col]]) M[loc.at(u)][col] = a;
    auto ker = nullspace(M, n, CycScalar(1), CycScalar());
    if (ker.empty()) continue;
    rref(ker, n);
    for (const auto& v : ker) {
      FreeWordPoly p;
      u64 lead = 0;
      bool first = true;
      for (int i = 0; i < n; ++i)
        if (!v[i].is_zero()) {
          if (first) lead = O[i];
          first = false;
          p.add(sp.word(O[i]), v[i]);
        }
      out.push_back({lead, std::move(p)});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<FreeWordPoly> res;
  for (auto& [lead, p] : out) res.push_back(std::move(p));
  return res;
}

bool in_span(const FreeWordPoly& r, const std::vector<FreeWordPoly>& basis) {
  std::map<std::vector<int>, int> col;
  for (const auto& b : basis)
    for (const auto& [w, a] : b.terms) col.emplace(w, 0);
  for (const auto& [w, a] : r.terms)
    if (!col.count(w)) return r.is_zero();
  int i = 0;
  for (auto& [w, idx] : col) idx = i++;
  const int n = static_cast<int>(col.size());
  std::vector<std::vector<CycScalar>> vecs;
  for (const auto& b : basis) {
    std::vector<CycScalar> v(n);
    for (const auto& [w, a] : b.terms) v[col[w]] = a;
    vecs.push_back(std::move(v));
  }
  std::vector<CycScalar> y(n);
  for (const auto& [w, a] : r.terms) y[col[w]] = a;
  SpanSolver<CycScalar> solver(vecs, n, CycScalar(1), CycScalar());
  return solver.solve(y).has_value();
}

}  // namespace suzuki
