#include <doctest.h>

#include "support.hpp"

using namespace suzuki;

namespace {

struct Term {
  std::array<int, 3> w;
  CycScalar s;
};

// c at positions (pos, pos+1) applied to a basis triple.
Term apply(const MonomialBraiding& c, Term t, int pos) {
  const auto& e = c.at(t.w[pos], t.w[pos + 1]);
  t.w[pos] = e.k;
  t.w[pos + 1] = e.l;
  t.s = t.s * e.scalar;
  return t;
}

bool braid_equation_holds(const MonomialBraiding& c) {
  const int d = c.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Term t{{i, j, k}, CycScalar(1L)};
        Term l = apply(c, apply(c, apply(c, t, 0), 1), 0);
        Term r = apply(c, apply(c, apply(c, t, 1), 0), 1);
        if (l.w != r.w || l.s != r.s) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("derived braidings satisfy the braid equation") {
  for (const auto& g : testing::grid({{1, 1}, {1, 2}})) {
    SuzukiAlgebra A(testing::params(g));
    auto cat = build_catalog(A);
    for (const auto& y : cat.modules) {
      auto c = derive_braiding(A, y);
      CAPTURE(y.label());
      CHECK(c.invertible());
      CHECK(yang_baxter(c).ok);
      CHECK(braid_equation_holds(c));
    }
  }
}

TEST_CASE("a corrupted braiding fails the braid equation") {
  SuzukiAlgebra A({1, 1, 1, 1});
  auto cat = build_catalog(A);
  auto c = derive_braiding(A, *cat.find("L[s=1,k=0,p=1,q=0]"));
  const auto e = c.at(0, 1);
  c.set(0, 1, e.k, e.l, -e.scalar);
  auto r = yang_baxter(c);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(braid_equation_holds(c));
  // the reported triple really violates the equation
  MonomialBraiding probe = c;
  Term t{{r.triple[0], r.triple[1], r.triple[2]}, CycScalar(1L)};
  Term l = apply(probe, apply(probe, apply(probe, t, 0), 1), 0);
  Term rr = apply(probe, apply(probe, apply(probe, t, 1), 0), 1);
  CHECK((l.w != rr.w || l.s != rr.s));
}

TEST_CASE("diagonal braidings satisfy the braid equation") {
  auto ord = CycOrder::get(12);
  for (int a = 0; a < 12; a += 5)
    for (int b = 0; b < 12; b += 3) {
      auto c = testing::pair(CycScalar::root(ord, a), CycScalar::root(ord, b), CycScalar::root(ord, b + 1),
                             CycScalar::root(ord, a + 2));
      CHECK(yang_baxter(c).ok);
    }
}

TEST_CASE("derived braidings match the closed forms") {
  for (const auto& g : testing::grid({{1, 1}, {1, 2}})) {
    SuzukiAlgebra A(testing::params(g));
    auto cat = build_catalog(A);
    for (const auto& y : cat.modules) {
      if (y.family == "K" || y.family == "M") continue;
      CAPTURE(y.label());
      auto c = derive_braiding(A, y);
      CHECK(closed_form_mismatch(A, y, c) == "");
    }
  }
}

TEST_CASE("closed-form examples") {
  SuzukiAlgebra A({1, 1, 1, 1});
  const auto& P = A.params();
  const int K = P.K();
  // A: c(w(x)w) = w^{4ks(2n+1)} w(x)w
  for (int k = 0; k < 2; ++k) {
    auto c = braiding_A(A, 1, k, 0);
    CHECK(c.at(0, 0).scalar == A.w(4LL * k * K));
    CHECK(c.at(0, 0).k == 0);
  }
  auto cat = build_catalog(A);
  CHECK(derive_braiding(A, *cat.find("A[s=1,k=0,p=0]")).at(0, 0).scalar.is_one());

  // L, n=1: c(m1(x)m2) = w^{4k(2n+1)(s-1)} m3(x)m1 and c(mi(x)mi) = -mi(x)mi for k=0, p=1
  auto l = derive_braiding(A, *cat.find("L[s=1,k=0,p=1,q=0]"));
  CHECK(l.at(0, 1).k == 2);
  CHECK(l.at(0, 1).l == 0);
  CHECK(l.at(0, 1).scalar.is_one());
  for (int i = 0; i < 3; ++i) {
    CHECK(l.at(i, i).scalar == CycScalar(-1L));
    CHECK(l.at(i, i).k == i);
  }

  // N, n=1: c(w1(x)w3) = (-1)^q [...]^{2s+2} w1(x)w3 and the alpha=n+1 row fixes w2 in the second slot
  auto nn = derive_braiding(A, *cat.find("N[s=1,k=0,p=0,q=1]"));
  CHECK(nn.at(0, 2).k == 0);
  CHECK(nn.at(0, 2).l == 2);
  CHECK(nn.at(0, 2).scalar == CycScalar(-1L));
  for (int b = 0; b < 3; ++b) CHECK(nn.at(1, b).l == 1);
}

TEST_CASE("the n=2 L table") {
  SuzukiAlgebra A({1, 2, 1, 1});
  auto cat = build_catalog(A);
  auto c = derive_braiding(A, *cat.find("L[s=1,k=0,p=1,q=0]"));
  // targets (k,l) and the A-sign of the 25 displayed entries, A = -1 and B = 1
  const int tgt[5][5] = {{1, 3, 2, 5, 4}, {4, 2, 5, 1, 3}, {5, 4, 3, 2, 1}, {3, 5, 1, 4, 2}, {2, 1, 4, 3, 5}};
  const int sgn[5][5] = {{-1, 1, 1, 1, 1}, {1, -1, -1, 1, -1}, {-1, -1, -1, -1, -1}, {-1, 1, -1, -1, 1},
                         {1, 1, 1, 1, -1}};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(c.at(i, j).k == tgt[i][j] - 1);
      CHECK(c.at(i, j).l == i);
      CHECK(c.at(i, j).scalar == CycScalar(static_cast<long>(sgn[i][j])));
    }
}

TEST_CASE("racks of the three-dimensional braidings are dihedral") {
  for (int la : {1, -1}) {
    SuzukiAlgebra A({1, 1, 1, la});
    auto cat = build_catalog(A);
    for (std::string lab : {"L[s=1,k=0,p=1,q=0]", "L[s=1,k=0,p=0,q=1]", "N[s=1,k=0,p=0,q=1]", "N[s=1,k=0,p=1,q=0]"}) {
      CAPTURE(lab);
      auto r = extract_rack(derive_braiding(A, *cat.find(lab)));
      CHECK(rack_defect(r).empty());
      REQUIRE(r.size == 3);
      for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) CHECK(r.table[x][y] == ((2 * x - y) % 3 + 3) % 3);
    }
  }
  auto ord = CycOrder::get(12);
  auto r = extract_rack(testing::pair(CycScalar::root(ord, 1), CycScalar::root(ord, 2), CycScalar::root(ord, 3),
                                      CycScalar::root(ord, 4)));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) CHECK(r.table[x][y] == y);
}

TEST_CASE("diagonal type detection") {
  SuzukiAlgebra A({1, 1, 1, 1});
  const auto& P = A.params();
  const int K = P.K();
  auto cat = build_catalog(A);
  for (int t = 0; t < P.n; ++t)
    for (int k = 0; k < P.N; ++k) {
      const int s = 1, j = 2;
      auto c = derive_braiding(A, *cat.find(make_label("C", {s, t, j, k, 0})));
      auto dg = as_diagonal(c);
      REQUIRE(dg.has_value());
      CHECK(dg->q[0][0] == A.w((2LL * j * P.N + 4LL * k * K) * (t + 1) + 4LL * k * K * s));
    }
  CHECK_FALSE(as_diagonal(derive_braiding(A, *cat.find("L[s=1,k=0,p=1,q=0]"))).has_value());
  // H with ae != b^2 is not diagonal
  for (const auto& y : cat.modules)
    if (y.family == "H") {
      auto c = derive_braiding(A, y);
      auto v = vabe_shape(c);
      CHECK(v.has_value());
      if (v && v->a * v->e != v->b * v->b) CHECK_FALSE(as_diagonal(c).has_value());
    }
}

TEST_CASE("V_abe rescaling and diagonal form") {
  auto ord = CycOrder::get(12);
  auto w = [&](int e) { return CycScalar::root(ord, e); };
  for (int a = 0; a < 12; a += 1)
    for (int b = 0; b < 12; b += 3)
      for (int e = 0; e < 12; e += 2) {
        auto c1 = braiding_vabe(w(a), w(b), w(e));
        auto c2 = braiding_vabe(w(a) * w(e), w(b), w(0));
        CHECK(yang_baxter(c1).ok);
        auto eq = monomial_equivalence(c1, c2);
        CHECK(eq.verdict == Equivalence::Equivalent);
      }
  auto dg = vabe_diagonal_form(w(2), w(1), w(0));
  REQUIRE(dg.has_value());
  CHECK(dg->q[0][0] == w(1));
  CHECK(dg->q[0][1] == -w(1));
  CHECK_FALSE(vabe_diagonal_form(w(1), w(1), w(0)).has_value());
}

TEST_CASE("K and M are equivalent to L and N braidings") {
  SuzukiAlgebra A({1, 1, 1, 1});
  auto cat = build_catalog(A);
  for (const auto& y : cat.modules) {
    if (y.family != "K" && y.family != "M") continue;
    CAPTURE(y.label());
    REQUIRE(y.duplicate_of.has_value());
    CHECK(y.duplicate_of->front() == (y.family == "K" ? 'L' : 'N'));
    auto r = monomial_equivalence(derive_braiding(A, y), derive_braiding(A, *cat.find(*y.duplicate_of)));
    CHECK(r.verdict == Equivalence::Equivalent);
  }
}

TEST_CASE("braiding JSON round trip") {
  SuzukiAlgebra A({1, 2, 1, -1});
  auto cat = build_catalog(A);
  auto c = derive_braiding(A, *cat.find("N[s=1,k=0,p=1,q=1]"));
  CHECK(braiding_from_json(to_json(c), A.order()) == c);
}
