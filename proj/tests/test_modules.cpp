#include <doctest.h>

#include "support.hpp"

using namespace suzuki;

TEST_CASE("simple modules") {
  for (const auto& g : testing::grid({{1, 1}, {2, 1}, {1, 2}})) {
    SuzukiAlgebra A(testing::params(g));
    auto mods = build_simple_modules(A);
    long long sq = 0;
    for (const auto& m : mods) {
      CAPTURE(m.label());
      CHECK(module_defect(A, m.action, m.dim).empty());
      sq += m.dim * m.dim;
    }
    CHECK(sq == A.dim());
    const auto& v0 = find_simple(mods, SimpleModule::V, 0, 0);
    CHECK(v0.action[X11](0, 0).is_one());
    CHECK(v0.action[X22](0, 0).is_one());
    CHECK(v0.action[X12](0, 0).is_zero());
    CHECK(v0.action[X21](0, 0).is_zero());
    // x12 on V'_{jk} is [[0, mu_bar w^{4k(2n+1)}], [1, 0]]
    const auto& P = A.params();
    for (int k = 0; k < P.N; ++k) {
      const auto& m = find_simple(mods, SimpleModule::Vjprime, 2, k);
      const auto& x = m.action[X12];
      CHECK(x(0, 0).is_zero());
      CHECK(x(1, 1).is_zero());
      CHECK(x(1, 0).is_one());
      CHECK(x(0, 1) == A.conventions().mu_bar * A.w(4LL * k * P.K()));
    }
  }
}

TEST_CASE("catalog counts") {
  for (const auto& g : testing::grid({{1, 1}, {1, 2}, {2, 1}})) {
    SuzukiAlgebra A(testing::params(g));
    auto cat = build_catalog(A);
    const long long N = g.N, n = g.n;
    std::map<int, int> expect = {{1, static_cast<int>(8 * N * N)},
                                 {2, static_cast<int>(8 * N * N * n * (n + 1))},
                                 {static_cast<int>(2 * n + 1), static_cast<int>(8 * N * N)}};
    CHECK(cat.report.counts == expect);
    long long sq = 0;
    for (const auto* y : cat.distinct()) sq += static_cast<long long>(y->dim) * y->dim;
    CHECK(sq == static_cast<long long>(A.dim()) * A.dim());
    CHECK(cat.report.complete());
    if (g.N == 1 && g.n == 1) CHECK(sq == 144);
  }
}

TEST_CASE("every catalog entry is a Yetter-Drinfeld module") {
  for (const auto& g : testing::grid({{1, 1}, {1, 2}, {2, 1}})) {
    SuzukiAlgebra A(testing::params(g));
    auto cat = build_catalog(A);
    for (const auto& y : cat.modules) {
      auto r = verify_yd(A, y);
      CAPTURE(y.label());
      CAPTURE(r.axiom);
      CHECK(r.ok);
    }
  }
}

TEST_CASE("mutated modules fail the Yetter-Drinfeld check") {
  SuzukiAlgebra A({1, 1, 1, 1});
  auto cat = build_catalog(A);
  auto y = *cat.find("C[s=1,t=0,j=2,k=0,p=0]");
  REQUIRE_FALSE(y.coaction[0][1].is_zero());
  y.coaction[0][1] = CycScalar(-1L) * y.coaction[0][1];
  auto r = verify_yd(A, y);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.witness.is_null());

  auto a = *cat.find("A[s=1,k=0,p=0]");
  a.coaction[0][0] = CycScalar(-1L) * a.coaction[0][0];
  CHECK_FALSE(verify_yd(A, a).ok);
}

TEST_CASE("C and D are not isomorphic") {
  SuzukiAlgebra A({1, 1, 1, 1});
  auto cat = build_catalog(A);
  const auto& c = *cat.find("C[s=1,t=0,j=2,k=0,p=0]");
  const auto& d = *cat.find("D[s=1,t=0,j=2,k=0,p=0]");
  CHECK(intertwiner_dimension(A, c, d) == 0);
  CHECK(intertwiner_dimension(A, c, c) == 1);
}

TEST_CASE("explicit L and N tables agree with the Radford modules") {
  for (const auto& g : testing::grid({{1, 1}, {1, 2}, {2, 1}})) {
    SuzukiAlgebra A(testing::params(g));
    auto cat = build_catalog(A);
    for (int s = 1; s <= g.N; ++s)
      for (int k = 0; k < g.N; ++k)
        for (int p : {0, 1})
          for (int q : {0, 1}) {
            auto l = explicit_L(A, s, k, p, q);
            auto n = explicit_N(A, s, k, p, q);
            CAPTURE(l.label());
            CHECK(verify_yd(A, l).ok);
            CHECK(verify_yd(A, n).ok);
            CHECK(intertwiner_dimension(A, l, *cat.find(l.label())) == 1);
            CHECK(intertwiner_dimension(A, n, *cat.find(n.label())) == 1);
          }
  }
}

TEST_CASE("L built with j=4 is isomorphic to the j=2 module") {
  SuzukiAlgebra A({1, 2, 1, 1});
  auto a = radford_module(A, "L", {1, 0, 1, 0}, 2);
  auto b = radford_module(A, "L", {1, 0, 1, 0}, 4);
  CHECK(intertwiner_dimension(A, a, b) == 1);
}

TEST_CASE("catalog duplicates are isomorphic to their representatives") {
  SuzukiAlgebra A({1, 1, 1, -1});
  auto cat = build_catalog(A);
  int dups = 0;
  for (const auto& y : cat.modules)
    if (y.duplicate_of) {
      ++dups;
      CAPTURE(y.label());
      CHECK(intertwiner_dimension(A, y, *cat.find(*y.duplicate_of)) == 1);
    }
  CHECK(dups == cat.report.duplicates);
  CHECK(dups > 0);
}
