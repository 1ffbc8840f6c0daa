#include <doctest.h>

#include "support.hpp"

using namespace suzuki;

TEST_CASE("normal form examples") {
  SuzukiAlgebra A({1, 1, 1, 1});
  CHECK(A.normal_form({X11, X12}).is_zero());
  CHECK(A.normal_form({X22, X22}) == A.basis_element(A.index(EVEN, 2, 0)));
  CHECK(A.normal_form({X22}) == A.basis_element(A.index(EVEN, 2 * A.params().N, 1)));
  for (int N : {1, 2, 3}) {
    SuzukiAlgebra B({N, 1, -1, 1});
    int e = B.index(EVEN, 2 * N, 0);
    CHECK(B.multiply_basis(e, e) == std::pair<int, int>{e, 1});
  }
}

TEST_CASE("defining relations hold in the normal form") {
  for (const auto& g : testing::grid({{1, 1}, {1, 2}, {2, 1}})) {
    SuzukiAlgebra A(testing::params(g));
    const auto& P = A.params();
    const int K = P.K();
    // x11^{2N} + mu x12^{2N} = 1
    auto lhs = A.normal_form(power_word(X11, 2 * P.N)) + CycScalar(P.mu) * A.normal_form(power_word(X12, 2 * P.N));
    CHECK(lhs == A.unit());
    CHECK(A.normal_form({X11, X11}) == A.normal_form({X22, X22}));
    CHECK(A.normal_form({X12, X12}) == A.normal_form({X21, X21}));
    // chi_{11}^K = chi_{22}^K and the lambda-twisted pair
    CHECK(A.normal_form(alternating(X11, X22, K)) == A.normal_form(alternating(X22, X11, K)));
    CHECK(A.normal_form(alternating(X12, X21, K)) ==
          CycScalar(P.lambda) * A.normal_form(alternating(X21, X12, K)));
    for (Letter a : kLetters)
      for (Letter b : kLetters)
        if ((letter_row(a) + letter_col(a) + letter_row(b) + letter_col(b)) % 2 == 1)
          CHECK(A.normal_form({a, b}).is_zero());
  }
}

TEST_CASE("coproduct, counit and antipode examples") {
  SuzukiAlgebra A({1, 1, 1, 1});
  int x11sq = A.index(EVEN, 2, 0);
  TensorElement expect;
  tensor_add(expect, x11sq, x11sq, CycScalar(1L));
  tensor_add(expect, A.index(ODD, 2, 0), A.index(ODD, 2, 0), CycScalar(1L));
  CHECK(A.coproduct(x11sq) == expect);

  int x11 = A.index(EVEN, 1, 0);
  SuzukiElement lhs;
  for (const auto& [ab, c] : A.coproduct(x11)) lhs += (c * A.counit(ab.first)) * A.basis_element(ab.second);
  CHECK(lhs == A.basis_element(x11));

  for (int N : {1, 2}) {
    SuzukiAlgebra B({N, 1, 1, 1});
    CHECK(B.antipode(B.index(EVEN, 1, 0)) == B.basis_element(B.index(EVEN, 2 * N - 1, 0)));
  }
  CHECK(A.antipode(A.unit()) == A.unit());
}

TEST_CASE("group-likes") {
  for (const auto& g : testing::grid({{1, 1}, {2, 1}, {1, 2}, {3, 1}})) {
    SuzukiAlgebra A(testing::params(g));
    auto G = A.grouplikes();
    CHECK(G.size() == static_cast<std::size_t>(4 * g.N));
    for (const auto& x : G) CHECK(A.is_grouplike(x.element));
    if (g.mu == 1) CHECK(G[2 * (g.N - 1)].element == A.unit());
  }
}

TEST_CASE("Hopf axioms on the parameter grid") {
  for (const auto& g : testing::grid({{1, 1}, {1, 2}, {2, 1}})) {
    SuzukiAlgebra A(testing::params(g));
    auto rep = check_hopf_axioms(A);
    CAPTURE(A.params().to_string());
    CAPTURE(rep.witness.dump());
    CHECK(rep.ok);
    CHECK(rep.checks > static_cast<long long>(A.dim()) * A.dim() * A.dim());
  }
}

TEST_CASE("rewriting agrees with the block representation") {
  for (const auto& g : testing::grid({{1, 1}, {1, 2}, {2, 1}})) {
    SuzukiAlgebra A(testing::params(g));
    auto mods = build_simple_modules(A);
    auto rep = regular_block_representation(A, mods);
    const int d = A.dim();
    int mismatches = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        auto [k, s] = A.multiply_basis(i, j);
        CycMatrix prod = rep[i] * rep[j];
        if (k < 0) {
          mismatches += !prod.is_zero_matrix();
        } else {
          CycMatrix expect = rep[k];
          if (s < 0)
            for (int r = 0; r < expect.rows(); ++r)
              for (int c = 0; c < expect.cols(); ++c) expect(r, c) = -expect(r, c);
          mismatches += prod != expect;
        }
      }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("simple comodules satisfy the comodule axioms") {
  for (const auto& g : testing::grid({{1, 1}, {2, 1}})) {
    SuzukiAlgebra A(testing::params(g));
    for (int s = 1; s <= g.N; ++s)
      for (int t = 1; t <= 2 * g.n; ++t) {
        CAPTURE(s);
        CAPTURE(t);
        auto c = A.simple_comodule(s, t);
        CHECK(A.comodule_defect(c).empty());
      }
  }
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(SuzukiAlgebra({0, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SuzukiAlgebra({1, 1, 2, 1}), std::invalid_argument);
  SuzukiAlgebra A({1, 1, 1, 1});
  CHECK_THROWS_AS(A.index(EVEN, 0, 0), std::out_of_range);
}
