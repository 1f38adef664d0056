#include "loopmult/structure.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace loopmult;
using testutil::Rng;

namespace {

VectorField VF(const std::vector<std::string>& coeffs) { return VectorField::parse(coeffs); }

std::vector<int> dims(const std::vector<int>& v) { return v; }

RatMat random_unimodular(Rng& rng, int n) {
  // Product of elementary operations keeps the determinant at +-1.
  RatMat p(n, RatVec(n, 0));
  for (int i = 0; i < n; ++i) p[i][i] = 1;
  for (int step = 0; step < 3 * n; ++step) {
    int i = rng.int_in(0, n - 1), j = rng.int_in(0, n - 1);
    if (i == j) continue;
    Rat f = Rat(rng.int_in(-2, 2));
    for (int t = 0; t < n; ++t) p[i][t] += f * p[j][t];
  }
  return p;
}

}  // namespace

TEST(Structure, FromFieldSpanHeisenberg) {
  FieldSpan s(3);
  s.insert(VF({"1", "0", "0"}));
  s.insert(VF({"0", "x", "0"}));
  s.insert(VF({"0", "1", "0"}));
  auto g = from_field_span(s);
  EXPECT_EQ(g.dim(), 3);
  // One nonzero bracket up to antisymmetry; fingerprint is Heisenberg's.
  auto fp = fingerprint(g);
  EXPECT_EQ(fp.lcs_dims, dims({3, 1, 0}));
  EXPECT_EQ(fp.center_dim, 1);
}

TEST(Structure, FromFieldSpanAbelian) {
  FieldSpan s(3);
  s.insert(VF({"0", "1", "0"}));
  s.insert(VF({"0", "0", "1"}));
  auto g = from_field_span(s);
  auto fp = fingerprint(g);
  EXPECT_EQ(fp.lcs_dims, dims({2, 0}));
  EXPECT_EQ(fp.center_dim, 2);
}

TEST(Structure, FromFieldSpanNotClosed) {
  FieldSpan s(3);
  s.insert(VF({"1", "0", "0"}));
  s.insert(VF({"0", "x", "0"}));
  EXPECT_THROW(from_field_span(s), NotClosed);
}

TEST(Structure, SevenDimTwoChains) {
  std::vector<VectorField> gens{VF({"1", "0", "0"}),   VF({"0", "0", "x^2"}),
                                VF({"0", "0", "x"}),   VF({"0", "1", "0"}),
                                VF({"0", "0", "y^2"}), VF({"0", "0", "y"}),
                                VF({"0", "0", "1"})};
  auto span = lie_closure(gens);
  ASSERT_EQ(span.size(), 7);
  auto g = from_field_span(span);
  auto fp = fingerprint(g);
  EXPECT_EQ(fp.lcs_dims, dims({7, 3, 1, 0}));
  EXPECT_EQ(fp.center_dim, 1);
  auto verdicts = identify_model(g);
  EXPECT_EQ(verdicts, (std::vector<std::string>{"consistent with f_4 xZ f_4"}));
}

TEST(Structure, FingerprintFiliformF4) {
  auto g = filiform_algebra(2);  // f_4
  auto fp = fingerprint(g);
  EXPECT_EQ(fp.dim, 4);
  EXPECT_EQ(fp.lcs_dims, dims({4, 2, 1, 0}));
  EXPECT_EQ(fp.center_dim, 1);
  EXPECT_EQ(fp.ucs_dims, dims({0, 1, 2, 4}));
  EXPECT_EQ(fp.dss_dims, dims({4, 2, 0}));
}

TEST(Structure, FingerprintAbelianAndSums) {
  auto fp3 = fingerprint(abelian_algebra(3));
  EXPECT_EQ(fp3.lcs_dims, dims({3, 0}));
  EXPECT_EQ(fp3.center_dim, 3);

  auto g = filiform_algebra(2).plus_abelian(1);  // f_4 + R
  auto fp = fingerprint(g);
  EXPECT_EQ(fp.dim, 5);
  EXPECT_EQ(fp.lcs_dims, dims({5, 2, 1, 0}));
  EXPECT_EQ(fp.center_dim, 2);
}

TEST(Structure, IdentifyExamples) {
  EXPECT_EQ(identify_model(filiform_algebra(2).plus_abelian(1)),
            (std::vector<std::string>{"consistent with f_4 + R^1"}));
  EXPECT_EQ(identify_model(amalgamated_filiform_algebra(2, 2)),
            (std::vector<std::string>{"consistent with f_4 xZ f_4"}));
  EXPECT_EQ(identify_model(filiform_algebra(1)),
            (std::vector<std::string>{"consistent with f_3"}));
}

TEST(Structure, IdentifyCatalogSelfTest) {
  for (int n = 1; n <= 5; ++n) {
    auto v = identify_model(filiform_algebra(n));
    EXPECT_NE(std::find(v.begin(), v.end(), "consistent with f_" + std::to_string(n + 2)),
              v.end());
    auto w = identify_model(filiform_algebra(n).plus_abelian(2));
    EXPECT_NE(std::find(w.begin(), w.end(),
                        "consistent with f_" + std::to_string(n + 2) + " + R^2"),
              w.end());
  }
  for (int n = 1; n <= 5; ++n)
    for (int m = n; m <= 5; ++m) {
      auto v = identify_model(amalgamated_filiform_algebra(n, m));
      std::string want = "consistent with f_" + std::to_string(n + 2) + " xZ f_" +
                         std::to_string(m + 2);
      EXPECT_NE(std::find(v.begin(), v.end(), want), v.end()) << want;
    }
}

TEST(Structure, FingerprintBasisInvariance) {
  Rng rng(21);
  auto g = amalgamated_filiform_algebra(2, 3);
  auto fp = fingerprint(g);
  for (int t = 0; t < 20; ++t) {
    RatMat p = random_unimodular(rng, g.dim());
    EXPECT_EQ(fingerprint(g.change_basis(p)), fp);
  }
}

TEST(Structure, LargestIdealExamples) {
  auto g = filiform_algebra(2).plus_abelian(1);  // f_4 + R, basis e1..e4, e5
  RatMat w{{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}};    // <e2, e3>
  EXPECT_TRUE(largest_ideal_in(g, w).empty());

  auto h = filiform_algebra(1);  // Heisenberg
  RatMat commutator{{0, 0, 1}};
  auto core = largest_ideal_in(h, commutator);
  EXPECT_EQ(core.size(), 1u);

  // The center is always an ideal, so it is its own core.
  RatMat center{{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}};  // <e4, e5> in f_4 + R
  EXPECT_EQ(largest_ideal_in(g, center).size(), 2u);
}

TEST(Structure, LargestIdealIsIdeal) {
  Rng rng(22);
  auto g = amalgamated_filiform_algebra(2, 2);
  for (int t = 0; t < 10; ++t) {
    RatMat w;
    for (int r = 0; r < 3; ++r) {
      RatVec row;
      for (int i = 0; i < g.dim(); ++i) row.push_back(Rat(rng.int_in(-2, 2)));
      w.push_back(std::move(row));
    }
    RatMat ideal = largest_ideal_in(g, w);
    RatMat echelon = row_space(ideal);
    auto pivots = rref(echelon);
    for (auto& v : ideal)
      for (int i = 0; i < g.dim(); ++i) {
        RatVec ei(g.dim(), 0);
        ei[i] = 1;
        EXPECT_TRUE(in_row_space(echelon, pivots, g.bracket_vec(ei, v)));
      }
  }
}

TEST(Structure, ConstructorValidation) {
  // Non-antisymmetric constants must be rejected.
  std::vector<Rat> c(8, Rat(0));
  c[(0 * 2 + 1) * 2 + 0] = 1;  // c^0_{01} = 1 without the mirror entry
  EXPECT_THROW(AbstractLieAlgebra(2, c), std::invalid_argument);
  // [e0,e1]=e2, [e0,e2]=e2, [e1,e2]=e0 violates Jacobi.
  EXPECT_THROW(AbstractLieAlgebra::from_brackets(
                   3, {{0, 1, 2, Rat(1)}, {0, 2, 2, Rat(1)}, {1, 2, 0, Rat(1)}}),
               std::invalid_argument);
}
