#include "loopmult/groups.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace loopmult;
using testutil::Rng;

namespace {

std::vector<ModelSpec> all_models() {
  std::vector<ModelSpec> out{{Model::F4Paper}, {Model::G5}};
  for (int n = 1; n <= 3; ++n) {
    out.push_back({Model::Filiform, n});
    out.push_back({Model::FiliformR, n});
  }
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) out.push_back({Model::Amalg, n, m});
  return out;
}

std::vector<Rat> random_elt(Rng& rng, const ModelSpec& ms) {
  return rng.point(ms.dim(), 3, 2);
}

}  // namespace

TEST(Groups, F4PaperMulExample) {
  F4PaperElt<Rat> g{1, 1, 0, 0}, h{1, 0, 0, 0};
  auto r = mul(g, h);
  EXPECT_EQ(r.x1, rat(2));
  EXPECT_EQ(r.x2, rat(1));
  EXPECT_EQ(r.x3, rat(-1));
  EXPECT_EQ(r.x4, rat(1, 2));
  // Same product through the 4x4 matrices.
  EXPECT_EQ(f4paper_matrix(r), mat_mul(f4paper_matrix(g), f4paper_matrix(h)));
}

TEST(Groups, F4PaperMatrixHomomorphismRandom) {
  Rng rng(31);
  ModelSpec ms{Model::F4Paper};
  for (int t = 0; t < 100; ++t) {
    auto x = random_elt(rng, ms), y = random_elt(rng, ms);
    F4PaperElt<Rat> g{x[0], x[1], x[2], x[3]}, h{y[0], y[1], y[2], y[3]};
    EXPECT_EQ(f4paper_matrix(mul(g, h)), mat_mul(f4paper_matrix(g), f4paper_matrix(h)));
  }
}

TEST(Groups, G5MulExample) {
  G5Elt<Rat> g{1, 0, 0, 0, 0}, h{0, 1, 0, 1, 0};
  auto r = mul(g, h);
  EXPECT_EQ(r.x1, rat(1));
  EXPECT_EQ(r.x2, rat(1));
  EXPECT_EQ(r.x3, rat(1, 2));
  EXPECT_EQ(r.x4, rat(1));
  EXPECT_EQ(r.x5, rat(1, 2));
}

TEST(Groups, IdentityAndInverse) {
  Rng rng(32);
  for (auto& ms : all_models()) {
    auto e = model_identity<Rat>(ms);
    for (int t = 0; t < 25; ++t) {
      auto g = random_elt(rng, ms);
      EXPECT_EQ(model_mul(ms, e, g), g) << ms.name();
      EXPECT_EQ(model_mul(ms, g, e), g) << ms.name();
      auto gi = model_inv(ms, g);
      EXPECT_EQ(model_mul(ms, g, gi), e) << ms.name();
      EXPECT_EQ(model_mul(ms, gi, g), e) << ms.name();
      EXPECT_EQ(model_inv(ms, gi), g) << ms.name();
    }
  }
}

TEST(Groups, AssociativityRandom) {
  Rng rng(33);
  for (auto& ms : all_models()) {
    for (int t = 0; t < 200; ++t) {
      auto a = random_elt(rng, ms), b = random_elt(rng, ms), c = random_elt(rng, ms);
      EXPECT_EQ(model_mul(ms, model_mul(ms, a, b), c), model_mul(ms, a, model_mul(ms, b, c)))
          << ms.name() << " n=" << ms.n << " m=" << ms.m;
    }
  }
}

TEST(Groups, FiliformRMatrixOracle) {
  // Closed-form law against the matrix representation product.
  Rng rng(34);
  for (int n = 1; n <= 3; ++n) {
    ModelSpec ms{Model::FiliformR, n};
    for (int t = 0; t < 100; ++t) {
      auto x = random_elt(rng, ms), y = random_elt(rng, ms);
      FiliformRElt<Rat> g{x[0], {x.begin() + 1, x.begin() + 1 + n}, x[n + 1], x[n + 2]};
      FiliformRElt<Rat> h{y[0], {y.begin() + 1, y.begin() + 1 + n}, y[n + 1], y[n + 2]};
      EXPECT_EQ(matrix_embed(mul(g, h)), mat_mul(matrix_embed(g), matrix_embed(h)));
    }
  }
}

TEST(Groups, FiliformRMatrixPattern) {
  // n = 2, c = 1: subdiagonal -1 entries and the c^2/2! = 1/2 in the k column.
  FiliformRElt<Rat> g{1, {0, 0}, 0, 0};
  RatMat m = matrix_embed(g);
  ASSERT_EQ(m.size(), 5u);
  EXPECT_EQ(m[1][3], rat(-1));
  EXPECT_EQ(m[2][1], rat(-1));
  EXPECT_EQ(m[2][3], rat(1, 2));
  EXPECT_EQ(m[0][4], rat(0));
  FiliformRElt<Rat> e{};
  e.a.assign(2, Rat(0));
  RatMat id = matrix_embed(e);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) EXPECT_EQ(id[i][j], i == j ? rat(1) : rat(0));
}

TEST(Groups, AmalgMatrixPairOracle) {
  Rng rng(35);
  ModelSpec ms{Model::Amalg, 2, 3};
  for (int t = 0; t < 50; ++t) {
    auto x = random_elt(rng, ms), y = random_elt(rng, ms);
    auto g = model_mul(ms, x, y);
    AmalgElt<Rat> ga{x[0], {x[1], x[2]}, x[3], {x[4], x[5], x[6]}, x[7]};
    AmalgElt<Rat> gb{y[0], {y[1], y[2]}, y[3], {y[4], y[5], y[6]}, y[7]};
    auto [a1, a2] = matrix_embed_pair(ga);
    auto [b1, b2] = matrix_embed_pair(gb);
    RatMat p1 = mat_mul(a1, b1), p2 = mat_mul(a2, b2);
    // Block entries agree and the k coordinate recombines from the corners.
    AmalgElt<Rat> gp{g[0], {g[1], g[2]}, g[3], {g[4], g[5], g[6]}, g[7]};
    auto [c1, c2] = matrix_embed_pair(gp);
    EXPECT_EQ(p1[1][3], c1[1][3]);
    EXPECT_EQ(p2[2][1], c2[2][1]);
    EXPECT_EQ(p1[0][3] + p2[0][4], gp.k);
    for (int j = 1; j <= 2; ++j) EXPECT_EQ(p1[0][j], c1[0][j]);
    for (int j = 1; j <= 3; ++j) EXPECT_EQ(p2[0][j], c2[0][j]);
  }
}

TEST(Groups, CosetReduceRoundTrips) {
  Rng rng(36);
  std::vector<std::pair<ModelSpec, SubgroupTag>> cases{
      {{Model::F4Paper}, SubgroupTag::F4H1},
      {{Model::F4Paper}, SubgroupTag::F4H2},
      {{Model::FiliformR, 1}, SubgroupTag::FiliformAslots},
      {{Model::FiliformR, 3}, SubgroupTag::FiliformAslots},
      {{Model::Amalg, 2, 2}, SubgroupTag::AmalgADslots},
      {{Model::G5}, SubgroupTag::G5KL}};
  for (auto& [ms, tag] : cases) {
    auto slots = subgroup_slots(ms, tag);
    for (int t = 0; t < 40; ++t) {
      auto g = random_elt(rng, ms);
      auto [rep, sub] = coset_reduce(ms, tag, g);
      // Subgroup element from the parts, in the tagged slots.
      auto h = model_identity<Rat>(ms);
      for (std::size_t i = 0; i < slots.size(); ++i) h[slots[i]] = sub[i];
      EXPECT_EQ(model_mul(ms, rep, h), g) << ms.name();
      for (int s : slots) EXPECT_EQ(rep[s], rat(0));
      // Reducing a rep gives the rep itself; reducing a subgroup element
      // gives the identity rep.
      auto [rep2, sub2] = coset_reduce(ms, tag, rep);
      EXPECT_EQ(rep2, rep);
      for (auto& v : sub2) EXPECT_EQ(v, rat(0));
      auto [rep3, sub3] = coset_reduce(ms, tag, h);
      EXPECT_EQ(rep3, model_identity<Rat>(ms));
      EXPECT_EQ(sub3, sub);
    }
  }
}

TEST(Groups, CosetReduceUniqueness) {
  // rep is invariant under right multiplication by subgroup elements.
  Rng rng(37);
  ModelSpec ms{Model::F4Paper};
  for (int t = 0; t < 40; ++t) {
    auto g = random_elt(rng, ms);
    auto h = model_identity<Rat>(ms);
    h[2] = rng.small_rat();
    auto [rep1, s1] = coset_reduce(ms, SubgroupTag::F4H1, g);
    auto [rep2, s2] = coset_reduce(ms, SubgroupTag::F4H1, model_mul(ms, g, h));
    EXPECT_EQ(rep1, rep2);
  }
}

TEST(Groups, FiliformRCenterCommutes) {
  // n = 1: elements {(0, 0, k, d)} commute with everything.
  Rng rng(38);
  ModelSpec ms{Model::FiliformR, 1};
  for (int t = 0; t < 40; ++t) {
    auto g = random_elt(rng, ms);
    std::vector<Rat> z{0, 0, rng.small_rat(), rng.small_rat()};
    EXPECT_EQ(model_mul(ms, g, z), model_mul(ms, z, g));
  }
}

TEST(Groups, ModelLieAlgebras) {
  // F4Paper: [e1,e2]=e3, [e1,e3]=e4 (filiform f_4 fingerprint).
  auto f4 = model_lie_algebra({Model::F4Paper});
  EXPECT_EQ(fingerprint(f4), fingerprint(filiform_algebra(2)));
  EXPECT_EQ(f4.c(0, 1, 2), rat(1));
  EXPECT_EQ(f4.c(0, 2, 3), rat(1));
  // FiliformR(n): f_{n+2} + R.
  for (int n = 1; n <= 3; ++n) {
    auto g = model_lie_algebra({Model::FiliformR, n});
    EXPECT_EQ(fingerprint(g), fingerprint(filiform_algebra(n).plus_abelian(1))) << n;
  }
  // Amalg(n,m): f_{n+2} xZ f_{m+2}.
  auto am = model_lie_algebra({Model::Amalg, 2, 2});
  EXPECT_EQ(fingerprint(am), fingerprint(amalgamated_filiform_algebra(2, 2)));
  // G5: [e1,e2]=e3, [e1,e4]=e5.
  auto g5 = model_lie_algebra({Model::G5});
  EXPECT_EQ(g5.c(0, 1, 2), rat(1));
  EXPECT_EQ(g5.c(0, 3, 4), rat(1));
  EXPECT_EQ(g5.c(1, 3, 0), rat(0));
  EXPECT_EQ(fingerprint(g5).center_dim, 2);
}
