#include <gtest/gtest.h>

#include <set>

#include "jaglab/error.hpp"
#include "jaglab/groups.hpp"

namespace jaglab::groups {
namespace {

void expect_group_axioms(const Group& g) {
  const auto xs = g.elements();
  ASSERT_EQ(xs.size(), g.order());
  const auto e = g.identity();
  for (const auto& a : xs) {
    EXPECT_EQ(g.multiply(a, e), a);
    EXPECT_EQ(g.multiply(e, a), a);
    EXPECT_EQ(g.multiply(a, g.inverse(a)), e);
  }
  for (std::size_t i = 0; i < xs.size(); i += 3) {
    for (std::size_t j = 0; j < xs.size(); j += 5) {
      for (std::size_t k = 0; k < xs.size(); k += 7) {
        EXPECT_EQ(g.multiply(g.multiply(xs[i], xs[j]), xs[k]), g.multiply(xs[i], g.multiply(xs[j], xs[k])));
      }
    }
  }
}

TEST(Groups, Axioms) {
  expect_group_axioms(AbelianGroup({4, 6}));
  expect_group_axioms(SymmetricGroup(4));
  expect_group_axioms(GLGroup(2, 3));
  auto z2 = std::make_shared<AbelianGroup>(std::vector<std::int32_t>{2});
  auto s3 = std::make_shared<SymmetricGroup>(3);
  expect_group_axioms(DirectProduct(s3, z2));
  expect_group_axioms(WreathProduct(z2, s3));
  expect_group_axioms(WreathProduct(s3, z2));
}

TEST(Groups, ElementOrder) {
  AbelianGroup z({4, 2});
  EXPECT_EQ(element_order(z, {1, 0}), 4u);
  EXPECT_EQ(element_order(z, {2, 1}), 2u);
  EXPECT_EQ(element_order(z, {0, 0}), 1u);
  SymmetricGroup s(5);
  EXPECT_EQ(element_order(s, s.cycle()), 5u);
  EXPECT_EQ(element_order(s, s.swap()), 2u);
}

TEST(Groups, PermutationComposition) {
  SymmetricGroup s(3);
  const Element a{1, 0, 2};  // (1 2)
  const Element b{0, 2, 1};  // (2 3)
  // (a*b)(x) = a(b(x)): 0 -> 0 -> 1, 1 -> 2 -> 2, 2 -> 1 -> 0.
  EXPECT_EQ(s.multiply(a, b), (Element{1, 2, 0}));
  EXPECT_EQ(s.format(s.cycle()), "(1 2 3)");
}

TEST(Groups, PkPathIsTailCycle) {
  for (int n = 2; n <= 6; ++n) {
    auto gg = symmetric_group(n);
    const auto& s = static_cast<const SymmetricGroup&>(*gg.group);
    for (int k = 2; k <= n; ++k) {
      Element x = s.identity();
      for (auto l : p_k_path(n, k)) x = s.multiply(gg.gens[l - 1], x);
      EXPECT_EQ(x, s.tail_cycle(k)) << "n=" << n << " k=" << k;
    }
  }
  EXPECT_THROW(p_k_path(3, 1), InputError);
}

TEST(Groups, GLOrderMatchesEnumeration) {
  for (auto [n, p] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 5}}) {
    GLGroup g(n, p);
    std::uint64_t formula = 1, pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    for (std::uint64_t pi = 1; pi < pn; pi *= p) formula *= pn - pi;
    EXPECT_EQ(g.order(), formula);
    const auto xs = g.elements();
    EXPECT_EQ(xs.size(), formula);
    for (const auto& x : xs) EXPECT_NE(g.determinant(x), 0);
  }
  EXPECT_THROW(GLGroup(4, 5), InputError);
}

TEST(Groups, GLGeneratorsGenerate) {
  for (auto [n, p] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    auto gg = gl_group(n, p);
    ASSERT_EQ(gg.gens.size(), 4u);
    EXPECT_EQ(subgroup_closure(*gg.group, gg.gens).size(), gg.group->order());
  }
  EXPECT_EQ(gl_group(2, 2).gens[0], gl_group(2, 2).group->identity());
  EXPECT_EQ(least_primitive_root(7), 3);
  EXPECT_EQ(least_primitive_root(2), 1);
}

TEST(Groups, WreathEmbeddingsAndSupport) {
  auto z2 = std::make_shared<AbelianGroup>(std::vector<std::int32_t>{2});
  auto z3 = std::make_shared<AbelianGroup>(std::vector<std::int32_t>{3});
  WreathProduct w(z2, z3);
  EXPECT_EQ(w.order(), 24u);
  const auto g = w.embed_base(1);
  EXPECT_EQ(g.f[w.top_identity()], 1u);
  // (1,h) (delta_g,1) (1,h^-1) puts g at point h.
  for (std::uint32_t h = 0; h < 3; ++h) {
    const auto th = w.embed_top(h);
    const auto conj = w.mul(w.mul(th, g), w.inv(th));
    EXPECT_EQ(conj, w.point_support({h}, {1}));
  }
  EXPECT_EQ(w.decode(w.encode(w.point_support({0, 2}, {1, 1}))), w.point_support({0, 2}, {1, 1}));
}

TEST(Groups, CayleyGraphLeftMultiplication) {
  auto gg = symmetric_group(3);
  const auto cg = cayley_graph(gg);
  EXPECT_EQ(cg.graph.num_nodes(), 6u);
  for (NodeId v = 0; v < 6; ++v) {
    for (EdgeLabel l = 1; l <= 2; ++l) {
      EXPECT_EQ(cg.elements[cg.graph.rho(v, l)], gg.group->multiply(gg.gens[l - 1], cg.elements[v]));
    }
  }
  EXPECT_EQ(cg.elements[cg.identity_node()], gg.group->identity());
}

TEST(Groups, CayleyErrors) {
  EXPECT_THROW(abelian_group({4}, {{2}}), InputError);
  EXPECT_THROW(cayley_graph(symmetric_group(5), 100), LimitError);
  auto gg = abelian_group({6}, {{-5}});
  EXPECT_EQ(gg.gens[0], (Element{1}));
}

}  // namespace
}  // namespace jaglab::groups
