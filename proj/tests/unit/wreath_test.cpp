#include <gtest/gtest.h>

#include "jaglab/algorithms.hpp"
#include "jaglab/checker.hpp"
#include "jaglab/error.hpp"
#include "jaglab/family.hpp"
#include "jaglab/lang.hpp"

namespace jaglab {
namespace {

struct Fixture {
  FamilyInstance fam;
  algo::WreathContext w;

  explicit Fixture(const char* spec) : fam(build_family(spec)), w(algo::WreathContext::of(fam)) {}
};

TEST(Wreath, NumbersAndTestf) {
  Fixture z("wreath(grid:d=1,l=2,grid:d=1,l=3)");
  const auto& W = *z.w.group;
  const NodeId id = z.fam.cayley.identity_node();
  EXPECT_TRUE(algo::wreath_is_number(z.w, id));
  const NodeId g = z.w.node(W.embed_base(1));
  EXPECT_TRUE(algo::wreath_is_number(z.w, g));
  EXPECT_EQ(algo::wreath_value(z.w, g), 1u);
  EXPECT_FALSE(algo::wreath_is_number(z.w, z.w.node(W.embed_top(1))));
  for (std::uint32_t h = 0; h < 3; ++h) {
    EXPECT_TRUE(algo::wreath_testf(z.w, id, h));
    EXPECT_EQ(algo::wreath_testf(z.w, g, h), h != W.top_identity());
  }
  EXPECT_THROW(algo::wreath_testf(z.w, z.w.node(W.embed_top(1)), 0), InputError);
}

TEST(Wreath, PebblePrograms) {
  Fixture z("wreath(grid:d=1,l=2,grid:d=1,l=3)");
  const auto& g = z.fam.graph;
  for (NodeId x = 0; x < g.num_nodes(); ++x) {
    const auto px = algo::placement("x", algo::path_to(g, x));
    const auto num = lang::parse_program(algo::is_number_program(z.w, px));
    EXPECT_EQ(lang::interpret(num, g, Limits{}).verdict == Verdict::Accept, algo::wreath_is_number(z.w, x));
    if (!algo::wreath_is_number(z.w, x)) continue;
    for (std::uint32_t h = 0; h < 3; ++h) {
      const auto ph = algo::placement("h", algo::path_to(g, z.w.node(z.w.group->embed_top(h))));
      const auto tf = lang::parse_program(algo::testf_program(z.w, px + ph));
      EXPECT_EQ(lang::interpret(tf, g, Limits{}).verdict == Verdict::Accept, algo::wreath_testf(z.w, x, h));
    }
  }
}

TEST(Wreath, CanonicalPaths) {
  Fixture z("wreath(grid:d=1,l=2,grid:d=1,l=2)");
  const auto& g = z.fam.graph;
  EXPECT_TRUE(algo::wreath_canonical_path(z.w, z.fam.cayley.identity_node()).empty());
  for (NodeId x = 0; x < g.num_nodes(); ++x) {
    if (!algo::wreath_is_number(z.w, x)) continue;
    const auto p = algo::wreath_canonical_path(z.w, x);
    EXPECT_EQ(target(g, g.startnode(), p), x);
    EXPECT_EQ(algo::g_segments(z.w, p), algo::wreath_value(z.w, x));
  }
}

TEST(Wreath, SameAndSuccessor) {
  Fixture z("wreath(grid:d=1,l=2,grid:d=1,l=3)");
  const auto& W = *z.w.group;
  const NodeId zero = z.fam.cayley.identity_node();
  const NodeId one = z.w.node(W.embed_base(1));
  const NodeId two = z.w.node(W.point_support({1, 2}, {1, 1}));
  const NodeId two_b = z.w.node(W.point_support({0, 1}, {1, 1}));
  EXPECT_TRUE(algo::wreath_same(z.w, zero, zero));
  EXPECT_TRUE(algo::wreath_successor(z.w, one, two));
  EXPECT_FALSE(algo::wreath_successor(z.w, two, one));
  EXPECT_TRUE(algo::wreath_same(z.w, two, two_b));
}

TEST(Wreath, RegisterMachines) {
  Fixture z("wreath(grid:d=1,l=2,grid:d=2,l=2)");
  EXPECT_EQ(algo::run_register_machine(algo::doubling_machine(), z.w, {2}).output, 4u);
  EXPECT_EQ(algo::run_register_machine(algo::doubling_machine(), z.w, {1}).output, 2u);
  EXPECT_THROW(algo::run_register_machine(algo::doubling_machine(), z.w, {3}), InputError);
  EXPECT_EQ(algo::run_register_machine(algo::power_of_two_machine(), z.w, {2}).output, 4u);

  using Op = algo::Instruction::Op;
  algo::RegisterMachine halt;
  halt.code = {{Op::Halt, 0, 0}};
  EXPECT_EQ(algo::run_register_machine(halt, z.w, {}).output, 0u);
  algo::RegisterMachine naked;
  naked.code = {{Op::Dec, 0, 0}};
  EXPECT_THROW(algo::run_register_machine(naked, z.w, {}), InputError);
  // out := 0 after holding 2 breaks the premise.
  algo::RegisterMachine shrink;
  shrink.registers = 1;
  shrink.code = {{Op::Dec, 0, 0}, {Op::Dec, 0, 0}};
  EXPECT_THROW(algo::run_register_machine(shrink, z.w, {2}), InputError);
}

TEST(Wreath, SuccessorChainReachesH) {
  Fixture z("wreath(grid:d=1,l=2,grid:d=2,l=2)");
  const auto n = static_cast<NodeId>(z.fam.graph.num_nodes());
  NodeId x = z.fam.cayley.identity_node();
  for (std::size_t k = 0; k < 4; ++k) {
    NodeId next = n;
    for (NodeId y = 0; y < n && next == n; ++y) {
      if (algo::wreath_successor(z.w, x, y)) next = y;
    }
    ASSERT_LT(next, n);
    x = next;
  }
  EXPECT_EQ(algo::wreath_value(z.w, x), 4u);
  for (NodeId y = 0; y < n; ++y) EXPECT_FALSE(algo::wreath_successor(z.w, x, y));
}

}  // namespace
}  // namespace jaglab
