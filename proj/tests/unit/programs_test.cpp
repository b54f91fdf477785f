#include <gtest/gtest.h>

#include "jaglab/algorithms.hpp"
#include "jaglab/checker.hpp"
#include "jaglab/error.hpp"
#include "jaglab/family.hpp"
#include "jaglab/lang.hpp"

namespace jaglab {
namespace {

struct Checked {
  bool traversable = false;
  bool orderable = false;
  std::vector<NodeId> order;
};

Checked check(const std::string& text, const LabelledGraph& g) {
  const auto prog = lang::parse_program(text);
  const auto jag = lang::compile(prog, g.degree());
  JagSystem sys(jag, g);
  Checked c;
  const auto tc = check_traversable(sys, g, Limits{});
  c.traversable = tc.traversable;
  c.order = tc.visit_order;
  if (tc.traversable) c.orderable = check_orderable(sys, g, tc.visit_order, Limits{}).orderable;
  return c;
}

std::vector<NodeId> lex_grid_order(const FamilyInstance& f) {
  std::vector<std::uint64_t> bounds(f.spec.d, static_cast<std::uint64_t>(f.spec.l));
  std::vector<NodeId> order;
  for (const auto& t : algo::successor_tuples(bounds)) {
    order.push_back(target(f.graph, f.graph.startnode(), algo::tuple_path(t)));
  }
  return order;
}

TEST(Programs, GridOrderTwoByTwo) {
  const auto f = build_family("grid:d=2,l=2");
  const auto c = check(algo::grid_traversal_program(), f.graph);
  EXPECT_TRUE(c.traversable);
  EXPECT_TRUE(c.orderable);
  std::vector<groups::Element> seen;
  for (auto v : c.order) seen.push_back(f.cayley.elements[v]);
  EXPECT_EQ(seen, (std::vector<groups::Element>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST(Programs, GridLineAndCube) {
  const auto line = build_family("grid:d=1,l=5");
  EXPECT_EQ(check(algo::grid_traversal_program(), line.graph).order, (std::vector<NodeId>{0, 1, 2, 3, 4}));
  const auto cube = build_family("grid:d=3,l=2");
  const auto c = check(algo::grid_traversal_program(), cube.graph);
  EXPECT_EQ(c.order.size(), 8u);
  EXPECT_EQ(c.order, lex_grid_order(cube));
}

TEST(Programs, BlockProgramMatchesGridProgram) {
  const auto f = build_family("grid:d=2,l=3");
  const auto a = check(algo::grid_traversal_program(), f.graph);
  const auto b = check(algo::block_traversal_program(algo::block_presentation(f.spec)), f.graph);
  EXPECT_TRUE(b.traversable && b.orderable);
  EXPECT_EQ(a.order, b.order);
}

TEST(Programs, BlockPresentations) {
  const auto sym = algo::block_presentation(parse_family("sym:n=3"));
  ASSERT_EQ(sym.size(), 2u);
  EXPECT_EQ(sym[0].word, groups::p_k_path(3, 3));
  EXPECT_EQ(sym[1].span_from, 1u);
  const auto ab = algo::block_presentation(parse_family("abelian:mod=6;gens=(2)(3)"));
  EXPECT_EQ(ab[1].span_from, 0u);
  const auto wr = algo::block_presentation(parse_family("wreath(grid:d=1,l=2,grid:d=1,l=3)"));
  ASSERT_EQ(wr.size(), 4u);
  EXPECT_EQ(wr[0].word, (Path{1}));
  EXPECT_EQ(wr[1].word, (Path{2, 2, 1, 2}));
  EXPECT_EQ(wr[3].word, (Path{2}));
  EXPECT_THROW(algo::block_presentation(parse_family("gl:n=2,p=2")), InputError);
}

TEST(Programs, BlockBoundsMultiplyToOrder) {
  for (const char* spec : {"abelian:mod=4,6;gens=(1,0)(0,2)(2,3)", "sym:n=4", "direct(sym:n=3,grid:d=1,l=2)",
                           "wreath(grid:d=1,l=3,grid:d=1,l=2)"}) {
    const auto f = build_family(spec);
    const auto pres = algo::block_presentation(f.spec);
    std::uint64_t prod = 1;
    for (auto e : algo::block_bounds(f.graph, pres)) prod *= e;
    EXPECT_EQ(prod, f.graph.num_nodes()) << spec;
    auto order = algo::block_order(f.graph, pres);
    std::sort(order.begin(), order.end());
    EXPECT_EQ(std::unique(order.begin(), order.end()), order.end()) << spec;
  }
}

TEST(Programs, MultAndInverse) {
  const auto f = build_family("abelian:mod=4;gens=(1)");
  const auto pre = algo::placement("p", Path{1, 1, 1}) + algo::placement("q", Path{1, 1});
  auto prog = lang::parse_program(algo::mult_program(pre));
  auto r = lang::interpret(prog, f.graph, Limits{});
  ASSERT_EQ(r.verdict, Verdict::Accept);
  EXPECT_EQ(f.cayley.elements[r.final_pebbles[prog.pebble_index("r")]], (groups::Element{1}));

  prog = lang::parse_program(algo::mult_program(algo::placement("q", Path{1, 1})));
  r = lang::interpret(prog, f.graph, Limits{});
  EXPECT_EQ(f.cayley.elements[r.final_pebbles[prog.pebble_index("r")]], (groups::Element{2}));

  prog = lang::parse_program(algo::inverse_program(algo::placement("p", Path{1, 1, 1})));
  r = lang::interpret(prog, f.graph, Limits{});
  ASSERT_EQ(r.verdict, Verdict::Accept);
  EXPECT_EQ(f.cayley.elements[r.final_pebbles[prog.pebble_index("q")]], (groups::Element{1}));
}

TEST(Programs, MultOnSymmetricGroup) {
  const auto f = build_family("sym:n=3");
  const auto& G = *f.group.group;
  for (NodeId p = 0; p < 6; ++p) {
    for (NodeId q = 0; q < 6; ++q) {
      const auto pre = algo::placement("p", algo::path_to(f.graph, p)) + algo::placement("q", algo::path_to(f.graph, q));
      const auto prog = lang::parse_program(algo::mult_program(pre));
      const auto r = lang::interpret(prog, f.graph, Limits{});
      ASSERT_EQ(r.verdict, Verdict::Accept);
      EXPECT_EQ(f.cayley.elements[r.final_pebbles[prog.pebble_index("r")]],
                G.multiply(f.cayley.elements[p], f.cayley.elements[q]));
    }
  }
}

struct CountCase {
  const char* spec;
  groups::Element generator;
  std::uint64_t e;
};

TEST(Programs, CountToMaxOrder) {
  for (const auto& c : {CountCase{"abelian:mod=4,2;gens=(1,0)(0,1)", {1, 0}, 4},
                        CountCase{"grid:d=2,l=2", {1, 0}, 2}, CountCase{"abelian:mod=5;gens=(1)", {1}, 5},
                        CountCase{"abelian:mod=2,3;gens=(1,0)(0,1)", {0, 1}, 3}}) {
    const auto f = build_family(c.spec);
    const auto [idx, e] = algo::max_order_generator(f.group);
    EXPECT_EQ(f.group.gens[idx], c.generator);
    EXPECT_EQ(e, c.e);
    for (int digits = 1; digits <= 2; ++digits) {
      const auto prog = lang::parse_program(algo::count_to_max_order_program(digits));
      lang::Interpreter in(prog, f.graph);
      const auto r = search(in, Limits{});
      ASSERT_EQ(r.verdict, Verdict::Accept) << c.spec;
      const int g = prog.pebble_index("g"), c0 = prog.pebble_index("c0");
      EXPECT_EQ(f.cayley.elements[in.pebble_node(r.witness.back(), g)], c.generator) << c.spec;
      // Every increment moves c0 one step along g_m.
      std::uint64_t ticks = 0;
      for (std::size_t i = 1; i < r.witness.size(); ++i) {
        ticks += in.pebble_node(r.witness[i], c0) != in.pebble_node(r.witness[i - 1], c0);
      }
      std::uint64_t expect = 1;
      for (int k = 0; k < digits; ++k) expect *= c.e;
      EXPECT_EQ(ticks, expect) << c.spec;
    }
  }
}

TEST(Programs, NegativeControls) {
  const auto f = build_family("grid:d=2,l=2");
  const auto jump = check(algo::jump_to_target_program(), f.graph.with_target(3));
  EXPECT_FALSE(jump.traversable);
  const auto z3 = build_family("abelian:mod=3;gens=(1)(2)");
  const auto two = check(algo::two_tour_program(), z3.graph);
  EXPECT_TRUE(two.traversable);
  EXPECT_FALSE(two.orderable);
}

}  // namespace
}  // namespace jaglab
