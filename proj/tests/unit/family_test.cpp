#include <gtest/gtest.h>

#include "jaglab/error.hpp"
#include "jaglab/family.hpp"

namespace jaglab {
namespace {

TEST(Family, RoundTrip) {
  for (const char* text : {"grid:d=2,l=3", "abelian:mod=4,2;gens=(1,1)(0,1)", "sym:n=4", "gl:n=2,p=3",
                           "wreath(grid:d=1,l=2,sym:n=3)", "direct(sym:n=3,grid:d=1,l=2)",
                           "twice(wreath(grid:d=1,l=2,grid:d=1,l=2))"}) {
    const auto spec = parse_family(text);
    EXPECT_EQ(parse_family(spec.to_string()).to_string(), spec.to_string()) << text;
  }
}

TEST(Family, SpacesAfterCommas) {
  const auto a = parse_family("wreath(grid:d=1,l=2, grid:d=1,l=3)");
  EXPECT_EQ(a.kind, FamilySpec::Kind::Wreath);
  ASSERT_EQ(a.children.size(), 2u);
  EXPECT_EQ(a.children[1].l, 3);
}

TEST(Family, Sizes) {
  EXPECT_EQ(build_family("grid:d=2,l=3").graph.num_nodes(), 9u);
  EXPECT_EQ(build_family("sym:n=4").graph.num_nodes(), 24u);
  EXPECT_EQ(build_family("wreath(grid:d=1,l=2, grid:d=1,l=3)").graph.num_nodes(), 24u);
  EXPECT_EQ(build_family("direct(sym:n=3,grid:d=1,l=2)").graph.degree(), 3u);
  EXPECT_EQ(build_family("gl:n=2,p=3").graph.degree(), 4u);
}

TEST(Family, TwiceHasTargetInOtherCopy) {
  const auto f = build_family("twice(grid:d=1,l=3)");
  EXPECT_TRUE(f.two_component());
  EXPECT_EQ(f.graph.num_nodes(), 6u);
  EXPECT_EQ(f.graph.targetnode(), 3u);
  EXPECT_EQ(f.graph.startnode(), 0u);
}

TEST(Family, Errors) {
  EXPECT_THROW(parse_family("grid:d=0,l=2"), InputError);
  EXPECT_THROW(parse_family("bogus"), InputError);
  EXPECT_THROW(parse_family("wreath(grid:d=1,l=2)"), InputError);
  EXPECT_THROW(build_family("gl:n=2,p=4"), InputError);
  EXPECT_THROW(build_family("gl:n=4,p=5"), LimitError);
}

}  // namespace
}  // namespace jaglab
