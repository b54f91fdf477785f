#ifndef JAGLAB_FAMILY_HPP
#define JAGLAB_FAMILY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "jaglab/graph.hpp"
#include "jaglab/groups.hpp"

namespace jaglab {

/// Parsed family specification, e.g. `wreath(grid:d=1,l=2, sym:n=3)`.
struct FamilySpec {
  enum class Kind { Grid, Abelian, Sym, GL, Wreath, Direct, Twice };

  Kind kind = Kind::Grid;
  int d = 0, l = 0;                        // grid
  std::vector<std::int32_t> moduli;        // abelian
  std::vector<groups::Element> gens;       // abelian
  int n = 0, p = 0;                        // sym, gl
  std::vector<FamilySpec> children;        // wreath, direct, twice

  /// Canonical text form; parse_family(to_string()) reproduces the spec.
  std::string to_string() const;
};

/// Grammar:
///   grid:d=<int>,l=<int>
///   abelian:mod=<int>[,<int>...];gens=(<int>,...)(<int>,...)...
///   sym:n=<int>
///   gl:n=<int>,p=<int>
///   wreath(<spec>,<spec>) | direct(<spec>,<spec>) | twice(<spec>)
/// `twice(A)` is two disjoint copies of A's Cayley graph with the target
/// on the identity of the second copy.
FamilySpec parse_family(std::string_view text);

/// A family instance: its group, Cayley graph and the graph handed to
/// automata (equal to the Cayley graph except for `twice`).
struct FamilyInstance {
  FamilySpec spec;
  groups::GeneratedGroup group;
  groups::CayleyGraph cayley;
  LabelledGraph graph;

  /// Node of the automaton graph that corresponds to Cayley node `v` in
  /// the copy holding the startnode.
  NodeId node(NodeId v) const noexcept { return v; }
  bool two_component() const noexcept { return spec.kind == FamilySpec::Kind::Twice; }
};

groups::GeneratedGroup build_group(const FamilySpec& spec,
                                   std::uint64_t cap = groups::default_group_cap());
FamilyInstance build_family(const FamilySpec& spec, std::uint64_t cap = groups::default_group_cap());
FamilyInstance build_family(std::string_view text, std::uint64_t cap = groups::default_group_cap());

}  // namespace jaglab

#endif  // JAGLAB_FAMILY_HPP
