#ifndef JAGLAB_GRAPH_HPP
#define JAGLAB_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jaglab {

/// Dense 0-based node identifier.
using NodeId = std::uint32_t;
/// Edge label, 1-based (labels run 1..degree).
using EdgeLabel = std::uint32_t;
/// A path is the sequence of labels it follows.
using Path = std::vector<EdgeLabel>;

/// Labelled degree-d graph: every node has exactly d out-edges, labelled 1..d,
/// given by the total edge function rho.
class LabelledGraph {
 public:
  LabelledGraph() = default;

  /// `rho` is row-major: rho[v * degree + (label - 1)].
  LabelledGraph(std::size_t num_nodes, std::size_t degree, std::vector<NodeId> rho,
                NodeId startnode, NodeId targetnode);

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  std::size_t degree() const noexcept { return degree_; }
  NodeId startnode() const noexcept { return start_; }
  NodeId targetnode() const noexcept { return target_; }

  NodeId rho(NodeId v, EdgeLabel label) const noexcept {
    return rho_[static_cast<std::size_t>(v) * degree_ + (label - 1)];
  }
  std::span<const NodeId> row(NodeId v) const noexcept {
    return {rho_.data() + static_cast<std::size_t>(v) * degree_, degree_};
  }
  const std::vector<NodeId>& table() const noexcept { return rho_; }

  LabelledGraph with_target(NodeId target) const;
  LabelledGraph with_start(NodeId start) const;

  bool operator==(const LabelledGraph&) const = default;

 private:
  std::size_t num_nodes_ = 0;
  std::size_t degree_ = 0;
  std::vector<NodeId> rho_;
  NodeId start_ = 0;
  NodeId target_ = 0;
};

/// Endpoint of the path labelled `w` starting at `v`. Throws InputError on a
/// label outside 1..degree.
NodeId target(const LabelledGraph& g, NodeId v, std::span<const EdgeLabel> w);

/// True iff every edge (v, v.i) can be reversed by a path of length at most
/// `max_reverse_len`.
bool is_undirected(const LabelledGraph& g, std::size_t max_reverse_len);

/// Nodes reachable from `v` along labelled edges, in ascending id order.
std::vector<NodeId> reachable_set(const LabelledGraph& g, NodeId v);

/// Weakly connected component index for every node (components numbered in
/// order of their smallest node).
std::vector<std::uint32_t> weak_components(const LabelledGraph& g);

/// Replacement product of `g` with a graph `h` on exactly g.degree() nodes.
/// Node (x, j) gets id x * |h| + j. Labels 1..deg(h) act inside the copy of h;
/// label deg(h)+1 is the cross edge (x, j) -> (rho(x, j+1), j).
/// Start and target map to position 0 of their copies.
LabelledGraph replacement_product(const LabelledGraph& g, const LabelledGraph& h);

/// Directed d-cycle with labels 1 = forward and 2 = back.
LabelledGraph cycle_graph(std::size_t d);

/// Degree reduction to 3: replacement product with the d-cycle.
/// Labels: 1 cycle-forward, 2 cycle-back, 3 cross edge.
LabelledGraph reduce_degree(const LabelledGraph& g);

/// Two graphs of equal degree side by side. Start comes from `a`; the target
/// is `b`'s target, shifted.
LabelledGraph disjoint_union(const LabelledGraph& a, const LabelledGraph& b);

/// Checks the two-component convention: at most two weak components, each
/// containing startnode or targetnode. Throws InputError otherwise.
void validate_components(const LabelledGraph& g);

/// Text format: header `n d s t`, then n rows of d node ids. `#` starts a
/// comment line. Parsing validates every invariant, including components.
LabelledGraph parse_graph(std::string_view text);
LabelledGraph read_graph(std::istream& in);
std::string serialize_graph(const LabelledGraph& g);

}  // namespace jaglab

#endif  // JAGLAB_GRAPH_HPP
