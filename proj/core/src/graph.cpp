#include "jaglab/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <climits>
#include <deque>
#include <istream>
#include <numeric>
#include <sstream>

#include "jaglab/error.hpp"

namespace jaglab {

LabelledGraph::LabelledGraph(std::size_t num_nodes, std::size_t degree, std::vector<NodeId> rho,
                             NodeId startnode, NodeId targetnode)
    : num_nodes_(num_nodes), degree_(degree), rho_(std::move(rho)), start_(startnode),
      target_(targetnode) {
  if (degree_ == 0) throw InputError("graph degree must be at least 1");
  if (num_nodes_ == 0) throw InputError("graph must have at least one node");
  if (rho_.size() != num_nodes_ * degree_) throw InputError("edge table has wrong size");
  for (NodeId x : rho_) {
    if (x >= num_nodes_) throw InputError("edge endpoint " + std::to_string(x) + " out of range");
  }
  if (start_ >= num_nodes_) throw InputError("startnode out of range");
  if (target_ >= num_nodes_) throw InputError("targetnode out of range");
}

LabelledGraph LabelledGraph::with_target(NodeId t) const {
  return LabelledGraph(num_nodes_, degree_, rho_, start_, t);
}

LabelledGraph LabelledGraph::with_start(NodeId s) const {
  return LabelledGraph(num_nodes_, degree_, rho_, s, target_);
}

NodeId target(const LabelledGraph& g, NodeId v, std::span<const EdgeLabel> w) {
  for (EdgeLabel l : w) {
    if (l < 1 || l > g.degree()) {
      throw InputError("label " + std::to_string(l) + " outside 1.." + std::to_string(g.degree()));
    }
    v = g.rho(v, l);
  }
  return v;
}

bool is_undirected(const LabelledGraph& g, std::size_t max_reverse_len) {
  const std::size_t n = g.num_nodes();
  std::vector<std::size_t> dist(n);
  for (NodeId v = 0; v < n; ++v) {
    for (EdgeLabel i = 1; i <= g.degree(); ++i) {
      const NodeId u = g.rho(v, i);
      // bounded BFS from u looking for v
      std::fill(dist.begin(), dist.end(), SIZE_MAX);
      std::deque<NodeId> queue{u};
      dist[u] = 0;
      bool found = (u == v);
      while (!queue.empty() && !found) {
        const NodeId x = queue.front();
        queue.pop_front();
        if (dist[x] == max_reverse_len) continue;
        for (NodeId y : g.row(x)) {
          if (y == v) {
            found = true;
            break;
          }
          if (dist[y] == SIZE_MAX) {
            dist[y] = dist[x] + 1;
            queue.push_back(y);
          }
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

std::vector<NodeId> reachable_set(const LabelledGraph& g, NodeId v) {
  std::vector<char> seen(g.num_nodes(), 0);
  std::vector<NodeId> stack{v};
  seen[v] = 1;
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    for (NodeId y : g.row(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  std::vector<NodeId> out;
  for (NodeId x = 0; x < g.num_nodes(); ++x) {
    if (seen[x]) out.push_back(x);
  }
  return out;
}

namespace {

NodeId find_root(std::vector<NodeId>& parent, NodeId x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<std::uint32_t> weak_components(const LabelledGraph& g) {
  std::vector<NodeId> parent(g.num_nodes());
  std::iota(parent.begin(), parent.end(), NodeId{0});
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    for (NodeId u : g.row(v)) {
      NodeId a = find_root(parent, v);
      NodeId b = find_root(parent, u);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::uint32_t> comp(g.num_nodes());
  std::vector<std::int64_t> index_of_root(g.num_nodes(), -1);
  std::uint32_t next = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const NodeId r = find_root(parent, v);
    if (index_of_root[r] < 0) index_of_root[r] = next++;
    comp[v] = static_cast<std::uint32_t>(index_of_root[r]);
  }
  return comp;
}

LabelledGraph replacement_product(const LabelledGraph& g, const LabelledGraph& h) {
  if (h.num_nodes() != g.degree()) {
    throw InputError("replacement product needs |H| = deg(G): |H| = " +
                     std::to_string(h.num_nodes()) + ", deg(G) = " + std::to_string(g.degree()));
  }
  const std::size_t m = h.num_nodes();
  const std::size_t dh = h.degree();
  const std::size_t d = dh + 1;
  std::vector<NodeId> rho(g.num_nodes() * m * d);
  for (NodeId x = 0; x < g.num_nodes(); ++x) {
    for (NodeId j = 0; j < m; ++j) {
      const std::size_t node = static_cast<std::size_t>(x) * m + j;
      for (EdgeLabel l = 1; l <= dh; ++l) {
        rho[node * d + (l - 1)] = static_cast<NodeId>(x * m + h.rho(j, l));
      }
      rho[node * d + dh] = static_cast<NodeId>(g.rho(x, j + 1) * m + j);
    }
  }
  return LabelledGraph(g.num_nodes() * m, d, std::move(rho), static_cast<NodeId>(g.startnode() * m),
                       static_cast<NodeId>(g.targetnode() * m));
}

LabelledGraph cycle_graph(std::size_t d) {
  std::vector<NodeId> rho(d * 2);
  for (std::size_t j = 0; j < d; ++j) {
    rho[j * 2] = static_cast<NodeId>((j + 1) % d);
    rho[j * 2 + 1] = static_cast<NodeId>((j + d - 1) % d);
  }
  return LabelledGraph(d, 2, std::move(rho), 0, 0);
}

LabelledGraph reduce_degree(const LabelledGraph& g) {
  return replacement_product(g, cycle_graph(g.degree()));
}

LabelledGraph disjoint_union(const LabelledGraph& a, const LabelledGraph& b) {
  if (a.degree() != b.degree()) throw InputError("disjoint union needs equal degrees");
  std::vector<NodeId> rho = a.table();
  const auto shift = static_cast<NodeId>(a.num_nodes());
  for (NodeId x : b.table()) rho.push_back(x + shift);
  return LabelledGraph(a.num_nodes() + b.num_nodes(), a.degree(), std::move(rho), a.startnode(),
                       b.targetnode() + shift);
}

void validate_components(const LabelledGraph& g) {
  const auto comp = weak_components(g);
  const std::uint32_t count = *std::max_element(comp.begin(), comp.end()) + 1;
  if (count > 2) {
    throw InputError("graph has " + std::to_string(count) + " connected components (at most 2)");
  }
  if (count == 2 && comp[g.startnode()] == comp[g.targetnode()]) {
    throw InputError("graph has a connected component with neither startnode nor targetnode");
  }
}

namespace {

std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t lineno) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc{} || ptr != line.data() + j) {
      throw InputError("expected a non-negative integer, got '" + std::string(line.substr(i, j - i)) +
                           "'",
                       lineno);
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

LabelledGraph parse_graph(std::string_view text) {
  std::size_t lineno = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::uint64_t n = 0, d = 0, s = 0, t = 0;
  std::vector<NodeId> rho;
  std::size_t rows = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    auto nums = parse_numbers(line, lineno);
    if (!have_header) {
      if (nums.size() != 4) throw InputError("header must be 'n d s t'", lineno);
      n = nums[0], d = nums[1], s = nums[2], t = nums[3];
      if (n == 0) throw InputError("node count must be positive", lineno);
      if (d == 0) throw InputError("degree must be positive", lineno);
      if (s >= n) throw InputError("startnode out of range", lineno);
      if (t >= n) throw InputError("targetnode out of range", lineno);
      rho.reserve(n * d);
      have_header = true;
    } else {
      if (rows == n) throw InputError("more than " + std::to_string(n) + " node rows", lineno);
      if (nums.size() != d) {
        throw InputError("expected " + std::to_string(d) + " entries, got " +
                             std::to_string(nums.size()),
                         lineno);
      }
      for (auto x : nums) {
        if (x >= n) {
          throw InputError("entry " + std::to_string(x) + " out of range for " + std::to_string(n) +
                               " nodes",
                           lineno);
        }
        rho.push_back(static_cast<NodeId>(x));
      }
      ++rows;
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw InputError("missing header", lineno);
  if (rows != n) {
    throw InputError("expected " + std::to_string(n) + " node rows, got " + std::to_string(rows),
                     lineno);
  }
  LabelledGraph g(n, d, std::move(rho), static_cast<NodeId>(s), static_cast<NodeId>(t));
  validate_components(g);
  return g;
}

LabelledGraph read_graph(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string serialize_graph(const LabelledGraph& g) {
  std::ostringstream out;
  out << g.num_nodes() << ' ' << g.degree() << ' ' << g.startnode() << ' ' << g.targetnode() << '\n';
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const auto r = g.row(v);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out << ' ';
      out << r[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace jaglab
