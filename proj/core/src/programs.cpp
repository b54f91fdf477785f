#include <deque>
#include <sstream>

#include "jaglab/algorithms.hpp"
#include "jaglab/error.hpp"

namespace jaglab::algo {

namespace {

std::string num(std::size_t v) { return std::to_string(v); }

void emit_moves(std::ostringstream& out, const std::string& ind, const std::string& p, const Path& w) {
  for (auto l : w) out << ind << "move " << p << " along " << l << "\n";
}

// Applies block `var` (a variable holding a 1-based block number) to p.
void emit_move_var(std::ostringstream& out, const std::string& ind, const std::string& p,
                   const std::string& var, const BlockPresentation& blocks) {
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].word.empty()) continue;
    out << ind << "if " << var << " == " << j + 1 << " {\n";
    emit_moves(out, ind + "  ", p, blocks[j].word);
    out << ind << "}\n";
  }
}

// Sets mem iff x lies in the product set of blocks [span_from, j).
void emit_member_block(std::ostringstream& out, const std::string& ind, const std::string& x,
                       std::size_t j, const BlockPresentation& blocks) {
  const std::size_t from = blocks[j].span_from;
  if (from >= j) {
    out << ind << "if " << x << " == s { set mem = true }\n";
    return;
  }
  const std::size_t m = j - from;
  std::string in = ind;
  for (std::size_t i = 0; i < m; ++i) {
    out << in << "jump w" << i << " to " << (i == 0 ? std::string("s") : "w" + num(i - 1)) << "\n";
    out << in << "repeat {\n";
    in += "  ";
  }
  out << in << "if " << x << " == w" << m - 1 << " { set mem = true }\n";
  for (std::size_t i = m; i-- > 0;) {
    emit_moves(out, in, "w" + num(i), blocks[from + i].word);
    in.resize(in.size() - 2);
    out << in << "} while w" << i << " != " << (i == 0 ? std::string("s") : "w" + num(i - 1)) << "\n";
  }
}

void emit_member_var(std::ostringstream& out, const std::string& ind, const std::string& x,
                     const std::string& var, const BlockPresentation& blocks) {
  out << ind << "set mem = false\n";
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    out << ind << "if " << var << " == " << j + 1 << " {\n";
    emit_member_block(out, ind + "  ", x, j, blocks);
    out << ind << "}\n";
  }
}

Path offset(Path p, EdgeLabel by) {
  for (auto& l : p) l += by;
  return p;
}

BlockPresentation presentation_of(const FamilySpec& spec, const groups::GeneratedGroup& gg) {
  using K = FamilySpec::Kind;
  BlockPresentation out;
  switch (spec.kind) {
    case K::Grid:
      for (std::size_t i = 0; i < gg.gens.size(); ++i) out.push_back({Path{static_cast<EdgeLabel>(i + 1)}, i});
      return out;
    case K::Abelian:
      for (std::size_t i = 0; i < gg.gens.size(); ++i) out.push_back({Path{static_cast<EdgeLabel>(i + 1)}, 0});
      return out;
    case K::Sym:
      for (int k = spec.n; k >= 2; --k) out.push_back({groups::p_k_path(spec.n, k), out.size()});
      return out;
    case K::Direct: {
      const auto ga = build_group(spec.children[0]);
      const auto gb = build_group(spec.children[1]);
      out = presentation_of(spec.children[0], ga);
      const auto base = out.size();
      for (auto b : presentation_of(spec.children[1], gb)) {
        out.push_back({offset(b.word, static_cast<EdgeLabel>(ga.gens.size())), b.span_from + base});
      }
      return out;
    }
    case K::Wreath: {
      const auto ga = build_group(spec.children[0]);
      const auto gh = build_group(spec.children[1]);
      const auto pg = presentation_of(spec.children[0], ga);
      const auto ph = presentation_of(spec.children[1], gh);
      const auto hc = groups::cayley_graph(gh);
      const auto shift = static_cast<EdgeLabel>(ga.gens.size());
      for (NodeId h = 0; h < hc.graph.num_nodes(); ++h) {
        const NodeId hinv = hc.node_of(gh.group->inverse(hc.elements[h]));
        const Path to = offset(path_to(hc.graph, h), shift);
        const Path back = offset(path_to(hc.graph, hinv), shift);
        const auto base = out.size();
        for (const auto& b : pg) {
          Path w = back;
          w.insert(w.end(), b.word.begin(), b.word.end());
          w.insert(w.end(), to.begin(), to.end());
          out.push_back({std::move(w), b.span_from + base});
        }
      }
      const auto base = out.size();
      for (const auto& b : ph) out.push_back({offset(b.word, shift), b.span_from + base});
      return out;
    }
    case K::GL:
      throw InputError("no block presentation for GL families");
    case K::Twice:
      throw InputError("two-copy families only at the top level");
  }
  throw InternalError("unknown family kind");
}

}  // namespace

std::string placement(const std::string& p, const Path& path) {
  std::ostringstream out;
  out << "jump " << p << " to s\n";
  emit_moves(out, "", p, path);
  return out.str();
}

Path path_to(const LabelledGraph& g, NodeId v) {
  const auto n = g.num_nodes();
  std::vector<NodeId> parent(n, static_cast<NodeId>(n));
  std::vector<EdgeLabel> via(n, 0);
  std::deque<NodeId> q{g.startnode()};
  parent[g.startnode()] = g.startnode();
  while (!q.empty()) {
    const NodeId u = q.front();
    q.pop_front();
    for (EdgeLabel l = 1; l <= g.degree(); ++l) {
      const NodeId w = g.rho(u, l);
      if (parent[w] != n) continue;
      parent[w] = u;
      via[w] = l;
      q.push_back(w);
    }
  }
  if (v >= n || parent[v] == n) throw InputError("node " + num(v) + " is unreachable from the startnode");
  Path p;
  for (NodeId u = v; u != g.startnode(); u = parent[u]) p.push_back(via[u]);
  return {p.rbegin(), p.rend()};
}

std::string mult_program(const std::string& prologue) {
  return "pebble s; pebble t at target; pebble p; pebble q; pebble r; pebble pp\n"
         "dir k : 1..d\n" +
         prologue +
         "jump pp to s\n"
         "jump r to q\n"
         "while pp != p {\n"
         "  guess k\n"
         "  move pp along k\n"
         "  move r along k\n"
         "}\n"
         "accept\n";
}

std::string inverse_program(const std::string& prologue) {
  return "pebble s; pebble t at target; pebble p; pebble q; pebble r; pebble pp\n"
         "dir k : 1..d\n"
         "bool b\n" +
         prologue +
         "jump q to s\n"
         "guess b\n"
         "while b {\n"
         "  guess k\n"
         "  move q along k\n"
         "  guess b\n"
         "}\n"
         "jump pp to s\n"
         "jump r to p\n"
         "while pp != q {\n"
         "  guess k\n"
         "  move pp along k\n"
         "  move r along k\n"
         "}\n"
         "if r != s { fail }\n"
         "accept\n";
}

std::string grid_traversal_program() {
  return R"(pebble s; pebble t at target; pebble curtrace; pebble curr; pebble next; pebble count
dir k : 1..d
dir dd : 1..d
bool b
repeat {
  next := s
  guess k
  for dd = 1 to k {
    count := s
    guess b
    while b {
      guess b
      next := next.dd
      count := count.dd
      if count == s { fail }
    }
  }
  if k != 1 {
    if count.k == s { fail }
  }
  next := next.k
  curtrace := next
  for dd = k to d {
    count := s.dd
    while count != s {
      curtrace := curtrace.dd
      count := count.dd
    }
  }
  if curtrace != curr { fail }
  curr := next
} while curr != s
accept
)";
}

std::string count_to_max_order_program(int digits) {
  if (digits < 1 || digits > 8) throw InputError("digit count must be in 1..8");
  std::ostringstream out;
  out << "pebble s; pebble t at target; pebble g; pebble a; pebble b";
  for (int i = 0; i < digits; ++i) out << "; pebble c" << i;
  out << "\ndir m : 1..d\ndir j : 1..d\nbool done\nbool zero\n";
  out << R"(set m = 1
for j = 2 to d {
  a := s.m
  b := s.j
  set done = false
  repeat {
    if a == s {
      set done = true
    } else {
      if b == s {
        set done = true
      } else {
        move a along m
        move b along j
      }
    }
  } while !done
  if a == s {
    if b != s { set m = j }
  }
}
g := s.m
)";
  for (int i = 0; i < digits; ++i) out << "jump c" << i << " to s\n";
  out << "repeat {\n";
  std::string ind = "  ";
  for (int i = 0; i < digits; ++i) {
    out << ind << "move c" << i << " along m\n";
    if (i + 1 < digits) {
      out << ind << "if c" << i << " == s {\n";
      ind += "  ";
    }
  }
  for (int i = digits - 1; i > 0; --i) {
    ind.resize(ind.size() - 2);
    out << ind << "}\n";
  }
  out << "  set zero = true\n";
  for (int i = 0; i < digits; ++i) out << "  if c" << i << " != s { set zero = false }\n";
  out << "} while !zero\naccept\n";
  return out.str();
}

std::string jump_to_target_program() {
  return "pebble s; pebble t at target; pebble curr\n"
         "jump curr to t\n"
         "accept\n";
}

std::string two_tour_program() {
  return R"(pebble s; pebble t at target; pebble curr
bool b
guess b
if b {
  repeat { move curr along 1 } while curr != s
} else {
  repeat { move curr along 2 } while curr != s
}
accept
)";
}

BlockPresentation block_presentation(const FamilySpec& spec) {
  if (spec.kind == FamilySpec::Kind::Twice) {
    return presentation_of(spec.children[0], build_group(spec.children[0]));
  }
  return presentation_of(spec, build_group(spec));
}

std::string block_traversal_program(const BlockPresentation& blocks) {
  if (blocks.empty()) throw InputError("empty block presentation");
  std::size_t walkers = 0;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].span_from > j) throw InputError("block span starts after the block");
    walkers = std::max(walkers, j - blocks[j].span_from);
  }
  const std::string B = num(blocks.size());
  std::ostringstream out;
  out << "pebble s; pebble t at target; pebble curr; pebble next; pebble curtrace; pebble count\n";
  for (std::size_t i = 0; i < walkers; ++i) out << "pebble w" << i << "\n";
  out << "dir k : 1.." << B << "\ndir dd : 1.." << B << "\nbool b\nbool mem\n";
  out << "repeat {\n"
         "  next := s\n"
         "  guess k\n"
         "  for dd = 1 to k {\n"
         "    count := s\n"
         "    guess b\n"
         "    while b {\n"
         "      guess b\n";
  emit_move_var(out, "      ", "next", "dd", blocks);
  emit_move_var(out, "      ", "count", "dd", blocks);
  emit_member_var(out, "      ", "count", "dd", blocks);
  out << "      if mem { fail }\n"
         "    }\n"
         "  }\n"
         "  if k != 1 {\n"
         "    curtrace := count\n";
  emit_move_var(out, "    ", "curtrace", "k", blocks);
  emit_member_var(out, "    ", "curtrace", "k", blocks);
  out << "    if mem { fail }\n"
         "  }\n";
  emit_move_var(out, "  ", "next", "k", blocks);
  out << "  curtrace := next\n"
         "  count := s\n";
  emit_move_var(out, "  ", "count", "k", blocks);
  out << "  while count != s {\n";
  emit_move_var(out, "    ", "curtrace", "k", blocks);
  emit_move_var(out, "    ", "count", "k", blocks);
  out << "  }\n"
         "  for dd = k + 1 to " << B << " {\n"
         "    count := s\n";
  emit_move_var(out, "    ", "count", "dd", blocks);
  emit_member_var(out, "    ", "count", "dd", blocks);
  out << "    while !mem {\n";
  emit_move_var(out, "      ", "curtrace", "dd", blocks);
  emit_move_var(out, "      ", "count", "dd", blocks);
  emit_member_var(out, "      ", "count", "dd", blocks);
  out << "    }\n"
         "  }\n"
         "  if curtrace != curr { fail }\n"
         "  curr := next\n"
         "} while curr != s\n"
         "accept\n";
  return out.str();
}

std::string traversal_program(const FamilySpec& spec) {
  const FamilySpec& base = spec.kind == FamilySpec::Kind::Twice ? spec.children[0] : spec;
  if (base.kind == FamilySpec::Kind::Grid) return grid_traversal_program();
  return block_traversal_program(block_presentation(spec));
}

std::vector<std::uint64_t> block_bounds(const LabelledGraph& g, const BlockPresentation& blocks) {
  const auto n = g.num_nodes();
  std::vector<std::uint64_t> e;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    std::vector<char> span(n, 0);
    std::vector<NodeId> members{g.startnode()};
    span[g.startnode()] = 1;
    for (std::size_t i = blocks[j].span_from; i < j; ++i) {
      for (NodeId x : members) {
        NodeId y = x;
        do {
          span[y] = 1;
          y = target(g, y, blocks[i].word);
        } while (y != x);
      }
      members.clear();
      for (NodeId v = 0; v < n; ++v) {
        if (span[v]) members.push_back(v);
      }
    }
    std::uint64_t t = 1;
    NodeId y = target(g, g.startnode(), blocks[j].word);
    while (!span[y]) {
      y = target(g, y, blocks[j].word);
      ++t;
      if (t > n) throw InternalError("block does not return to its span");
    }
    e.push_back(t);
  }
  return e;
}

std::vector<NodeId> block_order(const LabelledGraph& g, const BlockPresentation& blocks) {
  std::vector<NodeId> order;
  for (const auto& t : successor_tuples(block_bounds(g, blocks))) {
    NodeId v = g.startnode();
    for (std::size_t j = 0; j < t.size(); ++j) {
      for (std::uint64_t r = 0; r < t[j]; ++r) v = target(g, v, blocks[j].word);
    }
    order.push_back(v);
  }
  return order;
}

}  // namespace jaglab::algo
