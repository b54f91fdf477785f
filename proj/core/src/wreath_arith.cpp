#include <algorithm>
#include <sstream>

#include "jaglab/algorithms.hpp"
#include "jaglab/error.hpp"

namespace jaglab::algo {

WreathContext WreathContext::of(const FamilyInstance& inst) {
  if (inst.spec.kind != FamilySpec::Kind::Wreath) throw InputError("not a wreath family: " + inst.spec.to_string());
  WreathContext w;
  w.group = dynamic_cast<const groups::WreathProduct*>(inst.group.group.get());
  if (!w.group) throw InternalError("wreath family without a wreath group");
  w.cayley = &inst.cayley;
  const auto g = build_group(inst.spec.children[0]);
  const auto h = build_group(inst.spec.children[1]);
  w.g_gens = g.gens.size();
  w.h_gens = h.gens.size();
  w.g_cayley = std::make_shared<const groups::CayleyGraph>(groups::cayley_graph(g));
  w.h_cayley = std::make_shared<const groups::CayleyGraph>(groups::cayley_graph(h));
  return w;
}

groups::WreathElement WreathContext::element(NodeId v) const {
  if (v >= cayley->elements.size()) throw InputError("node " + std::to_string(v) + " out of range");
  return group->decode(cayley->elements[v]);
}

NodeId WreathContext::node(const groups::WreathElement& x) const { return cayley->node_of(group->encode(x)); }

bool wreath_is_number(const WreathContext& w, NodeId x) { return w.element(x).h == w.group->top_identity(); }

namespace {

groups::WreathElement number(const WreathContext& w, NodeId x) {
  auto e = w.element(x);
  if (e.h != w.group->top_identity()) {
    throw InputError("node " + std::to_string(x) + " is not a number representation");
  }
  return e;
}

Path shifted(Path p, std::size_t by) {
  for (auto& l : p) l += static_cast<EdgeLabel>(by);
  return p;
}

void dfs(const WreathContext& w, const groups::WreathElement& goal, const groups::WreathElement& prefix,
         std::uint32_t from, std::vector<std::pair<std::uint32_t, std::uint32_t>>& blocks, bool& done) {
  if (prefix == goal) {
    done = true;
    return;
  }
  const auto& W = *w.group;
  for (std::uint32_t h = from; h < W.top_order() && !done; ++h) {
    if (prefix.f[h] != W.base_identity()) continue;  // point already used
    const std::uint32_t g = goal.f[h];
    if (g == W.base_identity()) continue;
    const auto next = W.mul(prefix, W.point_support({h}, {g}));
    blocks.emplace_back(h, g);
    dfs(w, goal, next, h + 1, blocks, done);
    if (!done) blocks.pop_back();
  }
}

}  // namespace

std::size_t wreath_value(const WreathContext& w, NodeId x) {
  const auto e = number(w, x);
  std::size_t v = 0;
  for (auto g : e.f) v += g != w.group->base_identity();
  return v;
}

bool wreath_testf(const WreathContext& w, NodeId x, std::uint32_t h) {
  const auto e = number(w, x);
  if (h >= e.f.size()) throw InputError("point index out of range");
  return e.f[h] == w.group->base_identity();
}

std::string is_number_program(const WreathContext& w, const std::string& prologue) {
  std::ostringstream out;
  out << "pebble s; pebble t at target; pebble x; pebble a; pebble u\n"
      << "dir k : 1..d\n"
      << prologue << "jump a to s\njump u to s\n"
      << "while a != x {\n"
      << "  guess k\n"
      << "  move a along k\n"
      << "  if k > " << w.g_gens << " { move u along k }\n"
      << "}\n"
      << "if u != s { fail }\n"
      << "accept\n";
  return out.str();
}

std::string testf_program(const WreathContext& w, const std::string& prologue) {
  std::ostringstream out;
  const auto G = w.g_gens;
  out << "pebble s; pebble t at target; pebble x; pebble h; pebble hi; pebble a; pebble u; pebble v\n"
      << "pebble pp; pebble r\n"
      << "dir k : 1..d\nbool b\n"
      << prologue
      << "jump hi to s\n"
      << "guess b\n"
      << "while b {\n"
      << "  guess k\n"
      << "  if k > " << G << " { move hi along k }\n"
      << "  guess b\n"
      << "}\n"
      << "jump pp to s\n"
      << "jump r to h\n"
      << "while pp != hi {\n"
      << "  guess k\n"
      << "  move pp along k\n"
      << "  move r along k\n"
      << "}\n"
      << "if r != s { fail }\n"
      << "jump a to s\njump u to s\njump v to s\n"
      << "while a != x {\n"
      << "  guess k\n"
      << "  move a along k\n"
      << "  if k > " << G << " {\n"
      << "    move u along k\n"
      << "  } else {\n"
      << "    if u == hi { move v along k }\n"
      << "  }\n"
      << "}\n"
      << "if u != s { fail }\n"
      << "if v != s { fail }\n"
      << "accept\n";
  return out.str();
}

Path wreath_canonical_path(const WreathContext& w, NodeId x) {
  const auto goal = number(w, x);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> blocks;
  bool done = false;
  dfs(w, goal, w.group->typed_identity(), 0, blocks, done);
  if (!done) throw InternalError("no canonical path found");
  const auto& hc = *w.h_cayley;
  Path p;
  for (auto [h, g] : blocks) {
    const NodeId hinv = hc.node_of(w.group->top().inverse(w.group->top_elements()[h]));
    const Path back = shifted(path_to(hc.graph, hinv), w.g_gens);
    const Path mid = path_to(w.g_cayley->graph, g);
    const Path to = shifted(path_to(hc.graph, h), w.g_gens);
    p.insert(p.end(), back.begin(), back.end());
    p.insert(p.end(), mid.begin(), mid.end());
    p.insert(p.end(), to.begin(), to.end());
  }
  return p;
}

std::size_t g_segments(const WreathContext& w, const Path& p) {
  std::size_t n = 0;
  bool in = false;
  for (auto l : p) {
    const bool g = l <= w.g_gens;
    if (g && !in) ++n;
    in = g;
  }
  return n;
}

bool wreath_same(const WreathContext& w, NodeId x, NodeId y) {
  if (!wreath_is_number(w, x) || !wreath_is_number(w, y)) return false;
  return g_segments(w, wreath_canonical_path(w, x)) == g_segments(w, wreath_canonical_path(w, y));
}

bool wreath_successor(const WreathContext& w, NodeId x, NodeId y) {
  if (!wreath_is_number(w, x) || !wreath_is_number(w, y)) return false;
  return g_segments(w, wreath_canonical_path(w, y)) == g_segments(w, wreath_canonical_path(w, x)) + 1;
}

RegisterMachine doubling_machine() {
  using Op = Instruction::Op;
  RegisterMachine m;
  m.registers = 3;
  m.output = 1;
  m.code = {{Op::Jz, 0, 5}, {Op::Dec, 0, 0}, {Op::Inc, 1, 0},
            {Op::Inc, 1, 0}, {Op::Jz, 2, 0}, {Op::Halt, 0, 0}};
  return m;
}

RegisterMachine power_of_two_machine() {
  using Op = Instruction::Op;
  RegisterMachine m;
  m.registers = 4;
  m.output = 1;
  m.code = {{Op::Inc, 1, 0},  {Op::Jz, 0, 12}, {Op::Dec, 0, 0},  {Op::Jz, 1, 7}, {Op::Dec, 1, 0},
            {Op::Inc, 2, 0},  {Op::Jz, 3, 3},  {Op::Jz, 2, 1},   {Op::Dec, 2, 0}, {Op::Inc, 1, 0},
            {Op::Inc, 1, 0},  {Op::Jz, 3, 7},  {Op::Halt, 0, 0}};
  return m;
}

RegisterRun run_register_machine(const RegisterMachine& rm, const WreathContext& w,
                                 const std::vector<std::uint64_t>& inputs, std::uint64_t max_steps) {
  if (inputs.size() > rm.registers) throw InputError("more inputs than registers");
  const auto n = static_cast<NodeId>(w.cayley->graph.num_nodes());
  std::vector<long> seg(n, -2);
  auto value = [&](NodeId v) -> long {
    if (seg[v] == -2) {
      seg[v] = wreath_is_number(w, v) ? static_cast<long>(g_segments(w, wreath_canonical_path(w, v))) : -1;
    }
    return seg[v];
  };
  auto inc = [&](NodeId x) {
    for (NodeId y = 0; y < n; ++y) {
      if (value(y) == value(x) + 1) return y;
    }
    throw InputError("register overflow: no successor of a value-" + std::to_string(value(x)) +
                     " representation (|H| = " + std::to_string(w.group->top_order()) + ")");
  };
  auto dec = [&](NodeId x) {
    if (value(x) == 0) throw InputError("decrement of a zero register");
    for (NodeId y = 0; y < n; ++y) {
      if (value(y) + 1 == value(x)) return y;
    }
    throw InternalError("no predecessor");
  };
  const NodeId zero = w.cayley->identity_node();
  std::vector<NodeId> regs(rm.registers, zero);
  RegisterRun run;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    for (std::uint64_t k = 0; k < inputs[i]; ++k) regs[i] = inc(regs[i]);
    run.max_value = std::max(run.max_value, inputs[i]);
  }
  std::size_t pc = 0;
  while (pc < rm.code.size()) {
    if (++run.steps > max_steps) throw InputError("register machine exceeded its step budget");
    const auto& ins = rm.code[pc];
    if (ins.reg >= rm.registers) throw InputError("register index out of range");
    using Op = Instruction::Op;
    if (ins.op == Op::Halt) break;
    if (ins.op == Op::Inc) {
      regs[ins.reg] = inc(regs[ins.reg]);
      run.max_value = std::max<std::uint64_t>(run.max_value, static_cast<std::uint64_t>(value(regs[ins.reg])));
    }
    if (ins.op == Op::Dec) regs[ins.reg] = dec(regs[ins.reg]);
    if (ins.op == Op::Jz && value(regs[ins.reg]) == value(zero)) {
      pc = ins.target;
      continue;
    }
    ++pc;
  }
  run.output = static_cast<std::uint64_t>(value(regs[rm.output]));
  if (run.max_value > run.output) {
    throw InputError("a register reached " + std::to_string(run.max_value) + ", above the final output " +
                     std::to_string(run.output));
  }
  run.final_registers = regs;
  return run;
}

}  // namespace jaglab::algo
