#include <algorithm>
#include <functional>
#include <unordered_map>

#include "jaglab/error.hpp"
#include "jaglab/lang.hpp"

namespace jaglab::lang {

namespace {

constexpr std::uint32_t kAccepted = 0xFFFFFFFFu;

struct Frame {
  std::uint32_t block, idx;
};

struct Decoded {
  std::vector<Frame> frames;
  std::vector<std::uint32_t> rest;  // vars then pebbles
};

Decoded decode(const Interpreter::State& x) {
  Decoded d;
  const std::uint32_t depth = x[0] == kAccepted ? 0 : x[0];
  for (std::uint32_t k = 0; k < depth; ++k) d.frames.push_back({x[1 + 2 * k], x[2 + 2 * k]});
  d.rest.assign(x.begin() + 1 + 2 * depth, x.end());
  return d;
}

Interpreter::State encode(const Decoded& d) {
  Interpreter::State x;
  x.reserve(1 + 2 * d.frames.size() + d.rest.size());
  x.push_back(static_cast<std::uint32_t>(d.frames.size()));
  for (const auto& f : d.frames) {
    x.push_back(f.block);
    x.push_back(f.idx);
  }
  x.insert(x.end(), d.rest.begin(), d.rest.end());
  return x;
}

}  // namespace

Interpreter::Interpreter(const Program& prog, const LabelledGraph& g) : prog_(&prog), g_(&g) {
  check(prog, g.degree());
  std::function<void(const std::vector<Stmt>&)> collect = [&](const std::vector<Stmt>& b) {
    blocks_.push_back(&b);
    for (const auto& s : b) {
      collect(s.body);
      collect(s.else_body);
    }
  };
  collect(prog.body);
  for (std::size_t v = 0; v < prog.vars.size(); ++v) {
    domains_.push_back(prog.domain(static_cast<int>(v), g.degree()));
  }
}

int Interpreter::block_id(const std::vector<Stmt>* b) const {
  const auto it = std::find(blocks_.begin(), blocks_.end(), b);
  if (it == blocks_.end()) throw InternalError("unknown block");
  return static_cast<int>(it - blocks_.begin());
}

std::size_t Interpreter::pebble_offset(const State& x) const {
  const std::uint32_t depth = x[0] == kAccepted ? 0 : x[0];
  return 1 + 2 * depth + prog_->vars.size();
}

int Interpreter::value(const State& x, int var) const {
  const std::uint32_t depth = x[0] == kAccepted ? 0 : x[0];
  return static_cast<int>(x[1 + 2 * depth + var]);
}

NodeId Interpreter::pebble_node(const State& x, int p) const { return x[pebble_offset(x) + p]; }

NodeId Interpreter::curr(const State& x) const { return pebble_node(x, prog_->curr); }

bool Interpreter::accepting(const State& x) const { return x[0] == kAccepted; }

int Interpreter::eval(const State& x, const Expr& e) const {
  switch (e.kind) {
    case Expr::Kind::Const: return e.value;
    case Expr::Kind::Degree: return static_cast<int>(g_->degree());
    case Expr::Kind::Var: return value(x, e.var);
    case Expr::Kind::VarPlus: return value(x, e.var) + e.value;
  }
  return 0;
}

EdgeLabel Interpreter::label(const State& x, const Expr& e, std::size_t line) const {
  const int l = eval(x, e);
  if (l < 1 || static_cast<std::size_t>(l) > g_->degree()) {
    throw ProgramError("line " + std::to_string(line) + ": label " + std::to_string(l) + " outside 1.." +
                       std::to_string(g_->degree()));
  }
  return static_cast<EdgeLabel>(l);
}

bool Interpreter::holds(const State& x, const Cond& c) const {
  bool r = true;
  switch (c.kind) {
    case Cond::Kind::True: r = true; break;
    case Cond::Kind::PebblesEqual: r = pebble_node(x, c.a) == pebble_node(x, c.b); break;
    case Cond::Kind::BoolVar: r = value(x, c.var) != 0; break;
    case Cond::Kind::Compare: {
      const int a = eval(x, c.lhs), b = eval(x, c.rhs);
      switch (c.op) {
        case Cond::Op::Eq: r = a == b; break;
        case Cond::Op::Ne: r = a != b; break;
        case Cond::Op::Lt: r = a < b; break;
        case Cond::Op::Le: r = a <= b; break;
        case Cond::Op::Gt: r = a > b; break;
        case Cond::Op::Ge: r = a >= b; break;
      }
      break;
    }
  }
  return r != c.negate;
}

Interpreter::State Interpreter::initial() const {
  Decoded d;
  d.frames.push_back({0, 0});
  for (const auto& dom : domains_) d.rest.push_back(static_cast<std::uint32_t>(dom.front()));
  for (std::size_t p = 0; p < prog_->pebbles.size(); ++p) {
    d.rest.push_back(static_cast<int>(p) == prog_->t ? g_->targetnode() : g_->startnode());
  }
  return encode(d);
}

void Interpreter::successors(const State& x, std::vector<State>& out) const {
  if (x[0] == kAccepted) return;
  exec(x, out);
}

void Interpreter::exec(const State& x, std::vector<State>& out) const {
  Decoded d = decode(x);
  const std::size_t nv = prog_->vars.size();
  auto set_var = [&](Decoded& s, int v, int val, std::size_t line) {
    const auto& dom = domains_[v];
    if (std::find(dom.begin(), dom.end(), val) == dom.end()) {
      throw ProgramError("line " + std::to_string(line) + ": value " + std::to_string(val) +
                         " outside the domain of '" + prog_->vars[v].name + "'");
    }
    s.rest[v] = static_cast<std::uint32_t>(val);
  };
  auto push = [&](Decoded& s, const std::vector<Stmt>& b) {
    s.frames.push_back({static_cast<std::uint32_t>(block_id(&b)), 0});
  };
  Frame& top = d.frames.back();
  const auto& stmts = *blocks_[top.block];
  if (top.idx == stmts.size()) {
    if (d.frames.size() == 1) return;  // fell off the end: reject
    d.frames.pop_back();
    Frame& parent = d.frames.back();
    const Stmt& st = (*blocks_[parent.block])[parent.idx];
    const State cur = encode(d);
    switch (st.kind) {
      case Stmt::Kind::While:
      case Stmt::Kind::Repeat:
        if (holds(cur, st.cond)) push(d, st.body);
        else ++parent.idx;
        break;
      case Stmt::Kind::For: {
        const int v = value(cur, st.var);
        if (v < eval(cur, st.hi)) {
          set_var(d, st.var, v + 1, st.line);
          push(d, st.body);
        } else {
          ++parent.idx;
        }
        break;
      }
      default: ++parent.idx; break;
    }
    out.push_back(encode(d));
    return;
  }
  const Stmt& st = stmts[top.idx];
  const std::size_t peb = nv;
  switch (st.kind) {
    case Stmt::Kind::Move:
      d.rest[peb + st.a] = g_->rho(d.rest[peb + st.a], label(x, st.e, st.line));
      ++top.idx;
      out.push_back(encode(d));
      return;
    case Stmt::Kind::Jump:
      d.rest[peb + st.a] = d.rest[peb + st.b];
      ++top.idx;
      out.push_back(encode(d));
      return;
    case Stmt::Kind::Guess:
      ++top.idx;
      for (int val : domains_[st.var]) {
        d.rest[st.var] = static_cast<std::uint32_t>(val);
        out.push_back(encode(d));
      }
      return;
    case Stmt::Kind::Set:
      set_var(d, st.var, eval(x, st.e), st.line);
      ++top.idx;
      out.push_back(encode(d));
      return;
    case Stmt::Kind::If:
      if (holds(x, st.cond)) push(d, st.body);
      else if (!st.else_body.empty()) push(d, st.else_body);
      else ++top.idx;
      out.push_back(encode(d));
      return;
    case Stmt::Kind::While:
      if (holds(x, st.cond)) push(d, st.body);
      else ++top.idx;
      out.push_back(encode(d));
      return;
    case Stmt::Kind::Repeat:
      push(d, st.body);
      out.push_back(encode(d));
      return;
    case Stmt::Kind::For: {
      const int lo = eval(x, st.e);
      if (lo > eval(x, st.hi)) {
        ++top.idx;
      } else {
        set_var(d, st.var, lo, st.line);
        push(d, st.body);
      }
      out.push_back(encode(d));
      return;
    }
    case Stmt::Kind::Fail: return;
    case Stmt::Kind::Accept: {
      d.frames.clear();
      State acc = encode(d);
      acc[0] = kAccepted;
      out.push_back(std::move(acc));
      return;
    }
  }
}

Run interpret(const Program& prog, const LabelledGraph& g, const Limits& limits) {
  Interpreter in(prog, g);
  auto r = search(in, limits);
  Run run;
  run.verdict = r.verdict;
  run.explored = r.explored;
  if (r.verdict == Verdict::Accept) {
    if (in.has_curr()) run.visit_order = first_visits(in, r.witness);
    for (std::size_t p = 0; p < prog.pebbles.size(); ++p) {
      run.final_pebbles.push_back(in.pebble_node(r.witness.back(), static_cast<int>(p)));
    }
  }
  return run;
}

}  // namespace jaglab::lang
