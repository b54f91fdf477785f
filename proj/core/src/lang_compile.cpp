#include <algorithm>
#include <memory>
#include <unordered_set>

#include "jaglab/error.hpp"
#include "jaglab/lang.hpp"

namespace jaglab::lang {

namespace {

struct Instr {
  enum class Op { Move, Jump, Guess, Set, Branch, Goto, ForInit, ForNext, Fail, Accept };
  Op op = Op::Fail;
  int a = -1, b = -1, var = -1;
  Expr e, hi;
  Cond cond;
  bool when = true;
  std::uint32_t target = 0;
  std::size_t line = 0;
};

class Lowering {
 public:
  std::vector<Instr> code;

  void block(const std::vector<Stmt>& b) {
    for (const auto& st : b) stmt(st);
  }

 private:
  std::uint32_t here() const { return static_cast<std::uint32_t>(code.size()); }
  std::size_t emit(Instr i) {
    code.push_back(std::move(i));
    return code.size() - 1;
  }

  void stmt(const Stmt& st) {
    Instr i;
    i.line = st.line;
    switch (st.kind) {
      case Stmt::Kind::Move:
        i.op = Instr::Op::Move;
        i.a = st.a;
        i.e = st.e;
        emit(i);
        return;
      case Stmt::Kind::Jump:
        i.op = Instr::Op::Jump;
        i.a = st.a;
        i.b = st.b;
        emit(i);
        return;
      case Stmt::Kind::Guess:
        i.op = Instr::Op::Guess;
        i.var = st.var;
        emit(i);
        return;
      case Stmt::Kind::Set:
        i.op = Instr::Op::Set;
        i.var = st.var;
        i.e = st.e;
        emit(i);
        return;
      case Stmt::Kind::Fail: i.op = Instr::Op::Fail; emit(i); return;
      case Stmt::Kind::Accept: i.op = Instr::Op::Accept; emit(i); return;
      case Stmt::Kind::If: {
        i.op = Instr::Op::Branch;
        i.cond = st.cond;
        i.when = false;
        const auto br = emit(i);
        block(st.body);
        if (st.else_body.empty()) {
          code[br].target = here();
          return;
        }
        Instr jmp;
        jmp.op = Instr::Op::Goto;
        const auto j = emit(jmp);
        code[br].target = here();
        block(st.else_body);
        code[j].target = here();
        return;
      }
      case Stmt::Kind::While: {
        const auto top = here();
        i.op = Instr::Op::Branch;
        i.cond = st.cond;
        i.when = false;
        const auto br = emit(i);
        block(st.body);
        Instr jmp;
        jmp.op = Instr::Op::Goto;
        jmp.target = top;
        emit(jmp);
        code[br].target = here();
        return;
      }
      case Stmt::Kind::Repeat: {
        const auto top = here();
        block(st.body);
        i.op = Instr::Op::Branch;
        i.cond = st.cond;
        i.when = true;
        i.target = top;
        emit(i);
        return;
      }
      case Stmt::Kind::For: {
        i.op = Instr::Op::ForInit;
        i.var = st.var;
        i.e = st.e;
        i.hi = st.hi;
        const auto init = emit(i);
        const auto body = here();
        block(st.body);
        Instr nx = i;
        nx.op = Instr::Op::ForNext;
        nx.target = body;
        emit(nx);
        code[init].target = here();
        return;
      }
    }
  }
};

struct Compiled {
  std::vector<Instr> code;
  std::vector<std::vector<int>> domains;
  std::vector<std::uint64_t> radix;  // place value of each variable
  std::uint64_t valuations = 1;
  std::size_t pebbles = 0;
  std::size_t degree = 0;
  std::vector<std::string> names;

  int value(std::uint64_t val, int v) const {
    return domains[v][(val / radix[v]) % domains[v].size()];
  }
  std::uint64_t with(std::uint64_t val, int v, int x, std::size_t line) const {
    const auto& dom = domains[v];
    const auto it = std::find(dom.begin(), dom.end(), x);
    if (it == dom.end()) {
      throw ProgramError("line " + std::to_string(line) + ": value " + std::to_string(x) +
                         " outside the domain of '" + names[v] + "'");
    }
    const std::uint64_t cur = (val / radix[v]) % dom.size();
    return val - cur * radix[v] + static_cast<std::uint64_t>(it - dom.begin()) * radix[v];
  }
  int eval(std::uint64_t val, const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::Const: return e.value;
      case Expr::Kind::Degree: return static_cast<int>(degree);
      case Expr::Kind::Var: return value(val, e.var);
      case Expr::Kind::VarPlus: return value(val, e.var) + e.value;
    }
    return 0;
  }
  bool holds(std::uint64_t val, const Partition& pi, const Cond& c) const {
    bool r = true;
    switch (c.kind) {
      case Cond::Kind::True: r = true; break;
      case Cond::Kind::PebblesEqual: r = pi[c.a] == pi[c.b]; break;
      case Cond::Kind::BoolVar: r = value(val, c.var) != 0; break;
      case Cond::Kind::Compare: {
        const int a = eval(val, c.lhs), b = eval(val, c.rhs);
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

  StateId state(std::uint64_t pc, std::uint64_t val) const {
    return static_cast<StateId>(pc * valuations + val);
  }
  StateId accept_state() const { return static_cast<StateId>((code.size() + 1) * valuations); }

  std::vector<Move> idle() const {
    std::vector<Move> m;
    for (std::size_t p = 0; p < pebbles; ++p) m.push_back(Move::jump(static_cast<PebbleId>(p)));
    return m;
  }

  // Runs control instructions from (pc, val) until each nondeterministic
  // branch reaches a pebble action, accept, fail or the end of the code.
  std::vector<Transition> delta(StateId q, const Partition& pi) const {
    std::vector<Transition> out;
    if (q >= accept_state()) return out;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> stack{{q / valuations, q % valuations}};
    std::unordered_set<std::uint64_t> seen;
    auto push = [&](std::uint64_t pc, std::uint64_t val) {
      if (seen.insert(pc * valuations + val).second) stack.emplace_back(pc, val);
    };
    seen.insert(q);
    auto add = [&](Transition t) {
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
    };
    while (!stack.empty()) {
      const auto [pc, val] = stack.back();
      stack.pop_back();
      if (pc >= code.size()) continue;
      const Instr& in = code[pc];
      switch (in.op) {
        case Instr::Op::Move: {
          const int l = eval(val, in.e);
          if (l < 1 || static_cast<std::size_t>(l) > degree) {
            throw ProgramError("line " + std::to_string(in.line) + ": label " + std::to_string(l) +
                               " outside 1.." + std::to_string(degree));
          }
          auto mv = idle();
          mv[in.a] = Move::along(static_cast<EdgeLabel>(l));
          add({state(pc + 1, val), std::move(mv)});
          break;
        }
        case Instr::Op::Jump: {
          auto mv = idle();
          mv[in.a] = Move::jump(static_cast<PebbleId>(in.b));
          add({state(pc + 1, val), std::move(mv)});
          break;
        }
        case Instr::Op::Accept: add({accept_state(), idle()}); break;
        case Instr::Op::Fail: break;
        case Instr::Op::Guess:
          // reverse so the stack pops domain values in ascending order
          for (auto it = domains[in.var].rbegin(); it != domains[in.var].rend(); ++it) {
            push(pc + 1, with(val, in.var, *it, in.line));
          }
          break;
        case Instr::Op::Set: push(pc + 1, with(val, in.var, eval(val, in.e), in.line)); break;
        case Instr::Op::Branch: push(holds(val, pi, in.cond) == in.when ? in.target : pc + 1, val); break;
        case Instr::Op::Goto: push(in.target, val); break;
        case Instr::Op::ForInit: {
          const int lo = eval(val, in.e);
          if (lo > eval(val, in.hi)) push(in.target, val);
          else push(pc + 1, with(val, in.var, lo, in.line));
          break;
        }
        case Instr::Op::ForNext: {
          const int v = value(val, in.var);
          if (v < eval(val, in.hi)) push(in.target, with(val, in.var, v + 1, in.line));
          else push(pc + 1, val);
          break;
        }
      }
    }
    return out;
  }
};

}  // namespace

std::size_t program_points(const Program& prog) {
  Lowering low;
  low.block(prog.body);
  return low.code.size() + 1;
}

NdJag compile(const Program& prog, std::size_t d) {
  check(prog, d);
  auto c = std::make_shared<Compiled>();
  Lowering low;
  low.block(prog.body);
  c->code = std::move(low.code);
  c->pebbles = prog.pebbles.size();
  c->degree = d;
  for (std::size_t v = 0; v < prog.vars.size(); ++v) {
    c->domains.push_back(prog.domain(static_cast<int>(v), d));
    c->names.push_back(prog.vars[v].name);
    c->radix.push_back(c->valuations);
    c->valuations *= c->domains.back().size();
    if (c->valuations > (1ULL << 24)) throw InputError("variable domains are too large to compile");
  }
  const std::uint64_t states = (c->code.size() + 1) * c->valuations + 1;
  if (states >= (1ULL << 31)) throw InputError("compiled automaton has too many states");
  // initial valuation: every variable at its first domain value
  const std::uint64_t init = 0;
  const StateId q0 = c->state(0, init);
  NdJag jag = NdJag::lazy(states, c->pebbles, d, q0, c->accept_state(),
                          [c](StateId q, const Partition& pi) { return c->delta(q, pi); });
  jag.designate(static_cast<PebbleId>(prog.s), static_cast<PebbleId>(prog.t),
                prog.curr >= 0 ? std::optional<PebbleId>(static_cast<PebbleId>(prog.curr)) : std::nullopt);
  jag.set_pebble_names(prog.pebbles);
  return jag;
}

}  // namespace jaglab::lang
