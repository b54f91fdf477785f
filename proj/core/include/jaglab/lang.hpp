#ifndef JAGLAB_LANG_HPP
#define JAGLAB_LANG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jaglab/checker.hpp"
#include "jaglab/graph.hpp"
#include "jaglab/jag.hpp"

namespace jaglab::lang {

/// Integer expression: a constant, the degree `d` (also spelled `md`), a
/// variable, or variable +/- constant.
struct Expr {
  enum class Kind { Const, Degree, Var, VarPlus };
  Kind kind = Kind::Const;
  int value = 0;  // constant, or offset for VarPlus
  int var = -1;
};

struct Cond {
  enum class Kind { PebblesEqual, BoolVar, Compare, True };
  enum class Op { Eq, Ne, Lt, Le, Gt, Ge };
  Kind kind = Kind::True;
  bool negate = false;
  int a = -1, b = -1;  // pebbles
  int var = -1;        // bool variable
  Op op = Op::Eq;
  Expr lhs, rhs;
};

struct Stmt {
  enum class Kind { Move, Jump, Guess, Set, If, While, Repeat, For, Fail, Accept };
  Kind kind = Kind::Fail;
  std::size_t line = 0;
  int a = -1, b = -1;     // pebbles (Move: a; Jump: a := b)
  int var = -1;           // Guess, Set, For
  Expr e;                 // Move label; Set value; For lower bound
  Expr hi;                // For upper bound
  Cond cond;              // If, While, Repeat (loop while cond holds)
  std::vector<Stmt> body, else_body;
};

struct Variable {
  std::string name;
  bool is_bool = false;
  /// Dir domains: explicit values, or a range whose ends may mention d.
  bool is_range = true;
  Expr lo, hi;
  std::vector<int> values;
};

struct Program {
  std::vector<std::string> pebbles;
  std::vector<bool> at_target;
  std::vector<Variable> vars;
  std::vector<Stmt> body;
  int s = -1, t = -1, curr = -1;

  int pebble_index(std::string_view name) const;
  int var_index(std::string_view name) const;
  /// Concrete domain of variable `v` at degree `d` (bools are {0, 1}).
  std::vector<int> domain(int v, std::size_t d) const;
  /// Number of statements, counting nested ones.
  std::size_t statement_count() const;
};

/// Parses the line-oriented pebble language. Statements are separated by
/// newlines or `;`. Throws InputError with the offending line.
Program parse_program(std::string_view text);

/// Static checks for degree `d`: constant labels within 1..d, non-empty
/// domains. Throws InputError.
void check(const Program& prog, std::size_t d);

/// Result of interpreting a program on a graph.
struct Run {
  Verdict verdict = Verdict::Reject;
  std::vector<NodeId> visit_order;  // first visits of curr along the witness
  std::vector<NodeId> final_pebbles;  // pebble nodes in the accepting state
  std::uint64_t explored = 0;
};

/// Angelic interpreter, one transition system state per program point,
/// variable valuation and pebble placement. Usable with the checker.
class Interpreter {
 public:
  using State = std::vector<std::uint32_t>;
  struct Hash {
    std::size_t operator()(const State& s) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (auto x : s) h = (h ^ x) * 0x100000001b3ULL;
      return h;
    }
  };

  Interpreter(const Program& prog, const LabelledGraph& g);

  State initial() const;
  void successors(const State& x, std::vector<State>& out) const;
  bool accepting(const State& x) const;
  bool has_curr() const noexcept { return prog_->curr >= 0; }
  NodeId curr(const State& x) const;
  NodeId pebble_node(const State& x, int p) const;

 private:
  struct Block {
    const std::vector<Stmt>* stmts;
  };
  int block_id(const std::vector<Stmt>* b) const;
  std::size_t pebble_offset(const State& x) const;
  int value(const State& x, int var) const;
  int eval(const State& x, const Expr& e) const;
  bool holds(const State& x, const Cond& c) const;
  EdgeLabel label(const State& x, const Expr& e, std::size_t line) const;
  void enter(State& x, const std::vector<Stmt>* b) const;
  void exec(const State& x, std::vector<State>& out) const;

  const Program* prog_;
  const LabelledGraph* g_;
  std::vector<const std::vector<Stmt>*> blocks_;
  std::vector<std::vector<int>> domains_;
};

Run interpret(const Program& prog, const LabelledGraph& g, const Limits& limits);

/// Compiles to an NdJag for degree `d`. States are (instruction,
/// valuation) pairs plus one accept state; delta is evaluated on demand.
NdJag compile(const Program& prog, std::size_t d);

/// Number of lowered instructions (program points) for `prog`.
std::size_t program_points(const Program& prog);

}  // namespace jaglab::lang

#endif  // JAGLAB_LANG_HPP
