#ifndef JAGLAB_ALGORITHMS_HPP
#define JAGLAB_ALGORITHMS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jaglab/family.hpp"
#include "jaglab/graph.hpp"
#include "jaglab/groups.hpp"
#include "jaglab/lang.hpp"

namespace jaglab::algo {

// ---------------------------------------------------------------------------
// Pebble programs (source text; parse with lang::parse_program)

/// Statements that walk pebble `p` from s along `path`. Used as a prologue
/// to place input pebbles.
std::string placement(const std::string& p, const Path& path);

/// Shortest label path from startnode to `v` (breadth first, lowest label
/// first). Throws InputError when `v` is unreachable.
Path path_to(const LabelledGraph& g, NodeId v);

/// r := p.q with inputs p and q placed by `prologue`.
std::string mult_program(const std::string& prologue);
/// Guesses q and accepts iff q.p = s, so q ends on the inverse of p.
std::string inverse_program(const std::string& prologue);

/// Grid traversal in the successor order of exponent tuples.
std::string grid_traversal_program();

/// Picks the generator of maximal order (lowest label on ties), leaves
/// pebble g on it, then counts e^k - 1 steps with k digit pebbles.
std::string count_to_max_order_program(int digits);

/// `jump curr to t; accept`.
std::string jump_to_target_program();
/// Chooses between a tour along label 1 and a tour along label 2.
std::string two_tour_program();

/// A canonical-form presentation: node for tuple (t_1..t_B) is the end of
/// the path block_1^t_1 : ... : block_B^t_B. Digit j is bounded by the
/// least e with block_j^e in the set of products of blocks
/// [span_from, j) (empty span: e is the order of block_j).
struct Block {
  Path word;
  std::size_t span_from = 0;  // 0-based block index
};
using BlockPresentation = std::vector<Block>;

/// Presentation for grid, abelian, sym, direct and wreath families.
/// Throws InputError for GL and two-copy families nested below the top.
BlockPresentation block_presentation(const FamilySpec& spec);

/// Generic traversal program for a block presentation over `degree` labels.
std::string block_traversal_program(const BlockPresentation& blocks);

/// The grid program for grid families (and two copies of one), otherwise
/// the block program of the family's presentation.
std::string traversal_program(const FamilySpec& spec);

/// Oracle: digit bounds of a presentation, evaluated on the graph.
std::vector<std::uint64_t> block_bounds(const LabelledGraph& g, const BlockPresentation& blocks);
/// Oracle: nodes in successor order of canonical tuples.
std::vector<NodeId> block_order(const LabelledGraph& g, const BlockPresentation& blocks);

// ---------------------------------------------------------------------------
// Orders and oracles

/// All tuples with 0 <= t_i < bounds[i], lexicographic (last position
/// fastest): the successor rule "increment the last position that is not
/// at its maximum and zero everything after it".
std::vector<std::vector<std::uint64_t>> successor_tuples(const std::vector<std::uint64_t>& bounds);
/// Successor of `t`, or nullopt at the maximal tuple.
std::optional<std::vector<std::uint64_t>> successor(std::vector<std::uint64_t> t,
                                                    const std::vector<std::uint64_t>& bounds);

/// Index of the generator with maximal order (lowest index on ties) and the order.
std::pair<std::size_t, std::uint64_t> max_order_generator(const groups::GeneratedGroup& gg);

/// e_i: order of g_i modulo <g_1..g_{i-1}>.
std::vector<std::uint64_t> abelian_e_values(const groups::GeneratedGroup& gg);
/// The unique (t_1..t_d), t_i < e_i, with prod g_i^t_i = x (brute force).
std::vector<std::uint64_t> abelian_canonical_tuple(const groups::GeneratedGroup& gg,
                                                   const groups::Element& x);
/// Every tuple below the e-bounds whose product is x (for uniqueness tests).
std::vector<std::vector<std::uint64_t>> abelian_tuples_reaching(const groups::GeneratedGroup& gg,
                                                                const groups::Element& x);
/// Path g_1^t_1 : ... : g_d^t_d.
Path tuple_path(const std::vector<std::uint64_t>& t);

struct AbelianOrdering {
  std::vector<std::uint64_t> e;
  std::vector<groups::Element> gmax;   // gmax_0 .. gmax_d
  std::vector<std::uint64_t> nmax;     // nmax_0 .. nmax_d
  std::vector<NodeId> order;           // visit order on the Cayley graph
};

/// Inductive procedure over i: e_{i+1} from x_t = g_{i+1}^t membership in
/// the enumerated subgroup, gmax_{i+1} = x_{e-1} . gmax_i, nmax_{i+1} =
/// nmax_i + e - 1, and the enumeration of <g_1..g_{i+1}> extended in
/// successor order.
AbelianOrdering abelian_ordering_run(const groups::GeneratedGroup& gg, const groups::CayleyGraph& cg);

/// Tuples (t_1..t_i), each below the group order, summing to nmax_i and
/// reaching gmax_i.
std::vector<std::vector<std::uint64_t>> nmax_paths(const groups::GeneratedGroup& gg,
                                                   const AbelianOrdering& run, std::size_t i);

/// Symmetric canonical exponents (i_n..i_2), 0 <= i_j < j, in successor order.
std::vector<std::vector<std::uint64_t>> symmetric_tuples(int n);
/// p_n^i_n : ... : p_2^i_2 as a label path.
Path symmetric_path(int n, const std::vector<std::uint64_t>& exps);
/// Visit order of S(n) nodes, evaluated by group multiplication.
std::vector<NodeId> symmetric_ordering_run(int n, const groups::CayleyGraph& cg);

/// Direct-product order: for each g in `g_order`, the coset gH in `h_order`.
/// Node ids follow the G-major enumeration of DirectProduct.
std::vector<NodeId> product_ordering(const std::vector<NodeId>& g_order, const std::vector<NodeId>& h_order,
                                     std::size_t h_size);
/// Replacement-product order: at each G node (in `g_order`) every H-copy
/// node in `h_order`. Throws InputError unless h_size equals G's degree.
std::vector<NodeId> replacement_product_ordering(const std::vector<NodeId>& g_order,
                                                 const std::vector<NodeId>& h_order, std::size_t h_size,
                                                 std::size_t g_degree);

// ---------------------------------------------------------------------------
// Wreath arithmetic. `w` is the Cayley graph of a WreathProduct family; G
// generators are labels 1..|gens_G|, H generators follow.

struct WreathContext {
  const groups::WreathProduct* group = nullptr;
  const groups::CayleyGraph* cayley = nullptr;
  std::size_t g_gens = 0;
  std::size_t h_gens = 0;
  std::shared_ptr<const groups::CayleyGraph> g_cayley;  // CG(G); node = base index
  std::shared_ptr<const groups::CayleyGraph> h_cayley;  // CG(H); node = top index

  /// `inst` must outlive the context.

  static WreathContext of(const FamilyInstance& inst);
  groups::WreathElement element(NodeId v) const;
  NodeId node(const groups::WreathElement& x) const;
};

bool wreath_is_number(const WreathContext& w, NodeId x);
/// Support size of a number representation. Throws InputError otherwise.
std::size_t wreath_value(const WreathContext& w, NodeId x);
/// f(h) = 1_G for the number representation x; `h` indexes H's enumeration.
bool wreath_testf(const WreathContext& w, NodeId x, std::uint32_t h);

/// Program accepting iff the pebble x (placed by `prologue`) is a number.
std::string is_number_program(const WreathContext& w, const std::string& prologue);
/// Program accepting iff f(h) = 1_G for pebbles x and h placed by `prologue`
/// (h must sit on an embedded H element).
std::string testf_program(const WreathContext& w, const std::string& prologue);

/// Path of shape h_1 g_1 h_1^-1 ... h_n g_n h_n^-1 reaching x, built by
/// depth-first search that rejects repeated points through wreath_testf.
Path wreath_canonical_path(const WreathContext& w, NodeId x);
/// Maximal runs of G labels in a path.
std::size_t g_segments(const WreathContext& w, const Path& p);
bool wreath_same(const WreathContext& w, NodeId x, NodeId y);
/// value(y) = value(x) + 1.
bool wreath_successor(const WreathContext& w, NodeId x, NodeId y);

struct Instruction {
  enum class Op { Inc, Dec, Jz, Halt };
  Op op = Op::Halt;
  std::size_t reg = 0;
  std::size_t target = 0;  // Jz
};

struct RegisterMachine {
  std::size_t registers = 1;
  std::vector<Instruction> code;
  std::size_t output = 0;
};

/// out := 2 * in, registers {in = 0, out = 1, zero = 2}.
RegisterMachine doubling_machine();
/// out := 2^in by repeated doubling, registers {in, out, tmp, zero}.
RegisterMachine power_of_two_machine();

struct RegisterRun {
  std::uint64_t output = 0;
  std::uint64_t steps = 0;
  std::uint64_t max_value = 0;
  std::vector<NodeId> final_registers;
};

/// Runs `rm` with registers held as number representations. Inc picks the
/// first node that is a successor, Dec the first predecessor, Jz compares
/// with the zero representation. Throws InputError on overflow past |H|,
/// decrement of zero, a step budget overrun, or a register that ended above
/// the final output at some point.
RegisterRun run_register_machine(const RegisterMachine& rm, const WreathContext& w,
                                 const std::vector<std::uint64_t>& inputs,
                                 std::uint64_t max_steps = 1'000'000);

}  // namespace jaglab::algo

#endif  // JAGLAB_ALGORITHMS_HPP
