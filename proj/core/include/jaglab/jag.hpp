#ifndef JAGLAB_JAG_HPP
#define JAGLAB_JAG_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jaglab/graph.hpp"

namespace jaglab {

using StateId = std::uint32_t;
using PebbleId = std::uint32_t;  // 0-based internally, 1-based in text formats

inline constexpr std::size_t kMaxPebbles = 16;

/// MoveAlong(label) or JumpTo(pebble). JumpTo(self) is the no-op.
struct Move {
  enum class Kind : std::uint8_t { Along, Jump };
  Kind kind = Kind::Jump;
  std::uint32_t arg = 0;  // label (1-based) or pebble (0-based)

  static Move along(EdgeLabel l) { return {Kind::Along, l}; }
  static Move jump(PebbleId p) { return {Kind::Jump, p}; }
  bool operator==(const Move&) const = default;
};

/// Canonical incidence partition: rep[i] = least pebble index sharing
/// pebble i's node.
using Partition = std::vector<std::uint8_t>;

Partition partition_of(std::span<const NodeId> nodes);
/// All canonical partitions of `p` pebbles (restricted growth order).
std::vector<Partition> all_partitions(std::size_t p);

struct Transition {
  StateId next = 0;
  std::vector<Move> moves;  // one per pebble

  bool operator==(const Transition&) const = default;
};

/// Nondeterministic jumping automaton on degree-d graphs. The transition
/// relation is either an explicit table or a function evaluated on demand
/// and memoized; both look the same to callers.
class NdJag {
 public:
  using DeltaFn = std::function<std::vector<Transition>(StateId, const Partition&)>;

  NdJag(std::size_t num_states, std::size_t num_pebbles, std::size_t degree, StateId start,
        StateId accept);

  static NdJag lazy(std::size_t num_states, std::size_t num_pebbles, std::size_t degree,
                    StateId start, StateId accept, DeltaFn fn);

  std::size_t num_states() const noexcept { return num_states_; }
  std::size_t num_pebbles() const noexcept { return num_pebbles_; }
  std::size_t degree() const noexcept { return degree_; }
  StateId start_state() const noexcept { return start_; }
  StateId accept_state() const noexcept { return accept_; }

  PebbleId s_pebble() const noexcept { return s_; }
  PebbleId t_pebble() const noexcept { return t_; }
  std::optional<PebbleId> curr_pebble() const noexcept { return curr_; }
  void designate(PebbleId s, PebbleId t, std::optional<PebbleId> curr);

  const std::vector<std::string>& pebble_names() const noexcept { return names_; }
  void set_pebble_names(std::vector<std::string> names);

  /// Adds (q, pi) -> t to an explicit table. Validates bounds.
  void add_transition(StateId q, const Partition& pi, Transition t);

  /// Transitions for (q, pi); empty when none. Thread-safe.
  const std::vector<Transition>& delta(StateId q, const Partition& pi) const;

  /// Number of (state, partition) rows evaluated or stored so far.
  std::size_t rows_cached() const;

 private:
  struct Cache;
  void check_transition(const Transition& t) const;

  std::size_t num_states_, num_pebbles_, degree_;
  StateId start_, accept_;
  PebbleId s_ = 0, t_ = 0;
  std::optional<PebbleId> curr_;
  std::vector<std::string> names_;
  DeltaFn fn_;
  std::shared_ptr<Cache> cache_;
};

struct Configuration {
  StateId state = 0;
  std::vector<NodeId> node;  // pebble -> node

  bool operator==(const Configuration&) const = default;
};

/// State q0; t on targetnode, every other pebble on startnode.
Configuration initial_config(const NdJag& jag, const LabelledGraph& g);

/// All successors of `c`, moves applied simultaneously against old positions.
std::vector<Configuration> step(const NdJag& jag, const LabelledGraph& g, const Configuration& c);

/// Applies a move vector to `node`, reading only old positions.
std::vector<NodeId> apply_moves(const LabelledGraph& g, std::span<const NodeId> node,
                                std::span<const Move> moves);

/// The configuration graph of a JAG on a graph, with configurations packed
/// into one integer (state major, then pebble nodes in mixed radix).
class JagSystem {
 public:
  using State = std::uint64_t;
  struct Hash {
    std::size_t operator()(State x) const noexcept {
      x += 0x9e3779b97f4a7c15ULL;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      return static_cast<std::size_t>(x ^ (x >> 31));
    }
  };

  /// Throws InputError when the packed encoding would overflow or the
  /// graph degree differs from the automaton's.
  JagSystem(const NdJag& jag, const LabelledGraph& g);

  State initial() const;
  void successors(State x, std::vector<State>& out) const;
  bool accepting(State x) const { return state_of(x) == jag_->accept_state(); }
  bool has_curr() const noexcept { return jag_->curr_pebble().has_value(); }
  NodeId curr(State x) const { return node_of(x, *jag_->curr_pebble()); }

  StateId state_of(State x) const noexcept { return static_cast<StateId>(x / stride_); }
  NodeId node_of(State x, PebbleId p) const noexcept {
    return static_cast<NodeId>((x % stride_) / pow_[p] % n_);
  }
  Configuration decode(State x) const;
  State encode(const Configuration& c) const;

  const NdJag& jag() const noexcept { return *jag_; }
  const LabelledGraph& graph() const noexcept { return *g_; }

 private:
  const NdJag* jag_;
  const LabelledGraph* g_;
  std::uint64_t n_;
  std::uint64_t stride_;             // n^p
  std::vector<std::uint64_t> pow_;   // n^i
};

// Automaton interchange text:
//   states <N>
//   start <q0>
//   accept <qa>
//   pebbles <P>
//   degree <D>
//   designate s=<i> t=<i> curr=<i|0>      (1-based pebbles; 0 = no curr)
//   names <id>...                          (optional)
//   <q> <r1,...,rP> -> <q'> <m<label>|j<pebble>>...
// Partition entries are 1-based representatives.

NdJag parse_jag(std::string_view text);
NdJag read_jag(std::istream& in);
/// Writes every (state, partition) row with at least one transition. Lazy
/// automata are evaluated on all partitions; refuses above `max_rows`.
std::string serialize_jag(const NdJag& jag, std::size_t max_rows = 2'000'000);

}  // namespace jaglab

#endif  // JAGLAB_JAG_HPP
