#ifndef JAGLAB_TESTS_RANDOM_INSTANCES_HPP
#define JAGLAB_TESTS_RANDOM_INSTANCES_HPP

#include <random>

#include "jaglab/graph.hpp"
#include "jaglab/jag.hpp"

namespace jaglab::testing {

inline LabelledGraph random_graph(std::mt19937& rng, std::size_t n, std::size_t d) {
  std::uniform_int_distribution<NodeId> node(0, static_cast<NodeId>(n - 1));
  std::vector<NodeId> rho(n * d);
  for (auto& v : rho) v = node(rng);
  return LabelledGraph(n, d, std::move(rho), 0, node(rng));
}

/// Explicit-table automaton with every state but the accept state given
/// zero to two transitions per incidence partition.
inline NdJag random_jag(std::mt19937& rng, std::size_t states, std::size_t pebbles, std::size_t degree) {
  NdJag jag(states, pebbles, degree, 0, static_cast<StateId>(states - 1));
  jag.designate(0, static_cast<PebbleId>(pebbles - 1), rng() % 2 ? std::optional<PebbleId>(0) : std::nullopt);
  std::uniform_int_distribution<StateId> state(0, static_cast<StateId>(states - 1));
  for (StateId q = 0; q + 1 < states; ++q) {
    for (const auto& pi : all_partitions(pebbles)) {
      const int count = static_cast<int>(rng() % 3);
      for (int k = 0; k < count; ++k) {
        Transition t;
        t.next = state(rng);
        for (std::size_t p = 0; p < pebbles; ++p) {
          if (rng() % 2) {
            t.moves.push_back(Move::along(static_cast<EdgeLabel>(1 + rng() % degree)));
          } else {
            t.moves.push_back(Move::jump(static_cast<PebbleId>(rng() % pebbles)));
          }
        }
        jag.add_transition(q, pi, t);
      }
    }
  }
  return jag;
}

}  // namespace jaglab::testing

#endif  // JAGLAB_TESTS_RANDOM_INSTANCES_HPP
