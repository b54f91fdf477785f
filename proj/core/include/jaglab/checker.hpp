#ifndef JAGLAB_CHECKER_HPP
#define JAGLAB_CHECKER_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jaglab/error.hpp"
#include "jaglab/graph.hpp"

namespace jaglab {

struct Limits {
  std::uint64_t max_configs = 10'000'000;
  /// 0 = unbounded depth.
  std::uint64_t max_run_len = 0;
  unsigned workers = 1;
};

enum class Verdict { Accept, Reject, ResourceLimit };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Accept: return "accept";
    case Verdict::Reject: return "reject";
    case Verdict::ResourceLimit: return "resource-limit";
  }
  return "?";
}

/// A transition system the checker can search. Requirements:
///   typename S::State, typename S::Hash
///   State initial() const
///   void successors(const State&, std::vector<State>& out) const
///   bool accepting(const State&) const
///   bool has_curr() const; NodeId curr(const State&) const
template <typename S>
struct SearchResult {
  Verdict verdict = Verdict::Reject;
  std::uint64_t explored = 0;
  /// Initial state through the first accepting state (empty unless Accept).
  std::vector<typename S::State> witness;
};

/// Level-synchronous breadth-first search for an accepting state, skipping
/// states for which `avoid` holds. Successor generation for a level is split
/// across `limits.workers` threads; merging is sequential and in frontier
/// order, so the result does not depend on the worker count.
template <typename S, typename Avoid>
SearchResult<S> search(const S& sys, const Limits& limits, Avoid avoid) {
  using State = typename S::State;
  SearchResult<S> res;
  std::vector<State> states;
  std::vector<std::uint64_t> parent;
  std::unordered_map<State, std::uint64_t, typename S::Hash> index;

  auto finish_accept = [&](std::uint64_t i) {
    res.verdict = Verdict::Accept;
    std::vector<State> path;
    for (std::uint64_t k = i;; k = parent[k]) {
      path.push_back(states[k]);
      if (parent[k] == k) break;
    }
    std::reverse(path.begin(), path.end());
    res.witness = std::move(path);
    res.explored = states.size();
    return res;
  };

  const State init = sys.initial();
  if (avoid(init)) {
    res.explored = 0;
    return res;
  }
  states.push_back(init);
  parent.push_back(0);
  index.emplace(init, 0);
  if (sys.accepting(init)) return finish_accept(0);

  std::uint64_t level_begin = 0, level_end = 1, depth = 0;
  const unsigned workers = std::max(1u, limits.workers);
  std::vector<std::vector<State>> succ;
  bool truncated = false;
  while (level_begin < level_end) {
    if (limits.max_run_len && depth >= limits.max_run_len) {
      truncated = true;
      break;
    }
    const std::uint64_t width = level_end - level_begin;
    succ.assign(width, {});
    auto expand = [&](std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t k = lo; k < hi; ++k) {
        if (sys.accepting(states[level_begin + k])) continue;  // runs stop at acceptance
        sys.successors(states[level_begin + k], succ[k]);
      }
    };
    if (workers == 1 || width < 256) {
      expand(0, width);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(workers);
      const std::uint64_t chunk = (width + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = w * chunk, hi = std::min(width, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, w, lo, hi] {
          try {
            expand(lo, hi);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (std::uint64_t k = 0; k < width; ++k) {
      for (const State& y : succ[k]) {
        if (avoid(y)) continue;
        if (!index.emplace(y, states.size()).second) continue;
        states.push_back(y);
        parent.push_back(level_begin + k);
        if (sys.accepting(y)) return finish_accept(states.size() - 1);
        if (states.size() > limits.max_configs) {
          res.verdict = Verdict::ResourceLimit;
          res.explored = states.size();
          return res;
        }
      }
    }
    level_begin = level_end;
    level_end = states.size();
    ++depth;
  }
  res.verdict = truncated ? Verdict::ResourceLimit : Verdict::Reject;
  res.explored = states.size();
  return res;
}

template <typename S>
SearchResult<S> search(const S& sys, const Limits& limits) {
  return search(sys, limits, [](const typename S::State&) { return false; });
}

/// Distinct curr nodes in first-placement order along a run.
template <typename S>
std::vector<NodeId> first_visits(const S& sys, const std::vector<typename S::State>& run) {
  std::vector<NodeId> order;
  std::vector<NodeId> seen;
  for (const auto& x : run) {
    const NodeId c = sys.curr(x);
    if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
      seen.push_back(c);
      order.push_back(c);
    }
  }
  return order;
}

struct TraversalCheck {
  Verdict verdict = Verdict::Reject;  // of the plain acceptance search
  bool traversable = false;
  bool limit_hit = false;
  std::vector<NodeId> visit_order;    // first visits of the witness run
  std::optional<NodeId> missed;       // a node some accepting run avoids
  std::uint64_t explored = 0;
};

/// Acceptance plus, for every node reachable from startnode, a search for an
/// accepting run that never places curr there.
template <typename S>
TraversalCheck check_traversable(const S& sys, const LabelledGraph& g, const Limits& limits) {
  if (!sys.has_curr()) throw InputError("traversability needs a designated curr pebble");
  TraversalCheck out;
  auto base = search(sys, limits);
  out.verdict = base.verdict;
  out.explored = base.explored;
  if (base.verdict != Verdict::Accept) {
    out.limit_hit = base.verdict == Verdict::ResourceLimit;
    return out;
  }
  out.visit_order = first_visits(sys, base.witness);
  const NodeId c0 = sys.curr(sys.initial());
  std::vector<NodeId> nodes;
  for (NodeId v : reachable_set(g, g.startnode())) {
    if (v != c0) nodes.push_back(v);
  }
  std::vector<Verdict> results(nodes.size(), Verdict::Reject);
  std::vector<std::uint64_t> counts(nodes.size(), 0);
  auto probe = [&](std::size_t k, unsigned workers) {
    Limits l = limits;
    l.workers = workers;
    const NodeId v = nodes[k];
    auto r = search(sys, l, [&](const typename S::State& x) { return sys.curr(x) == v; });
    results[k] = r.verdict;
    counts[k] = r.explored;
  };
  const unsigned workers = std::max(1u, limits.workers);
  if (workers == 1 || nodes.size() < 2) {
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      probe(k, 1);
      if (results[k] != Verdict::Reject) break;
    }
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k = w; k < nodes.size(); k += workers) probe(k, 1);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  out.traversable = true;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    out.explored += counts[k];
    if (results[k] == Verdict::ResourceLimit) {
      out.limit_hit = true;
      out.traversable = false;
      break;
    }
    if (results[k] == Verdict::Accept) {
      out.traversable = false;
      out.missed = nodes[k];
      break;
    }
  }
  return out;
}

/// Product of a system with a position in the expected first-visit order.
/// Index `dev` marks a run that already deviated.
template <typename S>
class OrderProduct {
 public:
  using Inner = typename S::State;
  using State = std::pair<Inner, std::uint32_t>;
  struct Hash {
    std::size_t operator()(const State& x) const noexcept {
      return typename S::Hash{}(x.first) * 31 + x.second;
    }
  };

  OrderProduct(const S& sys, const std::vector<NodeId>& order, std::size_t num_nodes)
      : sys_(&sys), order_(order), pos_(num_nodes, UINT32_MAX),
        dev_(static_cast<std::uint32_t>(order.size()) + 1) {
    for (std::size_t i = 0; i < order.size(); ++i) pos_[order[i]] = static_cast<std::uint32_t>(i);
  }

  State initial() const {
    const Inner x = sys_->initial();
    return {x, advance(0, sys_->curr(x))};
  }
  void successors(const State& x, std::vector<State>& out) const {
    std::vector<Inner> buf;
    sys_->successors(x.first, buf);
    for (const auto& y : buf) out.push_back({y, x.second == dev_ ? dev_ : advance(x.second, sys_->curr(y))});
  }
  /// Accepting in the product = an accepting run that deviates from the order.
  bool accepting(const State& x) const {
    return sys_->accepting(x.first) && (x.second == dev_ || x.second < order_.size());
  }
  bool has_curr() const { return true; }
  NodeId curr(const State& x) const { return sys_->curr(x.first); }

 private:
  std::uint32_t advance(std::uint32_t i, NodeId c) const {
    const std::uint32_t p = pos_[c];
    if (p < i) return i;
    if (p == i && i < order_.size()) return i + 1;
    return dev_;
  }

  const S* sys_;
  std::vector<NodeId> order_;
  std::vector<std::uint32_t> pos_;
  std::uint32_t dev_;
};

struct OrderCheck {
  bool orderable = false;
  bool limit_hit = false;
  std::vector<NodeId> order;
  std::uint64_t explored = 0;
};

/// True iff no accepting run's first-visit sequence differs from `order`.
template <typename S>
OrderCheck check_orderable(const S& sys, const LabelledGraph& g, const std::vector<NodeId>& order,
                           const Limits& limits) {
  OrderCheck out;
  out.order = order;
  OrderProduct<S> prod(sys, order, g.num_nodes());
  auto r = search(prod, limits);
  out.explored = r.explored;
  out.limit_hit = r.verdict == Verdict::ResourceLimit;
  out.orderable = r.verdict == Verdict::Reject;
  return out;
}

/// System wrapper tracking whether curr has touched `target`.
template <typename S>
class TargetFlag {
 public:
  using State = std::pair<typename S::State, std::uint8_t>;
  struct Hash {
    std::size_t operator()(const State& x) const noexcept {
      return typename S::Hash{}(x.first) * 3 + x.second;
    }
  };

  TargetFlag(const S& sys, NodeId target, bool want) : sys_(&sys), target_(target), want_(want) {}

  State initial() const {
    const auto x = sys_->initial();
    return {x, static_cast<std::uint8_t>(sys_->curr(x) == target_)};
  }
  void successors(const State& x, std::vector<State>& out) const {
    std::vector<typename S::State> buf;
    sys_->successors(x.first, buf);
    for (const auto& y : buf) {
      out.push_back({y, static_cast<std::uint8_t>(x.second || sys_->curr(y) == target_)});
    }
  }
  bool accepting(const State& x) const { return sys_->accepting(x.first) && (x.second != 0) == want_; }
  bool has_curr() const { return true; }
  NodeId curr(const State& x) const { return sys_->curr(x.first); }

 private:
  const S* sys_;
  NodeId target_;
  bool want_;
};

enum class Connectivity { Connected, Disconnected };

struct CoStResult {
  Verdict verdict = Verdict::Reject;  // ResourceLimit when undecided
  std::optional<Connectivity> answer;
  std::uint64_t explored = 0;
};

/// Connected iff some accepting run places curr on the target node. Throws
/// InputError when both kinds of accepting run exist (the automaton is not
/// a traversal of this graph) or when it never accepts.
template <typename S>
CoStResult decide_co_st_connectivity(const S& sys, const LabelledGraph& g, const Limits& limits) {
  if (!sys.has_curr()) throw InputError("co-st-connectivity needs a designated curr pebble");
  CoStResult out;
  auto hit = search(TargetFlag<S>(sys, g.targetnode(), true), limits);
  auto miss = search(TargetFlag<S>(sys, g.targetnode(), false), limits);
  out.explored = hit.explored + miss.explored;
  if (hit.verdict == Verdict::ResourceLimit || miss.verdict == Verdict::ResourceLimit) {
    out.verdict = Verdict::ResourceLimit;
    return out;
  }
  const bool h = hit.verdict == Verdict::Accept, m = miss.verdict == Verdict::Accept;
  if (h && m) {
    throw InputError("traversability violated: accepting runs both reach and miss the target");
  }
  if (!h && !m) throw InputError("the traversal automaton does not accept this graph");
  out.verdict = Verdict::Accept;
  out.answer = h ? Connectivity::Connected : Connectivity::Disconnected;
  return out;
}

/// Exhaustive run oracle, independent of `search`: builds the explicit
/// reachable configuration graph by depth-first traversal, computes each
/// configuration's distance to acceptance backwards, and lists accepting
/// runs (stopping at the first accepting configuration) of length at most
/// `max_len`, up to `max_runs` of them.
template <typename S>
struct RunEnumeration {
  Verdict verdict = Verdict::Reject;  // Accept iff some accepting run of length <= max_len
  std::vector<std::vector<typename S::State>> runs;
  bool truncated = false;             // more runs exist than were listed
  std::uint64_t configs = 0;
};

template <typename S>
RunEnumeration<S> enumerate_runs(const S& sys, std::uint64_t max_len, std::uint64_t max_runs,
                                 std::uint64_t max_configs) {
  using State = typename S::State;
  RunEnumeration<S> out;
  std::vector<State> states;
  std::vector<std::vector<std::uint32_t>> adj;
  std::unordered_map<State, std::uint32_t, typename S::Hash> id;
  auto intern = [&](const State& x) -> std::pair<std::uint32_t, bool> {
    auto [it, fresh] = id.emplace(x, static_cast<std::uint32_t>(states.size()));
    if (fresh) {
      states.push_back(x);
      adj.emplace_back();
    }
    return {it->second, fresh};
  };
  std::vector<std::uint32_t> stack{intern(sys.initial()).first};
  std::vector<State> buf;
  while (!stack.empty()) {
    const std::uint32_t u = stack.back();
    stack.pop_back();
    if (sys.accepting(states[u])) continue;
    buf.clear();
    sys.successors(states[u], buf);
    for (const auto& y : buf) {
      auto [v, fresh] = intern(y);
      adj[u].push_back(v);
      if (fresh) stack.push_back(v);
    }
    if (states.size() > max_configs) {
      out.verdict = Verdict::ResourceLimit;
      out.configs = states.size();
      return out;
    }
  }
  out.configs = states.size();
  const std::size_t n = states.size();
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  std::vector<std::vector<std::uint32_t>> radj(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (auto v : adj[u]) radj[v].push_back(u);
  }
  constexpr std::uint64_t kInf = UINT64_MAX;
  std::vector<std::uint64_t> dist(n, kInf);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t u = 0; u < n; ++u) {
    if (sys.accepting(states[u])) {
      dist[u] = 0;
      queue.push_back(u);
    }
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const auto v = queue[k];
    for (auto u : radj[v]) {
      if (dist[u] == kInf && !sys.accepting(states[u])) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  if (dist[0] > max_len) return out;
  out.verdict = Verdict::Accept;
  std::vector<std::uint32_t> path{0};
  std::function<bool(std::uint32_t, std::uint64_t)> dfs = [&](std::uint32_t u, std::uint64_t left) {
    if (sys.accepting(states[u])) {
      if (out.runs.size() == max_runs) {
        out.truncated = true;
        return false;
      }
      std::vector<State> run;
      for (auto k : path) run.push_back(states[k]);
      out.runs.push_back(std::move(run));
      return true;
    }
    if (left == 0) return true;
    for (auto v : adj[u]) {
      if (dist[v] == kInf || dist[v] > left - 1) continue;
      path.push_back(v);
      const bool go_on = dfs(v, left - 1);
      path.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  dfs(0, max_len);
  return out;
}

}  // namespace jaglab

#endif  // JAGLAB_CHECKER_HPP
