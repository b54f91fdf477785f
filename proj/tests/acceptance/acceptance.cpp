// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "../support/random_instances.hpp"
#include "jaglab/algorithms.hpp"
#include "jaglab/checker.hpp"
#include "jaglab/family.hpp"
#include "jaglab/lang.hpp"

using namespace jaglab;

namespace {

Limits limits() {
  Limits l;
  l.workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  return l;
}

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Verified {
  Verdict verdict = Verdict::Reject;
  bool limit = false;
  bool traversable = false;
  bool orderable = false;
  std::vector<NodeId> order;
  std::vector<NodeId> final_pebbles;

  bool operator==(const Verified& o) const {
    return verdict == o.verdict && limit == o.limit && traversable == o.traversable && orderable == o.orderable &&
           order == o.order;
  }
};

template <typename S>
Verified verify_system(const S& sys, const LabelledGraph& g) {
  Verified v;
  if (!sys.has_curr()) {
    v.verdict = search(sys, limits()).verdict;
    v.limit = v.verdict == Verdict::ResourceLimit;
    return v;
  }
  const auto tc = check_traversable(sys, g, limits());
  v.verdict = tc.verdict;
  v.limit = tc.limit_hit;
  v.traversable = tc.traversable;
  v.order = tc.visit_order;
  if (tc.traversable) {
    const auto oc = check_orderable(sys, g, tc.visit_order, limits());
    v.limit = v.limit || oc.limit_hit;
    v.orderable = oc.orderable;
  }
  return v;
}

Verified verify_compiled(const lang::Program& p, const LabelledGraph& g) {
  const auto jag = lang::compile(p, g.degree());
  JagSystem sys(jag, g);
  return verify_system(sys, g);
}

Verified verify_interpreted(const lang::Program& p, const LabelledGraph& g) {
  lang::Interpreter sys(p, g);
  return verify_system(sys, g);
}

std::vector<NodeId> bfs_reachable(const LabelledGraph& g, NodeId s) {
  std::vector<char> seen(g.num_nodes(), 0);
  std::deque<NodeId> q{s};
  seen[s] = 1;
  std::vector<NodeId> out;
  while (!q.empty()) {
    const NodeId u = q.front();
    q.pop_front();
    out.push_back(u);
    for (EdgeLabel l = 1; l <= g.degree(); ++l) {
      const NodeId w = g.rho(u, l);
      if (!seen[w]) {
        seen[w] = 1;
        q.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Undirected components by breadth-first search over both edge directions.
std::vector<std::size_t> bfs_components(const LabelledGraph& g) {
  const auto n = g.num_nodes();
  std::vector<std::vector<NodeId>> adj(n);
  for (NodeId u = 0; u < n; ++u) {
    for (EdgeLabel l = 1; l <= g.degree(); ++l) {
      adj[u].push_back(g.rho(u, l));
      adj[g.rho(u, l)].push_back(u);
    }
  }
  std::vector<std::size_t> comp(n, n);
  std::size_t next = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    std::deque<NodeId> q{s};
    comp[s] = next;
    while (!q.empty()) {
      const NodeId u = q.front();
      q.pop_front();
      for (auto w : adj[u]) {
        if (comp[w] == n) {
          comp[w] = next;
          q.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<NodeId> lex_order(const LabelledGraph& g, const std::vector<std::uint64_t>& bounds) {
  std::vector<NodeId> order;
  for (const auto& t : algo::successor_tuples(bounds)) order.push_back(target(g, g.startnode(), algo::tuple_path(t)));
  return order;
}

// ---------------------------------------------------------------------------

Outcome jag_semantics() {
  std::mt19937 rng(20241);
  int pairs = 0, agree = 0, accepts = 0;
  while (pairs < 60) {
    const auto g = testing::random_graph(rng, 1 + rng() % 6, 1 + rng() % 3);
    const auto jag = testing::random_jag(rng, 2 + rng() % 4, 1 + rng() % 3, g.degree());
    JagSystem sys(jag, g);
    std::uint64_t configs = jag.num_states();
    for (std::size_t p = 0; p < jag.num_pebbles(); ++p) configs *= g.num_nodes();
    if (configs > 10000) continue;
    ++pairs;
    const auto s = search(sys, Limits{});
    const auto e = enumerate_runs(sys, 10000, 1, 10000);
    agree += s.verdict == e.verdict && s.verdict != Verdict::ResourceLimit;
    accepts += s.verdict == Verdict::Accept;
  }
  std::ostringstream d;
  d << agree << "/" << pairs << " pairs agree (" << accepts << " accepting)";
  return {agree == pairs, d.str()};
}

Outcome grid_traversal() {
  const auto prog = lang::parse_program(algo::grid_traversal_program());
  int good = 0, total = 0;
  std::ostringstream d;
  for (auto [dim, l] : {std::pair{1, 2}, {1, 5}, {2, 2}, {2, 3}, {3, 2}}) {
    const auto f = build_family("grid:d=" + std::to_string(dim) + ",l=" + std::to_string(l));
    const auto v = verify_compiled(prog, f.graph);
    const bool ok = v.traversable && v.orderable &&
                    v.order == lex_order(f.graph, std::vector<std::uint64_t>(dim, static_cast<std::uint64_t>(l)));
    ++total;
    good += ok;
    if (!ok) d << " grid(" << dim << "," << l << ") mismatch;";
  }
  d << " " << good << "/" << total << " grids traversable, orderable, successor order";
  return {good == total, d.str()};
}

Outcome abelian_ordering() {
  const char* specs[] = {
      "abelian:mod=4,2;gens=(1,0)(0,1)",         "abelian:mod=4,2;gens=(1,1)(0,1)",
      "abelian:mod=6;gens=(2)(3)",               "abelian:mod=6;gens=(1)(5)",
      "abelian:mod=2,2,2;gens=(1,0,0)(0,1,0)(0,0,1)", "abelian:mod=4,6;gens=(1,0)(0,2)(2,3)",
      "abelian:mod=8;gens=(2)(1)",               "abelian:mod=3,3;gens=(1,0)(0,1)(1,1)",
      "abelian:mod=12;gens=(3)(4)(6)",           "abelian:mod=8,4;gens=(1,0)(0,1)",
      "abelian:mod=8,8;gens=(1,0)(0,1)",         "abelian:mod=16,2;gens=(1,0)(0,1)(8,1)",
  };
  int good = 0, total = 0;
  std::ostringstream d;
  for (const char* spec : specs) {
    ++total;
    const auto f = build_family(spec);
    const auto& G = *f.group.group;
    bool ok = true;
    std::uint64_t prod = 1;
    for (auto e : algo::abelian_e_values(f.group)) prod *= e;
    ok = ok && prod == G.order();
    for (const auto& x : G.elements()) ok = ok && algo::abelian_tuples_reaching(f.group, x).size() == 1;
    const auto run = algo::abelian_ordering_run(f.group, f.cayley);
    ok = ok && std::set<NodeId>(run.order.begin(), run.order.end()).size() == G.order() &&
         run.order.size() == G.order();
    const auto prog = lang::parse_program(algo::traversal_program(f.spec));
    const auto v = verify_compiled(prog, f.graph);
    ok = ok && v.traversable && v.orderable && v.order == run.order;
    good += ok;
    if (!ok) d << " " << spec << " failed;";
  }
  d << " " << good << "/" << total << " presentations";
  return {good == total, d.str()};
}

Outcome symmetric_group() {
  int checks = 0, good = 0;
  for (int n = 2; n <= 6; ++n) {
    groups::SymmetricGroup S(n);
    const auto gg = groups::symmetric_group(n);
    for (int k = 2; k <= n; ++k) {
      groups::Element x = S.identity();
      for (auto l : groups::p_k_path(n, k)) x = S.multiply(gg.gens[l - 1], x);
      ++checks;
      good += x == S.tail_cycle(k);
    }
  }
  std::ostringstream d;
  d << good << "/" << checks << " p_k words";
  bool ok = good == checks;
  for (int n = 2; n <= 4; ++n) {
    const auto f = build_family("sym:n=" + std::to_string(n));
    const auto order = algo::symmetric_ordering_run(n, f.cayley);
    const auto distinct = std::set<NodeId>(order.begin(), order.end()).size();
    d << ", S(" << n << ") " << distinct << "/" << f.graph.num_nodes();
    ok = ok && distinct == f.graph.num_nodes() && order.size() == distinct;
    const auto v = verify_compiled(lang::parse_program(algo::traversal_program(f.spec)), f.graph);
    ok = ok && v.traversable && v.orderable && v.order == order;
  }
  return {ok, d.str()};
}

Outcome wreath_arithmetic() {
  bool ok = true;
  std::ostringstream d;
  std::size_t supports = 0;
  for (const char* spec : {"wreath(grid:d=1,l=2,grid:d=1,l=2)", "wreath(grid:d=1,l=2,grid:d=1,l=3)"}) {
    const auto f = build_family(spec);
    const auto w = algo::WreathContext::of(f);
    const auto& W = *w.group;
    const auto H = static_cast<std::uint32_t>(W.top_order());
    for (std::uint32_t mask = 0; mask < (1u << H); ++mask) {
      std::vector<std::uint32_t> hs, gs;
      auto product = W.typed_identity();
      for (std::uint32_t h = 0; h < H; ++h) {
        if (!(mask >> h & 1)) continue;
        hs.push_back(h);
        gs.push_back(1);
        const auto th = W.embed_top(h);
        product = W.mul(product, W.mul(W.mul(th, W.embed_base(1)), W.inv(th)));
      }
      const auto x = W.point_support(hs, gs);
      const NodeId node = w.node(x);
      const auto path = algo::wreath_canonical_path(w, node);
      ok = ok && product == x && target(f.graph, f.graph.startnode(), path) == node &&
           algo::g_segments(w, path) == hs.size();
      ++supports;
    }
  }
  d << supports << " supports";
  std::size_t pairs = 0;
  for (const char* spec : {"wreath(grid:d=1,l=2,grid:d=1,l=2)", "wreath(grid:d=1,l=2,grid:d=1,l=3)",
                           "wreath(grid:d=1,l=2,grid:d=2,l=2)", "wreath(grid:d=1,l=2,grid:d=1,l=4)",
                           "wreath(grid:d=1,l=3,grid:d=1,l=2)"}) {
    const auto f = build_family(spec);
    const auto w = algo::WreathContext::of(f);
    const auto& W = *w.group;
    std::vector<NodeId> numbers;
    for (NodeId v = 0; v < f.graph.num_nodes(); ++v) {
      if (W.decode(f.cayley.elements[v]).h == W.top_identity()) numbers.push_back(v);
    }
    auto support = [&](NodeId v) {
      std::size_t c = 0;
      for (auto g : W.decode(f.cayley.elements[v]).f) c += g != W.base_identity();
      return c;
    };
    for (auto x : numbers) {
      for (auto y : numbers) {
        ++pairs;
        ok = ok && algo::wreath_same(w, x, y) == (support(x) == support(y)) &&
             algo::wreath_successor(w, x, y) == (support(y) == support(x) + 1);
      }
    }
  }
  d << ", " << pairs << " same/successor pairs";
  const auto f = build_family("wreath(grid:d=1,l=2,grid:d=2,l=2)");
  const auto w = algo::WreathContext::of(f);
  const auto r = algo::run_register_machine(algo::doubling_machine(), w, {2});
  ok = ok && r.output == 4;
  bool overflow = false;
  try {
    algo::run_register_machine(algo::doubling_machine(), w, {3});
  } catch (const InputError&) {
    overflow = true;
  }
  ok = ok && overflow;
  d << ", doubling(2) = " << r.output << ", doubling(3) " << (overflow ? "overflows" : "does not overflow");
  return {ok, d.str()};
}

Outcome co_st_connectivity() {
  const char* families[] = {
      "grid:d=1,l=3", "grid:d=2,l=2", "grid:d=1,l=4", "abelian:mod=6;gens=(2)(3)", "abelian:mod=4,2;gens=(1,1)(0,1)",
      "sym:n=3", "direct(grid:d=1,l=2,grid:d=1,l=3)", "wreath(grid:d=1,l=2,grid:d=1,l=2)",
      "abelian:mod=5;gens=(1)", "direct(grid:d=1,l=2,sym:n=3)",
  };
  std::mt19937 rng(99);
  int connected = 0, split = 0, agree = 0;
  for (const char* spec : families) {
    const auto base = build_family(spec);
    const auto twice = build_family(std::string("twice(") + spec + ")");
    const auto prog = lang::parse_program(algo::traversal_program(base.spec));
    const auto jag = lang::compile(prog, base.graph.degree());
    const auto n = static_cast<NodeId>(base.graph.num_nodes());
    for (int k = 0; k < 2; ++k) {
      for (bool two : {false, true}) {
        const NodeId t = two ? n + static_cast<NodeId>(rng() % n) : static_cast<NodeId>(rng() % n);
        const auto g = (two ? twice.graph : base.graph).with_target(t);
        JagSystem sys(jag, g);
        const auto r = decide_co_st_connectivity(sys, g, limits());
        const auto reach = bfs_reachable(g, g.startnode());
        const bool bfs = std::binary_search(reach.begin(), reach.end(), t);
        (two ? split : connected) += 1;
        agree += r.answer && (*r.answer == Connectivity::Connected) == bfs;
      }
    }
  }
  std::ostringstream d;
  d << agree << "/" << connected + split << " agree (" << connected << " connected, " << split
    << " two-component)";
  return {agree == connected + split && connected >= 20 && split >= 20, d.str()};
}

Outcome compiler_bisimulation() {
  struct Item {
    std::string name;
    std::string text;
    LabelledGraph graph;
  };
  std::vector<Item> corpus;
  for (const char* spec : {"grid:d=1,l=2", "grid:d=1,l=5", "grid:d=2,l=2", "grid:d=2,l=3", "grid:d=3,l=2"}) {
    corpus.push_back({std::string("grid ") + spec, algo::grid_traversal_program(), build_family(spec).graph});
  }
  for (const char* spec : {"grid:d=2,l=3", "abelian:mod=6;gens=(2)(3)", "abelian:mod=4,2;gens=(1,1)(0,1)",
                           "abelian:mod=3,3;gens=(1,0)(0,1)(1,1)", "sym:n=3", "sym:n=4",
                           "direct(grid:d=1,l=2,grid:d=1,l=3)", "direct(sym:n=3,grid:d=1,l=2)",
                           "wreath(grid:d=1,l=2,grid:d=1,l=2)", "wreath(grid:d=1,l=2,grid:d=1,l=3)",
                           "twice(sym:n=3)", "twice(grid:d=2,l=2)"}) {
    const auto f = build_family(spec);
    corpus.push_back({std::string("traversal ") + spec, algo::traversal_program(f.spec), f.graph});
  }
  for (const char* spec : {"abelian:mod=4,2;gens=(1,0)(0,1)", "abelian:mod=5;gens=(1)", "grid:d=2,l=2"}) {
    const auto f = build_family(spec);
    corpus.push_back({std::string("count ") + spec, algo::count_to_max_order_program(2), f.graph});
    corpus.push_back({std::string("mult ") + spec,
                      algo::mult_program(algo::placement("p", {1}) + algo::placement("q", {1, 1})), f.graph});
    corpus.push_back({std::string("inverse ") + spec, algo::inverse_program(algo::placement("p", {1, 1, 1})),
                      f.graph});
  }
  for (const char* spec : {"grid:d=2,l=2", "sym:n=3"}) {
    const auto f = build_family(spec);
    corpus.push_back({std::string("jump-to-target ") + spec, algo::jump_to_target_program(),
                      f.graph.with_target(1)});
  }
  for (int n = 3; n <= 5; ++n) {
    const auto f = build_family("abelian:mod=" + std::to_string(n) + ";gens=(1)(" + std::to_string(n - 1) + ")");
    corpus.push_back({"two-tour Z" + std::to_string(n), algo::two_tour_program(), f.graph});
  }
  {
    const auto f = build_family("wreath(grid:d=1,l=2,grid:d=1,l=3)");
    const auto w = algo::WreathContext::of(f);
    for (NodeId x : {NodeId{0}, NodeId{5}, NodeId{13}}) {
      const auto px = algo::placement("x", algo::path_to(f.graph, x));
      corpus.push_back({"is-number " + std::to_string(x), algo::is_number_program(w, px), f.graph});
      const auto ph = algo::placement("h", algo::path_to(f.graph, w.node(w.group->embed_top(1))));
      corpus.push_back({"testf " + std::to_string(x), algo::testf_program(w, px + ph), f.graph});
    }
  }
  int agree = 0;
  std::ostringstream d;
  for (const auto& item : corpus) {
    const auto prog = lang::parse_program(item.text);
    const auto a = verify_interpreted(prog, item.graph);
    const auto b = verify_compiled(prog, item.graph);
    const bool same = a == b && !a.limit;
    agree += same;
    if (!same) d << " " << item.name << " differs;";
  }
  d << " " << agree << "/" << corpus.size() << " programs agree";
  return {agree == static_cast<int>(corpus.size()), d.str()};
}

Outcome degree_reduction() {
  std::mt19937 rng(8);
  int agree = 0;
  const int total = 20;
  for (int i = 0; i < total; ++i) {
    const std::size_t n = 2 + rng() % 12, d = 2 + rng() % 4;
    const auto g = testing::random_graph(rng, n, d);
    const auto r = reduce_degree(g);
    const auto cg = bfs_components(g), cr = bfs_components(r);
    bool ok = r.degree() == 3 && r.num_nodes() == n * d;
    for (NodeId x = 0; x < n && ok; ++x) {
      for (NodeId j = 0; j < d; ++j) ok = ok && cr[x * d + j] == cr[x * d];
      for (NodeId y = 0; y < n; ++y) ok = ok && (cg[x] == cg[y]) == (cr[x * d] == cr[y * d]);
    }
    agree += ok;
  }
  std::ostringstream d;
  d << agree << "/" << total << " graphs keep their component partition";
  return {agree == total, d.str()};
}

Outcome negative_controls() {
  std::vector<LabelledGraph> graphs;
  for (const char* spec : {"grid:d=1,l=2", "grid:d=2,l=2", "grid:d=2,l=3", "sym:n=3", "abelian:mod=6;gens=(2)(3)",
                           "wreath(grid:d=1,l=2,grid:d=1,l=2)"}) {
    const auto g = build_family(spec).graph;
    for (NodeId t = 0; t < g.num_nodes(); ++t) graphs.push_back(g.with_target(t));
  }
  std::mt19937 rng(4);
  while (graphs.size() < 80) {
    auto g = testing::random_graph(rng, 2 + rng() % 6, 2);
    if (bfs_reachable(g, g.startnode()).size() >= 2) graphs.push_back(std::move(g));
  }
  // Where everything reachable is {s, t}, jumping to t does visit every
  // node; the control must be caught everywhere else and accepted there.
  const auto jump = lang::parse_program(algo::jump_to_target_program());
  int caught = 0, wide = 0, narrow = 0, narrow_ok = 0;
  for (const auto& g : graphs) {
    const auto reach = bfs_reachable(g, g.startnode());
    const bool only_st = std::all_of(reach.begin(), reach.end(),
                                     [&](NodeId v) { return v == g.startnode() || v == g.targetnode(); });
    const bool trav = verify_compiled(jump, g).traversable;
    if (only_st) {
      ++narrow;
      narrow_ok += trav;
    } else {
      ++wide;
      caught += !trav;
    }
  }
  const auto tour = lang::parse_program(algo::two_tour_program());
  int unordered = 0, tours = 0;
  for (int n = 3; n <= 6; ++n) {
    const auto f = build_family("abelian:mod=" + std::to_string(n) + ";gens=(1)(" + std::to_string(n - 1) + ")");
    const auto v = verify_compiled(tour, f.graph);
    ++tours;
    unordered += v.traversable && !v.orderable;
  }
  std::ostringstream d;
  d << "jump-to-target rejected on " << caught << "/" << wide << " graphs with a node outside {s,t}"
    << " (traversable on " << narrow_ok << "/" << narrow << " graphs reaching only s and t)"
    << ", two-tour unordered on " << unordered << "/" << tours << " cycles";
  return {caught == wide && narrow_ok == narrow && unordered == tours, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds; 0 = none
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "jag semantics vs run enumeration", 10, jag_semantics},
      {2, "grid traversal", 60, grid_traversal},
      {3, "abelian ordering", 60, abelian_ordering},
      {4, "symmetric group", 10, symmetric_group},
      {5, "wreath arithmetic", 30, wreath_arithmetic},
      {6, "co-st-connectivity", 60, co_st_connectivity},
      {7, "compiler bisimulation", 0, compiler_bisimulation},
      {8, "degree reduction", 0, degree_reduction},
      {9, "negative controls", 0, negative_controls},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.budget == 0 || secs < c.budget;
    const bool pass = o.ok && in_time;
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << o.detail << " ["
              << std::fixed << std::setprecision(2) << secs << " s";
    if (c.budget > 0) std::cout << " of " << c.budget << " s";
    std::cout << "]\n" << std::flush;
  }
  return all ? 0 : 1;
}
