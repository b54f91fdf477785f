#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "jaglab/algorithms.hpp"
#include "jaglab/checker.hpp"
#include "jaglab/error.hpp"
#include "jaglab/family.hpp"
#include "jaglab/jag.hpp"
#include "jaglab/lang.hpp"

using namespace jaglab;

namespace {

enum Exit { kAccept = 0, kReject = 1, kLimit = 2, kInput = 3 };

struct Options {
  std::uint64_t max_configs = 10'000'000;
  std::uint64_t max_run_len = 0;
  unsigned workers = 1;
  bool degree_reduce = false;
  std::optional<NodeId> target;
  bool compile = false;
  std::string out;
  int digits = 1;

  Limits limits() const { return {max_configs, max_run_len, workers}; }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Input {
  std::optional<FamilyInstance> family;
  LabelledGraph graph;
};

Input load_graph(const std::string& arg, const Options& o) {
  Input in;
  if (std::filesystem::is_regular_file(arg)) {
    in.graph = parse_graph(slurp(arg));
  } else {
    in.family = build_family(arg);
    in.graph = in.family->graph;
  }
  if (o.target) {
    if (*o.target >= in.graph.num_nodes()) throw InputError("target node out of range");
    in.graph = in.graph.with_target(*o.target);
  }
  if (o.degree_reduce) in.graph = reduce_degree(in.graph);
  return in;
}

// A program argument is a file (pebble program or automaton text) or a
// built-in name: grid, traversal, jump-to-target, two-tour, count.
struct LoadedProgram {
  std::optional<lang::Program> program;
  std::optional<NdJag> jag;
};

LoadedProgram load_program(const std::string& arg, const Input& in, const Options& o) {
  std::string text;
  if (std::filesystem::is_regular_file(arg)) {
    text = slurp(arg);
    std::istringstream ss(text);
    std::string first;
    ss >> first;
    if (first == "states") return {std::nullopt, parse_jag(text)};
  } else if (arg == "grid") {
    text = algo::grid_traversal_program();
  } else if (arg == "traversal") {
    if (!in.family) throw InputError("the traversal program needs a family spec as input");
    text = algo::traversal_program(in.family->spec);
  } else if (arg == "jump-to-target") {
    text = algo::jump_to_target_program();
  } else if (arg == "two-tour") {
    text = algo::two_tour_program();
  } else if (arg == "count") {
    text = algo::count_to_max_order_program(o.digits);
  } else {
    throw InputError("no such program file or built-in: " + arg);
  }
  auto prog = lang::parse_program(text);
  lang::check(prog, in.graph.degree());
  if (o.compile) return {std::nullopt, lang::compile(prog, in.graph.degree())};
  return {std::move(prog), std::nullopt};
}

// Calls f with the transition system of the loaded program.
template <typename F>
auto with_system(const LoadedProgram& p, const LabelledGraph& g, F&& f) {
  if (p.jag) {
    JagSystem sys(*p.jag, g);
    return f(sys);
  }
  lang::Interpreter sys(*p.program, g);
  return f(sys);
}

void print_order(std::ostream& os, const std::vector<NodeId>& order) {
  os << "visit_order:";
  for (auto v : order) os << ' ' << v;
  os << '\n';
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Accept: return kAccept;
    case Verdict::Reject: return kReject;
    case Verdict::ResourceLimit: return kLimit;
  }
  return kInput;
}

int cmd_gen(const std::string& family, const Options& o) {
  auto in = load_graph(family, o);
  const auto text = serialize_graph(in.graph);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw InputError("cannot write " + o.out);
    f << text;
  }
  return kAccept;
}

int cmd_run(const std::string& program, const std::string& graph, const Options& o) {
  auto in = load_graph(graph, o);
  auto p = load_program(program, in, o);
  return with_system(p, in.graph, [&](const auto& sys) {
    auto r = search(sys, o.limits());
    std::cerr << "verdict: " << to_string(r.verdict) << "\nconfigs: " << r.explored << '\n';
    if (r.verdict == Verdict::Accept && sys.has_curr()) {
      for (auto v : first_visits(sys, r.witness)) std::cout << v << '\n';
    }
    return verdict_exit(r.verdict);
  });
}

int cmd_verify(const std::string& program, const std::string& graph, const Options& o) {
  auto in = load_graph(graph, o);
  auto p = load_program(program, in, o);
  return with_system(p, in.graph, [&](const auto& sys) {
    auto tc = check_traversable(sys, in.graph, o.limits());
    std::cout << "verdict: " << to_string(tc.verdict) << '\n';
    if (tc.limit_hit) {
      std::cout << "traversable: unknown\norderable: unknown\nconfigs: " << tc.explored << '\n';
      return int{kLimit};
    }
    std::cout << "traversable: " << (tc.traversable ? "true" : "false") << '\n';
    bool orderable = false;
    std::uint64_t explored = tc.explored;
    if (tc.traversable) {
      auto oc = check_orderable(sys, in.graph, tc.visit_order, o.limits());
      explored += oc.explored;
      if (oc.limit_hit) {
        std::cout << "orderable: unknown\n";
        print_order(std::cout, tc.visit_order);
        std::cout << "configs: " << explored << '\n';
        return int{kLimit};
      }
      orderable = oc.orderable;
    }
    std::cout << "orderable: " << (orderable ? "true" : "false") << '\n';
    print_order(std::cout, tc.visit_order);
    std::cout << "configs: " << explored << '\n';
    return tc.traversable ? int{kAccept} : int{kReject};
  });
}

int cmd_connect(const std::string& program, const std::string& graph, const Options& o) {
  auto in = load_graph(graph, o);
  auto p = load_program(program, in, o);
  return with_system(p, in.graph, [&](const auto& sys) {
    auto r = decide_co_st_connectivity(sys, in.graph, o.limits());
    if (!r.answer) {
      std::cout << "verdict: resource-limit\nconfigs: " << r.explored << '\n';
      return int{kLimit};
    }
    std::cout << (*r.answer == Connectivity::Connected ? "connected" : "disconnected") << '\n';
    std::cout << "configs: " << r.explored << '\n';
    return int{kAccept};
  });
}

void print_tuple(std::ostream& os, const std::vector<std::uint64_t>& t) {
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ')';
}

int cmd_oracle(const std::string& kind, const std::string& graph, const Options& o) {
  auto in = load_graph(graph, o);
  if (kind == "bfs") {
    const auto reach = reachable_set(in.graph, in.graph.startnode());
    bool hit = false;
    for (auto v : reach) hit = hit || v == in.graph.targetnode();
    std::cout << (hit ? "connected" : "disconnected") << "\nreachable:";
    for (auto v : reach) std::cout << ' ' << v;
    std::cout << '\n';
    return kAccept;
  }
  if (!in.family) throw InputError("oracle " + kind + " needs a family spec");
  const auto& fam = *in.family;
  if (kind == "canon") {
    const auto pres = algo::block_presentation(fam.spec);
    const auto bounds = algo::block_bounds(fam.graph, pres);
    const auto order = algo::block_order(fam.graph, pres);
    const auto tuples = algo::successor_tuples(bounds);
    std::cout << "bounds: ";
    print_tuple(std::cout, bounds);
    std::cout << '\n';
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      print_tuple(std::cout, tuples[i]);
      std::cout << ' ' << order[i] << ' ' << fam.group.group->format(fam.cayley.elements[order[i]]) << '\n';
    }
    return kAccept;
  }
  if (kind == "evalues") {
    std::cout << "e:";
    for (auto e : algo::abelian_e_values(fam.group)) std::cout << ' ' << e;
    std::cout << '\n';
    return kAccept;
  }
  if (kind == "order") {
    print_order(std::cout, algo::block_order(fam.graph, algo::block_presentation(fam.spec)));
    return kAccept;
  }
  throw InputError("unknown oracle kind: " + kind + " (bfs, canon, evalues, order)");
}

// Verifies the family's traversal program and compares its order with `oracle`.
int verify_against(const FamilyInstance& fam, const std::string& text, const std::vector<NodeId>& oracle,
                   const Options& o) {
  auto prog = lang::parse_program(text);
  lang::check(prog, fam.graph.degree());
  LoadedProgram p;
  if (o.compile) p.jag = lang::compile(prog, fam.graph.degree());
  else p.program = std::move(prog);
  return with_system(p, fam.graph, [&](const auto& sys) {
    auto tc = check_traversable(sys, fam.graph, o.limits());
    if (tc.limit_hit) {
      std::cout << "verdict: resource-limit\n";
      return int{kLimit};
    }
    bool orderable = false;
    if (tc.traversable) {
      auto oc = check_orderable(sys, fam.graph, tc.visit_order, o.limits());
      if (oc.limit_hit) {
        std::cout << "verdict: resource-limit\n";
        return int{kLimit};
      }
      orderable = oc.orderable;
    }
    const bool match = tc.visit_order == oracle;
    std::cout << "traversable: " << (tc.traversable ? "true" : "false") << '\n'
              << "orderable: " << (orderable ? "true" : "false") << '\n';
    print_order(std::cout, tc.visit_order);
    std::cout << "oracle_match: " << (match ? "true" : "false") << '\n';
    return tc.traversable && orderable && match ? int{kAccept} : int{kReject};
  });
}

int cmd_algo(const std::string& name, const std::string& family, const Options& o) {
  using K = FamilySpec::Kind;
  const auto fam = build_family(family);
  auto require = [&](K k, const char* what) {
    if (fam.spec.kind != k) throw InputError(name + " needs a " + what + " family");
  };
  if (name == "grid-traverse") {
    require(K::Grid, "grid");
    std::vector<std::uint64_t> bounds(fam.spec.d, static_cast<std::uint64_t>(fam.spec.l));
    std::vector<NodeId> oracle;
    for (const auto& t : algo::successor_tuples(bounds)) {
      oracle.push_back(target(fam.graph, fam.graph.startnode(), algo::tuple_path(t)));
    }
    return verify_against(fam, algo::grid_traversal_program(), oracle, o);
  }
  if (name == "abelian-order") {
    if (fam.spec.kind != K::Abelian && fam.spec.kind != K::Grid) throw InputError(name + " needs an abelian family");
    const auto run = algo::abelian_ordering_run(fam.group, fam.cayley);
    std::cout << "e:";
    for (auto e : run.e) std::cout << ' ' << e;
    std::cout << "\nnmax:";
    for (auto n : run.nmax) std::cout << ' ' << n;
    std::cout << "\ngmax: " << fam.group.group->format(run.gmax.back()) << '\n';
    algo::BlockPresentation pres;
    for (std::size_t i = 0; i < fam.group.gens.size(); ++i) pres.push_back({Path{static_cast<EdgeLabel>(i + 1)}, 0});
    return verify_against(fam, algo::block_traversal_program(pres), run.order, o);
  }
  if (name == "sym-order") {
    require(K::Sym, "sym");
    return verify_against(fam, algo::traversal_program(fam.spec), algo::symmetric_ordering_run(fam.spec.n, fam.cayley),
                          o);
  }
  if (name == "product-order") {
    require(K::Direct, "direct");
    const auto a = build_family(fam.spec.children[0]);
    const auto b = build_family(fam.spec.children[1]);
    const auto oa = algo::block_order(a.graph, algo::block_presentation(a.spec));
    const auto ob = algo::block_order(b.graph, algo::block_presentation(b.spec));
    return verify_against(fam, algo::traversal_program(fam.spec),
                          algo::product_ordering(oa, ob, b.graph.num_nodes()), o);
  }
  if (name == "wreath-count") {
    require(K::Wreath, "wreath");
    const auto w = algo::WreathContext::of(fam);
    NodeId x = fam.cayley.identity_node();
    std::uint64_t count = 0;
    for (bool more = true; more;) {
      more = false;
      for (NodeId y = 0; y < fam.graph.num_nodes(); ++y) {
        if (algo::wreath_successor(w, x, y)) {
          x = y;
          ++count;
          more = true;
          break;
        }
      }
    }
    std::cout << "count: " << count << "\n|H|: " << w.group->top_order() << '\n';
    const auto& h = fam.spec.children[1];
    if (h.kind == K::Grid && h.l == 2) {
      const auto r = algo::run_register_machine(algo::power_of_two_machine(), w,
                                                {static_cast<std::uint64_t>(h.d)});
      std::cout << "power_of_two(" << h.d << "): " << r.output << '\n';
    }
    return count == w.group->top_order() ? kAccept : kReject;
  }
  if (name == "co-st-conn") {
    auto prog = lang::parse_program(algo::traversal_program(fam.spec));
    lang::check(prog, fam.graph.degree());
    LoadedProgram p;
    if (o.compile) p.jag = lang::compile(prog, fam.graph.degree());
    else p.program = std::move(prog);
    return with_system(p, fam.graph, [&](const auto& sys) {
      auto r = decide_co_st_connectivity(sys, fam.graph, o.limits());
      if (!r.answer) {
        std::cout << "verdict: resource-limit\n";
        return int{kLimit};
      }
      const auto reach = reachable_set(fam.graph, fam.graph.startnode());
      bool bfs = false;
      for (auto v : reach) bfs = bfs || v == fam.graph.targetnode();
      const bool conn = *r.answer == Connectivity::Connected;
      std::cout << (conn ? "connected" : "disconnected") << "\noracle_match: " << (conn == bfs ? "true" : "false")
                << '\n';
      return conn == bfs ? int{kAccept} : int{kReject};
    });
  }
  throw InputError("unknown algorithm: " + name +
                   " (grid-traverse, abelian-order, sym-order, wreath-count, product-order, co-st-conn)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jaglab: nondeterministic jumping automata on graphs"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--limits-configs", o.max_configs, "Maximum explored configurations")->check(CLI::PositiveNumber);
    sub->add_option("--max-run-len", o.max_run_len, "Maximum run length (0 = unbounded)");
    sub->add_option("--workers", o.workers, "Search threads")->check(CLI::PositiveNumber);
    sub->add_flag("--degree-reduce", o.degree_reduce, "Apply degree reduction to the input graph");
    sub->add_option("--target", o.target, "Override the target node");
  };
  auto with_program = [&](CLI::App* sub) {
    sub->add_flag("--compile", o.compile, "Compile pebble programs to an automaton before checking");
    sub->add_option("--digits", o.digits, "Counter pebbles for the count program");
  };

  std::string a1, a2;
  auto* gen = app.add_subcommand("gen", "Emit the graph of a family spec");
  gen->add_option("family", a1, "Family spec or graph file")->required();
  gen->add_option("-o,--out", o.out, "Output file (default stdout)");
  common(gen);

  auto* run = app.add_subcommand("run", "Search for an accepting run; prints the visit order");
  run->add_option("program", a1, "Program file or built-in")->required();
  run->add_option("graph", a2, "Graph file or family spec")->required();
  common(run);
  with_program(run);

  auto* verify = app.add_subcommand("verify", "Check traversability and orderability");
  verify->add_option("program", a1, "Program file or built-in")->required();
  verify->add_option("graph", a2, "Graph file or family spec")->required();
  common(verify);
  with_program(verify);

  auto* connect = app.add_subcommand("connect", "Decide co-st-connectivity with a traversal program");
  connect->add_option("program", a1, "Program file or built-in")->required();
  connect->add_option("graph", a2, "Graph file or family spec")->required();
  common(connect);
  with_program(connect);

  auto* oracle = app.add_subcommand("oracle", "Ground-truth oracles: bfs, canon, evalues, order");
  oracle->add_option("kind", a1, "Oracle kind")->required();
  oracle->add_option("graph", a2, "Graph file or family spec")->required();
  common(oracle);

  auto* algo = app.add_subcommand("algo", "Run a named algorithm on a family");
  algo->add_option("name", a1, "Algorithm name")->required();
  algo->add_option("family", a2, "Family spec")->required();
  common(algo);
  with_program(algo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInput;
  }

  try {
    if (gen->parsed()) return cmd_gen(a1, o);
    if (run->parsed()) return cmd_run(a1, a2, o);
    if (verify->parsed()) return cmd_verify(a1, a2, o);
    if (connect->parsed()) return cmd_connect(a1, a2, o);
    if (oracle->parsed()) return cmd_oracle(a1, a2, o);
    if (algo->parsed()) return cmd_algo(a1, a2, o);
  } catch (const LimitError& e) {
    std::cerr << "limit: " << e.what() << '\n';
    return kLimit;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const ProgramError& e) {
    std::cerr << "program error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return kInput;
}
