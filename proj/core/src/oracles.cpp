#include <algorithm>

#include "jaglab/algorithms.hpp"
#include "jaglab/error.hpp"

namespace jaglab::algo {

using groups::Element;

std::vector<std::vector<std::uint64_t>> successor_tuples(const std::vector<std::uint64_t>& bounds) {
  std::vector<std::vector<std::uint64_t>> out;
  for (auto b : bounds) {
    if (b == 0) return out;
  }
  std::optional<std::vector<std::uint64_t>> t = std::vector<std::uint64_t>(bounds.size(), 0);
  while (t) {
    out.push_back(*t);
    t = successor(*t, bounds);
  }
  return out;
}

std::optional<std::vector<std::uint64_t>> successor(std::vector<std::uint64_t> t,
                                                    const std::vector<std::uint64_t>& bounds) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] + 1 < bounds[i]) {
      ++t[i];
      return t;
    }
    t[i] = 0;
  }
  return std::nullopt;
}

std::pair<std::size_t, std::uint64_t> max_order_generator(const groups::GeneratedGroup& gg) {
  std::size_t best = 0;
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < gg.gens.size(); ++i) {
    const auto o = groups::element_order(*gg.group, gg.gens[i]);
    if (o > e) {
      e = o;
      best = i;
    }
  }
  return {best, e};
}

std::vector<std::uint64_t> abelian_e_values(const groups::GeneratedGroup& gg) {
  std::vector<std::uint64_t> e;
  std::vector<Element> prefix;
  for (const auto& g : gg.gens) {
    const auto sub = groups::subgroup_closure(*gg.group, prefix);
    groups::ElementMap<char> in;
    for (const auto& x : sub) in[x] = 1;
    std::uint64_t t = 1;
    Element x = g;
    while (!in.count(x)) {
      x = gg.group->multiply(g, x);
      ++t;
    }
    e.push_back(t);
    prefix.push_back(g);
  }
  return e;
}

namespace {

Element tuple_element(const groups::GeneratedGroup& gg, const std::vector<std::uint64_t>& t) {
  Element x = gg.group->identity();
  for (std::size_t i = 0; i < t.size(); ++i) {
    x = gg.group->multiply(groups::power(*gg.group, gg.gens[i], t[i]), x);
  }
  return x;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> abelian_tuples_reaching(const groups::GeneratedGroup& gg,
                                                                const Element& x) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& t : successor_tuples(abelian_e_values(gg))) {
    if (tuple_element(gg, t) == x) out.push_back(t);
  }
  return out;
}

std::vector<std::uint64_t> abelian_canonical_tuple(const groups::GeneratedGroup& gg, const Element& x) {
  auto all = abelian_tuples_reaching(gg, x);
  if (all.empty()) throw InputError("element is not reached by any canonical tuple");
  return all.front();
}

Path tuple_path(const std::vector<std::uint64_t>& t) {
  Path p;
  for (std::size_t i = 0; i < t.size(); ++i) p.insert(p.end(), t[i], static_cast<EdgeLabel>(i + 1));
  return p;
}

AbelianOrdering abelian_ordering_run(const groups::GeneratedGroup& gg, const groups::CayleyGraph& cg) {
  const auto& G = *gg.group;
  AbelianOrdering run;
  run.gmax.push_back(G.identity());
  run.nmax.push_back(0);
  std::vector<Element> sub{G.identity()};
  for (const auto& g : gg.gens) {
    groups::ElementMap<char> in;
    for (const auto& y : sub) in[y] = 1;
    // x_t = g^t; the first t with x_t in the enumerated subgroup is e.
    std::vector<Element> xs{G.identity()};
    while (true) {
      Element x = G.multiply(g, xs.back());
      if (in.count(x)) break;
      xs.push_back(std::move(x));
    }
    const std::uint64_t e = xs.size();
    run.e.push_back(e);
    run.gmax.push_back(G.multiply(xs.back(), run.gmax.back()));
    run.nmax.push_back(run.nmax.back() + e - 1);
    std::vector<Element> next;
    next.reserve(sub.size() * e);
    for (const auto& y : sub) {
      for (const auto& x : xs) next.push_back(G.multiply(x, y));
    }
    sub = std::move(next);
  }
  for (const auto& y : sub) run.order.push_back(cg.node_of(y));
  return run;
}

std::vector<std::vector<std::uint64_t>> nmax_paths(const groups::GeneratedGroup& gg, const AbelianOrdering& run,
                                                   std::size_t i) {
  std::vector<std::vector<std::uint64_t>> out;
  if (i == 0) return {{}};
  const auto total = run.nmax[i];
  std::vector<std::uint64_t> bounds;
  for (std::size_t j = 0; j < i; ++j) {
    bounds.push_back(std::min<std::uint64_t>(groups::element_order(*gg.group, gg.gens[j]), total) + 1);
  }
  for (const auto& t : successor_tuples(bounds)) {
    std::uint64_t sum = 0;
    for (auto v : t) sum += v;
    if (sum != total) continue;
    if (tuple_element(gg, t) == run.gmax[i]) out.push_back(t);
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> symmetric_tuples(int n) {
  std::vector<std::uint64_t> bounds;
  for (int k = n; k >= 2; --k) bounds.push_back(static_cast<std::uint64_t>(k));
  return successor_tuples(bounds);
}

Path symmetric_path(int n, const std::vector<std::uint64_t>& exps) {
  Path p;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    const auto w = groups::p_k_path(n, n - static_cast<int>(i));
    for (std::uint64_t r = 0; r < exps[i]; ++r) p.insert(p.end(), w.begin(), w.end());
  }
  return p;
}

std::vector<NodeId> symmetric_ordering_run(int n, const groups::CayleyGraph& cg) {
  groups::SymmetricGroup S(n);
  std::vector<NodeId> order;
  for (const auto& t : symmetric_tuples(n)) {
    Element x = S.identity();
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto c = S.tail_cycle(n - static_cast<int>(i));
      x = S.multiply(groups::power(S, c, t[i]), x);
    }
    order.push_back(cg.node_of(x));
  }
  return order;
}

std::vector<NodeId> product_ordering(const std::vector<NodeId>& g_order, const std::vector<NodeId>& h_order,
                                     std::size_t h_size) {
  std::vector<NodeId> out;
  out.reserve(g_order.size() * h_order.size());
  for (auto g : g_order) {
    for (auto h : h_order) out.push_back(static_cast<NodeId>(g * h_size + h));
  }
  return out;
}

std::vector<NodeId> replacement_product_ordering(const std::vector<NodeId>& g_order,
                                                 const std::vector<NodeId>& h_order, std::size_t h_size,
                                                 std::size_t g_degree) {
  if (h_size != g_degree) {
    throw InputError("replacement product needs |H| = deg(G), got " + std::to_string(h_size) + " and " +
                     std::to_string(g_degree));
  }
  return product_ordering(g_order, h_order, h_size);
}

}  // namespace jaglab::algo
