#include "jaglab/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>

#include "jaglab/error.hpp"

namespace jaglab::groups {

std::uint64_t default_group_cap() {
  if (const char* env = std::getenv("JAGLAB_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1'000'000;
}

std::string Group::format(const Element& a) const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out << ',';
    out << a[i];
  }
  out << ')';
  return out.str();
}

std::uint64_t element_order(const Group& g, const Element& x) {
  const Element id = g.identity();
  Element y = x;
  std::uint64_t t = 1;
  while (y != id) {
    y = g.multiply(x, y);
    ++t;
  }
  return t;
}

std::vector<Element> subgroup_closure(const Group& g, const std::vector<Element>& xs) {
  std::vector<Element> out{g.identity()};
  ElementMap<char> seen{{out.front(), 1}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& x : xs) {
      Element y = g.multiply(x, out[i]);
      if (seen.emplace(y, 1).second) out.push_back(std::move(y));
    }
  }
  // In a finite group closure under multiplication by the generators is
  // already closed under inverses.
  return out;
}

Element power(const Group& g, const Element& x, std::uint64_t k) {
  Element y = g.identity();
  for (std::uint64_t i = 0; i < k; ++i) y = g.multiply(x, y);
  return y;
}

// --------------------------------------------------------------- Abelian

AbelianGroup::AbelianGroup(std::vector<std::int32_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw InputError("abelian group needs at least one modulus");
  order_ = 1;
  for (auto m : moduli_) {
    if (m < 1) throw InputError("moduli must be positive");
    order_ *= static_cast<std::uint64_t>(m);
  }
}

std::string AbelianGroup::name() const {
  std::string s;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) s += "x";
    s += "Z" + std::to_string(moduli_[i]);
  }
  return s;
}

Element AbelianGroup::identity() const { return Element(moduli_.size(), 0); }

Element AbelianGroup::multiply(const Element& a, const Element& b) const {
  Element c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + b[i]) % moduli_[i];
  return c;
}

Element AbelianGroup::inverse(const Element& a) const {
  Element c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (moduli_[i] - a[i]) % moduli_[i];
  return c;
}

std::vector<Element> AbelianGroup::elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  Element e = identity();
  for (std::uint64_t k = 0; k < order_; ++k) {
    out.push_back(e);
    for (std::size_t i = e.size(); i-- > 0;) {
      if (++e[i] < moduli_[i]) break;
      e[i] = 0;
    }
  }
  return out;
}

// --------------------------------------------------------------- Symmetric

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  if (n < 1) throw InputError("symmetric group degree must be positive");
  if (n > 10) throw InputError("symmetric group degree above 10 is not enumerable here");
}

std::string SymmetricGroup::name() const { return "S" + std::to_string(n_); }

Element SymmetricGroup::identity() const {
  Element e(n_);
  std::iota(e.begin(), e.end(), 0);
  return e;
}

Element SymmetricGroup::multiply(const Element& a, const Element& b) const {
  Element c(n_);
  for (int x = 0; x < n_; ++x) c[x] = a[b[x]];
  return c;
}

Element SymmetricGroup::inverse(const Element& a) const {
  Element c(n_);
  for (int x = 0; x < n_; ++x) c[a[x]] = x;
  return c;
}

std::uint64_t SymmetricGroup::order() const {
  std::uint64_t f = 1;
  for (int i = 2; i <= n_; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<Element> SymmetricGroup::elements() const {
  std::vector<Element> out;
  Element e = identity();
  do {
    out.push_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

std::string SymmetricGroup::format(const Element& a) const {
  // cycle notation, 1-based
  std::vector<char> seen(n_, 0);
  std::string s;
  for (int x = 0; x < n_; ++x) {
    if (seen[x] || a[x] == x) continue;
    s += '(';
    int y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = 1;
      if (!first) s += ' ';
      s += std::to_string(y + 1);
      first = false;
      y = a[y];
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Element SymmetricGroup::cycle() const {
  Element e(n_);
  for (int x = 0; x < n_; ++x) e[x] = (x + 1) % n_;
  return e;
}

Element SymmetricGroup::swap() const {
  Element e = identity();
  if (n_ >= 2) std::swap(e[0], e[1]);
  return e;
}

Element SymmetricGroup::tail_cycle(int k) const {
  Element e = identity();
  if (k < 1 || k > n_) throw InputError("cycle length out of range");
  if (k == 1) return e;
  for (int i = n_ - k; i < n_ - 1; ++i) e[i] = i + 1;
  e[n_ - 1] = n_ - k;
  return e;
}

// --------------------------------------------------------------- Direct product

struct DirectProduct::Table {
  std::vector<Element> elems;
  ElementMap<std::int32_t> index;
  std::int32_t identity = 0;

  explicit Table(const Group& g) : elems(g.elements()) {
    for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<std::int32_t>(i));
    identity = index.at(g.identity());
  }
};

DirectProduct::DirectProduct(GroupPtr g, GroupPtr h)
    : g_(std::move(g)), h_(std::move(h)),
      gt_(std::make_shared<Table>(*g_)), ht_(std::make_shared<Table>(*h_)) {}

Element DirectProduct::pair(const Element& g, const Element& h) const {
  return {gt_->index.at(g), ht_->index.at(h)};
}

Element DirectProduct::left_part(const Element& x) const { return gt_->elems[x[0]]; }
Element DirectProduct::right_part(const Element& x) const { return ht_->elems[x[1]]; }

std::string DirectProduct::name() const { return "(" + g_->name() + " x " + h_->name() + ")"; }

Element DirectProduct::identity() const { return {gt_->identity, ht_->identity}; }

Element DirectProduct::multiply(const Element& a, const Element& b) const {
  return {gt_->index.at(g_->multiply(gt_->elems[a[0]], gt_->elems[b[0]])),
          ht_->index.at(h_->multiply(ht_->elems[a[1]], ht_->elems[b[1]]))};
}

Element DirectProduct::inverse(const Element& a) const {
  return {gt_->index.at(g_->inverse(gt_->elems[a[0]])), ht_->index.at(h_->inverse(ht_->elems[a[1]]))};
}

std::uint64_t DirectProduct::order() const { return gt_->elems.size() * ht_->elems.size(); }

std::vector<Element> DirectProduct::elements() const {
  std::vector<Element> out;
  out.reserve(order());
  for (std::size_t i = 0; i < gt_->elems.size(); ++i) {
    for (std::size_t j = 0; j < ht_->elems.size(); ++j) {
      out.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)});
    }
  }
  return out;
}

std::string DirectProduct::format(const Element& a) const {
  return "<" + g_->format(gt_->elems[a[0]]) + "," + h_->format(ht_->elems[a[1]]) + ">";
}

// --------------------------------------------------------------- Families

GeneratedGroup grid_group(int d, int l) {
  if (d < 1) throw InputError("grid dimension must be at least 1");
  if (l < 2) throw InputError("grid side length must be at least 2");
  auto g = std::make_shared<AbelianGroup>(std::vector<std::int32_t>(d, l));
  GeneratorSet gens;
  for (int i = 0; i < d; ++i) {
    Element e(d, 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return {std::move(g), std::move(gens)};
}

GeneratedGroup abelian_group(std::vector<std::int32_t> moduli, GeneratorSet gens) {
  auto g = std::make_shared<AbelianGroup>(std::move(moduli));
  if (gens.empty()) throw InputError("abelian group needs at least one generator");
  for (auto& x : gens) {
    if (x.size() != g->moduli().size()) {
      throw InputError("generator has " + std::to_string(x.size()) + " coordinates, expected " +
                       std::to_string(g->moduli().size()));
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto m = g->moduli()[i];
      x[i] = ((x[i] % m) + m) % m;
    }
  }
  const auto closure = subgroup_closure(*g, gens);
  if (closure.size() != g->order()) {
    throw InputError("generators span " + std::to_string(closure.size()) + " of " +
                     std::to_string(g->order()) + " elements");
  }
  return {std::move(g), std::move(gens)};
}

GeneratedGroup symmetric_group(int n) {
  if (n < 2) throw InputError("symmetric group needs n >= 2");
  auto g = std::make_shared<SymmetricGroup>(n);
  GeneratorSet gens{g->cycle(), g->swap()};
  return {std::move(g), std::move(gens)};
}

GeneratedGroup gl_group(int n, int p, std::uint64_t cap) {
  if (n < 2) throw InputError("GL needs n >= 2");
  auto g = std::make_shared<GLGroup>(n, p, cap);
  auto gens = g->column_generators();
  return {std::move(g), std::move(gens)};
}

GeneratedGroup direct_product(const GeneratedGroup& g, const GeneratedGroup& h) {
  auto prod = std::make_shared<DirectProduct>(g.group, h.group);
  GeneratorSet gens;
  const Element hid = h.group->identity();
  const Element gid = g.group->identity();
  for (const auto& x : g.gens) gens.push_back(prod->pair(x, hid));
  for (const auto& y : h.gens) gens.push_back(prod->pair(gid, y));
  return {std::move(prod), std::move(gens)};
}

GeneratedGroup wreath_product(const GeneratedGroup& g, const GeneratedGroup& h, std::uint64_t cap) {
  auto w = std::make_shared<WreathProduct>(g.group, h.group, cap);
  GeneratorSet gens;
  for (const auto& x : g.gens) gens.push_back(w->encode(w->embed_base(w->base_index(x))));
  for (const auto& y : h.gens) gens.push_back(w->encode(w->embed_top(w->top_index(y))));
  return {std::move(w), std::move(gens)};
}

Path p_k_path(int n, int k) {
  if (n < 2 || k < 2 || k > n) {
    throw InputError("p_k needs 2 <= k <= n, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
  constexpr EdgeLabel cy = 1, sw = 2;
  Path w{cy};
  for (int i = 0; i < k - 1; ++i) {
    w.push_back(cy);
    w.push_back(sw);
  }
  for (int i = 0; i < n - k; ++i) w.push_back(cy);
  return w;
}

// --------------------------------------------------------------- Cayley graphs

NodeId CayleyGraph::node_of(const Element& e) const {
  auto it = index.find(e);
  if (it == index.end()) throw InputError("element is not a node of this Cayley graph");
  return it->second;
}

CayleyGraph cayley_graph(const GeneratedGroup& gg, std::uint64_t cap) {
  const Group& g = *gg.group;
  if (gg.gens.empty()) throw InputError("a Cayley graph needs at least one generator");
  if (g.order() > cap) {
    throw LimitError("group " + g.name() + " has " + std::to_string(g.order()) +
                     " elements, above the cap of " + std::to_string(cap));
  }
  CayleyGraph cg;
  cg.elements = g.elements();
  const std::size_t n = cg.elements.size();
  cg.index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) cg.index.emplace(cg.elements[i], static_cast<NodeId>(i));
  const std::size_t d = gg.gens.size();
  std::vector<NodeId> rho(n * d);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < d; ++i) {
      rho[v * d + i] = cg.node_of(g.multiply(gg.gens[i], cg.elements[v]));
    }
  }
  const NodeId id = cg.node_of(g.identity());
  cg.graph = LabelledGraph(n, d, std::move(rho), id, id);
  if (reachable_set(cg.graph, id).size() != n) {
    throw InputError("generators do not generate " + g.name());
  }
  return cg;
}

}  // namespace jaglab::groups
