#ifndef JAGLAB_GROUPS_HPP
#define JAGLAB_GROUPS_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "jaglab/graph.hpp"

namespace jaglab::groups {

/// Opaque group element. Each group fixes the meaning of the entries; the
/// encoding is only compared, hashed and handed back to the same group.
using Element = std::vector<std::int32_t>;

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ e.size();
    for (auto x : e) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

template <typename V>
using ElementMap = std::unordered_map<Element, V, ElementHash>;

/// Element-count cap for enumerable groups: JAGLAB_CAP if set, else 10^6.
std::uint64_t default_group_cap();

/// A finite group given by multiplication and inverse oracles plus a full
/// enumeration. Enumeration order is fixed and starts with no particular
/// element; Cayley graphs number their nodes in this order.
class Group {
 public:
  virtual ~Group() = default;

  virtual std::string name() const = 0;
  virtual Element identity() const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;
  virtual Element inverse(const Element& a) const = 0;
  virtual std::uint64_t order() const = 0;
  virtual std::vector<Element> elements() const = 0;
  virtual std::string format(const Element& a) const;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Ordered generator list; position i is edge label i + 1.
using GeneratorSet = std::vector<Element>;

struct GeneratedGroup {
  GroupPtr group;
  GeneratorSet gens;
};

/// Least t >= 1 with x^t = identity.
std::uint64_t element_order(const Group& g, const Element& x);

/// Subgroup generated by `xs`, in discovery order (identity first).
std::vector<Element> subgroup_closure(const Group& g, const std::vector<Element>& xs);

/// x^k.
Element power(const Group& g, const Element& x, std::uint64_t k);

// ---------------------------------------------------------------------------
// Families

/// Direct sum of cyclic groups Z_{n_1} + ... + Z_{n_k}; elements are residue
/// tuples, enumerated lexicographically (first coordinate most significant).
class AbelianGroup final : public Group {
 public:
  explicit AbelianGroup(std::vector<std::int32_t> moduli);

  const std::vector<std::int32_t>& moduli() const noexcept { return moduli_; }

  std::string name() const override;
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  std::uint64_t order() const override { return order_; }
  std::vector<Element> elements() const override;

 private:
  std::vector<std::int32_t> moduli_;
  std::uint64_t order_;
};

/// S(n) acting on {0..n-1}; an element is the image list. Products compose
/// functions: (a*b)(x) = a(b(x)). Formatting is 1-based.
class SymmetricGroup final : public Group {
 public:
  explicit SymmetricGroup(int n);

  int degree() const noexcept { return n_; }

  std::string name() const override;
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  std::uint64_t order() const override;
  std::vector<Element> elements() const override;
  std::string format(const Element& a) const override;

  /// cy: i -> i+1 (mod n), the permutation (1 2 ... n).
  Element cycle() const;
  /// sw: the transposition (1 2).
  Element swap() const;
  /// The k-cycle n-k+1 -> n-k+2 -> ... -> n -> n-k+1 (1-based points).
  Element tail_cycle(int k) const;

 private:
  int n_;
};

/// GL(n, p) over the prime field GF(p); elements are row-major n*n entries.
class GLGroup final : public Group {
 public:
  GLGroup(int n, int p, std::uint64_t cap = default_group_cap());

  int dimension() const noexcept { return n_; }
  int prime() const noexcept { return p_; }
  int primitive_root() const noexcept { return omega_; }

  std::string name() const override;
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  std::uint64_t order() const override { return order_; }
  std::vector<Element> elements() const override;
  std::string format(const Element& a) const override;

  std::int32_t determinant(const Element& a) const;

  /// Column-operation generators, in order: omega (scale column 1 by the
  /// least primitive root), c_{1+2} (add column 1 to column 2), c_{12} (swap
  /// columns 1 and 2), c_cy (rotate columns one step left). For p = 2 the
  /// omega generator is the identity and labels a self-loop.
  GeneratorSet column_generators() const;

 private:
  int n_;
  int p_;
  int omega_;
  std::uint64_t order_;
};

bool is_prime(std::int64_t p);
/// Least primitive root modulo the prime p (1 for p = 2).
int least_primitive_root(int p);

/// G x H with componentwise multiplication. Elements are (index in G's
/// enumeration, index in H's enumeration), enumerated G-major.
class DirectProduct final : public Group {
 public:
  DirectProduct(GroupPtr g, GroupPtr h);

  const Group& left() const noexcept { return *g_; }
  const Group& right() const noexcept { return *h_; }

  Element pair(const Element& g, const Element& h) const;
  Element left_part(const Element& x) const;
  Element right_part(const Element& x) const;

  std::string name() const override;
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  std::uint64_t order() const override;
  std::vector<Element> elements() const override;
  std::string format(const Element& a) const override;

 private:
  struct Table;
  GroupPtr g_, h_;
  std::shared_ptr<const Table> gt_, ht_;
};

/// Element (f, h) of a wreath product, with f and h stored as indices into
/// the factor enumerations.
struct WreathElement {
  std::vector<std::uint32_t> f;  // f[j] = index of f(h_j) in G's enumeration
  std::uint32_t h = 0;           // index in H's enumeration

  bool operator==(const WreathElement&) const = default;
};

/// G wr H: elements (f, h) with f: H -> G, multiplied by
/// (f1,h1).(f2,h2) = (x -> f1(x) . f2(h1^-1 x), h1 h2).
class WreathProduct final : public Group {
 public:
  WreathProduct(GroupPtr g, GroupPtr h, std::uint64_t cap = default_group_cap());

  const Group& base() const noexcept { return *g_; }
  const Group& top() const noexcept { return *h_; }
  std::size_t base_order() const noexcept { return g_elems_.size(); }
  std::size_t top_order() const noexcept { return h_elems_.size(); }
  const std::vector<Element>& base_elements() const noexcept { return g_elems_; }
  const std::vector<Element>& top_elements() const noexcept { return h_elems_; }
  std::uint32_t base_index(const Element& g) const;
  std::uint32_t top_index(const Element& h) const;
  std::uint32_t base_identity() const noexcept { return g_id_; }
  std::uint32_t top_identity() const noexcept { return h_id_; }

  WreathElement typed_identity() const;
  WreathElement mul(const WreathElement& a, const WreathElement& b) const;
  WreathElement inv(const WreathElement& a) const;
  /// g -> (delta_g, 1_H): delta_g(1_H) = g, 1_G elsewhere.
  WreathElement embed_base(std::uint32_t g) const;
  /// h -> (x -> 1_G, h).
  WreathElement embed_top(std::uint32_t h) const;
  /// [hs -> gs] = (f, 1_H) with f(hs[i]) = gs[i], 1_G elsewhere. Requires
  /// distinct hs, non-identity gs, equal lengths.
  WreathElement point_support(const std::vector<std::uint32_t>& hs,
                              const std::vector<std::uint32_t>& gs) const;

  Element encode(const WreathElement& w) const;
  WreathElement decode(const Element& e) const;

  std::string name() const override;
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  std::uint64_t order() const override { return order_; }
  std::vector<Element> elements() const override;
  std::string format(const Element& a) const override;

 private:
  GroupPtr g_, h_;
  std::vector<Element> g_elems_, h_elems_;
  std::vector<std::uint32_t> g_mul_, g_inv_, h_mul_, h_inv_;
  std::uint32_t g_id_ = 0, h_id_ = 0;
  std::uint64_t order_ = 0;
};

// Family constructors returning group + generators.

GeneratedGroup grid_group(int d, int l);
/// Throws InputError when `gens` do not generate the group.
GeneratedGroup abelian_group(std::vector<std::int32_t> moduli, GeneratorSet gens);
/// Generators in order (cy, sw).
GeneratedGroup symmetric_group(int n);
GeneratedGroup gl_group(int n, int p, std::uint64_t cap = default_group_cap());
/// Generators: G's embedded, then H's embedded.
GeneratedGroup direct_product(const GeneratedGroup& g, const GeneratedGroup& h);
GeneratedGroup wreath_product(const GeneratedGroup& g, const GeneratedGroup& h,
                              std::uint64_t cap = default_group_cap());

/// Label word p_k over {cy = 1, sw = 2}: cy:(cy:sw)^(k-1):cy^(n-k). It
/// evaluates to the k-cycle on the last k points. Requires 2 <= k <= n.
Path p_k_path(int n, int k);

// ---------------------------------------------------------------------------
// Cayley graphs

/// Cayley graph plus the element <-> node correspondence.
struct CayleyGraph {
  LabelledGraph graph;
  std::vector<Element> elements;  // node id -> element
  ElementMap<NodeId> index;       // element -> node id

  NodeId node_of(const Element& e) const;
  NodeId identity_node() const noexcept { return graph.startnode(); }
};

/// CG(G, gens): node per element (group enumeration order), rho(v, i) = g_i v,
/// startnode = identity, target = identity. Throws InputError when gens do
/// not generate G, or when |G| exceeds `cap`.
CayleyGraph cayley_graph(const GeneratedGroup& gg, std::uint64_t cap = default_group_cap());

}  // namespace jaglab::groups

#endif  // JAGLAB_GROUPS_HPP
