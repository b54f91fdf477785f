#include "jaglab/error.hpp"
#include "jaglab/groups.hpp"

namespace jaglab::groups {

namespace {

struct FactorTables {
  std::vector<std::uint32_t> mul, inv;
  std::uint32_t id = 0;
};

FactorTables build_tables(const Group& g, const std::vector<Element>& elems) {
  ElementMap<std::uint32_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<std::uint32_t>(i));
  const std::size_t n = elems.size();
  FactorTables t;
  t.mul.resize(n * n);
  t.inv.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t.mul[a * n + b] = index.at(g.multiply(elems[a], elems[b]));
    t.inv[a] = index.at(g.inverse(elems[a]));
  }
  t.id = index.at(g.identity());
  return t;
}

}  // namespace

WreathProduct::WreathProduct(GroupPtr g, GroupPtr h, std::uint64_t cap)
    : g_(std::move(g)), h_(std::move(h)) {
  if (g_->order() > cap || h_->order() > cap) throw LimitError("wreath factor exceeds the group cap");
  long double size = static_cast<long double>(h_->order());
  for (std::uint64_t i = 0; i < h_->order(); ++i) {
    size *= static_cast<long double>(g_->order());
    if (size > static_cast<long double>(cap)) {
      throw LimitError(g_->name() + " wr " + h_->name() + " exceeds the cap of " + std::to_string(cap) +
                       " elements");
    }
  }
  order_ = static_cast<std::uint64_t>(size);
  g_elems_ = g_->elements();
  h_elems_ = h_->elements();
  auto gt = build_tables(*g_, g_elems_);
  auto ht = build_tables(*h_, h_elems_);
  g_mul_ = std::move(gt.mul);
  g_inv_ = std::move(gt.inv);
  g_id_ = gt.id;
  h_mul_ = std::move(ht.mul);
  h_inv_ = std::move(ht.inv);
  h_id_ = ht.id;
}

std::uint32_t WreathProduct::base_index(const Element& g) const {
  for (std::size_t i = 0; i < g_elems_.size(); ++i) {
    if (g_elems_[i] == g) return static_cast<std::uint32_t>(i);
  }
  throw InputError("not an element of " + g_->name());
}

std::uint32_t WreathProduct::top_index(const Element& h) const {
  for (std::size_t i = 0; i < h_elems_.size(); ++i) {
    if (h_elems_[i] == h) return static_cast<std::uint32_t>(i);
  }
  throw InputError("not an element of " + h_->name());
}

WreathElement WreathProduct::typed_identity() const {
  return {std::vector<std::uint32_t>(h_elems_.size(), g_id_), h_id_};
}

WreathElement WreathProduct::mul(const WreathElement& a, const WreathElement& b) const {
  const std::size_t nh = h_elems_.size();
  const std::size_t ng = g_elems_.size();
  const std::uint32_t h1inv = h_inv_[a.h];
  WreathElement c;
  c.f.resize(nh);
  for (std::size_t x = 0; x < nh; ++x) {
    const std::uint32_t y = h_mul_[h1inv * nh + x];
    c.f[x] = g_mul_[a.f[x] * ng + b.f[y]];
  }
  c.h = h_mul_[a.h * nh + b.h];
  return c;
}

WreathElement WreathProduct::inv(const WreathElement& a) const {
  // (f, h)^-1 = (x -> f(h x)^-1, h^-1)
  const std::size_t nh = h_elems_.size();
  WreathElement c;
  c.f.resize(nh);
  for (std::size_t x = 0; x < nh; ++x) c.f[x] = g_inv_[a.f[h_mul_[a.h * nh + x]]];
  c.h = h_inv_[a.h];
  return c;
}

WreathElement WreathProduct::embed_base(std::uint32_t g) const {
  WreathElement w = typed_identity();
  w.f[h_id_] = g;
  return w;
}

WreathElement WreathProduct::embed_top(std::uint32_t h) const {
  WreathElement w = typed_identity();
  w.h = h;
  return w;
}

WreathElement WreathProduct::point_support(const std::vector<std::uint32_t>& hs,
                                           const std::vector<std::uint32_t>& gs) const {
  if (hs.size() != gs.size()) throw InputError("support points and values differ in length");
  WreathElement w = typed_identity();
  std::vector<char> used(h_elems_.size(), 0);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (hs[i] >= h_elems_.size() || gs[i] >= g_elems_.size()) throw InputError("support index out of range");
    if (used[hs[i]]) throw InputError("support points must be distinct");
    if (gs[i] == g_id_) throw InputError("support values must not be the identity");
    used[hs[i]] = 1;
    w.f[hs[i]] = gs[i];
  }
  return w;
}

Element WreathProduct::encode(const WreathElement& w) const {
  Element e;
  e.reserve(w.f.size() + 1);
  for (auto x : w.f) e.push_back(static_cast<std::int32_t>(x));
  e.push_back(static_cast<std::int32_t>(w.h));
  return e;
}

WreathElement WreathProduct::decode(const Element& e) const {
  if (e.size() != h_elems_.size() + 1) throw InputError("malformed wreath element");
  WreathElement w;
  w.f.assign(e.begin(), e.end() - 1);
  w.h = static_cast<std::uint32_t>(e.back());
  return w;
}

std::string WreathProduct::name() const { return "(" + g_->name() + " wr " + h_->name() + ")"; }

Element WreathProduct::identity() const { return encode(typed_identity()); }

Element WreathProduct::multiply(const Element& a, const Element& b) const {
  return encode(mul(decode(a), decode(b)));
}

Element WreathProduct::inverse(const Element& a) const { return encode(inv(decode(a))); }

std::vector<Element> WreathProduct::elements() const {
  // f-major odometer over f(h_0..h_{m-1}), then h
  std::vector<Element> out;
  out.reserve(order_);
  const std::size_t nh = h_elems_.size();
  Element e(nh + 1, 0);
  const auto ng = static_cast<std::int32_t>(g_elems_.size());
  const auto nht = static_cast<std::int32_t>(nh);
  for (std::uint64_t k = 0; k < order_; ++k) {
    out.push_back(e);
    for (std::size_t i = nh + 1; i-- > 0;) {
      const std::int32_t lim = i == nh ? nht : ng;
      if (++e[i] < lim) break;
      e[i] = 0;
    }
  }
  return out;
}

std::string WreathProduct::format(const Element& a) const {
  const WreathElement w = decode(a);
  std::string s = "([";
  bool first = true;
  for (std::size_t x = 0; x < w.f.size(); ++x) {
    if (w.f[x] == g_id_) continue;
    if (!first) s += ",";
    s += h_->format(h_elems_[x]) + "->" + g_->format(g_elems_[w.f[x]]);
    first = false;
  }
  s += "]," + h_->format(h_elems_[w.h]) + ")";
  return s;
}

}  // namespace jaglab::groups
