#include "jaglab/jag.hpp"

#include <charconv>
#include <istream>
#include <shared_mutex>
#include <sstream>

#include "jaglab/error.hpp"

namespace jaglab {

Partition partition_of(std::span<const NodeId> nodes) {
  Partition rep(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::size_t j = 0;
    while (nodes[j] != nodes[i]) ++j;
    rep[i] = static_cast<std::uint8_t>(j);
  }
  return rep;
}

std::vector<Partition> all_partitions(std::size_t p) {
  std::vector<Partition> out;
  if (p == 0) {
    out.emplace_back();
    return out;
  }
  // restricted growth strings a[0]=0, a[i] <= 1 + max(a[0..i-1]); the
  // representative of block b is its first member
  std::vector<std::size_t> a(p, 0);
  while (true) {
    Partition rep(p);
    std::vector<std::size_t> first(p, SIZE_MAX);
    for (std::size_t i = 0; i < p; ++i) {
      if (first[a[i]] == SIZE_MAX) first[a[i]] = i;
      rep[i] = static_cast<std::uint8_t>(first[a[i]]);
    }
    out.push_back(std::move(rep));
    std::size_t i = p;
    while (true) {
      if (--i == 0) return out;
      std::size_t mx = 0;
      for (std::size_t j = 0; j < i; ++j) mx = std::max(mx, a[j]);
      if (a[i] <= mx) {
        ++a[i];
        for (std::size_t j = i + 1; j < p; ++j) a[j] = 0;
        break;
      }
    }
  }
}

namespace {

std::uint64_t pack(const Partition& pi) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < pi.size(); ++i) k |= static_cast<std::uint64_t>(pi[i]) << (4 * i);
  return k;
}

struct RowKey {
  StateId q;
  std::uint64_t pi;
  bool operator==(const RowKey&) const = default;
};

struct RowKeyHash {
  std::size_t operator()(const RowKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.pi * 0x9e3779b97f4a7c15ULL ^ k.q);
  }
};

}  // namespace

struct NdJag::Cache {
  mutable std::shared_mutex mu;
  std::unordered_map<RowKey, std::vector<Transition>, RowKeyHash> rows;
};

NdJag::NdJag(std::size_t num_states, std::size_t num_pebbles, std::size_t degree, StateId start,
             StateId accept)
    : num_states_(num_states), num_pebbles_(num_pebbles), degree_(degree), start_(start),
      accept_(accept), cache_(std::make_shared<Cache>()) {
  if (num_states_ == 0) throw InputError("automaton needs at least one state");
  if (num_pebbles_ == 0) throw InputError("automaton needs at least one pebble");
  if (num_pebbles_ > kMaxPebbles) {
    throw InputError("at most " + std::to_string(kMaxPebbles) + " pebbles are supported");
  }
  if (degree_ == 0) throw InputError("degree must be at least 1");
  if (start_ >= num_states_ || accept_ >= num_states_) throw InputError("start/accept state out of range");
  names_.resize(num_pebbles_);
  for (std::size_t i = 0; i < num_pebbles_; ++i) names_[i] = "p" + std::to_string(i + 1);
}

NdJag NdJag::lazy(std::size_t num_states, std::size_t num_pebbles, std::size_t degree, StateId start,
                  StateId accept, DeltaFn fn) {
  NdJag j(num_states, num_pebbles, degree, start, accept);
  j.fn_ = std::move(fn);
  return j;
}

void NdJag::designate(PebbleId s, PebbleId t, std::optional<PebbleId> curr) {
  if (s >= num_pebbles_ || t >= num_pebbles_ || (curr && *curr >= num_pebbles_)) {
    throw InputError("designated pebble out of range");
  }
  s_ = s;
  t_ = t;
  curr_ = curr;
}

void NdJag::set_pebble_names(std::vector<std::string> names) {
  if (names.size() != num_pebbles_) throw InputError("pebble name count mismatch");
  names_ = std::move(names);
}

void NdJag::check_transition(const Transition& t) const {
  if (t.next >= num_states_) throw InputError("transition target state out of range");
  if (t.moves.size() != num_pebbles_) throw InputError("move vector length differs from pebble count");
  for (const Move& m : t.moves) {
    if (m.kind == Move::Kind::Along && (m.arg < 1 || m.arg > degree_)) {
      throw InputError("move label " + std::to_string(m.arg) + " outside 1.." + std::to_string(degree_));
    }
    if (m.kind == Move::Kind::Jump && m.arg >= num_pebbles_) throw InputError("jump target out of range");
  }
}

void NdJag::add_transition(StateId q, const Partition& pi, Transition t) {
  if (fn_) throw InputError("cannot add rows to a lazily defined automaton");
  if (q >= num_states_) throw InputError("state out of range");
  if (pi.size() != num_pebbles_ || partition_of(std::vector<NodeId>(pi.begin(), pi.end())) != pi) {
    throw InputError("partition is not in canonical form");
  }
  check_transition(t);
  std::unique_lock lock(cache_->mu);
  cache_->rows[{q, pack(pi)}].push_back(std::move(t));
}

const std::vector<Transition>& NdJag::delta(StateId q, const Partition& pi) const {
  static const std::vector<Transition> kEmpty;
  const RowKey key{q, pack(pi)};
  {
    std::shared_lock lock(cache_->mu);
    auto it = cache_->rows.find(key);
    if (it != cache_->rows.end()) return it->second;
  }
  if (!fn_) return kEmpty;
  auto ts = fn_(q, pi);
  for (const auto& t : ts) check_transition(t);
  std::unique_lock lock(cache_->mu);
  return cache_->rows.emplace(key, std::move(ts)).first->second;
}

std::size_t NdJag::rows_cached() const {
  std::shared_lock lock(cache_->mu);
  return cache_->rows.size();
}

Configuration initial_config(const NdJag& jag, const LabelledGraph& g) {
  Configuration c;
  c.state = jag.start_state();
  c.node.assign(jag.num_pebbles(), g.startnode());
  c.node[jag.t_pebble()] = g.targetnode();
  return c;
}

std::vector<NodeId> apply_moves(const LabelledGraph& g, std::span<const NodeId> node,
                                std::span<const Move> moves) {
  std::vector<NodeId> out(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    const Move& m = moves[i];
    out[i] = m.kind == Move::Kind::Along ? g.rho(node[i], m.arg) : node[m.arg];
  }
  return out;
}

std::vector<Configuration> step(const NdJag& jag, const LabelledGraph& g, const Configuration& c) {
  std::vector<Configuration> out;
  for (const auto& t : jag.delta(c.state, partition_of(c.node))) {
    out.push_back({t.next, apply_moves(g, c.node, t.moves)});
  }
  return out;
}

JagSystem::JagSystem(const NdJag& jag, const LabelledGraph& g) : jag_(&jag), g_(&g), n_(g.num_nodes()) {
  if (g.degree() != jag.degree()) {
    throw InputError("automaton degree " + std::to_string(jag.degree()) + " differs from graph degree " +
                     std::to_string(g.degree()));
  }
  stride_ = 1;
  for (std::size_t i = 0; i < jag.num_pebbles(); ++i) {
    pow_.push_back(stride_);
    if (stride_ > UINT64_MAX / n_) throw LimitError("configuration space too large to index");
    stride_ *= n_;
  }
  if (jag.num_states() > UINT64_MAX / stride_) throw LimitError("configuration space too large to index");
}

JagSystem::State JagSystem::encode(const Configuration& c) const {
  State x = 0;
  for (std::size_t i = 0; i < c.node.size(); ++i) x += c.node[i] * pow_[i];
  return static_cast<State>(c.state) * stride_ + x;
}

Configuration JagSystem::decode(State x) const {
  Configuration c;
  c.state = state_of(x);
  c.node.resize(pow_.size());
  for (std::size_t i = 0; i < pow_.size(); ++i) c.node[i] = node_of(x, static_cast<PebbleId>(i));
  return c;
}

JagSystem::State JagSystem::initial() const { return encode(initial_config(*jag_, *g_)); }

void JagSystem::successors(State x, std::vector<State>& out) const {
  const std::size_t p = pow_.size();
  NodeId node[kMaxPebbles];
  for (std::size_t i = 0; i < p; ++i) node[i] = node_of(x, static_cast<PebbleId>(i));
  const std::span<const NodeId> nodes(node, p);
  for (const auto& t : jag_->delta(state_of(x), partition_of(nodes))) {
    State y = static_cast<State>(t.next) * stride_;
    for (std::size_t i = 0; i < p; ++i) {
      const Move& m = t.moves[i];
      const NodeId v = m.kind == Move::Kind::Along ? g_->rho(node[i], m.arg) : node[m.arg];
      y += v * pow_[i];
    }
    out.push_back(y);
  }
}

// ----------------------------------------------------------------- text

namespace {

std::uint64_t to_uint(std::string_view s, std::size_t lineno) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw InputError("expected a number, got '" + std::string(s) + "'", lineno);
  }
  return v;
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

NdJag parse_jag(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::uint64_t> states, start, accept, pebbles, degree;
  std::optional<NdJag> jag;
  std::uint64_t ds = 1, dt = 1, dc = 0;
  std::vector<std::string> names;
  auto ensure = [&]() -> NdJag& {
    if (!jag) {
      if (!states || !start || !accept || !pebbles || !degree) {
        throw InputError("header incomplete before transition rows", lineno);
      }
      jag.emplace(*states, *pebbles, *degree, static_cast<StateId>(*start), static_cast<StateId>(*accept));
      if (ds < 1 || dt < 1) throw InputError("designated pebbles are 1-based", lineno);
      jag->designate(static_cast<PebbleId>(ds - 1), static_cast<PebbleId>(dt - 1),
                     dc ? std::optional<PebbleId>(static_cast<PebbleId>(dc - 1)) : std::nullopt);
      if (!names.empty()) jag->set_pebble_names(names);
    }
    return *jag;
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto w = words(line);
    if (w.empty() || w[0][0] == '#') continue;
    const std::string& key = w[0];
    auto one = [&]() {
      if (w.size() != 2) throw InputError("'" + key + "' takes one value", lineno);
      if (jag) throw InputError("header line after transition rows", lineno);
      return to_uint(w[1], lineno);
    };
    if (key == "states") {
      states = one();
    } else if (key == "start") {
      start = one();
    } else if (key == "accept") {
      accept = one();
    } else if (key == "pebbles") {
      pebbles = one();
    } else if (key == "degree") {
      degree = one();
    } else if (key == "designate") {
      for (std::size_t i = 1; i < w.size(); ++i) {
        const auto eq = w[i].find('=');
        if (eq == std::string::npos) throw InputError("expected name=pebble", lineno);
        const auto k = w[i].substr(0, eq);
        const auto v = to_uint(std::string_view(w[i]).substr(eq + 1), lineno);
        if (k == "s") ds = v;
        else if (k == "t") dt = v;
        else if (k == "curr") dc = v;
        else throw InputError("unknown designation '" + k + "'", lineno);
      }
    } else if (key == "names") {
      names.assign(w.begin() + 1, w.end());
    } else {
      NdJag& j = ensure();
      if (w.size() < 4 || w[2] != "->") throw InputError("expected '<q> <partition> -> <q'> moves...'", lineno);
      const auto q = to_uint(w[0], lineno);
      Partition pi;
      std::string_view ps = w[1];
      while (!ps.empty()) {
        const auto comma = ps.find(',');
        const auto item = ps.substr(0, comma);
        const auto r = to_uint(item, lineno);
        if (r < 1 || r > j.num_pebbles()) throw InputError("partition entry out of range", lineno);
        pi.push_back(static_cast<std::uint8_t>(r - 1));
        if (comma == std::string_view::npos) break;
        ps.remove_prefix(comma + 1);
      }
      Transition t;
      t.next = static_cast<StateId>(to_uint(w[3], lineno));
      for (std::size_t i = 4; i < w.size(); ++i) {
        if (w[i].size() < 2 || (w[i][0] != 'm' && w[i][0] != 'j')) {
          throw InputError("bad move '" + w[i] + "'", lineno);
        }
        const auto v = to_uint(std::string_view(w[i]).substr(1), lineno);
        if (w[i][0] == 'm') {
          t.moves.push_back(Move::along(static_cast<EdgeLabel>(v)));
        } else {
          if (v < 1) throw InputError("jump targets are 1-based", lineno);
          t.moves.push_back(Move::jump(static_cast<PebbleId>(v - 1)));
        }
      }
      try {
        j.add_transition(static_cast<StateId>(q), pi, std::move(t));
      } catch (const InputError& e) {
        throw InputError(e.what(), lineno);
      }
    }
  }
  return std::move(ensure());
}

NdJag read_jag(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_jag(buffer.str());
}

std::string serialize_jag(const NdJag& jag, std::size_t max_rows) {
  const auto parts = all_partitions(jag.num_pebbles());
  if (parts.size() * jag.num_states() > max_rows) {
    throw InputError("automaton has too many rows to serialize (" +
                     std::to_string(parts.size() * jag.num_states()) + ")");
  }
  std::ostringstream out;
  out << "states " << jag.num_states() << "\nstart " << jag.start_state() << "\naccept "
      << jag.accept_state() << "\npebbles " << jag.num_pebbles() << "\ndegree " << jag.degree()
      << "\ndesignate s=" << jag.s_pebble() + 1 << " t=" << jag.t_pebble() + 1
      << " curr=" << (jag.curr_pebble() ? *jag.curr_pebble() + 1 : 0) << "\nnames";
  for (const auto& n : jag.pebble_names()) out << ' ' << n;
  out << '\n';
  for (StateId q = 0; q < jag.num_states(); ++q) {
    for (const auto& pi : parts) {
      for (const auto& t : jag.delta(q, pi)) {
        out << q << ' ';
        for (std::size_t i = 0; i < pi.size(); ++i) out << (i ? "," : "") << pi[i] + 1;
        out << " -> " << t.next;
        for (const auto& m : t.moves) {
          if (m.kind == Move::Kind::Along) out << " m" << m.arg;
          else out << " j" << m.arg + 1;
        }
        out << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace jaglab
