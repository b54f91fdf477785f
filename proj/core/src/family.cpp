#include "jaglab/family.hpp"

#include <cctype>
#include <charconv>

#include "jaglab/error.hpp"

namespace jaglab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw InputError("bad integer '" + std::string(s) + "' for " + std::string(what));
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

bool starts_with_keyword(std::string_view s) {
  s = trim(s);
  for (std::string_view kw : {"grid:", "abelian:", "sym:", "gl:", "wreath(", "direct(", "twice("}) {
    if (s.substr(0, kw.size()) == kw) return true;
  }
  return false;
}

// key=value pairs separated by ','; the value of the last-seen key absorbs
// bare items (so `mod=4,2` is one key with two values).
std::vector<std::pair<std::string, std::vector<std::string_view>>> keyvals(std::string_view body) {
  std::vector<std::pair<std::string, std::vector<std::string_view>>> out;
  for (auto item : split(body, ',')) {
    item = trim(item);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      if (out.empty()) throw InputError("expected key=value, got '" + std::string(item) + "'");
      out.back().second.push_back(item);
    } else {
      out.push_back({std::string(trim(item.substr(0, eq))), {trim(item.substr(eq + 1))}});
    }
  }
  return out;
}

int single_int(const std::vector<std::pair<std::string, std::vector<std::string_view>>>& kv,
               const std::string& key, std::string_view family) {
  for (const auto& [k, v] : kv) {
    if (k == key) {
      if (v.size() != 1) throw InputError(std::string(family) + ": " + key + " takes one value");
      return static_cast<int>(parse_int(v[0], key));
    }
  }
  throw InputError(std::string(family) + ": missing " + key);
}

void check_keys(const std::vector<std::pair<std::string, std::vector<std::string_view>>>& kv,
                std::initializer_list<std::string_view> allowed, std::string_view family) {
  for (const auto& [k, v] : kv) {
    bool ok = false;
    for (auto a : allowed) ok = ok || a == k;
    if (!ok) throw InputError(std::string(family) + ": unknown parameter '" + k + "'");
  }
}

std::vector<groups::Element> parse_tuples(std::string_view s) {
  std::vector<groups::Element> out;
  s = trim(s);
  while (!s.empty()) {
    if (s.front() != '(') throw InputError("expected '(' in generator list");
    const auto close = s.find(')');
    if (close == std::string_view::npos) throw InputError("unterminated generator tuple");
    groups::Element e;
    for (auto x : split(s.substr(1, close - 1), ',')) e.push_back(static_cast<std::int32_t>(parse_int(x, "generator")));
    out.push_back(std::move(e));
    s = trim(s.substr(close + 1));
  }
  if (out.empty()) throw InputError("empty generator list");
  return out;
}

// Splits "A,B" at the first depth-0 comma whose remainder starts a family.
std::pair<std::string_view, std::string_view> split_pair(std::string_view s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0 && starts_with_keyword(s.substr(i + 1))) {
      return {trim(s.substr(0, i)), trim(s.substr(i + 1))};
    }
  }
  throw InputError("expected two comma-separated families in '" + std::string(s) + "'");
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  text = trim(text);
  FamilySpec spec;
  auto compound = [&](std::string_view kw) -> std::string_view {
    if (text.substr(0, kw.size()) != kw) return {};
    if (text.back() != ')') throw InputError("missing ')' in '" + std::string(text) + "'");
    return text.substr(kw.size(), text.size() - kw.size() - 1);
  };
  if (auto body = compound("wreath("); !body.empty()) {
    spec.kind = FamilySpec::Kind::Wreath;
    auto [a, b] = split_pair(body);
    spec.children = {parse_family(a), parse_family(b)};
    return spec;
  }
  if (auto body = compound("direct("); !body.empty()) {
    spec.kind = FamilySpec::Kind::Direct;
    auto [a, b] = split_pair(body);
    spec.children = {parse_family(a), parse_family(b)};
    return spec;
  }
  if (auto body = compound("twice("); !body.empty()) {
    spec.kind = FamilySpec::Kind::Twice;
    spec.children = {parse_family(body)};
    return spec;
  }
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InputError("unknown family '" + std::string(text) + "'");
  const std::string kind(trim(text.substr(0, colon)));
  const std::string_view body = text.substr(colon + 1);
  if (kind == "grid") {
    auto kv = keyvals(body);
    check_keys(kv, {"d", "l"}, kind);
    spec.kind = FamilySpec::Kind::Grid;
    spec.d = single_int(kv, "d", kind);
    spec.l = single_int(kv, "l", kind);
    if (spec.d < 1 || spec.l < 2) throw InputError("grid needs d >= 1 and l >= 2");
  } else if (kind == "abelian") {
    spec.kind = FamilySpec::Kind::Abelian;
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) throw InputError("abelian: expected mod=...;gens=...");
    auto mods = keyvals(body.substr(0, semi));
    check_keys(mods, {"mod"}, kind);
    if (mods.empty()) throw InputError("abelian: missing mod");
    for (auto m : mods.front().second) {
      const auto v = parse_int(m, "mod");
      if (v < 1) throw InputError("abelian: moduli must be positive");
      spec.moduli.push_back(static_cast<std::int32_t>(v));
    }
    auto rest = trim(body.substr(semi + 1));
    if (rest.substr(0, 5) != "gens=") throw InputError("abelian: expected gens=");
    spec.gens = parse_tuples(rest.substr(5));
  } else if (kind == "sym") {
    auto kv = keyvals(body);
    check_keys(kv, {"n"}, kind);
    spec.kind = FamilySpec::Kind::Sym;
    spec.n = single_int(kv, "n", kind);
    if (spec.n < 2) throw InputError("sym needs n >= 2");
  } else if (kind == "gl") {
    auto kv = keyvals(body);
    check_keys(kv, {"n", "p"}, kind);
    spec.kind = FamilySpec::Kind::GL;
    spec.n = single_int(kv, "n", kind);
    spec.p = single_int(kv, "p", kind);
  } else {
    throw InputError("unknown family '" + kind + "'");
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  auto join = [](const std::vector<std::int32_t>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
  };
  switch (kind) {
    case Kind::Grid: return "grid:d=" + std::to_string(d) + ",l=" + std::to_string(l);
    case Kind::Abelian: {
      std::string s = "abelian:mod=" + join(moduli) + ";gens=";
      for (const auto& g : gens) s += "(" + join(g) + ")";
      return s;
    }
    case Kind::Sym: return "sym:n=" + std::to_string(n);
    case Kind::GL: return "gl:n=" + std::to_string(n) + ",p=" + std::to_string(p);
    case Kind::Wreath: return "wreath(" + children[0].to_string() + "," + children[1].to_string() + ")";
    case Kind::Direct: return "direct(" + children[0].to_string() + "," + children[1].to_string() + ")";
    case Kind::Twice: return "twice(" + children[0].to_string() + ")";
  }
  return {};
}

groups::GeneratedGroup build_group(const FamilySpec& spec, std::uint64_t cap) {
  switch (spec.kind) {
    case FamilySpec::Kind::Grid: return groups::grid_group(spec.d, spec.l);
    case FamilySpec::Kind::Abelian: return groups::abelian_group(spec.moduli, spec.gens);
    case FamilySpec::Kind::Sym: return groups::symmetric_group(spec.n);
    case FamilySpec::Kind::GL: return groups::gl_group(spec.n, spec.p, cap);
    case FamilySpec::Kind::Wreath:
      return groups::wreath_product(build_group(spec.children[0], cap), build_group(spec.children[1], cap), cap);
    case FamilySpec::Kind::Direct:
      return groups::direct_product(build_group(spec.children[0], cap), build_group(spec.children[1], cap));
    case FamilySpec::Kind::Twice: return build_group(spec.children[0], cap);
  }
  throw InternalError("unhandled family kind");
}

FamilyInstance build_family(const FamilySpec& spec, std::uint64_t cap) {
  FamilyInstance inst;
  inst.spec = spec;
  inst.group = build_group(spec, cap);
  inst.cayley = groups::cayley_graph(inst.group, cap);
  if (spec.kind == FamilySpec::Kind::Twice) {
    inst.graph = disjoint_union(inst.cayley.graph, inst.cayley.graph);
  } else {
    inst.graph = inst.cayley.graph;
  }
  return inst;
}

FamilyInstance build_family(std::string_view text, std::uint64_t cap) {
  return build_family(parse_family(text), cap);
}

}  // namespace jaglab
