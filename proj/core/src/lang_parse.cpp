#include <cctype>
#include <charconv>
#include <functional>

#include "jaglab/error.hpp"
#include "jaglab/lang.hpp"

namespace jaglab::lang {

int Program::pebble_index(std::string_view name) const {
  for (std::size_t i = 0; i < pebbles.size(); ++i) {
    if (pebbles[i] == name) return static_cast<int>(i);
  }
  return -1;
}

int Program::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

std::vector<int> Program::domain(int v, std::size_t d) const {
  const Variable& var = vars[v];
  if (var.is_bool) return {0, 1};
  if (!var.is_range) return var.values;
  auto end = [&](const Expr& e) { return e.kind == Expr::Kind::Degree ? static_cast<int>(d) : e.value; };
  std::vector<int> out;
  for (int x = end(var.lo); x <= end(var.hi); ++x) out.push_back(x);
  return out;
}

std::size_t Program::statement_count() const {
  std::function<std::size_t(const std::vector<Stmt>&)> count = [&](const std::vector<Stmt>& b) {
    std::size_t n = 0;
    for (const auto& s : b) n += 1 + count(s.body) + count(s.else_body);
    return n;
  };
  return count(body);
}

namespace {

struct Token {
  enum class Kind { Ident, Number, Sym, Newline, End };
  Kind kind;
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (c == '\n' || c == ';') {
      out.push_back({Token::Kind::Newline, c == ';' ? ";" : "\\n", line});
      if (c == '\n') ++line;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Token::Kind::Ident, std::string(src.substr(i, j - i)), line});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Kind::Number, std::string(src.substr(i, j - i)), line});
      i = j;
      continue;
    }
    static const char* two[] = {":=", "==", "!=", "<=", ">=", "..", "&&"};
    bool matched = false;
    for (const char* t : two) {
      if (src.substr(i, 2) == t) {
        out.push_back({Token::Kind::Sym, t, line});
        i += 2;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::string_view("{}()<>=.,:!+-").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Sym, std::string(1, c), line});
      ++i;
      continue;
    }
    throw InputError(std::string("unexpected character '") + c + "'", line);
  }
  out.push_back({Token::Kind::End, "", line});
  return out;
}

bool is_keyword(std::string_view w) {
  for (std::string_view k : {"pebble", "dir", "bool", "guess", "move", "along", "jump", "to", "set", "if",
                             "else", "while", "repeat", "until", "for", "fail", "accept", "visit", "at",
                             "true", "false", "d", "md", "not"}) {
    if (w == k) return true;
  }
  return false;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Program run() {
    prog_.body = block(false);
    if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
    if (prog_.pebble_index("s") < 0) declare_pebble("s", false, 0);
    if (prog_.t < 0) {
      const int t = prog_.pebble_index("t");
      if (t >= 0) {
        prog_.t = t;
        prog_.at_target[t] = true;
      } else {
        declare_pebble("t", true, 0);
      }
    }
    prog_.s = prog_.pebble_index("s");
    prog_.curr = prog_.pebble_index("curr");
    if (prog_.s == prog_.t) throw InputError("pebble s cannot start on the target");
    return std::move(prog_);
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  [[noreturn]] void fail(const std::string& msg) const { throw InputError(msg, peek().line); }
  bool accept_sym(std::string_view s) {
    if (peek().kind == Token::Kind::Sym && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_word(std::string_view s) {
    if (peek().kind == Token::Kind::Ident && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect_sym(std::string_view s) {
    if (!accept_sym(s)) fail("expected '" + std::string(s) + "', got '" + peek().text + "'");
  }
  void expect_word(std::string_view s) {
    if (!accept_word(s)) fail("expected '" + std::string(s) + "', got '" + peek().text + "'");
  }
  void skip_newlines() {
    while (peek().kind == Token::Kind::Newline) ++pos_;
  }
  std::string ident() {
    if (peek().kind != Token::Kind::Ident) fail("expected an identifier, got '" + peek().text + "'");
    return next().text;
  }
  int number() {
    bool neg = accept_sym("-");
    if (peek().kind != Token::Kind::Number) fail("expected a number, got '" + peek().text + "'");
    const std::string& t = next().text;
    int v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{}) fail("number out of range");
    return neg ? -v : v;
  }

  int declare_pebble(const std::string& name, bool at_target, std::size_t line) {
    if (prog_.pebble_index(name) >= 0 || prog_.var_index(name) >= 0) {
      throw InputError("'" + name + "' is already declared", line);
    }
    prog_.pebbles.push_back(name);
    prog_.at_target.push_back(at_target);
    const int idx = static_cast<int>(prog_.pebbles.size()) - 1;
    if (at_target) {
      if (prog_.t >= 0) throw InputError("only one pebble can start on the target", line);
      prog_.t = idx;
    }
    return idx;
  }

  int declare_var(Variable v, std::size_t line) {
    if (is_keyword(v.name)) throw InputError("'" + v.name + "' is reserved", line);
    if (prog_.pebble_index(v.name) >= 0 || prog_.var_index(v.name) >= 0) {
      throw InputError("'" + v.name + "' is already declared", line);
    }
    prog_.vars.push_back(std::move(v));
    return static_cast<int>(prog_.vars.size()) - 1;
  }

  int pebble_ref(const std::string& name) {
    int p = prog_.pebble_index(name);
    if (p < 0 && (name == "s" || name == "t")) p = declare_pebble(name, name == "t", peek().line);
    if (p < 0) fail("undeclared pebble '" + name + "'");
    return p;
  }

  bool is_pebble(const std::string& name) const {
    return prog_.pebble_index(name) >= 0 || ((name == "s" || name == "t") && prog_.var_index(name) < 0);
  }

  int scratch() {
    if (scratch_ < 0) scratch_ = declare_pebble("_scratch", false, peek().line);
    return scratch_;
  }

  Expr expr() {
    Expr e;
    if (peek().kind == Token::Kind::Number || (peek().kind == Token::Kind::Sym && peek().text == "-")) {
      e.kind = Expr::Kind::Const;
      e.value = number();
      return e;
    }
    const std::string name = ident();
    if (name == "d" || name == "md") {
      e.kind = Expr::Kind::Degree;
      return e;
    }
    const int v = prog_.var_index(name);
    if (v < 0) fail("undeclared variable '" + name + "'");
    if (prog_.vars[v].is_bool) fail("boolean '" + name + "' used as a number");
    e.var = v;
    e.kind = Expr::Kind::Var;
    if (peek().kind == Token::Kind::Sym && (peek().text == "+" || peek().text == "-")) {
      const bool minus = next().text == "-";
      e.kind = Expr::Kind::VarPlus;
      e.value = minus ? -number() : number();
    }
    return e;
  }

  Variable domain(std::string name) {
    Variable v;
    v.name = std::move(name);
    if (accept_word("bool")) {
      v.is_bool = true;
      return v;
    }
    if (accept_sym("{")) {
      v.is_range = false;
      do {
        v.values.push_back(number());
      } while (accept_sym(","));
      expect_sym("}");
      return v;
    }
    auto end = [&]() {
      Expr e;
      if (accept_word("d") || accept_word("md")) {
        e.kind = Expr::Kind::Degree;
      } else if (peek().kind == Token::Kind::Number) {
        e.value = number();
      } else {
        fail("domain bounds must be integers or d, got '" + peek().text + "'");
      }
      return e;
    };
    v.lo = end();
    expect_sym("..");
    v.hi = end();
    return v;
  }

  std::optional<Cond::Op> comparator() {
    static const std::pair<const char*, Cond::Op> ops[] = {
        {"==", Cond::Op::Eq}, {"!=", Cond::Op::Ne}, {"<=", Cond::Op::Le},
        {">=", Cond::Op::Ge}, {"<", Cond::Op::Lt},  {">", Cond::Op::Gt}};
    for (auto [s, op] : ops) {
      if (accept_sym(s)) return op;
    }
    return std::nullopt;
  }

  // `pre` receives desugaring statements; null where none are allowed.
  Cond cond(std::vector<Stmt>* pre) {
    if (accept_sym("(")) {
      Cond c = cond(pre);
      expect_sym(")");
      return c;
    }
    Cond c;
    const std::size_t line = peek().line;
    if (accept_sym("!") || accept_word("not")) {
      c = cond(pre);
      c.negate = !c.negate;
      return c;
    }
    if (accept_word("true")) return c;
    if (accept_word("false")) {
      c.negate = true;
      return c;
    }
    if (peek().kind == Token::Kind::Ident && is_pebble(peek().text)) {
      int a = pebble_ref(ident());
      if (accept_sym(".")) {
        if (!pre) fail("'p.e' comparisons are only allowed in if conditions");
        Expr e = expr();
        const int sc = scratch();
        Stmt j;
        j.kind = Stmt::Kind::Jump;
        j.line = line;
        j.a = sc;
        j.b = a;
        Stmt m;
        m.kind = Stmt::Kind::Move;
        m.line = line;
        m.a = sc;
        m.e = e;
        pre->push_back(std::move(j));
        pre->push_back(std::move(m));
        a = sc;
      }
      auto op = comparator();
      if (!op || (*op != Cond::Op::Eq && *op != Cond::Op::Ne)) fail("pebbles compare with == or !=");
      c.kind = Cond::Kind::PebblesEqual;
      c.a = a;
      c.b = pebble_ref(ident());
      c.negate = *op == Cond::Op::Ne;
      return c;
    }
    if (peek().kind == Token::Kind::Ident) {
      const int v = prog_.var_index(peek().text);
      if (v >= 0 && prog_.vars[v].is_bool) {
        ++pos_;
        c.kind = Cond::Kind::BoolVar;
        c.var = v;
        if (auto op = comparator()) {
          if (*op != Cond::Op::Eq && *op != Cond::Op::Ne) fail("booleans compare with == or !=");
          bool rhs = true;
          if (accept_word("false")) rhs = false;
          else expect_word("true");
          c.negate = (*op == Cond::Op::Ne) == rhs;
        }
        return c;
      }
    }
    c.kind = Cond::Kind::Compare;
    c.lhs = expr();
    auto op = comparator();
    if (!op) fail("expected a comparison");
    c.op = *op;
    c.rhs = expr();
    return c;
  }

  std::vector<Stmt> body() {
    skip_newlines();
    if (accept_sym("{")) {
      auto b = block(true);
      expect_sym("}");
      return b;
    }
    std::vector<Stmt> b;
    statement(b);
    return b;
  }

  std::vector<Stmt> block(bool braced) {
    std::vector<Stmt> out;
    while (true) {
      skip_newlines();
      if (peek().kind == Token::Kind::End) break;
      if (braced && peek().kind == Token::Kind::Sym && peek().text == "}") break;
      statement(out);
      if (peek().kind != Token::Kind::Newline && peek().kind != Token::Kind::End &&
          !(peek().kind == Token::Kind::Sym && peek().text == "}")) {
        fail("expected end of statement, got '" + peek().text + "'");
      }
    }
    return out;
  }

  void statement(std::vector<Stmt>& out) {
    const std::size_t line = peek().line;
    Stmt st;
    st.line = line;
    if (peek().kind != Token::Kind::Ident) fail("expected a statement, got '" + peek().text + "'");
    const std::string w = ident();
    if (w == "pebble") {
      do {
        const std::string name = ident();
        if (is_keyword(name)) fail("'" + name + "' is reserved");
        bool at_target = false;
        if (accept_word("at")) {
          if (accept_word("target")) at_target = true;
          else expect_word("start");
        }
        declare_pebble(name, at_target, line);
      } while (accept_sym(","));
      return;
    }
    if (w == "dir") {
      const std::string name = ident();
      expect_sym(":");
      Variable v = domain(name);
      if (v.is_bool) fail("use 'bool' to declare booleans");
      declare_var(std::move(v), line);
      return;
    }
    if (w == "bool") {
      do {
        Variable v;
        v.name = ident();
        v.is_bool = true;
        declare_var(std::move(v), line);
      } while (accept_sym(","));
      return;
    }
    if (w == "guess") {
      const std::string name = ident();
      int v = prog_.var_index(name);
      if (accept_sym(":")) {
        Variable decl = domain(name);
        if (v < 0) {
          v = declare_var(std::move(decl), line);
        } else if (decl.is_bool != prog_.vars[v].is_bool) {
          fail("'" + name + "' guessed with a different type than declared");
        }
      } else if (v < 0) {
        Variable decl;
        decl.name = name;
        decl.is_bool = true;
        v = declare_var(std::move(decl), line);
      }
      st.kind = Stmt::Kind::Guess;
      st.var = v;
      out.push_back(std::move(st));
      return;
    }
    if (w == "move") {
      st.kind = Stmt::Kind::Move;
      st.a = pebble_ref(ident());
      expect_word("along");
      st.e = expr();
      out.push_back(std::move(st));
      return;
    }
    if (w == "jump") {
      st.kind = Stmt::Kind::Jump;
      st.a = pebble_ref(ident());
      expect_word("to");
      st.b = pebble_ref(ident());
      out.push_back(std::move(st));
      return;
    }
    if (w == "visit") {
      if (prog_.pebble_index("curr") < 0) fail("'visit' needs a pebble named curr");
      st.kind = Stmt::Kind::Jump;
      st.a = prog_.pebble_index("curr");
      st.b = pebble_ref(ident());
      out.push_back(std::move(st));
      return;
    }
    if (w == "set") {
      const std::string name = ident();
      expect_sym("=");
      assign_var(name, st, out);
      return;
    }
    if (w == "if") {
      std::vector<Stmt> pre;
      st.kind = Stmt::Kind::If;
      st.cond = cond(&pre);
      st.body = body();
      const std::size_t save = pos_;
      skip_newlines();
      if (accept_word("else")) {
        if (peek().kind == Token::Kind::Ident && peek().text == "if") {
          statement(st.else_body);
        } else {
          st.else_body = body();
        }
      } else {
        pos_ = save;
      }
      for (auto& p : pre) out.push_back(std::move(p));
      out.push_back(std::move(st));
      return;
    }
    if (w == "while") {
      st.kind = Stmt::Kind::While;
      st.cond = cond(nullptr);
      st.body = body();
      out.push_back(std::move(st));
      return;
    }
    if (w == "repeat") {
      st.kind = Stmt::Kind::Repeat;
      st.body = body();
      skip_newlines();
      if (accept_word("until")) {
        st.cond = cond(nullptr);
        st.cond.negate = !st.cond.negate;
      } else {
        expect_word("while");
        st.cond = cond(nullptr);
      }
      out.push_back(std::move(st));
      return;
    }
    if (w == "for") {
      const std::string name = ident();
      st.var = prog_.var_index(name);
      if (st.var < 0) fail("undeclared variable '" + name + "'");
      if (prog_.vars[st.var].is_bool) fail("for-loops need a dir variable");
      expect_sym("=");
      st.kind = Stmt::Kind::For;
      st.e = expr();
      expect_word("to");
      st.hi = expr();
      st.body = body();
      out.push_back(std::move(st));
      return;
    }
    if (w == "fail") {
      st.kind = Stmt::Kind::Fail;
      out.push_back(std::move(st));
      return;
    }
    if (w == "accept") {
      st.kind = Stmt::Kind::Accept;
      out.push_back(std::move(st));
      return;
    }
    // assignment
    expect_sym(":=");
    if (prog_.var_index(w) >= 0) {
      assign_var(w, st, out);
      return;
    }
    const int a = pebble_ref(w);
    const int b = pebble_ref(ident());
    st.kind = Stmt::Kind::Jump;
    st.a = a;
    st.b = b;
    if (accept_sym(".")) {
      Stmt m;
      m.kind = Stmt::Kind::Move;
      m.line = line;
      m.a = a;
      m.e = expr();
      if (a == b) {
        out.push_back(std::move(m));
        return;
      }
      out.push_back(std::move(st));
      out.push_back(std::move(m));
      return;
    }
    out.push_back(std::move(st));
  }

  void assign_var(const std::string& name, Stmt& st, std::vector<Stmt>& out) {
    st.kind = Stmt::Kind::Set;
    st.var = prog_.var_index(name);
    if (st.var < 0) fail("undeclared variable '" + name + "'");
    if (prog_.vars[st.var].is_bool) {
      if (accept_word("true")) {
        st.e.value = 1;
      } else if (accept_word("false")) {
        st.e.value = 0;
      } else {
        fail("booleans are set to true or false");
      }
    } else {
      st.e = expr();
    }
    out.push_back(std::move(st));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Program prog_;
  int scratch_ = -1;
};

void check_block(const Program& prog, const std::vector<Stmt>& b, std::size_t d) {
  auto label = [&](const Expr& e, std::size_t line) {
    if (e.kind == Expr::Kind::Const && (e.value < 1 || static_cast<std::size_t>(e.value) > d)) {
      throw InputError("label " + std::to_string(e.value) + " outside 1.." + std::to_string(d), line);
    }
  };
  for (const auto& st : b) {
    if (st.kind == Stmt::Kind::Move) label(st.e, st.line);
    check_block(prog, st.body, d);
    check_block(prog, st.else_body, d);
  }
}

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).run(); }

void check(const Program& prog, std::size_t d) {
  for (std::size_t v = 0; v < prog.vars.size(); ++v) {
    if (prog.domain(static_cast<int>(v), d).empty()) {
      throw InputError("variable '" + prog.vars[v].name + "' has an empty domain");
    }
  }
  check_block(prog, prog.body, d);
}

}  // namespace jaglab::lang
