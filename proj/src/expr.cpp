#include "ulrichlab/expr.hpp"

#include <cctype>
#include <map>
#include <utility>

#include "ulrichlab/error.hpp"

namespace ulab {

namespace {

enum class Tk { Ident, Int, LParen, RParen, Comma, Semi, Eq, End };

struct Token {
  Tk kind = Tk::End;
  std::string text;
  long ival = 0;
  int line = 1;
  int col = 0;
  int pos = 0;
};

std::string at(const Token& t) {
  return "at position " + std::to_string(t.pos) + " (line " +
         std::to_string(t.line) + ", col " + std::to_string(t.col) + ")";
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 0;
  size_t i = 0;
  auto step = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        col = 0;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      step(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    t.pos = static_cast<int>(i);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      t.kind = Tk::Int;
      t.text = text.substr(i, j - i);
      try {
        t.ival = std::stol(t.text);
      } catch (const std::out_of_range&) {
        fail(Errc::SyntaxError, "integer literal too large " + at(t));
      }
      step(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_' || text[j] == '-'))
        ++j;
      t.kind = Tk::Ident;
      t.text = text.substr(i, j - i);
      step(j - i);
    } else {
      switch (c) {
        case '(': t.kind = Tk::LParen; break;
        case ')': t.kind = Tk::RParen; break;
        case ',': t.kind = Tk::Comma; break;
        case ';': t.kind = Tk::Semi; break;
        case '=': t.kind = Tk::Eq; break;
        default:
          fail(Errc::SyntaxError, "unexpected character '" +
               std::string(1, c) + "' " + at(t));
      }
      t.text = std::string(1, c);
      step(1);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tk::End;
  end.line = line;
  end.col = col;
  end.pos = static_cast<int>(text.size());
  out.push_back(end);
  return out;
}

const std::vector<std::string>& query_keywords() {
  static const std::vector<std::string> kw = {
      "classify", "aclassify", "tor", "ext",
      "resolve",  "dualitycheck", "verify"};
  return kw;
}

bool is_query_keyword(const std::string& s) {
  for (const auto& k : query_keywords())
    if (k == s) return true;
  return false;
}

struct Parser {
  std::vector<Token> toks;
  size_t idx = 0;

  const Token& peek() const { return toks[idx]; }
  Token take() { return toks[idx++]; }

  [[noreturn]] void err(const std::string& what) {
    fail(Errc::SyntaxError, what + " " + at(peek()));
  }

  void expect(Tk k, const std::string& what) {
    if (peek().kind != k) err("expected " + what);
    ++idx;
  }

  ExprNode parse_expr() {
    const Token& t = peek();
    if (t.kind == Tk::Int) {
      ExprNode e;
      e.kind = ExprNode::Kind::IntLit;
      e.ival = t.ival;
      e.line = t.line;
      e.col = t.col;
      ++idx;
      return e;
    }
    if (t.kind != Tk::Ident) err("expected an expression");
    ExprNode e;
    e.name = t.text;
    e.line = t.line;
    e.col = t.col;
    ++idx;
    if (peek().kind != Tk::LParen) {
      e.kind = ExprNode::Kind::Name;
      return e;
    }
    ++idx;  // (
    e.kind = ExprNode::Kind::Call;
    if (peek().kind != Tk::RParen) {
      e.args.push_back(parse_expr());
      while (peek().kind == Tk::Comma || peek().kind == Tk::Semi) {
        if (take().kind == Tk::Semi) {
          if (e.semi_at >= 0) err("a call may contain only one ';'");
          e.semi_at = static_cast<int>(e.args.size());
        }
        e.args.push_back(parse_expr());
      }
    }
    expect(Tk::RParen, "')'");
    return e;
  }

  // query argument expr; a parenthesized form is accepted after
  // classify/aclassify so that aclassify(M) reads naturally
  ExprNode parse_query_operand() {
    if (peek().kind == Tk::LParen) {
      ++idx;
      auto e = parse_expr();
      expect(Tk::RParen, "')'");
      return e;
    }
    return parse_expr();
  }

  LetStmt parse_let() {
    ++idx;  // let
    if (peek().kind != Tk::Ident) err("expected a name after 'let'");
    LetStmt s;
    s.name = take().text;
    expect(Tk::Eq, "'='");
    s.value = parse_expr();
    return s;
  }

  Query parse_query() {
    if (peek().kind != Tk::Ident || !is_query_keyword(peek().text))
      err("expected a query (classify, aclassify, tor, ext, resolve, "
          "dualitycheck, verify)");
    Query q;
    q.kind = take().text;
    if (q.kind == "classify" || q.kind == "aclassify") {
      q.args.push_back(parse_query_operand());
    } else if (q.kind == "verify") {
      if (peek().kind != Tk::Ident) err("expected a theorem id after 'verify'");
      q.verify_id = take().text;
      long* slots[2] = {&q.verify_max_gen, &q.verify_max_deg};
      int got = 0;
      while (peek().kind == Tk::Int && got < 2) *slots[got++] = take().ival;
      if (peek().kind == Tk::Int) q.verify_jobs = static_cast<int>(take().ival);
    } else {
      int want = q.kind == "resolve" ? 2 : 3;
      expect(Tk::LParen, "'('");
      for (int k = 0; k < want; ++k) {
        if (k) expect(Tk::Comma, "','");
        q.args.push_back(parse_expr());
      }
      expect(Tk::RParen, "')'");
    }
    return q;
  }

  Program parse_program_toks() {
    Program p;
    while (peek().kind == Tk::Ident && peek().text == "let") {
      p.lets.push_back(parse_let());
      expect(Tk::Semi, "';'");
    }
    p.query = parse_query();
    if (peek().kind == Tk::Semi) ++idx;
    if (peek().kind != Tk::End) err("unexpected trailing input");
    return p;
  }

  // statements followed by one bare expression, the subcommand form
  std::pair<std::vector<LetStmt>, ExprNode> parse_lets_and_expr() {
    std::vector<LetStmt> lets;
    while (peek().kind == Tk::Ident && peek().text == "let") {
      lets.push_back(parse_let());
      expect(Tk::Semi, "';'");
    }
    auto e = parse_expr();
    if (peek().kind == Tk::Semi) ++idx;
    if (peek().kind != Tk::End) err("unexpected trailing input");
    return {std::move(lets), std::move(e)};
  }
};

// ---- evaluation ----

struct Env {
  std::map<std::string, Value> names;
  SgpPtr current;  // most recently built semigroup

  const SgpPtr& need_sgp(const ExprNode& e) {
    if (!current)
      fail(Errc::TypeError,
           e.name + ": no semigroup in scope; bind one with let S = sgp(...)");
    return current;
  }
};

std::string value_kind(const Value& v) {
  switch (v.index()) {
    case 0: return "integer";
    case 1: return "semigroup";
    case 2: return "ideal";
    case 3: return "module";
    default: return "artinian module";
  }
}

long expect_int(const Value& v, const std::string& ctor) {
  if (auto* p = std::get_if<long>(&v)) return *p;
  fail(Errc::TypeError, ctor + " expects an integer, got " + value_kind(v));
}

RelativeIdeal expect_ideal(const Value& v, const std::string& ctor) {
  if (auto* p = std::get_if<RelativeIdeal>(&v)) return *p;
  fail(Errc::TypeError, ctor + " expects an ideal, got " + value_kind(v));
}

PresentedModule expect_module(const Value& v, const std::string& ctor) {
  if (auto* p = std::get_if<PresentedModule>(&v)) return *p;
  fail(Errc::TypeError,
       ctor + " expects a graded module, got " + value_kind(v));
}

ArtinModule expect_artin(const Value& v, const std::string& ctor) {
  if (auto* p = std::get_if<ArtinModule>(&v)) return *p;
  fail(Errc::TypeError,
       ctor + " expects an artinian module, got " + value_kind(v));
}

// x2y -> exponent vector {2,1}, letters resolved through var_letter
std::vector<int> parse_monomial(const std::string& s, int nvars) {
  std::vector<int> exp(static_cast<size_t>(nvars), 0);
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    int var = -1;
    for (int v = 0; v < nvars; ++v)
      if (var_letter(v) == c) var = v;
    if (var < 0)
      fail(Errc::TypeError, "artin: '" + std::string(1, c) +
           "' is not a variable of a " + std::to_string(nvars) +
           "-variable algebra in relation '" + s + "'");
    ++i;
    long p = 1;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      p = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        p = p * 10 + (s[i++] - '0');
      if (p <= 0)
        fail(Errc::TypeError,
             "artin: zero exponent in relation '" + s + "'");
    }
    exp[static_cast<size_t>(var)] += static_cast<int>(p);
  }
  return exp;
}

Value eval_expr(const ExprNode& e, Env& env);

Value eval_call(const ExprNode& e, Env& env) {
  const std::string& f = e.name;
  auto arity = [&](size_t n) {
    if (e.args.size() != n)
      fail(Errc::TypeError, f + " expects " + std::to_string(n) +
           " argument(s), got " + std::to_string(e.args.size()));
  };
  if (f == "sgp") {
    if (e.args.empty()) fail(Errc::TypeError, "sgp expects generators");
    std::vector<long> gens;
    for (const auto& a : e.args)
      gens.push_back(expect_int(eval_expr(a, env), f));
    auto s = make_semigroup(gens);
    env.current = s;
    return s;
  }
  if (f == "ideal") {
    if (e.args.empty()) fail(Errc::TypeError, "ideal expects generators");
    auto s = env.need_sgp(e);
    std::vector<long> gens;
    for (const auto& a : e.args)
      gens.push_back(expect_int(eval_expr(a, env), f));
    return RelativeIdeal::normalize(s, gens);
  }
  if (f == "mideal") {
    arity(0);
    return maximal_ideal(env.need_sgp(e));
  }
  if (f == "can") {
    arity(0);
    return canonical_ideal(env.need_sgp(e));
  }
  if (f == "prod" || f == "colon") {
    arity(2);
    auto a = expect_ideal(eval_expr(e.args[0], env), f);
    auto b = expect_ideal(eval_expr(e.args[1], env), f);
    return f == "prod" ? product(a, b) : colon(a, b);
  }
  if (f == "dual") {
    arity(1);
    auto a = expect_ideal(eval_expr(e.args[0], env), f);
    return colon(ring_ideal(a.semigroup()), a);
  }
  if (f == "mod") {
    arity(1);
    return PresentedModule::from_relative_ideal(
        expect_ideal(eval_expr(e.args[0], env), f));
  }
  if (f == "quot") {
    arity(1);
    return PresentedModule::quotient_ring(
        expect_ideal(eval_expr(e.args[0], env), f));
  }
  if (f == "tensor") {
    arity(2);
    auto a = expect_module(eval_expr(e.args[0], env), f);
    auto b = expect_module(eval_expr(e.args[1], env), f);
    return tensor(a, b);
  }
  if (f == "syz") {
    arity(2);
    auto m = expect_module(eval_expr(e.args[0], env), f);
    long i = expect_int(eval_expr(e.args[1], env), f);
    if (i < 1) fail(Errc::TypeError, "syz expects a step >= 1");
    return syzygy_module(m, static_cast<int>(i));
  }
  if (f == "tr") {
    arity(1);
    return transpose_module(expect_module(eval_expr(e.args[0], env), f));
  }
  if (f == "tf") {
    arity(1);
    return mod_torsion(expect_module(eval_expr(e.args[0], env), f));
  }
  if (f == "cdual") {
    arity(1);
    return canonical_dual(expect_module(eval_expr(e.args[0], env), f));
  }
  if (f == "artin") {
    if (e.semi_at != 1 || e.args.empty())
      fail(Errc::TypeError,
           "artin expects artin(nvars; m1, ..., mk) with one ';'");
    long nv = expect_int(eval_expr(e.args[0], env), f);
    if (nv < 1 || nv > 6)
      fail(Errc::TypeError, "artin expects between 1 and 6 variables");
    std::vector<std::vector<int>> rels;
    for (size_t k = 1; k < e.args.size(); ++k) {
      const auto& a = e.args[k];
      if (a.kind != ExprNode::Kind::Name)
        fail(Errc::TypeError,
             "artin relations must be monomial words like x2y");
      rels.push_back(parse_monomial(a.name, static_cast<int>(nv)));
    }
    return regular_module(build_algebra(static_cast<int>(nv), rels));
  }
  if (f == "adual") {
    arity(1);
    return matlis_dual(expect_artin(eval_expr(e.args[0], env), f));
  }
  fail(Errc::TypeError, "unknown constructor '" + f + "'");
}

Value eval_expr(const ExprNode& e, Env& env) {
  switch (e.kind) {
    case ExprNode::Kind::IntLit:
      return e.ival;
    case ExprNode::Kind::Name: {
      auto it = env.names.find(e.name);
      if (it != env.names.end()) return it->second;
      if (e.name == "mideal") return maximal_ideal(env.need_sgp(e));
      if (e.name == "can") return canonical_ideal(env.need_sgp(e));
      fail(Errc::TypeError, "unknown name '" + e.name + "'");
    }
    case ExprNode::Kind::Call:
      return eval_call(e, env);
  }
  fail(Errc::Computation, "unreachable expression kind");
}

void run_lets(const std::vector<LetStmt>& lets, Env& env) {
  for (const auto& s : lets) env.names[s.name] = eval_expr(s.value, env);
}

EvalResult eval_query(const Query& q, Env& env) {
  EvalResult r;
  r.kind = q.kind;
  if (q.kind == "classify") {
    r.ulrich = classify(expect_module(eval_expr(q.args[0], env), q.kind));
  } else if (q.kind == "aclassify") {
    r.artin = artin_invariants(expect_artin(eval_expr(q.args[0], env), q.kind));
  } else if (q.kind == "tor" || q.kind == "ext") {
    auto m = expect_module(eval_expr(q.args[0], env), q.kind);
    auto n = expect_module(eval_expr(q.args[1], env), q.kind);
    long i = expect_int(eval_expr(q.args[2], env), q.kind);
    if (i < 1) fail(Errc::TypeError, q.kind + " expects an index >= 1");
    r.table_index = static_cast<int>(i);
    r.table = q.kind == "tor" ? tor_table(static_cast<int>(i), m, n)
                              : ext_table(static_cast<int>(i), m, n);
  } else if (q.kind == "resolve") {
    auto m = expect_module(eval_expr(q.args[0], env), q.kind);
    long steps = expect_int(eval_expr(q.args[1], env), q.kind);
    if (steps < 0) fail(Errc::TypeError, "resolve expects steps >= 0");
    r.betti = resolve(m, static_cast<int>(steps)).betti;
  } else if (q.kind == "dualitycheck") {
    auto m = expect_module(eval_expr(q.args[0], env), q.kind);
    auto n = expect_module(eval_expr(q.args[1], env), q.kind);
    long imax = expect_int(eval_expr(q.args[2], env), q.kind);
    if (imax < 1) fail(Errc::TypeError, "dualitycheck expects imax >= 1");
    r.duality = check_duality(m, n, static_cast<int>(imax));
    for (const auto& row : r.duality)
      if (row.gate_ok && !row.equal) r.failed = true;
  } else if (q.kind == "verify") {
    if (!is_verifier_id(q.verify_id))
      fail(Errc::TypeError, "unknown theorem id '" + q.verify_id + "'");
    r.verifier = run_verifier(q.verify_id, q.verify_max_gen, q.verify_max_deg,
                              q.verify_jobs);
    r.failed = !r.verifier->counterexamples.empty();
    r.errored = !r.verifier->errors.empty();
  } else {
    fail(Errc::Computation, "unhandled query kind " + q.kind);
  }
  return r;
}

}  // namespace

Program parse_program(const std::string& text) {
  Parser p{lex(text)};
  return p.parse_program_toks();
}

std::string print_expr(const ExprNode& e) {
  switch (e.kind) {
    case ExprNode::Kind::IntLit:
      return std::to_string(e.ival);
    case ExprNode::Kind::Name:
      return e.name;
    case ExprNode::Kind::Call: {
      std::string out = e.name + "(";
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += e.semi_at == static_cast<int>(i) ? "; " : ", ";
        out += print_expr(e.args[i]);
      }
      return out + ")";
    }
  }
  return "?";
}

std::string print_program(const Program& p) {
  std::string out;
  for (const auto& s : p.lets)
    out += "let " + s.name + " = " + print_expr(s.value) + "; ";
  const Query& q = p.query;
  if (q.kind == "classify" || q.kind == "aclassify") {
    out += q.kind + " " + print_expr(q.args[0]);
  } else if (q.kind == "verify") {
    out += "verify " + q.verify_id + " " + std::to_string(q.verify_max_gen) +
           " " + std::to_string(q.verify_max_deg) + " " +
           std::to_string(q.verify_jobs);
  } else {
    out += q.kind + "(";
    for (size_t i = 0; i < q.args.size(); ++i) {
      if (i) out += ", ";
      out += print_expr(q.args[i]);
    }
    out += ")";
  }
  return out;
}

bool expr_equal(const ExprNode& a, const ExprNode& b) {
  if (a.kind != b.kind || a.semi_at != b.semi_at) return false;
  if (a.kind == ExprNode::Kind::IntLit) return a.ival == b.ival;
  if (a.name != b.name) return false;
  if (a.args.size() != b.args.size()) return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (!expr_equal(a.args[i], b.args[i])) return false;
  return true;
}

EvalResult eval_program(const Program& p) {
  Env env;
  run_lets(p.lets, env);
  return eval_query(p.query, env);
}

EvalResult eval_text(const std::string& text) {
  return eval_program(parse_program(text));
}

EvalResult eval_classify_with_ideal(const std::string& text,
                                    const std::string& ideal_text) {
  Parser p{lex(text)};
  auto [lets, body] = p.parse_lets_and_expr();
  Env env;
  run_lets(lets, env);
  auto m = expect_module(eval_expr(body, env), "classify");
  EvalResult r;
  r.kind = "classify";
  if (ideal_text.empty()) {
    r.ulrich = classify(m);
    return r;
  }
  Parser pi{lex(ideal_text)};
  auto ie = pi.parse_expr();
  if (pi.peek().kind != Tk::End)
    fail(Errc::SyntaxError, "unexpected trailing input " + at(pi.peek()));
  r.ulrich = classify(m, expect_ideal(eval_expr(ie, env), "classify"));
  return r;
}

}  // namespace ulab
