#include "bindkit/text.hpp"

#include <algorithm>
#include <set>

#include "bindkit/adequacy.hpp"
#include "bindkit/error.hpp"
#include "bindkit/pi.hpp"
#include "lexer.hpp"

namespace bindkit::text {

using detail::Tok;
using detail::Token;
using detail::TokenStream;

void NameTable::bind(Atom a, std::string name) {
  by_atom_.emplace(a, name);
  by_name_.emplace(std::move(name), a);
}

Atom NameTable::intern(std::string_view name) {
  if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
  while (by_atom_.count(Atom{next_})) ++next_;
  Atom a{next_++};
  bind(a, std::string(name));
  return a;
}

std::optional<Atom> NameTable::find(std::string_view name) const {
  if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
  return std::nullopt;
}

std::string NameTable::name_of(Atom a) {
  if (auto it = by_atom_.find(a); it != by_atom_.end()) return it->second;
  std::string candidate = "x" + std::to_string(a.value);
  while (by_name_.count(candidate)) candidate += "'";
  bind(a, candidate);
  return candidate;
}

AtomSet NameTable::atoms() const {
  AtomSet s;
  for (const auto& entry : by_atom_) s = s | AtomSet::singleton(entry.first);
  return s;
}

namespace {

// ---------------------------------------------------------------------------
// Locally nameless form

struct RawLn {
  enum class Kind { Index, Atom, Op } kind;
  Token where;
  std::size_t index = 0;
  Atom atom{};
  std::string op;
  std::vector<std::pair<std::size_t, RawLn>> args;  // (written depth, argument)
};

RawLn parse_raw_ln(TokenStream& ts, NameTable& names);

std::pair<std::size_t, RawLn> parse_raw_arg(TokenStream& ts, NameTable& names) {
  if (ts.at_punct("(") && ts.peek(1).kind == Tok::Caret) {
    ts.next();
    std::size_t depth = ts.next().number;
    if (depth == 0) TokenStream::fail_at(ts.peek(), "binder depth ^0 is written as a bare argument");
    RawLn body = parse_raw_ln(ts, names);
    ts.expect_punct(")");
    return {depth, std::move(body)};
  }
  return {0, parse_raw_ln(ts, names)};
}

RawLn parse_raw_ln(TokenStream& ts, NameTable& names) {
  const Token& t = ts.peek();
  RawLn raw{RawLn::Kind::Atom, t, 0, {}, {}, {}};
  switch (t.kind) {
    case Tok::Index:
      raw.kind = RawLn::Kind::Index;
      raw.index = ts.next().number;
      return raw;
    case Tok::AtomRef:
      raw.atom = names.intern(ts.next().text);
      return raw;
    case Tok::Punct:
      if (t.text == "(") {
        ts.next();
        raw.kind = RawLn::Kind::Op;
        raw.where = ts.peek();
        raw.op = ts.expect_ident("an operator name");
        while (!ts.at_punct(")")) {
          if (ts.at_end()) ts.fail("expected ')'");
          raw.args.push_back(parse_raw_arg(ts, names));
        }
        ts.next();
        return raw;
      }
      break;
    default:
      break;
  }
  ts.fail("expected a term ('#k', '@name' or '(')");
}

std::size_t min_scope(const RawLn& raw) {
  switch (raw.kind) {
    case RawLn::Kind::Index:
      return raw.index + 1;
    case RawLn::Kind::Atom:
      return 0;
    case RawLn::Kind::Op: {
      std::size_t need = 0;
      for (const auto& [depth, arg] : raw.args) {
        std::size_t inner = min_scope(arg);
        need = std::max(need, inner > depth ? inner - depth : 0);
      }
      return need;
    }
  }
  return 0;
}

Term build_ln(const RawLn& raw, const SignaturePtr& sig, std::size_t scope) {
  switch (raw.kind) {
    case RawLn::Kind::Index:
      if (raw.index >= scope)
        TokenStream::fail_at(raw.where, "index #" + std::to_string(raw.index) + " is out of scope (scope is " +
                                            std::to_string(scope) + ")");
      return Term::make_index(sig, raw.index, scope);
    case RawLn::Kind::Atom:
      return Term::make_atom(sig, raw.atom, scope);
    case RawLn::Kind::Op: {
      const OperatorDecl* decl = sig->lookup(raw.op);
      if (!decl) TokenStream::fail_at(raw.where, "unknown operator '" + raw.op + "' in signature " + sig->name());
      if (decl->arity.size() != raw.args.size())
        TokenStream::fail_at(raw.where, "operator '" + raw.op + "' expects " + std::to_string(decl->arity.size()) +
                                            " arguments, got " + std::to_string(raw.args.size()));
      std::vector<Term> args;
      for (std::size_t i = 0; i < raw.args.size(); ++i) {
        const auto& [depth, arg] = raw.args[i];
        if (depth != decl->arity[i])
          TokenStream::fail_at(arg.where, "argument " + std::to_string(i + 1) + " of '" + raw.op + "' binds " +
                                              std::to_string(decl->arity[i]) + " names, written with depth " +
                                              std::to_string(depth));
        args.push_back(build_ln(arg, sig, scope + depth));
      }
      return Term::make_op(sig, raw.op, std::move(args), scope);
    }
  }
  throw std::logic_error("build_ln: bad kind");
}

Term parse_ln_term(TokenStream& ts, const SignaturePtr& sig, NameTable& names, std::optional<std::size_t> scope) {
  RawLn raw = parse_raw_ln(ts, names);
  std::size_t n = scope ? *scope : min_scope(raw);
  return build_ln(raw, sig, n);
}

// ---------------------------------------------------------------------------
// Nameful form

NomTerm parse_nom_term(TokenStream& ts, const SignaturePtr& sig, NameTable& names) {
  const Token& t = ts.peek();
  if (t.kind == Tok::AtomRef) return NomTerm::make_atom(sig, names.intern(ts.next().text));
  if (!ts.at_punct("(")) ts.fail("expected a nameful term ('@name' or '(')");
  ts.next();
  Token op_tok = ts.peek();
  std::string op = ts.expect_ident("an operator name");
  const OperatorDecl* decl = sig->lookup(op);
  if (!decl) TokenStream::fail_at(op_tok, "unknown operator '" + op + "' in signature " + sig->name());
  std::vector<NomBinding> bindings;
  while (!ts.at_punct(")")) {
    if (ts.at_end()) ts.fail("expected ')'");
    Token start = ts.peek();
    std::vector<Atom> binders;
    if (ts.at_punct("[")) {
      ts.next();
      while (!ts.at_punct("]")) binders.push_back(names.intern(ts.expect_ident("a binder name")));
      ts.next();
      if (binders.empty()) TokenStream::fail_at(start, "empty binder list; write depth-0 arguments bare");
    }
    std::size_t i = bindings.size();
    if (i >= decl->arity.size())
      TokenStream::fail_at(start, "operator '" + op + "' expects " + std::to_string(decl->arity.size()) + " arguments");
    if (binders.size() != decl->arity[i])
      TokenStream::fail_at(start, "argument " + std::to_string(i + 1) + " of '" + op + "' binds " +
                                      std::to_string(decl->arity[i]) + " names, got " +
                                      std::to_string(binders.size()));
    bindings.push_back(bind(std::move(binders), parse_nom_term(ts, sig, names)));
  }
  if (bindings.size() != decl->arity.size())
    TokenStream::fail_at(op_tok, "operator '" + op + "' expects " + std::to_string(decl->arity.size()) +
                                     " arguments, got " + std::to_string(bindings.size()));
  ts.next();
  return NomTerm::make_op(sig, *sig->find(op), std::move(bindings));
}

template <typename Parse>
auto parse_map(std::string_view src, NameTable& names, Parse parse_value) {
  TokenStream ts(src);
  std::vector<std::pair<Atom, decltype(parse_value(ts))>> entries;
  while (!ts.at_end()) {
    Atom x = names.intern(ts.expect_ident("an atom name"));
    ts.expect_punct(":=");
    entries.emplace_back(x, parse_value(ts));
    if (!ts.at_end()) ts.expect_punct(";");
  }
  return entries;
}

}  // namespace

Term parse_ln(std::string_view src, const SignaturePtr& sig, NameTable& names, std::optional<std::size_t> scope) {
  TokenStream ts(src);
  Term t = parse_ln_term(ts, sig, names, scope);
  ts.expect_end();
  return t;
}

NomTerm parse_nom(std::string_view src, const SignaturePtr& sig, NameTable& names) {
  TokenStream ts(src);
  NomTerm m = parse_nom_term(ts, sig, names);
  ts.expect_end();
  return m;
}

std::string print_ln(const Term& t, NameTable& names) { return to_canonical(t, names.namer()); }

std::string print_nom(const NomTerm& m, NameTable& names) { return to_canonical(m, names.namer()); }

Subst parse_subst(std::string_view src, const SignaturePtr& sig, NameTable& names) {
  auto entries = parse_map(src, names, [&](TokenStream& ts) { return parse_ln_term(ts, sig, names, 0); });
  Subst s(sig);
  for (const auto& [x, u] : entries) s = s.updated(x, u);
  return s;
}

NomSubst parse_nom_subst(std::string_view src, const SignaturePtr& sig, NameTable& names) {
  auto entries = parse_map(src, names, [&](TokenStream& ts) { return parse_nom_term(ts, sig, names); });
  NomSubst s(sig);
  for (const auto& [x, m] : entries) s = s.updated(x, m);
  return s;
}

// ---------------------------------------------------------------------------
// Surface syntax

namespace {

/// Names for binders introduced while printing, layered over the table.
class SugarNames {
 public:
  /// `root` is the whole term being printed; binder atoms avoid all of it.
  SugarNames(NameTable& names, const Term& root) : names_(names), avoid_(support(root) | names.atoms()) {}

  std::string name(Atom a) {
    if (auto it = local_.find(a); it != local_.end()) return it->second;
    return names_.name_of(a);
  }

  /// Fresh atom for the binder of a 1-term body, named apart from the body's
  /// free atoms and from every enclosing binder. Valid until release(a).
  Atom binder(const Term& body) {
    Atom a = new_atom(avoid_ | names_.atoms());
    avoid_ = avoid_ | AtomSet::singleton(a);
    std::set<std::string> taken;
    for (Atom b : support(body).elements()) taken.insert(name(b));
    for (const auto& entry : local_) taken.insert(entry.second);
    static const char* const base[] = {"x", "y", "z", "u", "v", "w"};
    std::string chosen;
    for (std::size_t round = 0; chosen.empty(); ++round) {
      for (const char* stem : base) {
        std::string candidate = round == 0 ? stem : stem + std::to_string(round);
        if (!taken.count(candidate)) {
          chosen = candidate;
          break;
        }
      }
    }
    local_.emplace(a, chosen);
    return a;
  }

  void release(Atom a) { local_.erase(a); }

 private:
  NameTable& names_;
  AtomSet avoid_;
  std::map<Atom, std::string> local_;
};

bool is_reserved_t(const std::string& word) {
  return word == "zero" || word == "succ" || word == "natrec" || word == "Nat";
}

systemt::Type parse_type_expr(TokenStream& ts);

systemt::Type parse_type_atom(TokenStream& ts) {
  if (ts.at_ident("Nat")) {
    ts.next();
    return systemt::Type::nat();
  }
  if (ts.at_punct("(")) {
    ts.next();
    systemt::Type a = parse_type_expr(ts);
    ts.expect_punct(")");
    return a;
  }
  ts.fail("expected a type ('Nat' or '(')");
}

systemt::Type parse_type_expr(TokenStream& ts) {
  systemt::Type dom = parse_type_atom(ts);
  if (!ts.at_punct("->")) return dom;
  ts.next();
  return systemt::Type::arrow(dom, parse_type_expr(ts));
}

NomTerm nom_type(const systemt::Type& a) {
  const SignaturePtr& sig = systemt::signature();
  if (a.is_nat()) return NomTerm::make_op(sig, "Nat", {});
  return NomTerm::make_op(sig, "Arr", {bind({}, nom_type(a.dom())), bind({}, nom_type(a.cod()))});
}

class SystemTParser {
 public:
  SystemTParser(TokenStream& ts, NameTable& names) : ts_(ts), names_(names), sig_(systemt::signature()) {}

  NomTerm term() {
    if (ts_.at_punct("\\")) return lambda();
    NomTerm head = app_head();
    while (starts_atomic() || ts_.at_punct("\\")) {
      NomTerm arg = ts_.at_punct("\\") ? lambda() : atomic();
      head = op("ap", {bind({}, head), bind({}, arg)});
    }
    return head;
  }

 private:
  NomTerm op(std::string_view name, std::vector<NomBinding> args) {
    return NomTerm::make_op(sig_, name, std::move(args));
  }

  NomTerm lambda() {
    ts_.expect_punct("\\");
    Token at = ts_.peek();
    std::string x = ts_.expect_ident("a variable name");
    if (is_reserved_t(x)) TokenStream::fail_at(at, "reserved word used as a variable");
    ts_.expect_punct(":");
    systemt::Type dom = parse_type_expr(ts_);
    ts_.expect_punct(".");
    Atom a = names_.intern(x);
    return op("lam", {bind({}, nom_type(dom)), bind({a}, term())});
  }

  bool starts_atomic() const {
    if (ts_.at_punct("(")) return true;
    return ts_.peek().kind == Tok::Ident && !ts_.at_ident("succ") && !ts_.at_ident("Nat");
  }

  NomTerm app_head() {
    if (ts_.at_ident("succ")) {
      ts_.next();
      return op("succ", {bind({}, atomic())});
    }
    return atomic();
  }

  NomTerm atomic() {
    if (ts_.at_punct("(")) {
      ts_.next();
      NomTerm t = term();
      ts_.expect_punct(")");
      return t;
    }
    if (ts_.at_ident("zero")) {
      ts_.next();
      return op("zero", {});
    }
    if (ts_.at_ident("natrec")) {
      ts_.next();
      ts_.expect_punct("(");
      NomTerm c0 = term();
      ts_.expect_punct(";");
      NomTerm cs = term();
      ts_.expect_punct(";");
      NomTerm n = term();
      ts_.expect_punct(")");
      return op("natrec", {bind({}, c0), bind({}, cs), bind({}, n)});
    }
    if (ts_.peek().kind == Tok::Ident && !is_reserved_t(ts_.peek().text))
      return NomTerm::make_atom(sig_, names_.intern(ts_.next().text));
    ts_.fail("expected a term");
  }

  TokenStream& ts_;
  NameTable& names_;
  SignaturePtr sig_;
};

void require_closed(const Term& t) {
  if (t.scope() != 0) throw ScopeError("surface syntax prints 0-terms only");
}

class SystemTPrinter {
 public:
  SystemTPrinter(NameTable& names, const Term& root) : names_(names, root) {}

  // Precedence: 0 lambda, 1 application, 2 atomic.
  std::string print(const Term& t, int prec) {
    if (t.is_atom()) return names_.name(t.as_atom());
    if (!t.is_op()) throw Error("not a System T term: " + to_canonical(t));
    const std::string& op = t.op().name;
    if (op == "zero") return "zero";
    // Sub-terms are printed left to right so synthesized names are
    // deterministic.
    if (op == "succ") return wrap(prec > 1, "succ " + print(t.arg(0), 2));
    if (op == "ap") {
      std::string f = print(t.arg(0), 1);
      return wrap(prec > 1, f + " " + print(t.arg(1), 2));
    }
    if (op == "natrec") {
      std::string base = print(t.arg(0), 0);
      std::string step = print(t.arg(1), 0);
      return "natrec(" + base + "; " + step + "; " + print(t.arg(2), 0) + ")";
    }
    if (op == "lam") {
      systemt::Type dom = systemt::as_type(t.arg(0));
      Atom x = names_.binder(t.arg(1));
      std::string head = "\\" + names_.name(x) + ":" + systemt::to_string(dom) + ". ";
      std::string body = print(concrete(t.arg(1), x), 0);
      names_.release(x);
      return wrap(prec > 0, head + body);
    }
    throw Error("a type is not a System T term: " + to_canonical(t));
  }

 private:
  static std::string wrap(bool paren, std::string s) { return paren ? "(" + s + ")" : s; }

  SugarNames names_;
};

class PiParser {
 public:
  PiParser(TokenStream& ts, NameTable& names) : ts_(ts), names_(names), sig_(pi::signature()) {}

  NomTerm process() {
    NomTerm p = prefix();
    while (ts_.at_punct("|")) {
      ts_.next();
      p = op("par", {bind({}, p), bind({}, prefix())});
    }
    return p;
  }

 private:
  NomTerm op(std::string_view name, std::vector<NomBinding> args) {
    return NomTerm::make_op(sig_, name, std::move(args));
  }

  NomTerm name() { return NomTerm::make_atom(sig_, names_.intern(ts_.expect_ident("a channel name"))); }

  Atom bracketed() {
    ts_.expect_punct("[");
    Atom x = names_.intern(ts_.expect_ident("a bound name"));
    ts_.expect_punct("]");
    return x;
  }

  NomTerm prefix() {
    if (ts_.at_punct("(")) {
      ts_.next();
      NomTerm p = process();
      ts_.expect_punct(")");
      return p;
    }
    if (ts_.at_punct("!")) {
      ts_.next();
      return op("repl", {bind({}, prefix())});
    }
    if (ts_.at_ident("0")) {
      ts_.next();
      return op("null", {});
    }
    if (ts_.at_ident("in")) {
      ts_.next();
      NomTerm a = name();
      ts_.expect_punct(".");
      Atom x = bracketed();
      return op("in", {bind({}, a), bind({x}, prefix())});
    }
    if (ts_.at_ident("out")) {
      ts_.next();
      NomTerm a = name();
      NomTerm b = name();
      ts_.expect_punct(".");
      return op("out", {bind({}, a), bind({}, b), bind({}, prefix())});
    }
    if (ts_.at_ident("nu")) {
      ts_.next();
      Atom x = bracketed();
      return op("nu", {bind({x}, prefix())});
    }
    ts_.fail("expected a process");
  }

  TokenStream& ts_;
  NameTable& names_;
  SignaturePtr sig_;
};

class PiPrinter {
 public:
  PiPrinter(NameTable& names, const Term& root) : names_(names, root) {}

  // Precedence: 0 parallel composition, 1 prefix.
  std::string print(const Term& p, int prec) {
    if (!p.is_op()) throw Error("not a process: " + to_canonical(p));
    const std::string& op = p.op().name;
    if (op == "null") return "0";
    if (op == "par") {
      std::string left = print(p.arg(0), 0);
      std::string s = left + " | " + print(p.arg(1), 1);
      return prec > 0 ? "(" + s + ")" : s;
    }
    if (op == "repl") return "!" + print(p.arg(0), 1);
    if (op == "out") {
      std::string head = "out " + channel(p.arg(0));
      head += " " + channel(p.arg(1)) + ".";
      return head + print(p.arg(2), 1);
    }
    if (op == "in") {
      std::string head = "in " + channel(p.arg(0));
      Atom x = names_.binder(p.arg(1));
      head += ".[" + names_.name(x) + "]";
      std::string body = print(concrete(p.arg(1), x), 1);
      names_.release(x);
      return head + body;
    }
    Atom x = names_.binder(p.arg(0));
    std::string head = "nu [" + names_.name(x) + "]";
    std::string body = print(concrete(p.arg(0), x), 1);
    names_.release(x);
    return head + body;
  }

 private:
  std::string channel(const Term& t) {
    if (!t.is_atom()) throw Error("channel is not a name: " + to_canonical(t));
    return names_.name(t.as_atom());
  }

  SugarNames names_;
};

}  // namespace

systemt::Type parse_type(std::string_view src) {
  TokenStream ts(src);
  systemt::Type a = parse_type_expr(ts);
  ts.expect_end();
  return a;
}

Term parse_systemt(std::string_view src, NameTable& names) {
  TokenStream ts(src);
  NomTerm m = SystemTParser(ts, names).term();
  ts.expect_end();
  return translate(m);
}

systemt::Context parse_context(std::string_view src, NameTable& names) {
  TokenStream ts(src);
  systemt::Context ctx;
  while (!ts.at_end()) {
    Token at = ts.peek();
    std::string x = ts.expect_ident("a variable name");
    if (is_reserved_t(x)) TokenStream::fail_at(at, "reserved word used as a variable");
    ts.expect_punct(":");
    systemt::Type a = parse_type_expr(ts);
    try {
      ctx.add(names.intern(x), a);
    } catch (const TypeError& e) {
      throw ParseError(e.what(), at.line, at.column);
    }
    if (!ts.at_end()) ts.expect_punct(",");
  }
  return ctx;
}

std::string print_systemt(const Term& t, NameTable& names) {
  require_closed(t);
  if (!same_signature(t.signature(), systemt::signature())) throw SignatureMismatch("not a System T term");
  return SystemTPrinter(names, t).print(t, 0);
}

Term parse_pi(std::string_view src, NameTable& names) {
  TokenStream ts(src);
  NomTerm m = PiParser(ts, names).process();
  ts.expect_end();
  return translate(m);
}

std::string print_pi(const Term& t, NameTable& names) {
  require_closed(t);
  if (!same_signature(t.signature(), pi::signature())) throw SignatureMismatch("not a process term");
  return PiPrinter(names, t).print(t, 0);
}

}  // namespace bindkit::text
