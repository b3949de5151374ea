#include "bindkit/systemt.hpp"

#include <sstream>

#include "bindkit/error.hpp"

namespace bindkit::systemt {

SignaturePtr signature() { return builtin("systemt"); }

Type Type::arrow(Type dom, Type cod) {
  return Type(std::make_shared<const Arrow>(Arrow{std::move(dom), std::move(cod)}));
}

const Type& Type::dom() const {
  if (!arrow_) throw std::logic_error("Type::dom on Nat");
  return arrow_->dom;
}

const Type& Type::cod() const {
  if (!arrow_) throw std::logic_error("Type::cod on Nat");
  return arrow_->cod;
}

std::size_t Type::arrows() const { return arrow_ ? 1 + arrow_->dom.arrows() + arrow_->cod.arrows() : 0; }

bool operator==(const Type& a, const Type& b) {
  if (a.arrow_ == b.arrow_) return true;
  if (!a.arrow_ || !b.arrow_) return false;
  return a.arrow_->dom == b.arrow_->dom && a.arrow_->cod == b.arrow_->cod;
}

std::string to_string(const Type& a) {
  if (a.is_nat()) return "Nat";
  std::string dom = to_string(a.dom());
  if (a.dom().is_arrow()) dom = "(" + dom + ")";
  return dom + " -> " + to_string(a.cod());
}

std::ostream& operator<<(std::ostream& os, const Type& a) { return os << to_string(a); }

std::vector<Type> all_types(std::size_t max_arrows) {
  // by_arrows[k] holds every type with exactly k arrows.
  std::vector<std::vector<Type>> by_arrows{{Type::nat()}};
  for (std::size_t k = 1; k <= max_arrows; ++k) {
    std::vector<Type> level;
    for (std::size_t left = 0; left < k; ++left)
      for (const Type& d : by_arrows[left])
        for (const Type& c : by_arrows[k - 1 - left]) level.push_back(Type::arrow(d, c));
    by_arrows.push_back(std::move(level));
  }
  std::vector<Type> out;
  for (auto& level : by_arrows) out.insert(out.end(), level.begin(), level.end());
  return out;
}

Term encode(const Type& a) {
  if (a.is_nat()) return Term::make_op(signature(), "Nat", {});
  return Term::make_op(signature(), "Arr", {encode(a.dom()), encode(a.cod())});
}

Type as_type(const Term& t) {
  if (t.is_op("Nat")) return Type::nat();
  if (t.is_op("Arr")) return Type::arrow(as_type(t.arg(0)), as_type(t.arg(1)));
  throw TypeError("not a type: " + to_canonical(t));
}

Context::Context(std::initializer_list<std::pair<Atom, Type>> entries) {
  for (const auto& [x, a] : entries) add(x, a);
}

Context& Context::add(Atom x, Type a) {
  if (find(x)) throw TypeError("atom " + std::to_string(x.value) + " declared twice in the context");
  entries_.emplace_back(x, std::move(a));
  return *this;
}

Context Context::extended(Atom x, Type a) const {
  Context c = *this;
  c.add(x, std::move(a));
  return c;
}

const Type* Context::find(Atom x) const {
  for (const auto& [y, a] : entries_)
    if (y == x) return &a;
  return nullptr;
}

AtomSet Context::atoms() const {
  AtomSet s;
  for (const auto& entry : entries_) s = s | AtomSet::singleton(entry.first);
  return s;
}

Term var(Atom x) { return Term::make_atom(signature(), x, 0); }

Term lam(const Type& dom, Atom x, const Term& body) {
  return Term::make_op(signature(), "lam", {encode(dom), abstract(x, body)});
}

Term ap(const Term& f, const Term& a) { return Term::make_op(signature(), "ap", {f, a}); }

Term zero() { return Term::make_op(signature(), "zero", {}); }

Term succ(const Term& n) { return Term::make_op(signature(), "succ", {n}); }

Term natrec(const Term& base, const Term& step, const Term& n) {
  return Term::make_op(signature(), "natrec", {base, step, n});
}

Term numeral(std::size_t k) {
  Term t = zero();
  for (std::size_t i = 0; i < k; ++i) t = succ(t);
  return t;
}

Term eta_expand(const Term& t, const Type& a) {
  if (!a.is_arrow()) throw TypeError("eta expansion needs an arrow type, got " + to_string(a));
  Atom x = new_atom(support(t));
  return lam(a.dom(), x, ap(t, var(x)));
}

namespace {

void require_scope0(const Term& t, const char* what) {
  require_same_signature(t.signature(), signature(), what);
  if (t.scope() != 0) throw ScopeError(std::string(what) + " expects a term of scope 0");
}

std::string show(const Term& t) { return to_canonical(t); }

}  // namespace

Type infer(const Context& ctx, const Term& t) {
  require_scope0(t, "infer");
  if (t.is_atom()) {
    if (const Type* a = ctx.find(t.as_atom())) return *a;
    throw TypeError("unbound atom " + std::to_string(t.as_atom().value));
  }
  if (t.is_index()) throw TypeError("dangling index");
  const std::string& op = t.op().name;
  if (op == "lam") {
    Type dom = as_type(t.arg(0));
    const Term& body = t.arg(1);
    Atom x = new_atom(support(body) | ctx.atoms());
    return Type::arrow(dom, infer(ctx.extended(x, dom), concrete(body, x)));
  }
  if (op == "ap") {
    Type f = infer(ctx, t.arg(0));
    if (!f.is_arrow()) throw TypeError("applying a term of non-arrow type " + to_string(f) + ": " + show(t));
    Type a = infer(ctx, t.arg(1));
    if (!(a == f.dom()))
      throw TypeError("argument of type " + to_string(a) + " where " + to_string(f.dom()) + " is expected: " + show(t));
    return f.cod();
  }
  if (op == "zero") return Type::nat();
  if (op == "succ") {
    Type a = infer(ctx, t.arg(0));
    if (!a.is_nat()) throw TypeError("succ of a term of type " + to_string(a));
    return a;
  }
  if (op == "natrec") {
    Type motive = infer(ctx, t.arg(0));
    Type step = infer(ctx, t.arg(1));
    Type expected = Type::arrow(Type::nat(), Type::arrow(motive, motive));
    if (!(step == expected))
      throw TypeError("natrec step has type " + to_string(step) + ", expected " + to_string(expected));
    Type n = infer(ctx, t.arg(2));
    if (!n.is_nat()) throw TypeError("natrec scrutinee has type " + to_string(n) + ", expected Nat");
    return motive;
  }
  throw TypeError("'" + op + "' is a type, not a term");
}

Value Value::nat(Term nf) {
  Value v;
  v.nf_ = std::make_shared<const Term>(std::move(nf));
  return v;
}

Value Value::fn(Fn f) {
  Value v;
  v.fn_ = std::make_shared<const Fn>(std::move(f));
  return v;
}

const Term& Value::nf() const {
  if (!nf_) throw std::logic_error("semantic value is a function, not a natural number");
  return *nf_;
}

Value Value::apply(const World& w, const Value& arg) const {
  if (!fn_) throw std::logic_error("applying a semantic natural number");
  return (*fn_)(w, arg);
}

namespace {

Context context_of(const Env& env) {
  Context ctx;
  for (const auto& [x, entry] : env) ctx.add(x, entry.type);
  return ctx;
}

Value iterate(const World& w, const Type& motive, const Value& base, const Value& step, const Term& n) {
  if (n.is_op("zero")) return base;
  if (n.is_op("succ")) {
    const Term& pred = n.arg(0);
    Value rec = iterate(w, motive, base, step, pred);
    return step.apply(w, Value::nat(pred)).apply(w, rec);
  }
  Type step_type = Type::arrow(Type::nat(), Type::arrow(motive, motive));
  return reflect(motive, natrec(reify(w, motive, base), reify(w, step_type, step), n));
}

}  // namespace

Value eval(const Env& env, const World& w, const Term& t) {
  require_scope0(t, "eval");
  if (t.is_atom()) {
    auto it = env.find(t.as_atom());
    if (it == env.end()) throw TypeError("eval: unbound atom " + std::to_string(t.as_atom().value));
    return it->second.value;
  }
  if (t.is_index()) throw TypeError("eval: dangling index");
  const std::string& op = t.op().name;
  if (op == "lam") {
    Type dom = as_type(t.arg(0));
    Term body = t.arg(1);
    return Value::fn([env, body, dom](const World& w2, const Value& v) {
      Atom x = new_atom(support(body) | w2);
      Env inner = env;
      inner.insert_or_assign(x, EnvEntry{v, dom});
      return eval(inner, w2, concrete(body, x));
    });
  }
  if (op == "ap") return eval(env, w, t.arg(0)).apply(w, eval(env, w, t.arg(1)));
  if (op == "zero") return Value::nat(t);
  if (op == "succ") return Value::nat(succ(eval(env, w, t.arg(0)).nf()));
  if (op == "natrec") {
    Type motive = infer(context_of(env), t.arg(0));
    Value base = eval(env, w, t.arg(0));
    Value step = eval(env, w, t.arg(1));
    Term n = eval(env, w, t.arg(2)).nf();
    return iterate(w, motive, base, step, n);
  }
  throw TypeError("eval: '" + op + "' is a type, not a term");
}

Term reify(const World& w, const Type& a, const Value& v) {
  if (a.is_nat()) return v.nf();
  Atom x = new_atom(w);
  World w2 = w | AtomSet::singleton(x);
  Term body = reify(w2, a.cod(), v.apply(w2, reflect(a.dom(), var(x))));
  return lam(a.dom(), x, body);
}

Value reflect(const Type& a, const Term& neutral) {
  if (a.is_nat()) return Value::nat(neutral);
  return Value::fn([a, neutral](const World& w, const Value& v) {
    return reflect(a.cod(), ap(neutral, reify(w, a.dom(), v)));
  });
}

Term normalize(const Context& ctx, const Term& t) {
  Type a = infer(ctx, t);
  Env env;
  for (const auto& [x, ty] : ctx.entries()) env.insert_or_assign(x, EnvEntry{reflect(ty, var(x)), ty});
  World w = ctx.atoms();
  return reify(w, a, eval(env, w, t));
}

bool convertible(const Context& ctx, const Term& t, const Term& u) {
  Type a = infer(ctx, t);
  Type b = infer(ctx, u);
  if (!(a == b)) throw TypeError("conversion between terms of different types " + to_string(a) + " and " + to_string(b));
  return normalize(ctx, t) == normalize(ctx, u);
}

std::optional<Term> beta_step(const Term& t) {
  require_scope0(t, "beta_step");
  if (!t.is_op()) return std::nullopt;
  if (t.is_op("ap") && t.arg(0).is_op("lam")) return concrete(t.arg(0).arg(1), t.arg(1));
  if (t.is_op("natrec")) {
    const Term& n = t.arg(2);
    if (n.is_op("zero")) return t.arg(0);
    if (n.is_op("succ")) return ap(ap(t.arg(1), n.arg(0)), natrec(t.arg(0), t.arg(1), n.arg(0)));
  }
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    const Term& a = t.arg(i);
    std::size_t depth = t.op().arity[i];
    std::optional<Term> stepped;
    if (depth == 0) {
      stepped = beta_step(a);
    } else {
      // Only lam binds, and only one name.
      Atom x = new_atom(support(a));
      if (auto inner = beta_step(concrete(a, x))) stepped = abstract(x, *inner);
    }
    if (stepped) {
      std::vector<Term> args = t.args();
      args[i] = *stepped;
      return Term::make_op(t.signature(), t.op_id(), std::move(args));
    }
  }
  return std::nullopt;
}

std::optional<Term> beta_normalize(const Term& t, std::size_t max_steps) {
  Term cur = t;
  for (std::size_t i = 0; i <= max_steps; ++i) {
    auto next = beta_step(cur);
    if (!next) return cur;
    cur = *next;
  }
  return std::nullopt;
}

bool is_neutral(const Term& t) {
  if (t.scope() != 0) return false;
  if (t.is_atom()) return true;
  if (t.is_op("ap")) return is_neutral(t.arg(0)) && is_normal_form(t.arg(1));
  if (t.is_op("natrec")) return is_normal_form(t.arg(0)) && is_normal_form(t.arg(1)) && is_neutral(t.arg(2));
  return false;
}

bool is_normal_form(const Term& t) {
  if (t.scope() != 0) return false;
  if (t.is_op("zero")) return true;
  if (t.is_op("succ")) return is_normal_form(t.arg(0));
  if (t.is_op("lam")) {
    try {
      as_type(t.arg(0));
    } catch (const TypeError&) {
      return false;
    }
    const Term& body = t.arg(1);
    return is_normal_form(concrete(body, new_atom(support(body))));
  }
  return is_neutral(t);
}

Type gen_type(Rng& rng, std::size_t max_arrows) {
  if (max_arrows == 0 || rng.percent(50)) return Type::nat();
  std::size_t left = rng.below(max_arrows);
  return Type::arrow(gen_type(rng, left), gen_type(rng, max_arrows - 1 - left));
}

Term gen_typed(const Context& ctx, const Type& a, std::size_t depth, Rng& rng) {
  std::vector<Atom> vars;
  for (const auto& [x, ty] : ctx.entries())
    if (ty == a) vars.push_back(x);

  auto make_lam = [&](std::size_t d) {
    Atom x = new_atom(ctx.atoms());
    return lam(a.dom(), x, gen_typed(ctx.extended(x, a.dom()), a.cod(), d, rng));
  };

  if (depth == 0) {
    if (!vars.empty() && (a.is_arrow() || rng.percent(50))) return var(rng.pick(vars));
    return a.is_nat() ? zero() : make_lam(0);
  }

  enum Choice { Var, Intro, Apply, Rec };
  std::vector<Choice> choices{Intro, Intro, Apply, Rec};
  if (!vars.empty()) choices.insert(choices.end(), {Var, Var});
  switch (rng.pick(choices)) {
    case Var:
      return var(rng.pick(vars));
    case Intro:
      if (a.is_arrow()) return make_lam(depth - 1);
      return rng.percent(40) ? zero() : succ(gen_typed(ctx, a, depth - 1, rng));
    case Apply: {
      Type b = rng.percent(70) ? Type::nat() : Type::arrow(Type::nat(), Type::nat());
      Term f = gen_typed(ctx, Type::arrow(b, a), depth - 1, rng);
      return ap(f, gen_typed(ctx, b, depth - 1, rng));
    }
    case Rec: {
      Type step = Type::arrow(Type::nat(), Type::arrow(a, a));
      Term base = gen_typed(ctx, a, depth - 1, rng);
      Term s = gen_typed(ctx, step, depth - 1, rng);
      return natrec(base, s, gen_typed(ctx, Type::nat(), depth - 1, rng));
    }
  }
  return zero();
}

}  // namespace bindkit::systemt
