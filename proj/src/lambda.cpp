#include "bindkit/lambda.hpp"

#include "bindkit/error.hpp"

namespace bindkit::lambda {

SignaturePtr signature() { return builtin("lambda"); }

Term lm(const Term& body) {
  if (body.scope() == 0) throw ScopeError("lm: body must have scope at least 1");
  return Term::make_op(signature(), "lm", {body}, body.scope() - 1);
}

Term ap(const Term& f, const Term& a) { return Term::make_op(signature(), "ap", {f, a}, f.scope()); }

Term var(Atom x, std::size_t scope) { return Term::make_atom(signature(), x, scope); }

Term idx(std::size_t value, std::size_t scope) { return Term::make_index(signature(), value, scope); }

std::optional<Term> beta_step(const Term& t) {
  if (t.scope() != 0) throw ScopeError("beta_step expects a term of scope 0");
  require_same_signature(t.signature(), signature(), "beta_step");
  if (!t.is_op()) return std::nullopt;
  if (t.is_op("ap")) {
    const Term& f = t.arg(0);
    if (f.is_op("lm")) return concrete(f.arg(0), t.arg(1));
    if (auto f2 = beta_step(f)) return ap(*f2, t.arg(1));
    if (auto a2 = beta_step(t.arg(1))) return ap(f, *a2);
    return std::nullopt;
  }
  const Term& body = t.arg(0);
  Atom x = new_atom(support(body));
  if (auto b2 = beta_step(concrete(body, x))) return lm(abstract(x, *b2));
  return std::nullopt;
}

}  // namespace bindkit::lambda
