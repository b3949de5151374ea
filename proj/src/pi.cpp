#include "bindkit/pi.hpp"

#include "bindkit/error.hpp"

namespace bindkit::pi {

SignaturePtr signature() { return builtin("pi"); }

namespace {

Term atom_at(Atom a, std::size_t scope) { return Term::make_atom(signature(), a, scope); }

std::size_t outer_scope(const Term& binder_body) {
  if (binder_body.scope() == 0) throw ScopeError("binder body must have scope at least 1");
  return binder_body.scope() - 1;
}

}  // namespace

Term in(Atom channel, const Term& continuation) {
  std::size_t n = outer_scope(continuation);
  return Term::make_op(signature(), "in", {atom_at(channel, n), continuation}, n);
}

Term out(Atom channel, Atom message, const Term& continuation) {
  std::size_t n = continuation.scope();
  return Term::make_op(signature(), "out", {atom_at(channel, n), atom_at(message, n), continuation}, n);
}

Term par(const Term& p, const Term& q) { return Term::make_op(signature(), "par", {p, q}, p.scope()); }

Term nu(const Term& body) { return Term::make_op(signature(), "nu", {body}, outer_scope(body)); }

Term repl(const Term& p) { return Term::make_op(signature(), "repl", {p}, p.scope()); }

Term null(std::size_t scope) { return Term::make_op(signature(), "null", {}, scope); }

bool proc_check(const Term& p) {
  require_same_signature(p.signature(), signature(), "proc_check");
  if (p.scope() != 0) throw ScopeError("proc_check expects a term of scope 0");
  if (!p.is_op()) return false;
  const std::string& op = p.op().name;
  auto binder_ok = [](const Term& body) {
    Atom x = new_atom(support(body));
    return proc_check(concrete(body, x));
  };
  if (op == "null") return true;
  if (op == "par") return proc_check(p.arg(0)) && proc_check(p.arg(1));
  if (op == "repl") return proc_check(p.arg(0));
  if (op == "out") return p.arg(0).is_atom() && p.arg(1).is_atom() && proc_check(p.arg(2));
  if (op == "in") return p.arg(0).is_atom() && binder_ok(p.arg(1));
  if (op == "nu") return binder_ok(p.arg(0));
  return false;
}

}  // namespace bindkit::pi
