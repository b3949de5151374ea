#include "bindkit/adequacy.hpp"

#include "bindkit/error.hpp"

namespace bindkit {

Term translate(const NomTerm& m) {
  if (m.is_atom()) return Term::make_atom(m.signature(), m.as_atom(), 0);
  std::vector<Term> args;
  args.reserve(m.bindings().size());
  for (const NomBinding& b : m.bindings()) {
    Term body = translate(b.body());
    for (auto it = b.binders.rbegin(); it != b.binders.rend(); ++it) body = abstract(*it, body);
    args.push_back(std::move(body));
  }
  return Term::make_op(m.signature(), m.op_id(), std::move(args), 0);
}

NomTerm untranslate(const Term& t) {
  if (t.scope() != 0) throw ScopeError("untranslate expects a term of scope 0, got " + std::to_string(t.scope()));
  if (t.is_atom()) return NomTerm::make_atom(t.signature(), t.as_atom());
  std::vector<NomBinding> bs;
  bs.reserve(t.args().size());
  for (const Term& arg : t.args()) {
    std::vector<Atom> binders;
    Term body = arg;
    while (body.scope() > 0) {
      Atom x = new_atom(support(body));
      binders.push_back(x);
      body = concrete(body, x);
    }
    bs.push_back(bind(std::move(binders), untranslate(body)));
  }
  return NomTerm::make_op(t.signature(), t.op_id(), std::move(bs));
}

bool check_soundness(const NomTerm& m, const NomTerm& n) {
  return !alpha_eq(m, n) || translate(m) == translate(n);
}

bool check_injectivity(const NomTerm& m, const NomTerm& n) {
  return !(translate(m) == translate(n)) || alpha_eq(m, n);
}

Subst translate_subst(const NomSubst& sigma) {
  Subst out(sigma.signature());
  for (const auto& [x, m] : sigma.table()) out = out.updated(x, translate(m));
  return out;
}

}  // namespace bindkit
