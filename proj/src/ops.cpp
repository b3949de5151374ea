#include "bindkit/ops.hpp"

#include <set>

#include "bindkit/error.hpp"

namespace bindkit {

void Subst::set(Atom x, const Term& u) {
  if (u.scope() != 0)
    throw ScopeError("substitution value for atom " + std::to_string(x.value) + " must have scope 0, got " +
                     std::to_string(u.scope()));
  require_same_signature(sig_, u.signature(), "substitution");
  table_.insert_or_assign(x, u);
}

Subst Subst::single(Atom x, const Term& u) {
  Subst s(u.signature());
  s.set(x, u);
  return s;
}

Subst Subst::updated(Atom x, const Term& u) const {
  Subst s = *this;
  s.set(x, u);
  return s;
}

Term Subst::operator()(Atom x) const {
  auto it = table_.find(x);
  return it == table_.end() ? Term::make_atom(sig_, x, 0) : it->second;
}

bool Renaming::injective_on(const AtomSet& s) const {
  std::set<Atom> images;
  for (Atom a : s.elements())
    if (!images.insert((*this)(a)).second) return false;
  return true;
}

Term apply_subst(const Subst& sigma, const Term& t) {
  require_same_signature(sigma.signature(), t.signature(), "apply_subst");
  switch (t.kind()) {
    case Term::Kind::Index:
      return t;
    case Term::Kind::Atom:
      return weaken(sigma(t.as_atom()), t.scope());
    case Term::Kind::Op: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(apply_subst(sigma, a));
      return Term::make_op(t.signature(), t.op_id(), std::move(args), t.scope());
    }
  }
  throw std::logic_error("apply_subst: bad term kind");
}

Term rename(const Renaming& rho, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Index:
      return t;
    case Term::Kind::Atom:
      return Term::make_atom(t.signature(), rho(t.as_atom()), t.scope());
    case Term::Kind::Op: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(rename(rho, a));
      return Term::make_op(t.signature(), t.op_id(), std::move(args), t.scope());
    }
  }
  throw std::logic_error("rename: bad term kind");
}

Term open_at(ScopedIndex i, const Term& u, const Term& t) {
  if (t.scope() != i.bound || i.bound == 0)
    throw ScopeError("open: term scope " + std::to_string(t.scope()) + " does not match index bound " +
                     std::to_string(i.bound));
  if (u.scope() != 0) throw ScopeError("open: the opening term must have scope 0");
  require_same_signature(u.signature(), t.signature(), "open");
  std::size_t n = i.bound - 1;
  switch (t.kind()) {
    case Term::Kind::Index: {
      ScopedIndex j = t.as_index();
      if (j == i) return weaken(u, n);
      return Term::make_index(t.signature(), remove_index(i, j));
    }
    case Term::Kind::Atom:
      return Term::make_atom(t.signature(), t.as_atom(), n);
    case Term::Kind::Op: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (std::size_t k = 0; k < t.args().size(); ++k)
        args.push_back(open_at(shift(t.op().arity[k], i), u, t.arg(k)));
      return Term::make_op(t.signature(), t.op_id(), std::move(args), n);
    }
  }
  throw std::logic_error("open: bad term kind");
}

Term concrete(const Term& t, const Term& u) {
  if (t.scope() == 0) throw ScopeError("concretion needs a term of scope at least 1");
  return open_at(ScopedIndex{0, t.scope()}, u, t);
}

Term concrete(const Term& t, Atom x) { return concrete(t, Term::make_atom(t.signature(), x, 0)); }

Term close_at(ScopedIndex i, Atom x, const Term& t) {
  if (i.bound != t.scope() + 1)
    throw ScopeError("close: index bound " + std::to_string(i.bound) + " must be one more than the term scope " +
                     std::to_string(t.scope()));
  if (i.value >= i.bound) throw ScopeError("close: index out of range");
  switch (t.kind()) {
    case Term::Kind::Index:
      return Term::make_index(t.signature(), insert_index(i, t.as_index()));
    case Term::Kind::Atom:
      if (t.as_atom() == x) return Term::make_index(t.signature(), i);
      return Term::make_atom(t.signature(), t.as_atom(), i.bound);
    case Term::Kind::Op: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (std::size_t k = 0; k < t.args().size(); ++k)
        args.push_back(close_at(shift(t.op().arity[k], i), x, t.arg(k)));
      return Term::make_op(t.signature(), t.op_id(), std::move(args), i.bound);
    }
  }
  throw std::logic_error("close: bad term kind");
}

Term abstract(Atom x, const Term& t) { return close_at(ScopedIndex{0, t.scope() + 1}, x, t); }

}  // namespace bindkit
