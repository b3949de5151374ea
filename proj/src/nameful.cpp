#include "bindkit/nameful.hpp"

#include <algorithm>
#include <span>
#include <sstream>

#include "bindkit/error.hpp"

namespace bindkit {

NomTerm NomTerm::make_atom(SignaturePtr sig, Atom a) {
  if (!sig) throw Error("nameful term without a signature");
  return NomTerm(std::move(sig), a);
}

NomTerm NomTerm::make_op(SignaturePtr sig, std::string_view op, std::vector<NomBinding> bindings) {
  if (!sig) throw Error("nameful term without a signature");
  auto id = sig->find(op);
  if (!id) throw ArityError("unknown operator '" + std::string(op) + "' in signature " + sig->name());
  return make_op(std::move(sig), *id, std::move(bindings));
}

NomTerm NomTerm::make_op(SignaturePtr sig, std::size_t op_id, std::vector<NomBinding> bindings) {
  if (!sig) throw Error("nameful term without a signature");
  const OperatorDecl& decl = sig->at(op_id);
  if (bindings.size() != decl.arity.size())
    throw ArityError("operator '" + decl.name + "' expects " + std::to_string(decl.arity.size()) +
                     " arguments, got " + std::to_string(bindings.size()));
  for (std::size_t i = 0; i < bindings.size(); ++i) {
    if (!bindings[i].subject) throw Error("binding without a subject");
    if (bindings[i].depth() != decl.arity[i])
      throw ArityError("argument " + std::to_string(i + 1) + " of '" + decl.name + "' must bind " +
                       std::to_string(decl.arity[i]) + " names, got " + std::to_string(bindings[i].depth()));
    require_same_signature(sig, bindings[i].subject->signature(), "operator '" + decl.name + "'");
  }
  return NomTerm(std::move(sig), op_id, std::make_shared<const std::vector<NomBinding>>(std::move(bindings)));
}

Atom NomTerm::as_atom() const {
  if (!is_atom()) throw std::logic_error("NomTerm::as_atom on an operator");
  return atom_;
}

const std::vector<NomBinding>& NomTerm::bindings() const {
  if (!is_op()) throw std::logic_error("NomTerm::bindings on an atom");
  return *bindings_;
}

bool operator==(const NomTerm& a, const NomTerm& b) {
  if (a.is_atom() != b.is_atom() || !same_signature(a.sig_, b.sig_)) return false;
  if (a.is_atom()) return a.atom_ == b.atom_;
  if (a.op_id_ != b.op_id_) return false;
  if (a.bindings_ == b.bindings_) return true;
  const auto& xs = *a.bindings_;
  const auto& ys = *b.bindings_;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (xs[i].binders != ys[i].binders || !(*xs[i].subject == *ys[i].subject)) return false;
  return true;
}

NomBinding bind(std::vector<Atom> binders, NomTerm subject) {
  return NomBinding{std::move(binders), std::make_shared<const NomTerm>(std::move(subject))};
}

NomSubst NomSubst::single(Atom x, const NomTerm& m) { return NomSubst(m.signature()).updated(x, m); }

NomSubst NomSubst::updated(Atom x, const NomTerm& m) const {
  require_same_signature(sig_, m.signature(), "nameful substitution");
  NomSubst s = *this;
  s.table_.insert_or_assign(x, m);
  return s;
}

NomTerm NomSubst::operator()(Atom x) const {
  auto it = table_.find(x);
  return it == table_.end() ? NomTerm::make_atom(sig_, x) : it->second;
}

AtomSet nom_support(const NomBinding& b) {
  AtomSet s = nom_support(b.body());
  for (Atom x : b.binders) s = AtomSet::singleton(x) | s;
  return s;
}

AtomSet nom_support(const NomTerm& m) {
  if (m.is_atom()) return AtomSet::singleton(m.as_atom());
  AtomSet s;
  for (const NomBinding& b : m.bindings()) s = s | nom_support(b);
  return s;
}

NomBinding nom_rename(const Renaming& rho, const NomBinding& b) {
  std::vector<Atom> binders;
  binders.reserve(b.binders.size());
  for (Atom x : b.binders) binders.push_back(rho(x));
  return bind(std::move(binders), nom_rename(rho, b.body()));
}

NomTerm nom_rename(const Renaming& rho, const NomTerm& m) {
  if (m.is_atom()) return NomTerm::make_atom(m.signature(), rho(m.as_atom()));
  std::vector<NomBinding> bs;
  bs.reserve(m.bindings().size());
  for (const NomBinding& b : m.bindings()) bs.push_back(nom_rename(rho, b));
  return NomTerm::make_op(m.signature(), m.op_id(), std::move(bs));
}

std::size_t nom_size(const NomTerm& m) {
  if (m.is_atom()) return 0;
  std::size_t biggest = 0;
  for (const NomBinding& b : m.bindings()) biggest = std::max(biggest, nom_size(b.body()));
  return 1 + biggest;
}

namespace {

// The binding that remains after peeling the outermost binder.
NomBinding rest_of(const NomBinding& b) {
  return NomBinding{std::vector<Atom>(b.binders.begin() + 1, b.binders.end()), b.subject};
}

bool alpha_eq_binding(const NomBinding& b, const NomBinding& c) {
  if (b.depth() != c.depth()) return false;
  if (b.depth() == 0) return alpha_eq(b.body(), c.body());
  NomBinding rb = rest_of(b);
  NomBinding rc = rest_of(c);
  Atom y = new_atom(nom_support(rb) | nom_support(rc));
  return alpha_eq_binding(nom_rename(Renaming::single(b.binders.front(), y), rb),
                          nom_rename(Renaming::single(c.binders.front(), y), rc));
}

NomBinding subst_binding(const NomSubst& sigma, const NomBinding& b) {
  if (b.depth() == 0) return bind({}, nom_subst(sigma, b.body()));
  NomBinding rest = rest_of(b);
  AtomSet avoid;
  const auto in_body = nom_support(rest).elements();
  for (Atom z : in_body) avoid = avoid | nom_support(sigma(z));
  Atom y = new_atom(avoid);
  for (Atom z : in_body)
    if (member(y, nom_support(sigma(z)))) throw std::logic_error("nom_subst: chosen binder is not fresh");
  Atom x = b.binders.front();
  NomBinding inner = subst_binding(sigma.updated(x, NomTerm::make_atom(sigma.signature(), y)), rest);
  std::vector<Atom> binders{y};
  binders.insert(binders.end(), inner.binders.begin(), inner.binders.end());
  return NomBinding{std::move(binders), inner.subject};
}

}  // namespace

bool alpha_eq(const NomTerm& m, const NomTerm& n) {
  require_same_signature(m.signature(), n.signature(), "alpha_eq");
  if (m.is_atom() || n.is_atom()) return m.is_atom() && n.is_atom() && m.as_atom() == n.as_atom();
  if (m.op_id() != n.op_id()) return false;
  for (std::size_t i = 0; i < m.bindings().size(); ++i)
    if (!alpha_eq_binding(m.bindings()[i], n.bindings()[i])) return false;
  return true;
}

NomTerm nom_subst(const NomSubst& sigma, const NomTerm& m) {
  require_same_signature(sigma.signature(), m.signature(), "nom_subst");
  if (m.is_atom()) return sigma(m.as_atom());
  std::vector<NomBinding> bs;
  bs.reserve(m.bindings().size());
  for (const NomBinding& b : m.bindings()) bs.push_back(subst_binding(sigma, b));
  return NomTerm::make_op(m.signature(), m.op_id(), std::move(bs));
}

namespace {

void print(std::ostream& os, const NomTerm& m, const std::function<std::string(Atom)>& name) {
  if (m.is_atom()) {
    os << '@' << name(m.as_atom());
    return;
  }
  os << '(' << m.op().name;
  for (const NomBinding& b : m.bindings()) {
    os << ' ';
    if (b.depth() > 0) {
      os << '[';
      for (std::size_t i = 0; i < b.binders.size(); ++i) os << (i ? " " : "") << name(b.binders[i]);
      os << "] ";
    }
    print(os, b.body(), name);
  }
  os << ')';
}

}  // namespace

std::string to_canonical(const NomTerm& m, const std::function<std::string(Atom)>& name) {
  std::ostringstream os;
  print(os, m, name);
  return os.str();
}

std::string to_canonical(const NomTerm& m) {
  return to_canonical(m, [](Atom a) { return std::to_string(a.value); });
}

std::ostream& operator<<(std::ostream& os, const NomTerm& m) { return os << to_canonical(m); }

}  // namespace bindkit
