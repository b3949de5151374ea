#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bindkit/ops.hpp"

namespace bindkit {

class NomTerm;

/// An m-ary nameful binding: m binder names around a subject term. Binders
/// are listed outermost first and need not be distinct.
struct NomBinding {
  std::vector<Atom> binders;
  std::shared_ptr<const NomTerm> subject;

  std::size_t depth() const { return binders.size(); }
  const NomTerm& body() const { return *subject; }
};

/// Nameful term: an atom, or an operator applied to one binding per argument
/// position. The binding depths must match the operator's arity.
class NomTerm {
 public:
  static NomTerm make_atom(SignaturePtr sig, Atom a);
  static NomTerm make_op(SignaturePtr sig, std::string_view op, std::vector<NomBinding> bindings);
  static NomTerm make_op(SignaturePtr sig, std::size_t op_id, std::vector<NomBinding> bindings);

  bool is_atom() const { return !bindings_; }
  bool is_op() const { return static_cast<bool>(bindings_); }
  bool is_op(std::string_view name) const { return is_op() && op().name == name; }

  Atom as_atom() const;
  std::size_t op_id() const { return op_id_; }
  const OperatorDecl& op() const { return sig_->at(op_id_); }
  const std::vector<NomBinding>& bindings() const;
  const SignaturePtr& signature() const { return sig_; }

  friend bool operator==(const NomTerm& a, const NomTerm& b);

 private:
  NomTerm(SignaturePtr sig, Atom a) : sig_(std::move(sig)), atom_(a) {}
  NomTerm(SignaturePtr sig, std::size_t id, std::shared_ptr<const std::vector<NomBinding>> b)
      : sig_(std::move(sig)), op_id_(id), bindings_(std::move(b)) {}

  SignaturePtr sig_;
  Atom atom_{};
  std::size_t op_id_ = 0;
  std::shared_ptr<const std::vector<NomBinding>> bindings_;
};

/// Binding helper: `bind({x, y}, body)`, or `bind({}, body)` for depth 0.
NomBinding bind(std::vector<Atom> binders, NomTerm subject);

/// Capture-avoiding substitution map: atoms to nameful terms, identity
/// outside a finite table.
class NomSubst {
 public:
  explicit NomSubst(SignaturePtr sig) : sig_(std::move(sig)) {}

  static NomSubst single(Atom x, const NomTerm& m);
  NomSubst updated(Atom x, const NomTerm& m) const;

  NomTerm operator()(Atom x) const;

  const SignaturePtr& signature() const { return sig_; }
  const std::map<Atom, NomTerm>& table() const { return table_; }

 private:
  SignaturePtr sig_;
  std::map<Atom, NomTerm> table_;
};

/// Every atom occurring in M, in leaf or binder position.
AtomSet nom_support(const NomTerm& m);
AtomSet nom_support(const NomBinding& b);

/// Applies rho to every atom occurrence, binders included.
NomTerm nom_rename(const Renaming& rho, const NomTerm& m);
NomBinding nom_rename(const Renaming& rho, const NomBinding& b);

/// 0 for atoms, 1 + max binding size for operators; binders add nothing.
std::size_t nom_size(const NomTerm& m);

/// Decides alpha-equivalence. At each pair of binders both sides are renamed
/// to one name fresh for both bodies.
bool alpha_eq(const NomTerm& m, const NomTerm& n);

/// Capture-avoiding simultaneous substitution. Each binder is replaced by
/// new(union of supp(sigma z) for z in the support of the binding body).
NomTerm nom_subst(const NomSubst& sigma, const NomTerm& m);

std::string to_canonical(const NomTerm& m, const std::function<std::string(Atom)>& name);
std::string to_canonical(const NomTerm& m);
std::ostream& operator<<(std::ostream& os, const NomTerm& m);

}  // namespace bindkit
