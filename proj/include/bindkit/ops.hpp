#pragma once

#include <map>
#include <optional>

#include "bindkit/term.hpp"

namespace bindkit {

/// Term-for-name substitution: a total map from atoms to 0-terms, stored as a
/// finite override table over the identity x |-> @x.
class Subst {
 public:
  explicit Subst(SignaturePtr sig) : sig_(std::move(sig)) {}

  /// The single substitution (x := u). u must have scope 0.
  static Subst single(Atom x, const Term& u);

  /// Copy with x mapped to u, every other atom unchanged.
  Subst updated(Atom x, const Term& u) const;

  Term operator()(Atom x) const;

  const SignaturePtr& signature() const { return sig_; }
  const std::map<Atom, Term>& table() const { return table_; }

 private:
  void set(Atom x, const Term& u);

  SignaturePtr sig_;
  std::map<Atom, Term> table_;
};

/// Name-for-name renaming: finite override table over the identity.
class Renaming {
 public:
  Renaming() = default;
  Renaming(std::initializer_list<std::pair<const Atom, Atom>> pairs) : table_(pairs) {}

  static Renaming single(Atom x, Atom y) { return Renaming{{x, y}}; }

  Renaming& set(Atom x, Atom y) {
    table_.insert_or_assign(x, y);
    return *this;
  }

  Atom operator()(Atom x) const {
    auto it = table_.find(x);
    return it == table_.end() ? x : it->second;
  }

  /// True when no two atoms of s are sent to the same atom.
  bool injective_on(const AtomSet& s) const;

  const std::map<Atom, Atom>& table() const { return table_; }

 private:
  std::map<Atom, Atom> table_;
};

Term apply_subst(const Subst& sigma, const Term& t);

/// Renaming as the substitution x |-> @(rho x).
Term rename(const Renaming& rho, const Term& t);

/// Opening of index i by the 0-term u in t; t.scope() == i.bound == 1 + n, the
/// result has scope n.
Term open_at(ScopedIndex i, const Term& u, const Term& t);

/// Concretion t[u]: opening at index zero.
Term concrete(const Term& t, const Term& u);

/// Concretion at a name, t[@x].
Term concrete(const Term& t, Atom x);

/// Closing of x by index i in t; i.bound == 1 + t.scope().
Term close_at(ScopedIndex i, Atom x, const Term& t);

/// Abstraction <x>t: closing at index zero.
Term abstract(Atom x, const Term& t);

}  // namespace bindkit
