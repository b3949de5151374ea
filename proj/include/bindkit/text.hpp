#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "bindkit/nameful.hpp"
#include "bindkit/ops.hpp"
#include "bindkit/systemt.hpp"

namespace bindkit::text {

/// Bijection between user identifiers and atoms. Identifiers are assigned
/// atoms in first-occurrence order starting at 0. Atoms that were never named
/// (fresh atoms produced by operations) get a synthesized name on first
/// print, chosen not to clash with any existing identifier.
class NameTable {
 public:
  Atom intern(std::string_view name);
  std::optional<Atom> find(std::string_view name) const;
  bool has_name(Atom a) const { return by_atom_.count(a) != 0; }
  std::string name_of(Atom a);

  /// Every atom that currently has a name.
  AtomSet atoms() const;

  std::function<std::string(Atom)> namer() {
    return [this](Atom a) { return name_of(a); };
  }

 private:
  void bind(Atom a, std::string name);

  std::map<std::string, Atom, std::less<>> by_name_;
  std::map<Atom, std::string> by_atom_;
  std::uint64_t next_ = 0;
};

/// Parses the canonical locally nameless form. With `scope` unset, the
/// smallest scope that makes every index valid is used. Throws ParseError
/// (with line and column) for syntax, arity and scope violations.
Term parse_ln(std::string_view src, const SignaturePtr& sig, NameTable& names,
              std::optional<std::size_t> scope = std::size_t{0});

/// Parses the nameful form: `@x`, `(op B1 ... Bk)` with bindings
/// `[x1 ... xm] TERM` (brackets omitted at depth 0).
NomTerm parse_nom(std::string_view src, const SignaturePtr& sig, NameTable& names);

std::string print_ln(const Term& t, NameTable& names);
std::string print_nom(const NomTerm& m, NameTable& names);

/// `x := TERM; y := TERM;` with TERMs in the canonical locally nameless form,
/// all of scope 0.
Subst parse_subst(std::string_view src, const SignaturePtr& sig, NameTable& names);

/// Same map format with nameful TERMs.
NomSubst parse_nom_subst(std::string_view src, const SignaturePtr& sig, NameTable& names);

// System T surface syntax:
//   types     Nat | A -> B (right associative) | (A)
//   terms     \x:A. t | t u | zero | succ t | natrec(c0; cs; n) | x | (t)
//   contexts  x:A, y:B   (possibly empty)
systemt::Type parse_type(std::string_view src);
Term parse_systemt(std::string_view src, NameTable& names);
systemt::Context parse_context(std::string_view src, NameTable& names);
std::string print_systemt(const Term& t, NameTable& names);

// Pi-calculus surface syntax:
//   P ::= P | P  |  in a.[x]P  |  out a b.P  |  nu [x]P  |  !P  |  0  |  (P)
// Prefixes bind tighter than `|`, which associates to the left.
Term parse_pi(std::string_view src, NameTable& names);

/// Throws Error for terms outside the sugar (e.g. non-atom channels).
std::string print_pi(const Term& t, NameTable& names);

}  // namespace bindkit::text
