#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bindkit/generate.hpp"
#include "bindkit/ops.hpp"

// Goedel's System T over the `systemt` signature:
//   Nat : []   Arr : [0,0]   lam : [0,1]   ap : [0,0]
//   zero : []  succ : [0]    natrec : [0,0,0]
// Types are encoded as terms built from Nat and Arr. `lam A b` carries its
// domain annotation, and `natrec c0 cs n` takes its step function as an
// ordinary argument of type Nat -> A -> A.
namespace bindkit::systemt {

SignaturePtr signature();

/// Simple type: Nat or an arrow.
class Type {
 public:
  static Type nat() { return Type(); }
  static Type arrow(Type dom, Type cod);

  bool is_nat() const { return !arrow_; }
  bool is_arrow() const { return static_cast<bool>(arrow_); }
  const Type& dom() const;
  const Type& cod() const;

  /// Number of arrows.
  std::size_t arrows() const;

  friend bool operator==(const Type& a, const Type& b);

 private:
  struct Arrow;
  Type() = default;
  explicit Type(std::shared_ptr<const Arrow> a) : arrow_(std::move(a)) {}

  std::shared_ptr<const Arrow> arrow_;
};

struct Type::Arrow {
  Type dom;
  Type cod;
};

/// `Nat`, `Nat -> Nat`, `(Nat -> Nat) -> Nat`; arrows associate to the right.
std::string to_string(const Type& a);
std::ostream& operator<<(std::ostream& os, const Type& a);

/// Every type with at most `max_arrows` arrows, smallest first.
std::vector<Type> all_types(std::size_t max_arrows);

/// Type as a 0-term over the signature.
Term encode(const Type& a);

/// Decodes a term built only from Nat and Arr; throws TypeError otherwise.
Type as_type(const Term& t);

/// Typing context: distinct atoms with their types, in insertion order.
class Context {
 public:
  Context() = default;
  Context(std::initializer_list<std::pair<Atom, Type>> entries);

  /// Throws TypeError when x is already declared.
  Context& add(Atom x, Type a);
  Context extended(Atom x, Type a) const;

  const Type* find(Atom x) const;
  AtomSet atoms() const;
  const std::vector<std::pair<Atom, Type>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<Atom, Type>> entries_;
};

// Term builders (scope 0).
Term var(Atom x);
Term lam(const Type& dom, Atom x, const Term& body);
Term ap(const Term& f, const Term& a);
Term zero();
Term succ(const Term& n);
Term natrec(const Term& base, const Term& step, const Term& n);
Term numeral(std::size_t k);

/// One-level eta expansion of a term of arrow type: lam A <x>(ap t @x).
Term eta_expand(const Term& t, const Type& a);

/// Type inference. Binders are opened at a name fresh for the body and the
/// context. Throws TypeError.
Type infer(const Context& ctx, const Term& t);

/// Atoms available to semantic values.
using World = AtomSet;

/// Semantic value: a normal form at Nat, or a Kripke function that accepts
/// an argument at any larger world.
class Value {
 public:
  using Fn = std::function<Value(const World&, const Value&)>;

  static Value nat(Term nf);
  static Value fn(Fn f);

  bool is_nat() const { return static_cast<bool>(nf_); }
  const Term& nf() const;
  Value apply(const World& w, const Value& arg) const;

 private:
  std::shared_ptr<const Term> nf_;
  std::shared_ptr<const Fn> fn_;
};

struct EnvEntry {
  Value value;
  Type type;
};

using Env = std::map<Atom, EnvEntry>;

Value eval(const Env& env, const World& w, const Term& t);

/// Reads a value back as a normal form. At arrow types this eta-expands at
/// x = new(w).
Term reify(const World& w, const Type& a, const Value& v);

/// Embeds a neutral term of type a.
Value reflect(const Type& a, const Term& neutral);

/// Beta-eta normal form (eta-long) of a well-typed term.
Term normalize(const Context& ctx, const Term& t);

/// Decides beta-eta conversion by comparing normal forms. Throws TypeError
/// when either side is ill-typed or the types differ.
bool convertible(const Context& ctx, const Term& t, const Term& u);

/// One leftmost-outermost step of
///   ap (lam A b) u        -> b[u]
///   natrec c0 cs zero     -> c0
///   natrec c0 cs (succ n) -> ap (ap cs n) (natrec c0 cs n)
std::optional<Term> beta_step(const Term& t);

/// Iterates beta_step; nullopt when `max_steps` is exceeded.
std::optional<Term> beta_normalize(const Term& t, std::size_t max_steps);

/// nf  ::= lam A nf | zero | succ nf | neu
/// neu ::= @x | ap neu nf | natrec nf nf neu
bool is_normal_form(const Term& t);
bool is_neutral(const Term& t);

/// Random well-typed term of the given type, built by typed enumeration.
/// `depth` bounds the nesting of eliminators and constructors; lambdas needed
/// to inhabit arrow types at depth 0 are still produced.
Term gen_typed(const Context& ctx, const Type& a, std::size_t depth, Rng& rng);

/// Random type with at most `max_arrows` arrows.
Type gen_type(Rng& rng, std::size_t max_arrows);

}  // namespace bindkit::systemt
