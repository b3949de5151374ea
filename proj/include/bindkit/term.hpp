#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bindkit/atom.hpp"
#include "bindkit/signature.hpp"

namespace bindkit {

/// An element of the finite ordinal {0, ..., bound-1}.
struct ScopedIndex {
  std::size_t value = 0;
  std::size_t bound = 1;

  /// Throws ScopeError unless value < bound.
  static ScopedIndex make(std::size_t value, std::size_t bound);

  friend bool operator==(ScopedIndex, ScopedIndex) = default;
};

/// Same value viewed in a larger ordinal; requires i.bound <= n.
ScopedIndex embed(ScopedIndex i, std::size_t n);

/// m-fold successor: value + m in an ordinal m larger.
ScopedIndex shift(std::size_t m, ScopedIndex i);

/// Order-preserving bijection from {0..n} minus {i} onto {0..n-1}, applied to j.
/// Requires i.bound == j.bound >= 1 and i != j.
ScopedIndex remove_index(ScopedIndex i, ScopedIndex j);

/// Order-preserving injection of {0..n-1} into {0..n} avoiding i, applied to j.
/// Requires i.bound == j.bound + 1.
ScopedIndex insert_index(ScopedIndex i, ScopedIndex j);

/// A well-scoped locally nameless term. The scope n is carried at runtime and
/// every constructor validates it: an index must be below n, and the i-th
/// argument of an operator with binder depths [m1..mk] must have scope mi + n.
///
/// Terms are immutable and share structure; copying is cheap.
class Term {
 public:
  enum class Kind { Index, Atom, Op };

  static Term make_index(SignaturePtr sig, ScopedIndex i);
  static Term make_index(SignaturePtr sig, std::size_t value, std::size_t scope);
  static Term make_atom(SignaturePtr sig, Atom a, std::size_t scope = 0);
  static Term make_op(SignaturePtr sig, std::string_view op, std::vector<Term> args, std::size_t scope = 0);
  static Term make_op(SignaturePtr sig, std::size_t op_id, std::vector<Term> args, std::size_t scope = 0);

  Kind kind() const;
  bool is_index() const { return kind() == Kind::Index; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_op() const { return kind() == Kind::Op; }
  bool is_op(std::string_view name) const;

  std::size_t scope() const;
  const SignaturePtr& signature() const;

  ScopedIndex as_index() const;
  Atom as_atom() const;
  std::size_t op_id() const;
  const OperatorDecl& op() const;
  const std::vector<Term>& args() const;
  const Term& arg(std::size_t i) const { return args().at(i); }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Structural equality including scope.
inline bool term_eq(const Term& a, const Term& b) { return a == b; }

/// Scope weakening t to scope n >= t.scope(). Binder arguments are weakened
/// to their depth plus n.
Term weaken(const Term& t, std::size_t n);

AtomSet support(const Term& t);

/// x does not occur in t.
bool fresh(Atom x, const Term& t);

/// 0 for leaves, 1 + max of argument sizes for operators.
std::size_t size(const Term& t);

/// Canonical text: `#k`, `@name`, `(op a1 ... ak)` with a depth-m argument
/// written `(^m T)`. Atoms are printed through `name`.
std::string to_canonical(const Term& t, const std::function<std::string(Atom)>& name);

/// Canonical text with atoms printed as their numbers.
std::string to_canonical(const Term& t);

std::ostream& operator<<(std::ostream& os, const Term& t);

/// Throws SignatureMismatch when the two signatures differ.
void require_same_signature(const SignaturePtr& a, const SignaturePtr& b, std::string_view where);

}  // namespace bindkit
