#include "bindkit/term.hpp"

#include <algorithm>
#include <sstream>
#include <variant>

#include "bindkit/error.hpp"

namespace bindkit {

namespace {

std::string describe(ScopedIndex i) {
  return std::to_string(i.value) + " of " + std::to_string(i.bound);
}

}  // namespace

ScopedIndex ScopedIndex::make(std::size_t value, std::size_t bound) {
  if (value >= bound)
    throw ScopeError("index " + std::to_string(value) + " is not below its scope " + std::to_string(bound));
  return ScopedIndex{value, bound};
}

ScopedIndex embed(ScopedIndex i, std::size_t n) {
  if (n < i.bound) throw ScopeError("embed: target scope " + std::to_string(n) + " below " + describe(i));
  return ScopedIndex{i.value, n};
}

ScopedIndex shift(std::size_t m, ScopedIndex i) {
  if (i.bound == 0) throw ScopeError("shift: empty ordinal");
  return ScopedIndex{i.value + m, i.bound + m};
}

ScopedIndex remove_index(ScopedIndex i, ScopedIndex j) {
  if (i.bound != j.bound || i.bound == 0)
    throw ScopeError("remove: bounds differ (" + describe(i) + ", " + describe(j) + ")");
  if (i.value == j.value) throw ScopeError("remove: index " + describe(j) + " is the removed index");
  return ScopedIndex{j.value < i.value ? j.value : j.value - 1, i.bound - 1};
}

ScopedIndex insert_index(ScopedIndex i, ScopedIndex j) {
  if (i.bound != j.bound + 1)
    throw ScopeError("insert: expected bound " + std::to_string(j.bound + 1) + " for the avoided index, got " +
                     describe(i));
  return ScopedIndex{j.value < i.value ? j.value : j.value + 1, i.bound};
}

struct Term::Node {
  struct OpNode {
    std::size_t id;
    std::vector<Term> args;
  };

  SignaturePtr sig;
  std::size_t scope;
  std::variant<ScopedIndex, Atom, OpNode> data;
};

void require_same_signature(const SignaturePtr& a, const SignaturePtr& b, std::string_view where) {
  if (!same_signature(a, b))
    throw SignatureMismatch(std::string(where) + ": terms over different signatures (" + (a ? a->name() : "?") +
                            " vs " + (b ? b->name() : "?") + ")");
}

Term Term::make_index(SignaturePtr sig, ScopedIndex i) {
  if (!sig) throw Error("term without a signature");
  if (i.value >= i.bound) throw ScopeError("index " + describe(i) + " out of scope");
  std::size_t scope = i.bound;
  return Term(std::make_shared<const Node>(Node{std::move(sig), scope, i}));
}

Term Term::make_index(SignaturePtr sig, std::size_t value, std::size_t scope) {
  return make_index(std::move(sig), ScopedIndex::make(value, scope));
}

Term Term::make_atom(SignaturePtr sig, Atom a, std::size_t scope) {
  if (!sig) throw Error("term without a signature");
  return Term(std::make_shared<const Node>(Node{std::move(sig), scope, a}));
}

Term Term::make_op(SignaturePtr sig, std::string_view op, std::vector<Term> args, std::size_t scope) {
  if (!sig) throw Error("term without a signature");
  auto id = sig->find(op);
  if (!id) throw ArityError("unknown operator '" + std::string(op) + "' in signature " + sig->name());
  return make_op(std::move(sig), *id, std::move(args), scope);
}

Term Term::make_op(SignaturePtr sig, std::size_t op_id, std::vector<Term> args, std::size_t scope) {
  if (!sig) throw Error("term without a signature");
  const OperatorDecl& decl = sig->at(op_id);
  if (args.size() != decl.arity.size())
    throw ArityError("operator '" + decl.name + "' expects " + std::to_string(decl.arity.size()) +
                     " arguments, got " + std::to_string(args.size()));
  for (std::size_t i = 0; i < args.size(); ++i) {
    require_same_signature(sig, args[i].signature(), "operator '" + decl.name + "'");
    std::size_t expected = decl.arity[i] + scope;
    if (args[i].scope() != expected)
      throw ScopeError("argument " + std::to_string(i + 1) + " of '" + decl.name + "' at scope " +
                       std::to_string(scope) + " must have scope " + std::to_string(expected) + ", got " +
                       std::to_string(args[i].scope()));
  }
  return Term(std::make_shared<const Node>(Node{std::move(sig), scope, Node::OpNode{op_id, std::move(args)}}));
}

Term::Kind Term::kind() const {
  switch (node_->data.index()) {
    case 0:
      return Kind::Index;
    case 1:
      return Kind::Atom;
    default:
      return Kind::Op;
  }
}

bool Term::is_op(std::string_view name) const { return is_op() && op().name == name; }

std::size_t Term::scope() const { return node_->scope; }

const SignaturePtr& Term::signature() const { return node_->sig; }

ScopedIndex Term::as_index() const {
  if (const auto* i = std::get_if<ScopedIndex>(&node_->data)) return *i;
  throw std::logic_error("Term::as_index on a non-index");
}

Atom Term::as_atom() const {
  if (const auto* a = std::get_if<Atom>(&node_->data)) return *a;
  throw std::logic_error("Term::as_atom on a non-atom");
}

std::size_t Term::op_id() const {
  if (const auto* o = std::get_if<Node::OpNode>(&node_->data)) return o->id;
  throw std::logic_error("Term::op_id on a non-operator");
}

const OperatorDecl& Term::op() const { return node_->sig->at(op_id()); }

const std::vector<Term>& Term::args() const {
  if (const auto* o = std::get_if<Node::OpNode>(&node_->data)) return o->args;
  throw std::logic_error("Term::args on a non-operator");
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.scope() != b.scope() || a.kind() != b.kind()) return false;
  if (!same_signature(a.signature(), b.signature())) return false;
  switch (a.kind()) {
    case Term::Kind::Index:
      return a.as_index() == b.as_index();
    case Term::Kind::Atom:
      return a.as_atom() == b.as_atom();
    case Term::Kind::Op:
      return a.op_id() == b.op_id() && a.args() == b.args();
  }
  return false;
}

Term weaken(const Term& t, std::size_t n) {
  if (n < t.scope())
    throw ScopeError("weaken: target scope " + std::to_string(n) + " is below the term scope " +
                     std::to_string(t.scope()));
  if (n == t.scope()) return t;
  switch (t.kind()) {
    case Term::Kind::Index:
      return Term::make_index(t.signature(), embed(t.as_index(), n));
    case Term::Kind::Atom:
      return Term::make_atom(t.signature(), t.as_atom(), n);
    case Term::Kind::Op: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (std::size_t i = 0; i < t.args().size(); ++i) args.push_back(weaken(t.arg(i), t.op().arity[i] + n));
      return Term::make_op(t.signature(), t.op_id(), std::move(args), n);
    }
  }
  throw std::logic_error("weaken: bad term kind");
}

AtomSet support(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Index:
      return AtomSet{};
    case Term::Kind::Atom:
      return AtomSet::singleton(t.as_atom());
    case Term::Kind::Op: {
      AtomSet s;
      for (const Term& a : t.args()) s = s | support(a);
      return s;
    }
  }
  return AtomSet{};
}

bool fresh(Atom x, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Index:
      return true;
    case Term::Kind::Atom:
      return t.as_atom() != x;
    case Term::Kind::Op:
      return std::all_of(t.args().begin(), t.args().end(), [x](const Term& a) { return fresh(x, a); });
  }
  return true;
}

std::size_t size(const Term& t) {
  if (!t.is_op()) return 0;
  std::size_t m = 0;
  for (const Term& a : t.args()) m = std::max(m, size(a));
  return 1 + m;
}

namespace {

void print(std::ostream& os, const Term& t, const std::function<std::string(Atom)>& name) {
  switch (t.kind()) {
    case Term::Kind::Index:
      os << '#' << t.as_index().value;
      return;
    case Term::Kind::Atom:
      os << '@' << name(t.as_atom());
      return;
    case Term::Kind::Op:
      os << '(' << t.op().name;
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        os << ' ';
        std::size_t depth = t.op().arity[i];
        if (depth == 0) {
          print(os, t.arg(i), name);
        } else {
          os << "(^" << depth << ' ';
          print(os, t.arg(i), name);
          os << ')';
        }
      }
      os << ')';
      return;
  }
}

}  // namespace

std::string to_canonical(const Term& t, const std::function<std::string(Atom)>& name) {
  std::ostringstream os;
  print(os, t, name);
  return os.str();
}

std::string to_canonical(const Term& t) {
  return to_canonical(t, [](Atom a) { return std::to_string(a.value); });
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << to_canonical(t); }

}  // namespace bindkit
