#include "bindkit/atom.hpp"

#include <algorithm>
#include <stdexcept>

namespace bindkit {

struct AtomSet::Node {
  Shape shape;
  Atom atom{};
  AtomSet left;
  AtomSet right;
};

AtomSet AtomSet::singleton(Atom a) {
  return AtomSet(std::make_shared<const Node>(Node{Shape::Singleton, a, {}, {}}));
}

AtomSet AtomSet::unite(AtomSet left, AtomSet right) {
  return AtomSet(std::make_shared<const Node>(Node{Shape::Union, {}, std::move(left), std::move(right)}));
}

AtomSet AtomSet::of(std::initializer_list<Atom> atoms) {
  AtomSet result;
  for (Atom a : atoms) result = unite(std::move(result), singleton(a));
  return result;
}

AtomSet::Shape AtomSet::shape() const { return node_ ? node_->shape : Shape::Empty; }

Atom AtomSet::atom() const {
  if (shape() != Shape::Singleton) throw std::logic_error("AtomSet::atom on a non-singleton");
  return node_->atom;
}

const AtomSet& AtomSet::left() const {
  if (shape() != Shape::Union) throw std::logic_error("AtomSet::left on a non-union");
  return node_->left;
}

const AtomSet& AtomSet::right() const {
  if (shape() != Shape::Union) throw std::logic_error("AtomSet::right on a non-union");
  return node_->right;
}

// Supports of large terms produce deep union trees, so walk with an explicit
// stack. The visitor returns false to stop early.
void AtomSet::for_each_leaf(const std::function<bool(Atom)>& visit) const {
  std::vector<const Node*> stack;
  if (node_) stack.push_back(node_.get());
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    switch (n->shape) {
      case Shape::Empty:
        break;
      case Shape::Singleton:
        if (!visit(n->atom)) return;
        break;
      case Shape::Union:
        if (n->right.node_) stack.push_back(n->right.node_.get());
        if (n->left.node_) stack.push_back(n->left.node_.get());
        break;
    }
  }
}

bool AtomSet::contains(Atom x) const {
  bool found = false;
  for_each_leaf([&](Atom a) {
    found = a == x;
    return !found;
  });
  return found;
}

std::vector<Atom> AtomSet::elements() const {
  std::vector<Atom> out;
  for_each_leaf([&](Atom a) {
    out.push_back(a);
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool AtomSet::denotes_empty() const {
  bool any = false;
  for_each_leaf([&](Atom) {
    any = true;
    return false;
  });
  return !any;
}

bool member(Atom x, const AtomSet& s) { return s.contains(x); }

Atom new_atom(const AtomSet& s) {
  auto elems = s.elements();
  if (elems.empty()) return Atom{0};
  return Atom{elems.back().value + 1};
}

bool subset(const AtomSet& s, const AtomSet& t) {
  auto small = s.elements();
  auto big = t.elements();
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool same_set(const AtomSet& s, const AtomSet& t) { return s.elements() == t.elements(); }

std::ostream& operator<<(std::ostream& os, const AtomSet& s) {
  os << '{';
  bool first = true;
  for (Atom a : s.elements()) {
    if (!first) os << ", ";
    os << a;
    first = false;
  }
  return os << '}';
}

}  // namespace bindkit
