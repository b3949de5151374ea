#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <vector>

namespace bindkit {

/// A name for a free resource. Atoms are natural numbers; equality is
/// equality of the numbers.
struct Atom {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(Atom, Atom) = default;
};

inline std::ostream& operator<<(std::ostream& os, Atom a) { return os << a.value; }

/// Finite set of atoms in the many-one tree representation: empty, singleton
/// or binary union. Distinct trees may denote the same set; every query below
/// is about the denoted set.
class AtomSet {
 public:
  enum class Shape { Empty, Singleton, Union };

  AtomSet() = default;

  static AtomSet singleton(Atom a);
  static AtomSet unite(AtomSet left, AtomSet right);
  static AtomSet of(std::initializer_list<Atom> atoms);

  Shape shape() const;
  Atom atom() const;            // Singleton only
  const AtomSet& left() const;  // Union only
  const AtomSet& right() const;

  bool contains(Atom x) const;

  /// Leaf atoms, sorted and deduplicated.
  std::vector<Atom> elements() const;

  /// True when no leaf exists (the tree may still contain unions of empties).
  bool denotes_empty() const;

 private:
  struct Node;
  explicit AtomSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  void for_each_leaf(const std::function<bool(Atom)>& visit) const;

  std::shared_ptr<const Node> node_;  // null means Empty
};

inline AtomSet operator|(AtomSet a, AtomSet b) { return AtomSet::unite(std::move(a), std::move(b)); }

bool member(Atom x, const AtomSet& s);

/// Deterministic fresh atom: 0 for the empty set, otherwise one more than the
/// largest leaf.
Atom new_atom(const AtomSet& s);

bool subset(const AtomSet& s, const AtomSet& t);

/// Equality of the denoted sets.
bool same_set(const AtomSet& s, const AtomSet& t);

std::ostream& operator<<(std::ostream& os, const AtomSet& s);

}  // namespace bindkit

template <>
struct std::hash<bindkit::Atom> {
  std::size_t operator()(bindkit::Atom a) const noexcept { return std::hash<std::uint64_t>{}(a.value); }
};
