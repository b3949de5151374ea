#include <doctest.h>

#include <algorithm>
#include <set>

#include "bindkit/atom.hpp"
#include "bindkit/generate.hpp"

using namespace bindkit;

namespace {

AtomSet s1(std::uint64_t v) { return AtomSet::singleton(Atom{v}); }

// Random tree over a small alphabet, with empties and duplicates mixed in.
AtomSet random_tree(Rng& rng, int depth, std::set<std::uint64_t>& leaves) {
  if (depth == 0 || rng.percent(30)) {
    if (rng.percent(20)) return AtomSet();
    std::uint64_t v = rng.below(10);
    leaves.insert(v);
    return s1(v);
  }
  AtomSet l = random_tree(rng, depth - 1, leaves);
  return l | random_tree(rng, depth - 1, leaves);
}

}  // namespace

TEST_CASE("membership") {
  CHECK_FALSE(member(Atom{3}, AtomSet()));
  CHECK(member(Atom{3}, s1(3) | s1(7)));
  CHECK_FALSE(member(Atom{5}, s1(3) | (s1(7) | AtomSet())));
}

TEST_CASE("new atom is one more than the maximum") {
  CHECK(new_atom(AtomSet()) == Atom{0});
  CHECK(new_atom(s1(0) | (s1(5) | s1(2))) == Atom{6});
  CHECK(new_atom(AtomSet() | AtomSet()) == Atom{0});
}

TEST_CASE("subset") {
  CHECK(subset(AtomSet(), s1(1)));
  CHECK_FALSE(subset(s1(1), AtomSet()));
  CHECK(subset(s1(1) | s1(2), s1(2) | (s1(1) | s1(9))));
}

TEST_CASE("shape accessors") {
  AtomSet u = s1(4) | s1(2);
  CHECK(u.shape() == AtomSet::Shape::Union);
  CHECK(u.left().atom() == Atom{4});
  CHECK(u.right().atom() == Atom{2});
  CHECK(AtomSet().shape() == AtomSet::Shape::Empty);
  CHECK(AtomSet::of({Atom{3}, Atom{1}, Atom{3}}).elements() == std::vector<Atom>{Atom{1}, Atom{3}});
}

TEST_CASE("set queries agree with leaf enumeration") {
  Rng rng(11);
  for (int k = 0; k < 500; ++k) {
    std::set<std::uint64_t> la, lb;
    AtomSet a = random_tree(rng, 5, la);
    AtomSet b = random_tree(rng, 5, lb);

    std::vector<Atom> expect;
    for (auto v : la) expect.push_back(Atom{v});
    CHECK(a.elements() == expect);
    CHECK(a.denotes_empty() == la.empty());

    std::uint64_t want_new = la.empty() ? 0 : *la.rbegin() + 1;
    CHECK(new_atom(a).value == want_new);
    CHECK_FALSE(member(new_atom(a), a));

    for (std::uint64_t v = 0; v < 11; ++v) {
      CHECK(member(Atom{v}, a) == (la.count(v) == 1));
      CHECK(member(Atom{v}, a | b) == (member(Atom{v}, a) || member(Atom{v}, b)));
    }
    CHECK(subset(a, b) == std::includes(lb.begin(), lb.end(), la.begin(), la.end()));
    CHECK(same_set(a, b) == (la == lb));
  }
}

TEST_CASE("new atom ignores tree shape") {
  AtomSet left = (s1(1) | s1(4)) | s1(2);
  AtomSet right = s1(2) | (AtomSet() | (s1(4) | (s1(1) | s1(1))));
  CHECK(same_set(left, right));
  CHECK(new_atom(left) == new_atom(right));
}

TEST_CASE("deep trees do not exhaust the stack") {
  AtomSet s;
  for (std::uint64_t i = 0; i < 200000; ++i) s = s | s1(i % 1000);
  CHECK(new_atom(s) == Atom{1000});
  CHECK(member(Atom{999}, s));
}
