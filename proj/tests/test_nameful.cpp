#include <doctest.h>

#include "bindkit/adequacy.hpp"
#include "bindkit/error.hpp"
#include "bindkit/generate.hpp"
#include "bindkit/lambda.hpp"
#include "bindkit/pi.hpp"
#include "laws.hpp"

using namespace bindkit;

namespace {

const Atom x{0}, y{1}, z{2};

SignaturePtr L() { return lambda::signature(); }
NomTerm at(Atom a) { return NomTerm::make_atom(L(), a); }
NomTerm lm(Atom b, const NomTerm& body) { return NomTerm::make_op(L(), "lm", {bind({b}, body)}); }
NomTerm ap(const NomTerm& f, const NomTerm& a) { return NomTerm::make_op(L(), "ap", {bind({}, f), bind({}, a)}); }

}  // namespace

TEST_CASE("construction checks binding depths") {
  CHECK_THROWS_AS(NomTerm::make_op(L(), "lm", {bind({}, at(x))}), ArityError);
  CHECK_THROWS_AS(NomTerm::make_op(L(), "ap", {bind({}, at(x))}), ArityError);
  CHECK_THROWS_AS(NomTerm::make_op(L(), "ap", {bind({}, at(x)), bind({}, NomTerm::make_atom(pi::signature(), x))}),
                  SignatureMismatch);
}

TEST_CASE("support counts binders") {
  CHECK(nom_support(at(Atom{3})).elements() == std::vector<Atom>{Atom{3}});
  CHECK(nom_support(lm(x, at(x))).elements() == std::vector<Atom>{x});
  CHECK(nom_support(lm(x, at(y))).elements() == std::vector<Atom>{x, y});
}

TEST_CASE("renaming and size") {
  CHECK(nom_rename(Renaming{}, lm(x, at(x))) == lm(x, at(x)));
  CHECK(nom_rename(Renaming::single(x, y), lm(x, at(x))) == lm(y, at(y)));
  CHECK(nom_rename(Renaming::single(x, y), ap(at(x), at(z))) == ap(at(y), at(z)));
  CHECK(nom_size(at(x)) == 0);
  CHECK(nom_size(lm(x, at(x))) == 1);

  Rng rng(8);
  for (int k = 0; k < 300; ++k) {
    NomTerm m = gen_nomterm(L(), rng.below(7), rng);
    CHECK(nom_size(nom_rename(gen_renaming(rng, false), m)) == nom_size(m));
  }
}

TEST_CASE("alpha-equivalence") {
  CHECK(alpha_eq(lm(x, at(x)), lm(y, at(y))));
  CHECK_FALSE(alpha_eq(lm(x, at(x)), lm(x, at(z))));
  CHECK_FALSE(alpha_eq(lm(x, at(y)), lm(y, at(y))));
  CHECK(alpha_eq(lm(x, lm(y, ap(at(x), at(y)))), lm(y, lm(x, ap(at(y), at(x))))));
  CHECK_FALSE(alpha_eq(lm(x, lm(y, ap(at(x), at(y)))), lm(y, lm(x, ap(at(x), at(y))))));
  // Shadowing: the inner binder wins.
  CHECK(alpha_eq(lm(x, lm(x, at(x))), lm(y, lm(z, at(z)))));
  CHECK_FALSE(alpha_eq(lm(x, lm(x, at(x))), lm(y, lm(z, at(y)))));
}

TEST_CASE("alpha-equivalence is an equivalence relation") {
  Rng rng(21);
  for (int k = 0; k < 400; ++k) {
    NomTerm a = gen_nomterm(L(), rng.below(6), rng);
    NomTerm b = rng.percent(50) ? testing::rename_binders(a, rng) : gen_nomterm(L(), rng.below(3), rng);
    NomTerm c = rng.percent(50) ? testing::rename_binders(b, rng) : gen_nomterm(L(), rng.below(3), rng);
    CHECK(alpha_eq(a, a));
    CHECK(alpha_eq(a, b) == alpha_eq(b, a));
    if (alpha_eq(a, b) && alpha_eq(b, c)) CHECK(alpha_eq(a, c));
  }
}

TEST_CASE("multi-binder bindings") {
  auto sig = parse_signature("let2 : 2\nap : 0 0\n", "multi");
  auto v = [&](Atom a) { return NomTerm::make_atom(sig, a); };
  auto let2 = [&](Atom a, Atom b, const NomTerm& body) { return NomTerm::make_op(sig, "let2", {bind({a, b}, body)}); };
  auto app = [&](const NomTerm& f, const NomTerm& g) { return NomTerm::make_op(sig, "ap", {bind({}, f), bind({}, g)}); };

  CHECK(alpha_eq(let2(x, y, app(v(x), v(y))), let2(y, x, app(v(y), v(x)))));
  CHECK_FALSE(alpha_eq(let2(x, y, app(v(x), v(y))), let2(x, y, app(v(y), v(x)))));
  // Repeated binder: the inner occurrence binds.
  CHECK(alpha_eq(let2(x, x, v(x)), let2(z, y, v(y))));
  CHECK_FALSE(alpha_eq(let2(x, x, v(x)), let2(y, z, v(y))));
  // The outermost binder is index 0 after translation.
  CHECK(to_canonical(translate(let2(x, y, app(v(x), v(y))))) == "(let2 (^2 (ap #0 #1)))");
}

TEST_CASE("capture-avoiding substitution") {
  // supp body = {0, 1}; sigma 0 = @1, sigma 1 = @1; new {1} = 2.
  NomTerm m = lm(y, ap(at(x), at(y)));
  CHECK(nom_subst(NomSubst::single(x, at(y)), m) == lm(Atom{2}, ap(at(y), at(Atom{2}))));

  Rng rng(9);
  for (int k = 0; k < 300; ++k) {
    NomTerm t = gen_nomterm(L(), rng.below(7), rng);
    CHECK(alpha_eq(nom_subst(NomSubst(L()), t), t));
    Atom a = gen_atom(rng);
    CHECK(alpha_eq(nom_subst(NomSubst::single(a, at(a)), t), t));
  }
}

TEST_CASE("canonical text") {
  CHECK(to_canonical(lm(x, ap(at(x), at(z)))) == "(lm [0] (ap @0 @2))");
  CHECK(to_canonical(NomTerm::make_op(pi::signature(), "null", {})) == "(null)");
}
