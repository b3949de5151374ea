#include <doctest.h>

#include "bindkit/error.hpp"
#include "bindkit/systemt.hpp"
#include "nat_oracle.hpp"

using namespace bindkit;
using namespace bindkit::systemt;

namespace {

const Atom f{10}, n{11}, x{0}, r{1};

Type N() { return Type::nat(); }
Type arr(Type a, Type b) { return Type::arrow(std::move(a), std::move(b)); }

// \x:Nat. x
Term id_nat() { return lam(N(), x, var(x)); }

// \n:Nat. \r:Nat. succ r
Term succ_step() { return lam(N(), n, lam(N(), r, succ(var(r)))); }

Context random_context(Rng& rng) {
  Context ctx;
  std::size_t k = rng.below(3);
  for (std::size_t i = 0; i < k; ++i) ctx.add(Atom{20 + i}, gen_type(rng, 2));
  return ctx;
}

}  // namespace

TEST_CASE("types") {
  CHECK(as_type(encode(N())) == N());
  CHECK(as_type(encode(arr(N(), N()))) == arr(N(), N()));
  CHECK_THROWS_AS(as_type(zero()), TypeError);
  CHECK(to_string(arr(arr(N(), N()), arr(N(), N()))) == "(Nat -> Nat) -> Nat -> Nat");
  CHECK(all_types(0).size() == 1);
  CHECK(all_types(1).size() == 2);
  CHECK(all_types(2).size() == 4);
  CHECK(all_types(3).size() == 9);
  for (const Type& t : all_types(3)) CHECK(t.arrows() <= 3);
}

TEST_CASE("contexts") {
  Context ctx;
  ctx.add(f, arr(N(), N()));
  CHECK_THROWS_AS(ctx.add(f, N()), TypeError);
  CHECK(*ctx.find(f) == arr(N(), N()));
  CHECK(ctx.find(n) == nullptr);
}

TEST_CASE("type inference") {
  CHECK(infer({}, id_nat()) == arr(N(), N()));
  Term k = lam(N(), x, lam(N(), r, var(r)));
  CHECK(infer({}, natrec(zero(), k, succ(zero()))) == N());
  CHECK_THROWS_AS(infer({}, ap(zero(), zero())), TypeError);
  CHECK_THROWS_AS(infer({}, var(f)), TypeError);
  CHECK_THROWS_AS(infer({}, ap(id_nat(), id_nat())), TypeError);
  CHECK_THROWS_AS(infer({}, natrec(zero(), id_nat(), zero())), TypeError);
  CHECK_THROWS_AS(infer({}, encode(N())), TypeError);
  Context g{{f, arr(N(), N())}};
  CHECK(infer(g, ap(var(f), zero())) == N());
}

TEST_CASE("evaluation, reification and reflection") {
  World w;
  CHECK(eval({}, w, zero()).nf() == zero());
  CHECK(eval({}, w, ap(id_nat(), zero())).nf() == zero());
  Env env{{n, EnvEntry{reflect(N(), var(n)), N()}}};
  CHECK(eval(env, AtomSet::singleton(n), succ(var(n))).nf() == succ(var(n)));
  CHECK(reify(w, N(), Value::nat(zero())) == zero());
  CHECK(reflect(arr(N(), N()), var(f)).apply(w, Value::nat(zero())).nf() == ap(var(f), zero()));
  CHECK(reify(AtomSet::singleton(f), arr(N(), N()), reflect(arr(N(), N()), var(f))) ==
        eta_expand(var(f), arr(N(), N())));
}

TEST_CASE("normalization examples") {
  CHECK(normalize({}, ap(id_nat(), zero())) == zero());
  Context g{{f, arr(N(), N())}};
  CHECK(normalize(g, var(f)) == lam(N(), x, ap(var(f), var(x))));
  CHECK(normalize({}, natrec(zero(), succ_step(), numeral(2))) == numeral(2));
  // Stuck recursor: the neutral case reifies base and step.
  Context h{{n, N()}};
  Term stuck = natrec(zero(), succ_step(), var(n));
  Term nf = normalize(h, stuck);
  CHECK(is_normal_form(nf));
  CHECK(nf.is_op("natrec"));
  CHECK(normalize(h, natrec(zero(), succ_step(), succ(var(n)))) == succ(nf));
}

TEST_CASE("conversion") {
  Context g{{f, arr(N(), N())}};
  CHECK(convertible(g, var(f), lam(N(), x, ap(var(f), var(x)))));
  CHECK(convertible({}, ap(id_nat(), zero()), zero()));
  CHECK_FALSE(convertible({}, zero(), succ(zero())));
  CHECK_THROWS_AS(convertible({}, zero(), id_nat()), TypeError);
}

TEST_CASE("beta steps") {
  Term k = lam(N(), x, lam(N(), r, var(r)));
  CHECK(beta_step(natrec(numeral(3), k, zero())) == numeral(3));
  CHECK(beta_step(ap(id_nat(), zero())) == zero());
  CHECK_FALSE(beta_step(zero()).has_value());
  CHECK(beta_step(natrec(zero(), k, succ(zero()))) == ap(ap(k, zero()), natrec(zero(), k, zero())));
  CHECK(beta_normalize(natrec(zero(), succ_step(), numeral(4)), 1000) == numeral(4));
  CHECK_FALSE(beta_normalize(natrec(zero(), succ_step(), numeral(4)), 2).has_value());
}

TEST_CASE("normal-form grammar") {
  CHECK(is_normal_form(zero()));
  CHECK(is_normal_form(lam(N(), x, ap(var(f), var(x)))));
  CHECK(is_neutral(natrec(zero(), zero(), ap(var(f), zero()))));
  CHECK_FALSE(is_normal_form(ap(id_nat(), zero())));
  CHECK_FALSE(is_neutral(succ(var(n))));
  CHECK_FALSE(is_normal_form(natrec(zero(), zero(), zero())));
}

TEST_CASE("generated typed terms") {
  Rng rng(31);
  for (int k = 0; k < 300; ++k) {
    Context ctx = random_context(rng);
    Type a = gen_type(rng, 2);
    Term t = gen_typed(ctx, a, rng.below(5), rng);
    INFO(to_canonical(t));
    REQUIRE(infer(ctx, t) == a);
    Term nf = normalize(ctx, t);
    CHECK(is_normal_form(nf));
    CHECK(infer(ctx, nf) == a);
    CHECK(normalize(ctx, nf) == nf);
    if (auto s = beta_step(t)) CHECK(normalize(ctx, *s) == nf);
  }
}

TEST_CASE("normalization does not depend on context names") {
  Rng rng(32);
  for (int k = 0; k < 200; ++k) {
    Context ctx = random_context(rng);
    Term t = gen_typed(ctx, gen_type(rng, 2), rng.below(5), rng);
    // Move every context atom far away and back.
    Renaming to, back;
    Context moved;
    for (const auto& [y, ty] : ctx.entries()) {
      Atom z{y.value + 100};
      to.set(y, z);
      back.set(z, y);
      moved.add(z, ty);
    }
    CHECK(rename(back, normalize(moved, rename(to, t))) == normalize(ctx, t));
  }
}

TEST_CASE("closed numerals agree with an independent interpreter") {
  Rng rng(33);
  for (int k = 0; k < 200; ++k) {
    Term t = gen_typed({}, N(), rng.below(5), rng);
    auto expect = testing::closed_nat_value(t, 1000000);
    REQUIRE(expect.has_value());
    CHECK(normalize({}, t) == numeral(*expect));
  }
}

TEST_CASE("recursor with the successor step") {
  for (std::size_t k = 0; k <= 10; ++k) CHECK(normalize({}, natrec(zero(), succ_step(), numeral(k))) == numeral(k));
}
