#include <doctest.h>

#include "bindkit/generate.hpp"
#include "bindkit/lambda.hpp"
#include "bindkit/pi.hpp"
#include "data.hpp"
#include "laws.hpp"

using namespace bindkit;

namespace {

const Atom a{0}, b{1};

Term var(Atom x, std::size_t scope = 0) { return Term::make_atom(pi::signature(), x, scope); }

// Every Par and Repl sub-process reachable without crossing a binder.
void direct_parts(const Term& p, std::vector<Term>& out) {
  if (p.is_op("par")) {
    out.push_back(p.arg(0));
    out.push_back(p.arg(1));
    direct_parts(p.arg(0), out);
    direct_parts(p.arg(1), out);
  } else if (p.is_op("repl")) {
    out.push_back(p.arg(0));
    direct_parts(p.arg(0), out);
  }
}

}  // namespace

TEST_CASE("lambda beta step") {
  using lambda::ap;
  using lambda::beta_step;
  using lambda::idx;
  using lambda::lm;
  Term x3 = lambda::var(Atom{3});
  CHECK(beta_step(ap(lm(idx(0, 1)), x3)) == x3);
  CHECK_FALSE(beta_step(x3).has_value());
  CHECK(beta_step(ap(lm(ap(idx(0, 1), idx(0, 1))), lambda::var(b))) == ap(lambda::var(b), lambda::var(b)));
}

TEST_CASE("process judgement on small cases") {
  CHECK(pi::proc_check(pi::out(a, b, pi::null())));
  CHECK_FALSE(pi::proc_check(Term::make_op(pi::signature(), "out", {pi::null(), pi::null(), pi::null()})));
  Term cont = Term::make_op(pi::signature(), "out", {Term::make_index(pi::signature(), 0, 1), var(b, 1), pi::null(1)}, 1);
  CHECK(pi::proc_check(pi::in(a, cont)));
  CHECK(pi::proc_check(pi::nu(cont)));
  CHECK_FALSE(pi::proc_check(var(a)));
  CHECK_FALSE(pi::proc_check(pi::nu(Term::make_index(pi::signature(), 0, 1))));
}

TEST_CASE("process corpus") {
  text::NameTable names;
  auto good = testing::data_lines(testing::data_path("data/pi/wellformed.txt"));
  auto bad = testing::data_lines(testing::data_path("data/pi/illformed.txt"));
  CHECK(good.size() >= 10);
  CHECK(bad.size() >= 10);
  for (const auto& line : good) {
    INFO(line);
    CHECK(pi::proc_check(testing::parse_process_line(line, names)));
  }
  for (const auto& line : bad) {
    INFO(line);
    CHECK_FALSE(pi::proc_check(text::parse_ln(line, pi::signature(), names)));
  }
}

TEST_CASE("generated processes") {
  Rng rng(12);
  for (int k = 0; k < 400; ++k) {
    bool wf = rng.percent(50);
    Term p = testing::gen_process(rng, rng.below(6), wf);
    INFO(to_canonical(p));
    CHECK(pi::proc_check(p) == wf);
    if (pi::proc_check(p)) {
      std::vector<Term> parts;
      direct_parts(p, parts);
      for (const Term& q : parts) CHECK(pi::proc_check(q));
    }
    Renaming rho = gen_renaming(rng, true);
    CHECK(pi::proc_check(rename(rho, p)) == pi::proc_check(p));
  }
}
