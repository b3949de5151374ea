#include "nat_oracle.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

namespace bindkit::testing {

namespace {

struct Closure;

struct Val {
  std::uint64_t nat = 0;
  std::shared_ptr<const Closure> fn;
};

using Env = std::vector<Val>;  // back() is index 0

struct Closure {
  Env env;
  Term body;
};

struct OutOfFuel {};

class Interp {
 public:
  explicit Interp(std::uint64_t fuel) : fuel_(fuel) {}

  Val eval(const Term& t, const Env& env) {
    if (fuel_-- == 0) throw OutOfFuel{};
    if (t.is_index()) return env.at(env.size() - 1 - t.as_index().value);
    if (t.is_atom()) throw std::invalid_argument("open term");
    const std::string& op = t.op().name;
    if (op == "lam") return {0, std::make_shared<const Closure>(Closure{env, t.arg(1)})};
    if (op == "ap") return apply(eval(t.arg(0), env), eval(t.arg(1), env));
    if (op == "zero") return {0, nullptr};
    if (op == "succ") return {eval(t.arg(0), env).nat + 1, nullptr};
    if (op == "natrec") {
      Val acc = eval(t.arg(0), env);
      Val step = eval(t.arg(1), env);
      std::uint64_t n = eval(t.arg(2), env).nat;
      for (std::uint64_t i = 0; i < n; ++i) acc = apply(apply(step, {i, nullptr}), acc);
      return acc;
    }
    throw std::invalid_argument("not a term: " + op);
  }

 private:
  Val apply(const Val& f, const Val& a) {
    if (!f.fn) throw std::invalid_argument("applying a number");
    Env env = f.fn->env;
    env.push_back(a);
    return eval(f.fn->body, env);
  }

  std::uint64_t fuel_;
};

}  // namespace

std::optional<std::uint64_t> closed_nat_value(const Term& t, std::uint64_t fuel) {
  try {
    return Interp(fuel).eval(t, {}).nat;
  } catch (const OutOfFuel&) {
    return std::nullopt;
  }
}

}  // namespace bindkit::testing
