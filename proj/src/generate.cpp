#include "bindkit/generate.hpp"

#include <algorithm>

namespace bindkit {

Atom gen_atom(Rng& rng, const GenConfig& cfg) { return rng.pick(cfg.atoms); }

Term gen_lnterm(const SignaturePtr& sig, std::size_t scope, std::size_t depth, Rng& rng, const GenConfig& cfg) {
  const auto& ops = sig->operators();
  if (depth == 0 || ops.empty() || rng.percent(cfg.leaf_percent)) {
    if (scope > 0 && rng.percent(50)) return Term::make_index(sig, rng.below(scope), scope);
    return Term::make_atom(sig, gen_atom(rng, cfg), scope);
  }
  std::size_t id = rng.below(ops.size());
  std::vector<Term> args;
  for (std::size_t m : ops[id].arity) args.push_back(gen_lnterm(sig, m + scope, depth - 1, rng, cfg));
  return Term::make_op(sig, id, std::move(args), scope);
}

Term gen_lnterm(const SignaturePtr& sig, std::size_t scope, std::size_t depth, std::uint64_t seed) {
  Rng rng(seed);
  return gen_lnterm(sig, scope, depth, rng);
}

NomTerm gen_nomterm(const SignaturePtr& sig, std::size_t depth, Rng& rng, const GenConfig& cfg) {
  const auto& ops = sig->operators();
  if (depth == 0 || ops.empty() || rng.percent(cfg.leaf_percent)) return NomTerm::make_atom(sig, gen_atom(rng, cfg));
  std::size_t id = rng.below(ops.size());
  std::vector<NomBinding> bs;
  for (std::size_t m : ops[id].arity) {
    std::vector<Atom> binders;
    for (std::size_t k = 0; k < m; ++k) binders.push_back(gen_atom(rng, cfg));
    bs.push_back(bind(std::move(binders), gen_nomterm(sig, depth - 1, rng, cfg)));
  }
  return NomTerm::make_op(sig, id, std::move(bs));
}

NomTerm gen_nomterm(const SignaturePtr& sig, std::size_t depth, std::uint64_t seed) {
  Rng rng(seed);
  return gen_nomterm(sig, depth, rng);
}

Subst gen_subst(const SignaturePtr& sig, std::size_t depth, Rng& rng, const GenConfig& cfg) {
  Subst s(sig);
  for (Atom x : cfg.atoms)
    if (rng.percent(50)) s = s.updated(x, gen_lnterm(sig, 0, rng.below(depth + 1), rng, cfg));
  return s;
}

NomSubst gen_nomsubst(const SignaturePtr& sig, std::size_t depth, Rng& rng, const GenConfig& cfg) {
  NomSubst s(sig);
  for (Atom x : cfg.atoms)
    if (rng.percent(50)) s = s.updated(x, gen_nomterm(sig, rng.below(depth + 1), rng, cfg));
  return s;
}

Renaming gen_renaming(Rng& rng, bool injective, const GenConfig& cfg) {
  Renaming rho;
  if (injective) {
    std::vector<Atom> image = cfg.atoms;
    for (std::size_t i = image.size(); i > 1; --i) std::swap(image[i - 1], image[rng.below(i)]);
    for (std::size_t i = 0; i < cfg.atoms.size(); ++i) rho.set(cfg.atoms[i], image[i]);
  } else {
    for (Atom x : cfg.atoms)
      if (rng.percent(50)) rho.set(x, gen_atom(rng, cfg));
  }
  return rho;
}

}  // namespace bindkit
