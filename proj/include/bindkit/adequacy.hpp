#pragma once

#include "bindkit/nameful.hpp"
#include "bindkit/term.hpp"

namespace bindkit {

/// Nameful to locally nameless: a binding <x_m, ..., <x_1, M>> becomes
/// <x_m>(... (<x_1> [[M]])). The result has scope 0.
Term translate(const NomTerm& m);

/// Inverse up to alpha-equivalence. Each binder of a depth-m argument is
/// peeled by concreting at new(support), so translate(untranslate(t)) == t.
NomTerm untranslate(const Term& t);

/// alpha_eq(m, n) implies translate(m) == translate(n).
bool check_soundness(const NomTerm& m, const NomTerm& n);

/// translate(m) == translate(n) implies alpha_eq(m, n).
bool check_injectivity(const NomTerm& m, const NomTerm& n);

/// Composition of sigma with translate, as a locally nameless substitution.
Subst translate_subst(const NomSubst& sigma);

}  // namespace bindkit
