#pragma once

#include <optional>

#include "bindkit/ops.hpp"

namespace bindkit::lambda {

SignaturePtr signature();

/// `lm` around a body of scope n + 1; the result has scope n.
Term lm(const Term& body);
Term ap(const Term& f, const Term& a);
Term var(Atom x, std::size_t scope = 0);
Term idx(std::size_t value, std::size_t scope);

/// One leftmost-outermost beta step on a 0-term, or nullopt when the term is
/// beta-normal. Binders are entered by concreting at a fresh name.
std::optional<Term> beta_step(const Term& t);

}  // namespace bindkit::lambda
