#pragma once

#include "bindkit/ops.hpp"

namespace bindkit::pi {

SignaturePtr signature();

// Process builders over 0-terms. `in` and `nu` take the continuation as a
// 1-term (the bound name is index 0).
Term in(Atom channel, const Term& continuation);
Term out(Atom channel, Atom message, const Term& continuation);
Term par(const Term& p, const Term& q);
Term nu(const Term& body);
Term repl(const Term& p);
Term null(std::size_t scope = 0);

/// Decides the well-formed-process judgement for a 0-term:
///   null; par P Q and repl P when the parts are processes;
///   out a b P when a and b are atoms and P is a process;
///   in a P' (a an atom) and nu P' when P'[x] is a process for
///   x = new(supp P').
/// Anything else is rejected.
bool proc_check(const Term& p);

}  // namespace bindkit::pi
