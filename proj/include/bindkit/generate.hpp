#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bindkit/nameful.hpp"
#include "bindkit/ops.hpp"

namespace bindkit {

/// Seeded generator with a platform-independent draw (std distributions are
/// implementation-defined, so they are avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }
  bool percent(unsigned p) { return below(100) < p; }

  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs.at(below(xs.size()));
  }

 private:
  std::mt19937_64 engine_;
};

struct GenConfig {
  std::vector<Atom> atoms = default_pool();
  /// Chance (in percent) of stopping at a leaf when depth remains.
  unsigned leaf_percent = 25;

  static std::vector<Atom> default_pool() {
    std::vector<Atom> pool;
    for (std::uint64_t i = 0; i < 8; ++i) pool.push_back(Atom{i});
    return pool;
  }
};

/// Random well-scoped term of the given scope whose size is at most `depth`.
/// Leaves are atoms from the pool or, when scope > 0, indices.
Term gen_lnterm(const SignaturePtr& sig, std::size_t scope, std::size_t depth, Rng& rng, const GenConfig& cfg = {});
Term gen_lnterm(const SignaturePtr& sig, std::size_t scope, std::size_t depth, std::uint64_t seed);

/// Random nameful term of size at most `depth`; binder names come from the
/// same pool as leaves, so shadowing and capture situations are common.
NomTerm gen_nomterm(const SignaturePtr& sig, std::size_t depth, Rng& rng, const GenConfig& cfg = {});
NomTerm gen_nomterm(const SignaturePtr& sig, std::size_t depth, std::uint64_t seed);

Atom gen_atom(Rng& rng, const GenConfig& cfg = {});

/// Override table on a random subset of the pool, values of size <= depth.
Subst gen_subst(const SignaturePtr& sig, std::size_t depth, Rng& rng, const GenConfig& cfg = {});
NomSubst gen_nomsubst(const SignaturePtr& sig, std::size_t depth, Rng& rng, const GenConfig& cfg = {});

/// Random renaming on the pool. When `injective` is set the map is a
/// permutation of the pool.
Renaming gen_renaming(Rng& rng, bool injective, const GenConfig& cfg = {});

}  // namespace bindkit
