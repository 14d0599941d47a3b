#ifndef DMKIT_IDEAL_HPP
#define DMKIT_IDEAL_HPP

#include <memory>
#include <vector>

#include "dmkit/polynomial.hpp"

namespace dmkit {

/// Reduced Groebner basis of an ideal, optionally with cofactor rows
/// expressing each basis element over the ideal's original generators.
struct GroebnerData {
  std::vector<Polynomial> basis;
  /// lifts[i][g] satisfies basis[i] = sum_g lifts[i][g] * generators[g].
  std::vector<std::vector<Polynomial>> lifts;
};

/// Finitely generated ideal of R. Zero generators are dropped on
/// construction; the empty generator list is the zero ideal. The reduced
/// Groebner basis is computed lazily and cached; copies share the cache,
/// and concurrent fills are race-free (at-most-once per cache level).
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  /// Reduced Groebner basis w.r.t. the ring's order (cached).
  const std::vector<Polynomial>& basis() const;
  /// Basis plus cofactor rows over the original generators (cached; first
  /// call redoes the Buchberger run with division tracking).
  const GroebnerData& groebner_with_lifts() const;

 private:
  struct Cache;

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Witness that target lies in the ideal generated by `generators`:
/// target == sum_i cofactors[i] * generators[i].
struct MembershipCertificate {
  Polynomial target;
  std::vector<Polynomial> generators;
  std::vector<Polynomial> cofactors;

  bool validate() const;
};

}  // namespace dmkit

#endif
