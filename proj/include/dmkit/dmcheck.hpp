#ifndef DMKIT_DMCHECK_HPP
#define DMKIT_DMCHECK_HPP

#include <random>

#include "dmkit/report.hpp"
#include "dmkit/series.hpp"

namespace dmkit {

/// mu(c(g)_m) at the maximal ideal of pt. This equals the identity's
/// exponent k when the point dominates every maximal ideal (e.g. a
/// homogeneous content at the origin); otherwise it is a valid exponent
/// only together with the generator-count bound below.
unsigned dm_exponent(const UnitTailSeries& g, const RationalPoint& pt);

/// Size of the content's generator list after global inter-reduction; an
/// upper bound for mu(c(g)_m) at every maximal ideal, hence always a valid
/// exponent.
unsigned content_generator_bound(const UnitTailSeries& g);

/// 4*(k + pdeg f + pdeg g) + 8.
unsigned default_d_max(const UnitTailSeries& f, const UnitTailSeries& g, unsigned k);

struct CheckOptions {
  bool want_certificates = true;
  ExponentProvenance provenance = ExponentProvenance::User;
  std::optional<std::uint64_t> seed;
};

/// Certifies c(f)^k c(g) = c(f)^(k-1) c(fg). The right-to-left inclusion
/// holds structurally and is spot-verified at the certified truncation;
/// the left-to-right inclusion is certified against ascending truncated
/// contents of fg. "refuted" is possible only for polynomial inputs,
/// where both sides are exact.
DMReport dm_check(const UnitTailSeries& f, const UnitTailSeries& g, unsigned k, unsigned d_max,
                  const CheckOptions& opts = {});

/// Least k <= k_max whose dm_check verdict is verified.
std::optional<unsigned> dm_min_exponent(const UnitTailSeries& f, const UnitTailSeries& g,
                                        unsigned k_max, unsigned d_max);

/// Certifies c(fg) = c(g) for unit-content f (c(f) = R checked).
DMReport unit_content_identity_check(const UnitTailSeries& f, const UnitTailSeries& g,
                                     unsigned d_max);

/// Checks content(g) = content(h) locally at pt for h = g + b*u*X^i with
/// b in m*c(g). Must hold for every valid input: a false return or a
/// CheckFailed diagnostic indicates an implementation bug.
bool mingen_perturbation_check(const UnitTailSeries& g, const Polynomial& b, unsigned i,
                               const UnitSeries& u, const RationalPoint& pt);

/// Generic degree-k pair f' = sum a_i X^i, g' = sum b_i X^i over
/// F[a_0..a_k, b_0..b_k]: certifies (c(f')c(g'))^k != (c(f')c(g'))^(k-1) c(f'g')
/// by exhibiting a generator of the left side outside the right side, and
/// for contrast verifies the identity at the exponent mu(c(g')) = k+1.
struct CounterexampleReport {
  unsigned k = 1;
  RingPtr ring;
  bool inequality_certified = false;
  Polynomial witness;
  std::string lhs_fingerprint;  // generator-list fingerprint of (c(f')c(g'))^k
  std::string rhs_fingerprint;  // GB fingerprint of (c(f')c(g'))^(k-1) c(f'g')
  DMReport contrast;
};
CounterexampleReport generic_counterexample(unsigned k, const FieldSpec& field);

/// Rush's corrected example over Q[u,v]: f = v + X, g = u + vX(1+X+X^2+...).
struct RushReport {
  RingPtr ring;
  std::vector<Polynomial> fg_coefficients;  // through X^4
  bool coefficients_match = false;          // [uv, u+v^2, v+v^2, v+v^2, v+v^2]
  bool cfg_equals_cg = false;
  bool content_is_uv = false;
  DMReport identity;  // unit_content_identity_check(f, g)
  MembershipCertificate lift_v;
  MembershipCertificate lift_u_minus_v;
  bool paper_cofactors_v_ok = false;
  bool paper_cofactors_u_minus_v_ok = false;
  bool ok() const {
    return coefficients_match && cfg_equals_cg && content_is_uv &&
           identity.verdict == Verdict::Verified && lift_v.validate() &&
           lift_u_minus_v.validate() && paper_cofactors_v_ok && paper_cofactors_u_minus_v_ok;
  }
};
RushReport rush_example_check();

/// Runs dm_check, then certifies that the c(fg)-approximant at the
/// certification depth is a reduction of c(f)c(g) with number <= k-1.
struct ReductionReport {
  DMReport dm;
  std::optional<unsigned> reduction_num;
  bool within_bound = false;
};
ReductionReport reduction_corollary_check(const UnitTailSeries& f, const UnitTailSeries& g,
                                          unsigned k, unsigned d_max,
                                          const CheckOptions& opts = {});

// ---- seeded random corpus --------------------------------------------

enum class CorpusRing { RationalUV, F101XYZ };
RingPtr corpus_ring(CorpusRing r);

/// Random homogeneous polynomial of the given degree (nonzero).
Polynomial random_homogeneous(std::mt19937_64& rng, const RingPtr& ring, unsigned degree,
                              unsigned max_terms);
/// Random unit: 1, the geometric series, or a polynomial unit.
UnitSeries random_unit(std::mt19937_64& rng, const RingPtr& ring);
/// Random unit-tail series with homogeneous coefficients (degrees <= 2,
/// term count <= 4). With force_unit_content one coefficient is a nonzero
/// scalar, so the content is the unit ideal.
UnitTailSeries random_unit_tail(std::mt19937_64& rng, const RingPtr& ring,
                                bool force_unit_content = false);
/// Random polynomial series of exact X-degree `degree` (units all 1,
/// coefficients not necessarily homogeneous).
UnitTailSeries random_polynomial_series(std::mt19937_64& rng, const RingPtr& ring,
                                        unsigned degree);

struct CorpusOptions {
  std::uint64_t seed = 42;
  unsigned count = 100;
  CorpusRing ring = CorpusRing::RationalUV;
  unsigned threads = 0;        // 0 = hardware concurrency
  bool unit_content = false;   // force c(f) = R and check c(fg) = c(g) instead
  bool with_reduction = false; // also compute corollary reduction numbers
};

struct CorpusRow {
  unsigned index = 0;
  std::uint64_t pair_seed = 0;
  unsigned k = 1;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<unsigned> d_cert;
  std::optional<unsigned> reduction_num;
  bool reduction_ok = true;
};

struct CorpusResult {
  std::uint64_t seed = 0;
  unsigned total = 0;
  unsigned verified = 0;
  bool all_reductions_ok = true;
  std::vector<CorpusRow> rows;
};

CorpusResult run_corpus(const CorpusOptions& opts);

}  // namespace dmkit

#endif
