#ifndef DMKIT_REPORT_HPP
#define DMKIT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dmkit/ideal.hpp"

namespace dmkit {

enum class Verdict { Verified, Refuted, Inconclusive };
enum class ExponentProvenance { User, MuAtPoint, GeneratorCountBound };

std::string verdict_name(Verdict v);
Verdict parse_verdict(const std::string& s);
std::string provenance_name(ExponentProvenance p);
ExponentProvenance parse_provenance(const std::string& s);

/// Verdict record for one Dedekind-Mertens style check. "verified" always
/// carries the truncation depth d_cert at which both inclusions were
/// established; "refuted" is only emitted when both inputs are polynomials
/// and the contents on both sides are exact.
struct DMReport {
  std::string check = "dm";  // "dm" | "unit-content"
  RingPtr ring;
  unsigned k = 1;
  ExponentProvenance k_provenance = ExponentProvenance::User;
  std::optional<unsigned> k_upper_bound;  // global inter-reduced generator count
  unsigned d_max = 0;
  std::optional<unsigned> d_cert;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<unsigned> min_exponent;
  std::optional<unsigned> reduction_num;
  std::vector<std::string> lhs_generators;
  std::vector<std::string> rhs_generators;
  std::string lhs_fingerprint;
  std::string rhs_fingerprint;
  std::vector<MembershipCertificate> certificates;
  std::optional<std::uint64_t> seed;
};

}  // namespace dmkit

#endif
