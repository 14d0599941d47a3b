#ifndef DMKIT_SERIES_HPP
#define DMKIT_SERIES_HPP

#include <limits>
#include <optional>

#include "dmkit/groebner.hpp"

namespace dmkit {

/// Element of R[[X]] known modulo X^(d+1): coefficient list [a_0..a_d]
/// with trailing zeros stored explicitly.
class TruncatedSeries {
 public:
  TruncatedSeries(RingPtr ring, std::vector<Polynomial> coeffs);
  static TruncatedSeries zero(RingPtr ring, unsigned precision);

  const RingPtr& ring() const { return ring_; }
  unsigned precision() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const Polynomial& coeff(unsigned i) const;
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  TruncatedSeries truncated(unsigned d) const;  // d <= precision
  TruncatedSeries operator+(const TruncatedSeries& o) const;  // min precision

 private:
  RingPtr ring_;
  std::vector<Polynomial> coeffs_;
};

/// Cauchy product truncated to the smaller precision.
TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// Unit of R[[X]]: the constant coefficient is a nonzero scalar of the
/// ground field. The extension tag says how coefficients continue beyond
/// the stored list: exactly zero (a polynomial unit), all ones (the
/// geometric series 1/(1-X)), or unknown.
class UnitSeries {
 public:
  enum class Extension { Zeros, AllOnes, Unknown };

  UnitSeries(RingPtr ring, std::vector<Polynomial> coeffs, Extension ext = Extension::Zeros);
  static UnitSeries one(RingPtr ring);
  static UnitSeries geometric(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  unsigned stored_precision() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  Extension extension() const { return ext_; }
  bool extendable() const { return ext_ != Extension::Unknown; }
  const std::vector<Polynomial>& stored_coeffs() const { return coeffs_; }
  const FieldElement& constant_scalar() const { return constant_; }

  /// Coefficient of X^i, applying the extension rule beyond the stored
  /// precision; throws InsufficientUnitPrecision for Unknown tails.
  Polynomial coeff(unsigned i) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> coeffs_;
  Extension ext_;
  FieldElement constant_;
};

/// u * unit_inverse(u, d) expands to 1 modulo X^(d+1).
UnitSeries unit_inverse(const UnitSeries& u, unsigned d);

struct UnitTailTerm {
  Polynomial coeff;
  unsigned exponent;
  UnitSeries unit;
};

/// Series in the content-exact form sum_j a_j u_j X^j with distinct
/// exponents j (all <= the working precision) and units u_j: its content
/// is exactly the ideal generated by the a_j.
class UnitTailSeries {
 public:
  UnitTailSeries(RingPtr ring, unsigned precision, std::vector<UnitTailTerm> terms);

  const RingPtr& ring() const { return ring_; }
  unsigned precision() const { return precision_; }
  const std::vector<UnitTailTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// True when every unit is a Zeros-tagged polynomial, so the series is
  /// an exactly known element of R[X].
  bool is_polynomial() const;
  unsigned exact_x_degree() const;  // polynomial series only
  /// Largest depth expand() can reach without hitting an Unknown tail.
  unsigned max_expandable_depth() const;

  static constexpr unsigned kUnbounded = std::numeric_limits<unsigned>::max();

 private:
  RingPtr ring_;
  unsigned precision_;
  std::vector<UnitTailTerm> terms_;
};

/// Coefficient-wise expansion of sum a_j u_j X^j modulo X^(d+1).
TruncatedSeries expand(const UnitTailSeries& f, unsigned d);

/// Exact content: the ideal generated by the listed coefficients a_j.
Ideal content(const UnitTailSeries& f);

/// The ideal (a_0, ..., a_d') of leading coefficients.
Ideal truncated_content(const TruncatedSeries& f, unsigned d_prime);

/// Least n <= d with a_i in (a_0..a_n) for all n < i <= d. Certifies
/// stabilization only up to the stored precision.
unsigned stabilization_index(const TruncatedSeries& f);

/// Declared tail recurrence a_i = sum_j rows[i-start-1][j] * a_j for
/// start < i <= precision; each row has start+1 entries.
struct Recurrence {
  unsigned start;
  std::vector<std::vector<Polynomial>> rows;
};

/// Rewrites a truncation into unit-tail form (a_j, j, u_j) with
/// u_j = 1 + sum_{i>n} r_ij X^(i-j). Without a declared recurrence the
/// cofactors are produced by lifting each tail coefficient against the
/// stabilized prefix; declared rows are verified first.
UnitTailSeries unit_tail_rewrite(const TruncatedSeries& f,
                                 const std::optional<Recurrence>& recurrence = std::nullopt);

/// Upper bound for the pseudodegree: the largest exponent in the term list.
unsigned pdeg_upper_bound(const UnitTailSeries& f);

}  // namespace dmkit

#endif
