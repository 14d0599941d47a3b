#ifndef DMKIT_POLYNOMIAL_HPP
#define DMKIT_POLYNOMIAL_HPP

#include <optional>
#include <vector>

#include "dmkit/ring.hpp"

namespace dmkit {

struct Term {
  Monomial mono;
  FieldElement coeff;
};

/// Sparse multivariate polynomial over the ring's ground field, kept in
/// canonical form: terms strictly descending in the ring's monomial order,
/// no zero coefficients, no duplicate monomials.
class Polynomial {
 public:
  /// Placeholder state (zero, no ring); only valid as an assignment target.
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);  // normalizes

  static Polynomial constant(RingPtr ring, FieldElement c);
  static Polynomial from_int(RingPtr ring, long n);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial term(RingPtr ring, Monomial m, FieldElement c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The coefficient of the monomial 1.
  FieldElement constant_coefficient() const;
  /// Nonzero scalar iff the polynomial is a nonzero constant.
  std::optional<FieldElement> as_nonzero_scalar() const;
  const Term& leading() const;  // nonzero polynomials only
  std::uint64_t total_degree() const;  // zero polynomial has degree 0
  FieldElement coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const FieldElement& c) const;
  Polynomial times_term(const Monomial& m, const FieldElement& c) const;
  Polynomial monic() const;  // nonzero polynomials only

  FieldElement evaluate(const RationalPoint& pt) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// p(x1+c1, ..., xn+cn): the maximal ideal at pt becomes the ideal
/// generated by the variables.
Polynomial shift_to_origin(const Polynomial& p, const RationalPoint& pt);

}  // namespace dmkit

#endif
