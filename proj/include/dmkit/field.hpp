#ifndef DMKIT_FIELD_HPP
#define DMKIT_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "dmkit/errors.hpp"

namespace dmkit {

/// Ground field of the coefficient ring: Q or F_p for a prime p < 2^32.
struct FieldSpec {
  enum class Kind { Rational, Prime };

  Kind kind = Kind::Rational;
  std::uint64_t p = 0;  // set iff kind == Prime

  static FieldSpec rational() { return FieldSpec{Kind::Rational, 0}; }
  static FieldSpec prime(std::uint64_t p);  // validates primality

  bool operator==(const FieldSpec&) const = default;
  std::string str() const;  // "Q" or "Fp:101"
  static FieldSpec parse(const std::string& s);
};

/// Element of the ground field. Rationals are exact GMP rationals kept in
/// canonical form (reduced, positive denominator); prime-field elements
/// carry their modulus and mixed-modulus arithmetic is rejected.
class FieldElement {
 public:
  FieldElement() : v_(mpq_class(0)) {}

  static FieldElement zero(const FieldSpec& f);
  static FieldElement one(const FieldSpec& f);
  static FieldElement from_integer(const FieldSpec& f, const mpz_class& n);
  static FieldElement from_fraction(const FieldSpec& f, const mpz_class& num, const mpz_class& den);
  static FieldElement rational(mpq_class q);                        // canonicalizes
  static FieldElement modular(std::uint64_t value, std::uint64_t p);  // reduces mod p

  FieldSpec field() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rat() const;    // rational elements only
  std::uint64_t residue() const;   // prime-field elements only

  FieldElement operator-() const;
  FieldElement inverse() const;  // division by zero rejected

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  /// Canonical literal: "3", "-3/4", or the residue "97".
  std::string str() const;

 private:
  struct Mod {
    std::uint64_t value;
    std::uint64_t prime;
    bool operator==(const Mod&) const = default;
  };

  explicit FieldElement(mpq_class q) : v_(std::move(q)) {}
  explicit FieldElement(Mod m) : v_(m) {}

  const Mod& mod() const { return std::get<Mod>(v_); }
  static void check_same(const FieldElement& a, const FieldElement& b);

  std::variant<mpq_class, Mod> v_;
};

}  // namespace dmkit

#endif
