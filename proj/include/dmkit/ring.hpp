#ifndef DMKIT_RING_HPP
#define DMKIT_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmkit/field.hpp"

namespace dmkit {

enum class MonomialOrder { Grevlex, Lex };

std::string order_name(MonomialOrder o);
MonomialOrder parse_order(const std::string& s);

/// Declares the coefficient ring R = k[x1..xn]: named variables over a
/// ground field, plus the monomial order used by every Groebner
/// computation in this ring. The series variable (default "X") is
/// reserved and may not appear among the ring variables.
class RingSpec {
 public:
  RingSpec(std::vector<std::string> vars, FieldSpec field,
           MonomialOrder order = MonomialOrder::Grevlex, std::string series_var = "X");

  std::size_t arity() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(std::size_t i) const { return vars_[i]; }
  const std::string& series_var() const { return series_var_; }
  const FieldSpec& field() const { return field_; }
  MonomialOrder order() const { return order_; }
  std::optional<std::size_t> var_index(std::string_view name) const;

  bool operator==(const RingSpec& o) const;
  std::string str() const;  // "Q[u,v] grevlex"

 private:
  std::vector<std::string> vars_;
  FieldSpec field_;
  MonomialOrder order_;
  std::string series_var_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(std::vector<std::string> vars, FieldSpec field,
                  MonomialOrder order = MonomialOrder::Grevlex, std::string series_var = "X");

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Exponent vector, one entry per ring variable. Total degree is cached.
class Monomial {
 public:
  explicit Monomial(std::size_t arity) : exps_(arity, 0), degree_(0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  std::size_t arity() const { return exps_.size(); }
  std::uint32_t exp(std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exps() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial divided_by(const Monomial& o) const;  // precondition: o.divides(*this)
  bool coprime_with(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  /// Three-way comparison under the given order: negative, zero, positive
  /// as a <, ==, > b.
  static int cmp(const Monomial& a, const Monomial& b, MonomialOrder order);

 private:
  std::vector<std::uint32_t> exps_;
  std::uint64_t degree_;
};

/// Point (c1..cn) of k^n, naming the maximal ideal (x1-c1, ..., xn-cn).
class RationalPoint {
 public:
  RationalPoint(RingPtr ring, std::vector<FieldElement> coords);
  static RationalPoint origin(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  std::size_t arity() const { return coords_.size(); }
  const FieldElement& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<FieldElement>& coords() const { return coords_; }
  bool is_origin() const;
  RationalPoint negated() const;
  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<FieldElement> coords_;
};

}  // namespace dmkit

#endif
