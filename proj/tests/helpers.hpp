#ifndef DMKIT_TESTS_HELPERS_HPP
#define DMKIT_TESTS_HELPERS_HPP

#include <random>
#include <string>

#include "dmkit/exprio.hpp"

namespace dmkit::testing {

inline RingPtr quv() { return make_ring({"u", "v"}, FieldSpec::rational()); }
inline RingPtr f101xyz() { return make_ring({"x", "y", "z"}, FieldSpec::prime(101)); }

inline Polynomial pp(const RingPtr& ring, const std::string& src) { return parse_poly(src, ring); }

inline FieldElement random_scalar(std::mt19937_64& rng, const FieldSpec& field) {
  if (field.kind == FieldSpec::Kind::Prime)
    return FieldElement::modular(1 + rng() % (field.p - 1), field.p);
  long v = static_cast<long>(rng() % 9) - 4;
  if (v == 0) v = 1;
  return FieldElement::from_integer(field, mpz_class(v));
}

inline Monomial random_monomial(std::mt19937_64& rng, const RingPtr& ring, unsigned max_deg) {
  std::vector<std::uint32_t> e(ring->arity(), 0);
  unsigned total = rng() % (max_deg + 1);
  for (unsigned i = 0; i < total; ++i) e[rng() % ring->arity()] += 1;
  return Monomial(std::move(e));
}

inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, unsigned max_deg,
                              unsigned max_terms) {
  std::vector<Term> terms;
  unsigned n = 1 + rng() % max_terms;
  for (unsigned i = 0; i < n; ++i)
    terms.push_back(Term{random_monomial(rng, ring, max_deg), random_scalar(rng, ring->field())});
  return Polynomial(ring, std::move(terms));
}

inline RationalPoint random_point(std::mt19937_64& rng, const RingPtr& ring) {
  std::vector<FieldElement> cs;
  for (std::size_t i = 0; i < ring->arity(); ++i) {
    if (rng() % 2)
      cs.push_back(FieldElement::zero(ring->field()));
    else
      cs.push_back(random_scalar(rng, ring->field()));
  }
  return RationalPoint(ring, std::move(cs));
}

}  // namespace dmkit::testing

#endif
