#ifndef DMKIT_GROEBNER_HPP
#define DMKIT_GROEBNER_HPP

#include <optional>

#include "dmkit/ideal.hpp"

namespace dmkit {

/// Reduced Groebner basis of I (deterministic for fixed input and order).
const std::vector<Polynomial>& groebner_basis(const Ideal& I);

/// Fully reduced remainder of p modulo I; zero iff p lies in I. For a
/// fixed basis the map is linear over the ground field.
Polynomial normal_form(const Polynomial& p, const Ideal& I);

bool contains(const Ideal& I, const Polynomial& p);
bool ideal_equal(const Ideal& I, const Ideal& J);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, unsigned e);  // I^0 is the unit ideal

/// Membership certificate for p over I's original generators, obtained by
/// composing division tracking through the Groebner construction.
/// Throws NotMember if p is not in I.
MembershipCertificate lift(const Polynomial& p, const Ideal& I);

/// mu(I_m) = dim_k(I/mI), m the maximal ideal at pt. Generators are
/// shifted so m becomes the variable ideal, then the rank of the span of
/// their normal forms modulo m*I is taken.
unsigned mu_at_point(const Ideal& I, const RationalPoint& pt);

/// Sublist of I's generators of size mu_at_point(I, pt) that generates
/// I locally at pt. Scans in list order and keeps first: g is dropped
/// exactly when it lies in m*I plus the generators kept so far.
std::vector<Polynomial> minimal_generators_at(const Ideal& I, const RationalPoint& pt);

/// Least r <= r_max with I^(r+1) = J * I^r, if any. Requires J to be a
/// subideal of I (checked; NotSubideal otherwise).
std::optional<unsigned> reduction_number(const Ideal& J, const Ideal& I, unsigned r_max);

/// The ideal (x1, ..., xn).
Ideal variable_ideal(const RingPtr& ring);
/// Generators shifted so that the maximal ideal at pt becomes (x1..xn).
Ideal shifted(const Ideal& I, const RationalPoint& pt);

// Local (Nakayama) decision procedures at the maximal ideal of a rational
// point: J_m is contained in I_m iff J lies in I + m*J after shifting.
bool local_sub_ideal_at(const Ideal& J, const Ideal& I, const RationalPoint& pt);
bool local_ideal_equal_at(const Ideal& I, const Ideal& J, const RationalPoint& pt);
bool local_contains_at(const Ideal& I, const Polynomial& p, const RationalPoint& pt);

/// Row rank over the ground field of the span of the given polynomials.
std::size_t rank_of_span(const std::vector<Polynomial>& ps);

}  // namespace dmkit

#endif
