#include "dmkit/polynomial.hpp"

#include <algorithm>
#include <map>

namespace dmkit {

namespace {

struct DescendingCmp {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::cmp(a, b, order) > 0;
  }
};

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  std::map<Monomial, FieldElement, DescendingCmp> acc{DescendingCmp{ring_->order()}};
  for (auto& t : terms) {
    if (t.mono.arity() != ring_->arity())
      fail(Errc::RingMismatch, "monomial arity does not match ring");
    if (t.coeff.field() != ring_->field())
      fail(Errc::FieldMismatch, "coefficient not in " + ring_->field().str());
    if (t.coeff.is_zero()) continue;
    auto [it, inserted] = acc.try_emplace(std::move(t.mono), t.coeff);
    if (!inserted) {
      it->second = it->second + t.coeff;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  terms_.reserve(acc.size());
  for (auto& [m, c] : acc) terms_.push_back(Term{m, c});
}

Polynomial Polynomial::constant(RingPtr ring, FieldElement c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial(ring->arity()), std::move(c)});
  return p;
}

Polynomial Polynomial::from_int(RingPtr ring, long n) {
  FieldSpec f = ring->field();
  return constant(std::move(ring), FieldElement::from_integer(f, mpz_class(n)));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  std::vector<std::uint32_t> e(ring->arity(), 0);
  e.at(i) = 1;
  FieldSpec f = ring->field();
  return term(std::move(ring), Monomial(std::move(e)), FieldElement::one(f));
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, FieldElement c) {
  Polynomial p(std::move(ring));
  if (m.arity() != p.ring_->arity()) fail(Errc::RingMismatch, "monomial arity mismatch");
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), std::move(c)});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

FieldElement Polynomial::constant_coefficient() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return FieldElement::zero(ring_->field());
}

std::optional<FieldElement> Polynomial::as_nonzero_scalar() const {
  if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coeff;
  return std::nullopt;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) fail(Errc::InvalidArgument, "leading term of zero polynomial");
  return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return FieldElement::zero(ring_->field());
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, -t.coeff});
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  const MonomialOrder ord = ring_->order();
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = Monomial::cmp(terms_[i].mono, o.terms_[j].mono, ord);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      FieldElement s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back(Term{terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  std::map<Monomial, FieldElement, DescendingCmp> acc{DescendingCmp{ring_->order()}};
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial m = a.mono * b.mono;
      FieldElement c = a.coeff * b.coeff;
      auto [it, inserted] = acc.try_emplace(std::move(m), c);
      if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  Polynomial r(ring_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) r.terms_.push_back(Term{m, c});
  return r;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, t.coeff * c});
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const FieldElement& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::monic() const { return scaled(leading().coeff.inverse()); }

FieldElement Polynomial::evaluate(const RationalPoint& pt) const {
  require_same_ring(ring_, pt.ring());
  FieldElement acc = FieldElement::zero(ring_->field());
  for (const auto& t : terms_) {
    FieldElement v = t.coeff;
    for (std::size_t i = 0; i < ring_->arity(); ++i) {
      for (std::uint32_t e = 0; e < t.mono.exp(i); ++e) v = v * pt[i];
    }
    acc = acc + v;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

Polynomial shift_to_origin(const Polynomial& p, const RationalPoint& pt) {
  require_same_ring(p.ring(), pt.ring());
  const RingPtr& ring = p.ring();
  if (pt.is_origin()) return p;
  Polynomial sum(ring);
  for (const auto& t : p.terms()) {
    Polynomial prod = Polynomial::constant(ring, t.coeff);
    for (std::size_t i = 0; i < ring->arity(); ++i) {
      std::uint32_t e = t.mono.exp(i);
      if (e == 0) continue;
      if (pt[i].is_zero()) {
        std::vector<std::uint32_t> exps(ring->arity(), 0);
        exps[i] = e;
        prod = prod.times_term(Monomial(std::move(exps)), FieldElement::one(ring->field()));
        continue;
      }
      Polynomial lin = Polynomial::variable(ring, i) + Polynomial::constant(ring, pt[i]);
      for (std::uint32_t k = 0; k < e; ++k) prod = prod * lin;
    }
    sum = sum + prod;
  }
  return sum;
}

}  // namespace dmkit
