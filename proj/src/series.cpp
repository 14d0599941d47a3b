#include "dmkit/series.hpp"

#include <algorithm>

namespace dmkit {

TruncatedSeries::TruncatedSeries(RingPtr ring, std::vector<Polynomial> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) fail(Errc::InvalidArgument, "empty coefficient list");
  for (const auto& c : coeffs_) require_same_ring(ring_, c.ring());
}

TruncatedSeries TruncatedSeries::zero(RingPtr ring, unsigned precision) {
  std::vector<Polynomial> cs(precision + 1, Polynomial(ring));
  return TruncatedSeries(std::move(ring), std::move(cs));
}

const Polynomial& TruncatedSeries::coeff(unsigned i) const {
  if (i >= coeffs_.size())
    fail(Errc::PrecisionExceeded, "coefficient " + std::to_string(i) + " beyond precision " +
                                      std::to_string(precision()));
  return coeffs_[i];
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Polynomial& c) { return c.is_zero(); });
}

TruncatedSeries TruncatedSeries::truncated(unsigned d) const {
  if (d > precision()) fail(Errc::PrecisionExceeded, "cannot extend a truncation");
  return TruncatedSeries(ring_, std::vector<Polynomial>(coeffs_.begin(), coeffs_.begin() + d + 1));
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  require_same_ring(ring_, o.ring_);
  unsigned d = std::min(precision(), o.precision());
  std::vector<Polynomial> cs;
  cs.reserve(d + 1);
  for (unsigned i = 0; i <= d; ++i) cs.push_back(coeffs_[i] + o.coeffs_[i]);
  return TruncatedSeries(ring_, std::move(cs));
}

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_ring(f.ring(), g.ring());
  unsigned d = std::min(f.precision(), g.precision());
  std::vector<Polynomial> cs(d + 1, Polynomial(f.ring()));
  for (unsigned i = 0; i <= d; ++i)
    for (unsigned j = 0; i + j <= d; ++j) cs[i + j] = cs[i + j] + f.coeff(i) * g.coeff(j);
  return TruncatedSeries(f.ring(), std::move(cs));
}

UnitSeries::UnitSeries(RingPtr ring, std::vector<Polynomial> coeffs, Extension ext)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)), ext_(ext) {
  if (coeffs_.empty()) fail(Errc::InvalidArgument, "unit needs at least its constant coefficient");
  for (const auto& c : coeffs_) require_same_ring(ring_, c.ring());
  auto scalar = coeffs_[0].as_nonzero_scalar();
  if (!scalar)
    fail(Errc::InvalidArgument, "unit constant coefficient must be a nonzero scalar, got '" +
                                    (coeffs_[0].is_zero() ? std::string("0") : std::string("nonscalar")) + "'");
  constant_ = *scalar;
}

UnitSeries UnitSeries::one(RingPtr ring) {
  Polynomial c = Polynomial::from_int(ring, 1);
  return UnitSeries(std::move(ring), {std::move(c)}, Extension::Zeros);
}

UnitSeries UnitSeries::geometric(RingPtr ring) {
  Polynomial c = Polynomial::from_int(ring, 1);
  return UnitSeries(std::move(ring), {std::move(c)}, Extension::AllOnes);
}

Polynomial UnitSeries::coeff(unsigned i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  switch (ext_) {
    case Extension::Zeros:
      return Polynomial(ring_);
    case Extension::AllOnes:
      return Polynomial::from_int(ring_, 1);
    case Extension::Unknown:
      fail(Errc::InsufficientUnitPrecision,
           "unit coefficient " + std::to_string(i) + " beyond stored precision " +
               std::to_string(stored_precision()));
  }
  fail(Errc::InsufficientUnitPrecision, "unreachable");
}

UnitSeries unit_inverse(const UnitSeries& u, unsigned d) {
  const RingPtr& ring = u.ring();
  FieldElement c0_inv = u.constant_scalar().inverse();
  std::vector<Polynomial> inv;
  inv.reserve(d + 1);
  inv.push_back(Polynomial::constant(ring, c0_inv));
  for (unsigned n = 1; n <= d; ++n) {
    Polynomial acc(ring);
    for (unsigned i = 1; i <= n; ++i) acc = acc + u.coeff(i) * inv[n - i];
    inv.push_back(acc.scaled(-c0_inv));
  }
  return UnitSeries(ring, std::move(inv), UnitSeries::Extension::Unknown);
}

UnitTailSeries::UnitTailSeries(RingPtr ring, unsigned precision, std::vector<UnitTailTerm> terms)
    : ring_(std::move(ring)), precision_(precision) {
  std::sort(terms.begin(), terms.end(),
            [](const UnitTailTerm& a, const UnitTailTerm& b) { return a.exponent < b.exponent; });
  for (auto& t : terms) {
    require_same_ring(ring_, t.coeff.ring());
    require_same_ring(ring_, t.unit.ring());
    if (t.coeff.is_zero()) continue;
    if (t.exponent > precision_)
      fail(Errc::InvalidArgument, "term exponent " + std::to_string(t.exponent) +
                                      " exceeds working precision " + std::to_string(precision_));
    if (!terms_.empty() && terms_.back().exponent == t.exponent)
      fail(Errc::InvalidArgument,
           "duplicate term exponent " + std::to_string(t.exponent) + " in unit-tail series");
    terms_.push_back(std::move(t));
  }
}

bool UnitTailSeries::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const UnitTailTerm& t) {
    return t.unit.extension() == UnitSeries::Extension::Zeros;
  });
}

unsigned UnitTailSeries::exact_x_degree() const {
  if (!is_polynomial()) fail(Errc::InvalidArgument, "series has a non-polynomial unit tail");
  unsigned deg = 0;
  for (const auto& t : terms_) {
    unsigned last = 0;
    const auto& cs = t.unit.stored_coeffs();
    for (unsigned i = 0; i < cs.size(); ++i)
      if (!cs[i].is_zero()) last = i;
    deg = std::max(deg, t.exponent + last);
  }
  return deg;
}

unsigned UnitTailSeries::max_expandable_depth() const {
  unsigned depth = kUnbounded;
  for (const auto& t : terms_)
    if (!t.unit.extendable()) depth = std::min(depth, t.exponent + t.unit.stored_precision());
  return depth;
}

TruncatedSeries expand(const UnitTailSeries& f, unsigned d) {
  std::vector<Polynomial> out(d + 1, Polynomial(f.ring()));
  for (const auto& t : f.terms()) {
    if (t.exponent > d) continue;
    for (unsigned i = 0; t.exponent + i <= d; ++i) {
      Polynomial uc = t.unit.coeff(i);
      if (!uc.is_zero()) out[t.exponent + i] = out[t.exponent + i] + t.coeff * uc;
    }
  }
  return TruncatedSeries(f.ring(), std::move(out));
}

Ideal content(const UnitTailSeries& f) {
  std::vector<Polynomial> gens;
  gens.reserve(f.terms().size());
  for (const auto& t : f.terms()) gens.push_back(t.coeff);
  return Ideal(f.ring(), std::move(gens));
}

Ideal truncated_content(const TruncatedSeries& f, unsigned d_prime) {
  if (d_prime > f.precision())
    fail(Errc::PrecisionExceeded, "truncated content at " + std::to_string(d_prime) +
                                      " exceeds precision " + std::to_string(f.precision()));
  std::vector<Polynomial> gens(f.coeffs().begin(), f.coeffs().begin() + d_prime + 1);
  return Ideal(f.ring(), std::move(gens));
}

unsigned stabilization_index(const TruncatedSeries& f) {
  unsigned d = f.precision();
  for (unsigned n = 0; n < d; ++n) {
    Ideal prefix = truncated_content(f, n);
    bool ok = true;
    for (unsigned i = n + 1; i <= d && ok; ++i) ok = contains(prefix, f.coeff(i));
    if (ok) return n;
  }
  return d;
}

UnitTailSeries unit_tail_rewrite(const TruncatedSeries& f,
                                 const std::optional<Recurrence>& recurrence) {
  const RingPtr& ring = f.ring();
  const unsigned d = f.precision();

  unsigned n;
  // rows[t][j]: cofactor of a_j in a_{n+1+t}
  std::vector<std::vector<Polynomial>> rows;
  if (recurrence) {
    n = recurrence->start;
    if (n > d) fail(Errc::InvalidArgument, "recurrence start beyond precision");
    if (recurrence->rows.size() != d - n)
      fail(Errc::RecurrenceMismatch, "expected " + std::to_string(d - n) + " recurrence rows, got " +
                                         std::to_string(recurrence->rows.size()));
    Ideal prefix = truncated_content(f, n);
    for (unsigned t = 0; t < recurrence->rows.size(); ++t) {
      const auto& row = recurrence->rows[t];
      if (row.size() != n + 1)
        fail(Errc::RecurrenceMismatch, "recurrence row " + std::to_string(t) + " has " +
                                           std::to_string(row.size()) + " entries, expected " +
                                           std::to_string(n + 1));
      Polynomial sum(ring);
      for (unsigned j = 0; j <= n; ++j) sum = sum + row[j] * f.coeff(j);
      if (sum != f.coeff(n + 1 + t)) {
        if (!contains(prefix, f.coeff(n + 1 + t)))
          fail(Errc::NotStabilized, "coefficient of X^" + std::to_string(n + 1 + t) +
                                        " is not in the ideal of the first " +
                                        std::to_string(n + 1) + " coefficients");
        fail(Errc::RecurrenceMismatch,
             "declared row for X^" + std::to_string(n + 1 + t) + " does not reproduce the coefficient");
      }
    }
    rows = recurrence->rows;
  } else {
    n = stabilization_index(f);
    std::vector<Polynomial> prefix_gens;
    std::vector<unsigned> index_map;  // position in prefix ideal -> j
    for (unsigned j = 0; j <= n; ++j) {
      if (f.coeff(j).is_zero()) continue;
      prefix_gens.push_back(f.coeff(j));
      index_map.push_back(j);
    }
    Ideal prefix(ring, prefix_gens);
    for (unsigned i = n + 1; i <= d; ++i) {
      std::vector<Polynomial> row(n + 1, Polynomial(ring));
      if (!f.coeff(i).is_zero()) {
        MembershipCertificate cert = lift(f.coeff(i), prefix);
        for (std::size_t t = 0; t < index_map.size(); ++t) row[index_map[t]] = cert.cofactors[t];
      }
      rows.push_back(std::move(row));
    }
  }

  std::vector<UnitTailTerm> terms;
  for (unsigned j = 0; j <= n; ++j) {
    if (f.coeff(j).is_zero()) continue;
    std::vector<Polynomial> ucoeffs(d - j + 1, Polynomial(ring));
    ucoeffs[0] = Polynomial::from_int(ring, 1);
    bool pure_one = true;
    for (unsigned i = n + 1; i <= d; ++i) {
      const Polynomial& r = rows[i - n - 1][j];
      if (r.is_zero()) continue;
      ucoeffs[i - j] = ucoeffs[i - j] + r;
      pure_one = false;
    }
    UnitSeries::Extension ext =
        pure_one ? UnitSeries::Extension::Zeros : UnitSeries::Extension::Unknown;
    unsigned keep = pure_one ? 0 : d - j;
    std::vector<Polynomial> stored(ucoeffs.begin(), ucoeffs.begin() + keep + 1);
    terms.push_back(UnitTailTerm{f.coeff(j), j, UnitSeries(ring, std::move(stored), ext)});
  }
  return UnitTailSeries(ring, d, std::move(terms));
}

unsigned pdeg_upper_bound(const UnitTailSeries& f) {
  return f.terms().empty() ? 0 : f.terms().back().exponent;
}

}  // namespace dmkit
