#include "dmkit/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace dmkit {

namespace {

struct DescCmp {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::cmp(a, b, order) > 0;
  }
};

using TermMap = std::map<Monomial, FieldElement, DescCmp>;

// w += c * X^m * g
void add_scaled(TermMap& w, const Polynomial& g, const Monomial& m, const FieldElement& c) {
  for (const auto& t : g.terms()) {
    Monomial mm = t.mono * m;
    FieldElement cc = t.coeff * c;
    if (cc.is_zero()) continue;
    auto [it, inserted] = w.try_emplace(std::move(mm), cc);
    if (!inserted) {
      it->second = it->second + cc;
      if (it->second.is_zero()) w.erase(it);
    }
  }
}

struct Division {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};

// Full multivariate division: p = sum quotients[i]*basis[i] + remainder
// with no remainder term divisible by any basis leading monomial. The
// first basis element whose leading monomial divides is always chosen.
Division divide(const Polynomial& p, const std::vector<Polynomial>& basis, bool want_quotients) {
  const RingPtr& ring = p.ring();
  TermMap w{DescCmp{ring->order()}};
  for (const auto& t : p.terms()) w.emplace(t.mono, t.coeff);

  std::vector<Term> rem;
  std::vector<std::vector<Term>> qterms(want_quotients ? basis.size() : 0);
  while (!w.empty()) {
    auto lead = w.begin();
    std::size_t i = 0;
    for (; i < basis.size(); ++i)
      if (basis[i].leading().mono.divides(lead->first)) break;
    if (i == basis.size()) {
      rem.push_back(Term{lead->first, lead->second});
      w.erase(lead);
      continue;
    }
    const Term& blt = basis[i].leading();
    Monomial m = lead->first.divided_by(blt.mono);
    FieldElement c = lead->second / blt.coeff;
    if (want_quotients) qterms[i].push_back(Term{m, c});
    add_scaled(w, basis[i], m, -c);
  }

  Division d{Polynomial(ring, std::move(rem)), {}};
  if (want_quotients) {
    d.quotients.reserve(qterms.size());
    for (auto& ts : qterms) d.quotients.emplace_back(ring, std::move(ts));
  }
  return d;
}

using RepRow = std::vector<Polynomial>;

void rep_subtract_quotients(RepRow& rep, const std::vector<Polynomial>& quotients,
                            const std::vector<RepRow>& reps) {
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    if (quotients[i].is_zero()) continue;
    for (std::size_t g = 0; g < rep.size(); ++g)
      if (!reps[i][g].is_zero()) rep[g] = rep[g] - quotients[i] * reps[i][g];
  }
}

struct PairKey {
  Monomial lcm;
  std::size_t i, j;
};

// Degree-ordered pair queue, ties broken by the monomial order then indices.
struct PairCmp {
  MonomialOrder order;
  bool operator()(const PairKey& a, const PairKey& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    if (int c = Monomial::cmp(a.lcm, b.lcm, order); c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// Buchberger with the coprime-leading-term criterion and the chain
// criterion, followed by minimalization and inter-reduction. When `track`
// is set, every basis element carries its cofactor row over `gens`.
GroebnerData buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens, bool track) {
  std::vector<Polynomial> basis;
  std::vector<RepRow> reps;
  std::set<PairKey, PairCmp> pending{PairCmp{ring->order()}};
  const FieldElement one = FieldElement::one(ring->field());

  auto make_key = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return PairKey{Monomial::lcm(basis[a].leading().mono, basis[b].leading().mono), a, b};
  };

  auto add_element = [&](Polynomial p, RepRow rep) {
    FieldElement lc = p.leading().coeff;
    if (!lc.is_one()) {
      FieldElement inv = lc.inverse();
      p = p.scaled(inv);
      if (track)
        for (auto& r : rep) r = r.scaled(inv);
    }
    basis.push_back(std::move(p));
    if (track) reps.push_back(std::move(rep));
    for (std::size_t i = 0; i + 1 < basis.size(); ++i) pending.insert(make_key(i, basis.size() - 1));
  };

  for (std::size_t t = 0; t < gens.size(); ++t) {
    Division div = divide(gens[t], basis, track);
    if (div.remainder.is_zero()) continue;
    RepRow rep;
    if (track) {
      rep.assign(gens.size(), Polynomial(ring));
      rep[t] = Polynomial::constant(ring, one);
      rep_subtract_quotients(rep, div.quotients, reps);
    }
    add_element(std::move(div.remainder), std::move(rep));
  }

  while (!pending.empty()) {
    PairKey pk = *pending.begin();
    pending.erase(pending.begin());
    const Monomial& lti = basis[pk.i].leading().mono;
    const Monomial& ltj = basis[pk.j].leading().mono;
    if (lti.coprime_with(ltj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!basis[k].leading().mono.divides(pk.lcm)) continue;
      if (pending.count(make_key(pk.i, k)) || pending.count(make_key(pk.j, k))) continue;
      chain = true;
    }
    if (chain) continue;

    Polynomial s = basis[pk.i].times_term(pk.lcm.divided_by(lti), one) -
                   basis[pk.j].times_term(pk.lcm.divided_by(ltj), one);
    Division div = divide(s, basis, track);
    if (div.remainder.is_zero()) continue;
    RepRow rep;
    if (track) {
      rep.assign(gens.size(), Polynomial(ring));
      for (std::size_t g = 0; g < gens.size(); ++g) {
        Polynomial a = reps[pk.i][g].times_term(pk.lcm.divided_by(lti), one);
        Polynomial b = reps[pk.j][g].times_term(pk.lcm.divided_by(ltj), one);
        rep[g] = a - b;
      }
      rep_subtract_quotients(rep, div.quotients, reps);
    }
    add_element(std::move(div.remainder), std::move(rep));
  }

  // Minimalize: leading monomials are pairwise distinct; scanning by
  // ascending leading monomial guarantees divisors are seen first.
  std::vector<std::size_t> order(basis.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return Monomial::cmp(basis[a].leading().mono, basis[b].leading().mono, ring->order()) < 0;
  });
  std::vector<std::size_t> kept;
  for (std::size_t idx : order) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
      return basis[k].leading().mono.divides(basis[idx].leading().mono);
    });
    if (!redundant) kept.push_back(idx);
  }

  std::vector<Polynomial> minimal;
  std::vector<RepRow> minimal_reps;
  for (std::size_t idx : kept) {
    minimal.push_back(basis[idx]);
    if (track) minimal_reps.push_back(reps[idx]);
  }

  // Inter-reduce: leading monomials never change here, so a single pass
  // leaves every element fully reduced against the others.
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    std::vector<std::size_t> omap;
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b == a) continue;
      others.push_back(minimal[b]);
      omap.push_back(b);
    }
    Division div = divide(minimal[a], others, track);
    if (track) {
      RepRow rep = minimal_reps[a];
      for (std::size_t o = 0; o < others.size(); ++o) {
        if (div.quotients[o].is_zero()) continue;
        for (std::size_t g = 0; g < rep.size(); ++g)
          if (!minimal_reps[omap[o]][g].is_zero())
            rep[g] = rep[g] - div.quotients[o] * minimal_reps[omap[o]][g];
      }
      minimal_reps[a] = std::move(rep);
    }
    minimal[a] = std::move(div.remainder);
  }

  // Canonical output order: descending leading monomial.
  std::vector<std::size_t> final_order(minimal.size());
  std::iota(final_order.begin(), final_order.end(), 0);
  std::sort(final_order.begin(), final_order.end(), [&](std::size_t a, std::size_t b) {
    return Monomial::cmp(minimal[a].leading().mono, minimal[b].leading().mono, ring->order()) > 0;
  });

  GroebnerData out;
  for (std::size_t idx : final_order) {
    out.basis.push_back(std::move(minimal[idx]));
    if (track) out.lifts.push_back(std::move(minimal_reps[idx]));
  }
  return out;
}

}  // namespace

struct Ideal::Cache {
  std::once_flag basis_once;
  std::once_flag lifts_once;
  GroebnerData data;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::from_int(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

const std::vector<Polynomial>& Ideal::basis() const {
  std::call_once(cache_->basis_once,
                 [&] { cache_->data.basis = buchberger(ring_, gens_, false).basis; });
  return cache_->data.basis;
}

const GroebnerData& Ideal::groebner_with_lifts() const {
  const auto& plain = basis();
  std::call_once(cache_->lifts_once, [&] {
    GroebnerData tracked = buchberger(ring_, gens_, true);
    if (tracked.basis != plain)
      fail(Errc::CheckFailed, "tracked Groebner run diverged from cached basis");
    cache_->data.lifts = std::move(tracked.lifts);
  });
  return cache_->data;
}

bool MembershipCertificate::validate() const {
  if (generators.size() != cofactors.size()) return false;
  Polynomial acc(target.ring());
  for (std::size_t i = 0; i < generators.size(); ++i) acc = acc + cofactors[i] * generators[i];
  return acc == target;
}

const std::vector<Polynomial>& groebner_basis(const Ideal& I) { return I.basis(); }

Polynomial normal_form(const Polynomial& p, const Ideal& I) {
  require_same_ring(p.ring(), I.ring());
  return divide(p, I.basis(), false).remainder;
}

bool contains(const Ideal& I, const Polynomial& p) { return normal_form(p, I).is_zero(); }

bool ideal_equal(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  return I.basis() == J.basis();
}

namespace {

void push_dedup(std::vector<Polynomial>& gens, Polynomial p) {
  if (p.is_zero()) return;
  for (const auto& g : gens)
    if (g == p) return;
  gens.push_back(std::move(p));
}

}  // namespace

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size() + J.generators().size());
  for (const auto& g : I.generators()) push_dedup(gens, g);
  for (const auto& g : J.generators()) push_dedup(gens, g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial> gens;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) push_dedup(gens, a * b);
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, unsigned e) {
  if (e == 0) return Ideal::unit(I.ring());
  Ideal acc = I;
  for (unsigned i = 1; i < e; ++i) acc = ideal_product(acc, I);
  return acc;
}

MembershipCertificate lift(const Polynomial& p, const Ideal& I) {
  require_same_ring(p.ring(), I.ring());
  if (I.is_zero_ideal()) {
    if (!p.is_zero()) fail(Errc::NotMember, "element not in the zero ideal");
    return MembershipCertificate{p, {}, {}};
  }
  const GroebnerData& gd = I.groebner_with_lifts();
  Division div = divide(p, gd.basis, true);
  if (!div.remainder.is_zero()) fail(Errc::NotMember, "element not in the ideal");
  std::vector<Polynomial> cofactors(I.generators().size(), Polynomial(p.ring()));
  for (std::size_t i = 0; i < gd.basis.size(); ++i) {
    if (div.quotients[i].is_zero()) continue;
    for (std::size_t g = 0; g < cofactors.size(); ++g)
      if (!gd.lifts[i][g].is_zero())
        cofactors[g] = cofactors[g] + div.quotients[i] * gd.lifts[i][g];
  }
  return MembershipCertificate{p, I.generators(), std::move(cofactors)};
}

Ideal variable_ideal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  gens.reserve(ring->arity());
  for (std::size_t i = 0; i < ring->arity(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

Ideal shifted(const Ideal& I, const RationalPoint& pt) {
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(shift_to_origin(g, pt));
  return Ideal(I.ring(), std::move(gens));
}

std::size_t rank_of_span(const std::vector<Polynomial>& ps) {
  std::vector<Polynomial> rows;
  for (const auto& p : ps)
    if (!p.is_zero()) rows.push_back(p);
  if (rows.empty()) return 0;
  const RingPtr& ring = rows.front().ring();
  const MonomialOrder ord = ring->order();

  std::map<Monomial, std::size_t, DescCmp> columns{DescCmp{ord}};
  for (const auto& r : rows)
    for (const auto& t : r.terms()) columns.try_emplace(t.mono, 0);
  std::size_t ncols = 0;
  for (auto& [m, idx] : columns) idx = ncols++;

  const FieldElement zero = FieldElement::zero(ring->field());
  std::vector<std::vector<FieldElement>> mat;
  mat.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<FieldElement> row(ncols, zero);
    for (const auto& t : r.terms()) row[columns.at(t.mono)] = t.coeff;
    mat.push_back(std::move(row));
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < mat.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < mat.size() && mat[pivot][col].is_zero()) ++pivot;
    if (pivot == mat.size()) continue;
    std::swap(mat[rank], mat[pivot]);
    FieldElement inv = mat[rank][col].inverse();
    for (std::size_t c = col; c < ncols; ++c) mat[rank][c] = mat[rank][c] * inv;
    for (std::size_t r = 0; r < mat.size(); ++r) {
      if (r == rank || mat[r][col].is_zero()) continue;
      FieldElement f = mat[r][col];
      for (std::size_t c = col; c < ncols; ++c) mat[r][c] = mat[r][c] - f * mat[rank][c];
    }
    ++rank;
  }
  return rank;
}

unsigned mu_at_point(const Ideal& I, const RationalPoint& pt) {
  require_same_ring(I.ring(), pt.ring());
  if (I.is_zero_ideal()) fail(Errc::ZeroIdeal, "mu of the zero ideal");
  Ideal at_origin = shifted(I, pt);
  Ideal mI = ideal_product(variable_ideal(I.ring()), at_origin);
  std::vector<Polynomial> images;
  images.reserve(at_origin.generators().size());
  for (const auto& g : at_origin.generators()) images.push_back(normal_form(g, mI));
  return static_cast<unsigned>(rank_of_span(images));
}

std::vector<Polynomial> minimal_generators_at(const Ideal& I, const RationalPoint& pt) {
  require_same_ring(I.ring(), pt.ring());
  if (I.is_zero_ideal()) fail(Errc::ZeroIdeal, "minimal generators of the zero ideal");
  Ideal at_origin = shifted(I, pt);
  Ideal mI = ideal_product(variable_ideal(I.ring()), at_origin);
  std::vector<Polynomial> kept_shifted;
  std::vector<Polynomial> kept;
  for (std::size_t i = 0; i < at_origin.generators().size(); ++i) {
    std::vector<Polynomial> test = kept_shifted;
    for (const auto& g : mI.generators()) test.push_back(g);
    if (contains(Ideal(I.ring(), std::move(test)), at_origin.generators()[i])) continue;
    kept_shifted.push_back(at_origin.generators()[i]);
    kept.push_back(I.generators()[i]);
  }
  return kept;
}

std::optional<unsigned> reduction_number(const Ideal& J, const Ideal& I, unsigned r_max) {
  require_same_ring(I.ring(), J.ring());
  for (const auto& g : J.generators())
    if (!contains(I, g)) fail(Errc::NotSubideal, "J is not contained in I");
  for (unsigned r = 0; r <= r_max; ++r) {
    Ideal lhs = ideal_power(I, r + 1);
    Ideal rhs = ideal_product(J, ideal_power(I, r));
    if (ideal_equal(lhs, rhs)) return r;
  }
  return std::nullopt;
}

bool local_sub_ideal_at(const Ideal& J, const Ideal& I, const RationalPoint& pt) {
  require_same_ring(I.ring(), J.ring());
  Ideal Jsh = shifted(J, pt);
  Ideal Ish = shifted(I, pt);
  Ideal bound = ideal_sum(Ish, ideal_product(variable_ideal(I.ring()), Jsh));
  return std::all_of(Jsh.generators().begin(), Jsh.generators().end(),
                     [&](const Polynomial& g) { return contains(bound, g); });
}

bool local_ideal_equal_at(const Ideal& I, const Ideal& J, const RationalPoint& pt) {
  return local_sub_ideal_at(I, J, pt) && local_sub_ideal_at(J, I, pt);
}

bool local_contains_at(const Ideal& I, const Polynomial& p, const RationalPoint& pt) {
  return local_sub_ideal_at(Ideal(I.ring(), {p}), I, pt);
}

}  // namespace dmkit
