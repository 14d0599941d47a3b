#include "dmkit/dmcheck.hpp"

#include <atomic>
#include <future>
#include <thread>

#include "dmkit/exprio.hpp"

namespace dmkit {

namespace {

std::vector<std::string> printed(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(print_poly(p));
  return out;
}

unsigned generator_bound(const Ideal& I) {
  std::vector<Polynomial> survivors = I.generators();
  std::size_t i = 0;
  while (i < survivors.size()) {
    std::vector<Polynomial> others;
    others.reserve(survivors.size() - 1);
    for (std::size_t j = 0; j < survivors.size(); ++j)
      if (j != i) others.push_back(survivors[j]);
    if (!others.empty() && contains(Ideal(I.ring(), others), survivors[i]))
      survivors.erase(survivors.begin() + i);
    else
      ++i;
  }
  return static_cast<unsigned>(survivors.size());
}

TruncatedSeries product_truncation(const UnitTailSeries& f, const UnitTailSeries& g, unsigned d) {
  return series_mul(expand(f, d), expand(g, d));
}

}  // namespace

unsigned dm_exponent(const UnitTailSeries& g, const RationalPoint& pt) {
  if (g.is_zero()) fail(Errc::ZeroSeries, "dm_exponent of the zero series");
  return mu_at_point(content(g), pt);
}

unsigned content_generator_bound(const UnitTailSeries& g) { return generator_bound(content(g)); }

unsigned default_d_max(const UnitTailSeries& f, const UnitTailSeries& g, unsigned k) {
  return 4 * (k + pdeg_upper_bound(f) + pdeg_upper_bound(g)) + 8;
}

DMReport dm_check(const UnitTailSeries& f, const UnitTailSeries& g, unsigned k, unsigned d_max,
                  const CheckOptions& opts) {
  require_same_ring(f.ring(), g.ring());
  if (k == 0) fail(Errc::InvalidArgument, "exponent k must be at least 1");
  const RingPtr& ring = f.ring();

  DMReport rep;
  rep.check = "dm";
  rep.ring = ring;
  rep.k = k;
  rep.k_provenance = opts.provenance;
  rep.d_max = d_max;
  rep.seed = opts.seed;
  if (!g.is_zero()) rep.k_upper_bound = content_generator_bound(g);

  Ideal cf = content(f);
  Ideal cg = content(g);
  Ideal lhs = ideal_product(ideal_power(cf, k), cg);
  Ideal cf_km1 = ideal_power(cf, k - 1);
  rep.lhs_generators = printed(lhs.generators());
  rep.lhs_fingerprint = gb_fingerprint(lhs);

  auto set_rhs = [&](const Ideal& rhs) {
    rep.rhs_generators = printed(rhs.generators());
    rep.rhs_fingerprint = gb_fingerprint(rhs);
  };

  // Certifies lhs <= rhs at depth d, then spot-checks the structural
  // inclusion c_{<=d}(fg) <= c(f)c(g).
  auto certify = [&](const Ideal& rhs, const TruncatedSeries& fg, unsigned d) -> bool {
    for (const auto& w : lhs.generators())
      if (!contains(rhs, w)) return false;
    Ideal prod = ideal_product(cf, cg);
    for (unsigned i = 0; i <= d; ++i)
      if (!contains(prod, fg.coeff(i)))
        fail(Errc::CheckFailed, "coefficient of X^" + std::to_string(i) +
                                    " of fg escapes c(f)c(g); content subadditivity violated");
    rep.verdict = Verdict::Verified;
    rep.d_cert = d;
    set_rhs(rhs);
    if (opts.want_certificates) {
      for (const auto& w : lhs.generators()) rep.certificates.push_back(lift(w, rhs));
      for (unsigned i = 0; i <= d; ++i)
        if (!fg.coeff(i).is_zero()) rep.certificates.push_back(lift(fg.coeff(i), prod));
    }
    return true;
  };

  if (f.is_polynomial() && g.is_polynomial()) {
    unsigned d = f.exact_x_degree() + g.exact_x_degree();
    TruncatedSeries fg = product_truncation(f, g, d);
    Ideal rhs = ideal_product(cf_km1, truncated_content(fg, d));
    if (!certify(rhs, fg, d)) {
      // contents on both sides are exact, so failure is a refutation
      rep.verdict = Verdict::Refuted;
      set_rhs(rhs);
    }
    return rep;
  }

  unsigned cap = std::min({d_max, f.max_expandable_depth(), g.max_expandable_depth()});
  unsigned d0 = std::min(pdeg_upper_bound(f) + pdeg_upper_bound(g), cap);
  std::optional<Ideal> last_rhs;
  for (unsigned d = d0; d <= cap; ++d) {
    TruncatedSeries fg = product_truncation(f, g, d);
    Ideal rhs = ideal_product(cf_km1, truncated_content(fg, d));
    if (certify(rhs, fg, d)) return rep;
    last_rhs = std::move(rhs);
  }
  rep.verdict = Verdict::Inconclusive;
  if (last_rhs) set_rhs(*last_rhs);
  return rep;
}

std::optional<unsigned> dm_min_exponent(const UnitTailSeries& f, const UnitTailSeries& g,
                                        unsigned k_max, unsigned d_max) {
  if (k_max == 0) fail(Errc::InvalidArgument, "k_max must be at least 1");
  CheckOptions opts;
  opts.want_certificates = false;
  for (unsigned k = 1; k <= k_max; ++k)
    if (dm_check(f, g, k, d_max, opts).verdict == Verdict::Verified) return k;
  return std::nullopt;
}

DMReport unit_content_identity_check(const UnitTailSeries& f, const UnitTailSeries& g,
                                     unsigned d_max) {
  require_same_ring(f.ring(), g.ring());
  const RingPtr& ring = f.ring();
  Ideal cf = content(f);
  if (!ideal_equal(cf, Ideal::unit(ring)))
    fail(Errc::ContentNotUnit, "c(f) = " + print_ideal_generators(cf) + " is not the unit ideal");
  Ideal cg = content(g);

  DMReport rep;
  rep.check = "unit-content";
  rep.ring = ring;
  rep.k = 1;
  rep.d_max = d_max;
  rep.lhs_generators = printed(cg.generators());
  rep.lhs_fingerprint = gb_fingerprint(cg);

  unsigned cap = std::min({d_max, f.max_expandable_depth(), g.max_expandable_depth()});
  unsigned d0 = std::min(pdeg_upper_bound(f) + pdeg_upper_bound(g), cap);
  std::optional<Ideal> last;
  for (unsigned d = d0; d <= cap; ++d) {
    TruncatedSeries fg = product_truncation(f, g, d);
    // c_{<=d}(fg) <= c(g) holds at every depth; check mechanically.
    for (unsigned i = 0; i <= d; ++i)
      if (!contains(cg, fg.coeff(i)))
        fail(Errc::CheckFailed, "coefficient of X^" + std::to_string(i) +
                                    " of fg escapes c(g) although c(f) = R");
    Ideal approx = truncated_content(fg, d);
    bool covered = true;
    for (const auto& w : cg.generators())
      if (!contains(approx, w)) {
        covered = false;
        break;
      }
    if (covered) {
      rep.verdict = Verdict::Verified;
      rep.d_cert = d;
      rep.rhs_generators = printed(approx.generators());
      rep.rhs_fingerprint = gb_fingerprint(approx);
      for (const auto& w : cg.generators()) rep.certificates.push_back(lift(w, approx));
      for (unsigned i = 0; i <= d; ++i)
        if (!fg.coeff(i).is_zero()) rep.certificates.push_back(lift(fg.coeff(i), cg));
      return rep;
    }
    last = std::move(approx);
  }
  rep.verdict = Verdict::Inconclusive;
  if (last) {
    rep.rhs_generators = printed(last->generators());
    rep.rhs_fingerprint = gb_fingerprint(*last);
  }
  return rep;
}

bool mingen_perturbation_check(const UnitTailSeries& g, const Polynomial& b, unsigned i,
                               const UnitSeries& u, const RationalPoint& pt) {
  require_same_ring(g.ring(), b.ring());
  require_same_ring(g.ring(), u.ring());
  require_same_ring(g.ring(), pt.ring());
  const RingPtr& ring = g.ring();
  if (b.is_zero()) return true;  // h = g

  Ideal cg = content(g);
  Ideal mcg = ideal_product(variable_ideal(ring), shifted(cg, pt));
  if (!contains(mcg, shift_to_origin(b, pt)))
    fail(Errc::PreconditionFailed, "b is not in m*c(g) at " + pt.str());

  bool collision = std::any_of(g.terms().begin(), g.terms().end(),
                               [&](const UnitTailTerm& t) { return t.exponent == i; });
  if (!collision) {
    // h stays in unit-tail form, so its content is exact: (a_0..a_n, b).
    std::vector<UnitTailTerm> terms = g.terms();
    terms.push_back(UnitTailTerm{b, i, u});
    UnitTailSeries h(ring, std::max(g.precision(), i), std::move(terms));
    Ideal ch = content(h);
    for (const auto& w : ch.generators())
      if (!contains(cg, w)) return false;  // c(h) <= c(g) must hold outright
    return local_sub_ideal_at(cg, ch, pt);
  }

  // The perturbation lands on an occupied exponent, so h leaves unit-tail
  // form; certify c(g)_m = c(h)_m from ascending truncations of h.
  UnitTailSeries pert(ring, i, {UnitTailTerm{b, i, u}});
  unsigned cap = std::min({g.max_expandable_depth(), pert.max_expandable_depth(),
                           4 * (1 + pdeg_upper_bound(g) + i) + 8});
  unsigned d0 = std::min(std::max(i, pdeg_upper_bound(g)), cap);
  for (unsigned d = d0; d <= cap; ++d) {
    TruncatedSeries h_d = expand(g, d) + expand(pert, d);
    for (unsigned t = 0; t <= d; ++t)
      if (!contains(cg, h_d.coeff(t)))
        fail(Errc::CheckFailed,
             "coefficient of X^" + std::to_string(t) + " of h escapes c(g)");
    if (local_sub_ideal_at(cg, truncated_content(h_d, d), pt)) return true;
  }
  fail(Errc::CheckFailed, "Lemma-3 content equality did not certify by depth " +
                              std::to_string(cap) + "; this indicates an implementation bug");
}

CounterexampleReport generic_counterexample(unsigned k, const FieldSpec& field) {
  if (k == 0) fail(Errc::InvalidArgument, "k must be at least 1");
  std::vector<std::string> vars;
  for (unsigned i = 0; i <= k; ++i) vars.push_back("a" + std::to_string(i));
  for (unsigned i = 0; i <= k; ++i) vars.push_back("b" + std::to_string(i));
  RingPtr ring = make_ring(std::move(vars), field);

  std::vector<UnitTailTerm> fterms, gterms;
  for (unsigned i = 0; i <= k; ++i) {
    fterms.push_back(UnitTailTerm{Polynomial::variable(ring, i), i, UnitSeries::one(ring)});
    gterms.push_back(
        UnitTailTerm{Polynomial::variable(ring, k + 1 + i), i, UnitSeries::one(ring)});
  }
  UnitTailSeries fp(ring, k, std::move(fterms));
  UnitTailSeries gp(ring, k, std::move(gterms));

  TruncatedSeries fg = product_truncation(fp, gp, 2 * k);
  Ideal cfg = truncated_content(fg, 2 * k);
  Ideal prod = ideal_product(content(fp), content(gp));
  Ideal lhs = ideal_power(prod, k);
  Ideal rhs = ideal_product(ideal_power(prod, k - 1), cfg);

  CounterexampleReport rep;
  rep.k = k;
  rep.ring = ring;
  rep.witness = Polynomial(ring);
  for (const auto& w : lhs.generators()) {
    if (!contains(rhs, w)) {
      rep.witness = w;
      rep.inequality_certified = true;
      break;
    }
  }
  rep.lhs_fingerprint = generators_fingerprint(lhs);
  rep.rhs_fingerprint = gb_fingerprint(rhs);

  CheckOptions copts;
  copts.want_certificates = false;
  copts.provenance = ExponentProvenance::MuAtPoint;
  rep.contrast = dm_check(fp, gp, k + 1, default_d_max(fp, gp, k + 1), copts);
  return rep;
}

RushReport rush_example_check() {
  RingPtr ring = make_ring({"u", "v"}, FieldSpec::rational());
  Polynomial u = Polynomial::variable(ring, 0);
  Polynomial v = Polynomial::variable(ring, 1);
  Polynomial one = Polynomial::from_int(ring, 1);

  UnitTailSeries f(ring, 16,
                   {UnitTailTerm{v, 0, UnitSeries::one(ring)},
                    UnitTailTerm{one, 1, UnitSeries::one(ring)}});
  UnitTailSeries g(ring, 16,
                   {UnitTailTerm{u, 0, UnitSeries::one(ring)},
                    UnitTailTerm{v, 1, UnitSeries::geometric(ring)}});

  RushReport rep;
  rep.ring = ring;

  TruncatedSeries fg = product_truncation(f, g, 4);
  rep.fg_coefficients = fg.coeffs();
  Polynomial uv = u * v;
  Polynomial c1 = u + v * v;
  Polynomial c2 = v + v * v;
  rep.coefficients_match = fg.coeff(0) == uv && fg.coeff(1) == c1 && fg.coeff(2) == c2 &&
                           fg.coeff(3) == c2 && fg.coeff(4) == c2;

  Ideal cfg = truncated_content(fg, 2);  // (uv, u+v^2, v+v^2)
  Ideal cg = content(g);                 // (u, v)
  rep.cfg_equals_cg = ideal_equal(cfg, cg);
  rep.content_is_uv = ideal_equal(cg, Ideal(ring, {u, v}));

  rep.identity = unit_content_identity_check(f, g, default_d_max(f, g, 1));

  rep.lift_v = lift(v, cfg);
  rep.lift_u_minus_v = lift(u - v, cfg);

  // the printed cofactor identities from the example
  MembershipCertificate paper_v{v, cfg.generators(), {-one, v, one - v}};
  MembershipCertificate paper_umv{u - v, cfg.generators(), {Polynomial(ring), one, -one}};
  rep.paper_cofactors_v_ok = paper_v.validate();
  rep.paper_cofactors_u_minus_v_ok = paper_umv.validate();
  return rep;
}

ReductionReport reduction_corollary_check(const UnitTailSeries& f, const UnitTailSeries& g,
                                          unsigned k, unsigned d_max, const CheckOptions& opts) {
  ReductionReport out;
  out.dm = dm_check(f, g, k, d_max, opts);
  if (out.dm.verdict != Verdict::Verified)
    fail(Errc::PreconditionFailed,
         "dm_check verdict is " + verdict_name(out.dm.verdict) + "; the corollary needs Eq. (1)");
  unsigned d = *out.dm.d_cert;
  TruncatedSeries fg = product_truncation(f, g, d);
  Ideal J = truncated_content(fg, d);
  Ideal I = ideal_product(content(f), content(g));
  out.reduction_num = reduction_number(J, I, k - 1);
  out.within_bound = out.reduction_num.has_value();
  return out;
}

// ---- seeded random corpus --------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

FieldElement random_scalar(std::mt19937_64& rng, const FieldSpec& field) {
  if (field.kind == FieldSpec::Kind::Prime)
    return FieldElement::modular(1 + draw(rng, field.p - 1), field.p);
  long v = static_cast<long>(draw(rng, 8)) - 4;  // [-4,3]
  if (v == 0) v = 4;
  return FieldElement::from_integer(field, mpz_class(v));
}

void monomials_of_degree(std::size_t arity, unsigned degree, std::vector<std::uint32_t>& cur,
                         std::size_t pos, std::vector<Monomial>& out) {
  if (pos + 1 == arity) {
    cur[pos] = degree;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = 0; e <= degree; ++e) {
    cur[pos] = e;
    monomials_of_degree(arity, degree - e, cur, pos + 1, out);
  }
}

std::vector<Monomial> degree_basis(const RingPtr& ring, unsigned degree) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> cur(ring->arity(), 0);
  monomials_of_degree(ring->arity(), degree, cur, 0, out);
  return out;
}

}  // namespace

RingPtr corpus_ring(CorpusRing r) {
  if (r == CorpusRing::RationalUV) return make_ring({"u", "v"}, FieldSpec::rational());
  return make_ring({"x", "y", "z"}, FieldSpec::prime(101));
}

Polynomial random_homogeneous(std::mt19937_64& rng, const RingPtr& ring, unsigned degree,
                              unsigned max_terms) {
  std::vector<Monomial> basis = degree_basis(ring, degree);
  unsigned nterms = 1 + static_cast<unsigned>(draw(rng, std::min<std::uint64_t>(max_terms, basis.size())));
  std::vector<Term> terms;
  for (unsigned t = 0; t < nterms; ++t) {
    const Monomial& m = basis[draw(rng, basis.size())];
    terms.push_back(Term{m, random_scalar(rng, ring->field())});
  }
  Polynomial p(ring, std::move(terms));
  if (p.is_zero())  // coefficients may cancel on a repeated monomial
    return Polynomial::term(ring, basis[draw(rng, basis.size())], random_scalar(rng, ring->field()));
  return p;
}

UnitSeries random_unit(std::mt19937_64& rng, const RingPtr& ring) {
  switch (draw(rng, 3)) {
    case 0: return UnitSeries::one(ring);
    case 1: return UnitSeries::geometric(ring);
    default: break;
  }
  std::vector<Polynomial> cs;
  cs.push_back(Polynomial::constant(ring, random_scalar(rng, ring->field())));
  unsigned extra = 1 + static_cast<unsigned>(draw(rng, 2));
  for (unsigned i = 0; i < extra; ++i) {
    if (draw(rng, 4) == 0) {
      cs.push_back(Polynomial(ring));
      continue;
    }
    cs.push_back(random_homogeneous(rng, ring, static_cast<unsigned>(draw(rng, 2)), 2));
  }
  return UnitSeries(ring, std::move(cs), UnitSeries::Extension::Zeros);
}

UnitTailSeries random_unit_tail(std::mt19937_64& rng, const RingPtr& ring,
                                bool force_unit_content) {
  unsigned nterms = 1 + static_cast<unsigned>(draw(rng, 4));
  std::vector<unsigned> exps;
  while (exps.size() < nterms) {
    unsigned e = static_cast<unsigned>(draw(rng, 6));
    if (std::find(exps.begin(), exps.end(), e) == exps.end()) exps.push_back(e);
  }
  std::sort(exps.begin(), exps.end());
  std::vector<UnitTailTerm> terms;
  for (unsigned t = 0; t < nterms; ++t) {
    Polynomial a = (force_unit_content && t == 0)
                       ? Polynomial::constant(ring, random_scalar(rng, ring->field()))
                       : random_homogeneous(rng, ring, static_cast<unsigned>(draw(rng, 3)), 3);
    terms.push_back(UnitTailTerm{std::move(a), exps[t], random_unit(rng, ring)});
  }
  return UnitTailSeries(ring, 16, std::move(terms));
}

UnitTailSeries random_polynomial_series(std::mt19937_64& rng, const RingPtr& ring,
                                        unsigned degree) {
  std::vector<UnitTailTerm> terms;
  for (unsigned j = 0; j <= degree; ++j) {
    if (j < degree && draw(rng, 4) == 0) continue;  // sparse interior, top kept
    std::vector<Term> ts;
    unsigned n = 1 + static_cast<unsigned>(draw(rng, 3));
    for (unsigned t = 0; t < n; ++t) {
      Polynomial m = random_homogeneous(rng, ring, static_cast<unsigned>(draw(rng, 3)), 1);
      for (const auto& term : m.terms()) ts.push_back(term);
    }
    Polynomial a(ring, std::move(ts));
    if (a.is_zero()) a = Polynomial::constant(ring, random_scalar(rng, ring->field()));
    terms.push_back(UnitTailTerm{std::move(a), j, UnitSeries::one(ring)});
  }
  return UnitTailSeries(ring, std::max(16u, degree), std::move(terms));
}

CorpusResult run_corpus(const CorpusOptions& opts) {
  CorpusResult res;
  res.seed = opts.seed;
  res.total = opts.count;
  res.rows.resize(opts.count);
  RingPtr ring = corpus_ring(opts.ring);

  auto run_pair = [&](unsigned idx) {
    CorpusRow row;
    row.index = idx;
    row.pair_seed = splitmix64(opts.seed ^ splitmix64(idx + 1));
    std::mt19937_64 rng(row.pair_seed);
    UnitTailSeries f = random_unit_tail(rng, ring, opts.unit_content);
    UnitTailSeries g = random_unit_tail(rng, ring);
    if (opts.unit_content) {
      DMReport rep = unit_content_identity_check(f, g, default_d_max(f, g, 1));
      row.k = 1;
      row.verdict = rep.verdict;
      row.d_cert = rep.d_cert;
      return row;
    }
    unsigned k = dm_exponent(g, RationalPoint::origin(ring));
    row.k = k;
    CheckOptions copts;
    copts.want_certificates = false;
    copts.provenance = ExponentProvenance::MuAtPoint;
    copts.seed = row.pair_seed;
    DMReport rep = dm_check(f, g, k, default_d_max(f, g, k), copts);
    row.verdict = rep.verdict;
    row.d_cert = rep.d_cert;
    if (opts.with_reduction && rep.verdict == Verdict::Verified) {
      TruncatedSeries fg = product_truncation(f, g, *rep.d_cert);
      Ideal J = truncated_content(fg, *rep.d_cert);
      Ideal I = ideal_product(content(f), content(g));
      row.reduction_num = reduction_number(J, I, k - 1);
      row.reduction_ok = row.reduction_num.has_value();
    }
    return row;
  };

  unsigned nthreads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
  nthreads = std::max(1u, std::min(nthreads, opts.count));
  std::atomic<unsigned> next{0};
  auto worker = [&] {
    for (unsigned idx = next.fetch_add(1); idx < opts.count; idx = next.fetch_add(1))
      res.rows[idx] = run_pair(idx);
  };
  std::vector<std::future<void>> jobs;
  for (unsigned t = 1; t < nthreads; ++t) jobs.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& j : jobs) j.get();

  for (const auto& row : res.rows) {
    if (row.verdict == Verdict::Verified) ++res.verified;
    if (!row.reduction_ok) res.all_reductions_ok = false;
  }
  return res;
}

}  // namespace dmkit
