// Acceptance suite: one criterion per check, one PASS/FAIL line each,
// with the runtime budget enforced alongside the mathematical assertions.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dmkit/cli.hpp"
#include "dmkit/dmcheck.hpp"
#include "dmkit/exprio.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace dmkit;
using namespace dmkit::testing;

namespace {

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool expect(bool cond, std::string& detail, const std::string& msg) {
  if (!cond) detail += (detail.empty() ? "" : "; ") + msg;
  return cond;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/dmkit_acceptance_" + name;
  std::FILE* f = std::fopen(path.c_str(), "w");
  std::fputs(content.c_str(), f);
  std::fclose(f);
  return path;
}

// --- criterion 1: Rush correction ---------------------------------------
bool rush_criterion(std::string& detail) {
  bool ok = true;
  RushReport rep = rush_example_check();
  RingPtr R = rep.ring;
  ok &= expect(rep.fg_coefficients.size() == 5, detail, "expected 5 coefficients");
  ok &= expect(rep.fg_coefficients[0] == pp(R, "u*v"), detail, "coeff 0 != uv");
  ok &= expect(rep.fg_coefficients[1] == pp(R, "u + v^2"), detail, "coeff 1 != u+v^2");
  for (int i = 2; i <= 4; ++i)
    ok &= expect(rep.fg_coefficients[i] == pp(R, "v + v^2"), detail,
                 "coeff " + std::to_string(i) + " != v+v^2");
  ok &= expect(rep.coefficients_match, detail, "coefficient list mismatch");
  ok &= expect(rep.cfg_equals_cg, detail, "c(fg) != c(g)");
  ok &= expect(rep.content_is_uv, detail, "c(g) != (u,v)");
  ok &= expect(rep.identity.verdict == Verdict::Verified, detail, "identity not verified");
  ok &= expect(rep.paper_cofactors_v_ok, detail, "printed cofactors for v fail");
  ok &= expect(rep.paper_cofactors_u_minus_v_ok, detail, "printed cofactors for u-v fail");
  ok &= expect(rep.lift_v.validate() && rep.lift_u_minus_v.validate(), detail,
               "lift certificates fail");
  CliResult cli = run_cli({"rush"});
  ok &= expect(cli.code == 0, detail, "cmd_rush exit code != 0");
  return ok;
}

// --- criterion 2: main theorem on the seeded corpus ----------------------
CorpusResult corpus_q, corpus_fp;

bool corpus_criterion(std::string& detail) {
  CorpusOptions q;
  q.seed = 42;
  q.count = 100;
  q.ring = CorpusRing::RationalUV;
  corpus_q = run_corpus(q);

  CorpusOptions fp = q;
  fp.ring = CorpusRing::F101XYZ;
  corpus_fp = run_corpus(fp);

  bool ok = true;
  ok &= expect(corpus_q.verified == 100, detail,
               "Q[u,v]: " + std::to_string(corpus_q.verified) + "/100 verified");
  ok &= expect(corpus_fp.verified == 100, detail,
               "F101[x,y,z]: " + std::to_string(corpus_fp.verified) + "/100 verified");
  for (const auto& row : corpus_q.rows)
    ok &= expect(row.d_cert.has_value(), detail, "missing d_cert in Q corpus");
  for (const auto& row : corpus_fp.rows)
    ok &= expect(row.d_cert.has_value(), detail, "missing d_cert in Fp corpus");
  return ok;
}

// --- criterion 3: tightness counterexample -------------------------------
bool counterexample_criterion_k1(std::string& detail) {
  CounterexampleReport rep = generic_counterexample(1, FieldSpec::rational());
  bool ok = expect(rep.inequality_certified, detail, "k=1 inequality not certified");
  ok &= expect(print_poly(rep.witness) == "a0*b1", detail, "witness is not a0*b1");
  ok &= expect(rep.contrast.verdict == Verdict::Verified, detail, "k=1 contrast failed");
  return ok;
}

bool counterexample_criterion_k2(std::string& detail) {
  CounterexampleReport rep = generic_counterexample(2, FieldSpec::rational());
  bool ok = expect(rep.inequality_certified, detail, "k=2 inequality not certified");
  ok &= expect(rep.contrast.verdict == Verdict::Verified, detail, "k=2 contrast failed");
  return ok;
}

// --- criterion 4: Proposition 1 on unit-content pairs --------------------
bool proposition1_criterion(std::string& detail) {
  CorpusOptions opts;
  opts.seed = 42;
  opts.count = 50;
  opts.ring = CorpusRing::RationalUV;
  opts.unit_content = true;
  CorpusResult res = run_corpus(opts);
  return expect(res.verified == 50, detail,
                std::to_string(res.verified) + "/50 unit-content pairs certified");
}

// --- criterion 5: corollary on every corpus pair --------------------------
bool corollary_criterion(std::string& detail) {
  CorpusOptions q;
  q.seed = 42;
  q.count = 100;
  q.ring = CorpusRing::RationalUV;
  q.with_reduction = true;
  CorpusResult rq = run_corpus(q);

  CorpusOptions fp = q;
  fp.ring = CorpusRing::F101XYZ;
  CorpusResult rf = run_corpus(fp);

  bool ok = true;
  unsigned within = 0;
  for (const CorpusResult* res : {&rq, &rf}) {
    for (std::size_t i = 0; i < res->rows.size(); ++i) {
      const CorpusRow& row = res->rows[i];
      ok &= expect(row.verdict == Verdict::Verified, detail,
                   "pair " + std::to_string(row.index) + " not verified");
      ok &= expect(row.reduction_ok && row.reduction_num && *row.reduction_num + 1 <= row.k,
                   detail, "pair " + std::to_string(row.index) + " reduction out of bound");
      if (row.reduction_ok) ++within;
    }
  }
  ok &= expect(within == 200, detail, std::to_string(within) + "/200 within bound");
  // same seeds as criterion 2
  ok &= expect(rq.rows.size() == corpus_q.rows.size() &&
                   rq.rows[0].pair_seed == corpus_q.rows[0].pair_seed,
               detail, "corpus seeds diverged from criterion 2");
  return ok;
}

// --- criterion 6: Gilmer-Grams-Parker specialization ----------------------
bool ggp_criterion(std::string& detail) {
  std::mt19937_64 rng(1905);
  unsigned verified = 0;
  for (unsigned k = 1; k <= 4; ++k) {
    for (int i = 0; i < 20; ++i) {
      RingPtr R = (i % 2 == 0) ? corpus_ring(CorpusRing::RationalUV)
                               : corpus_ring(CorpusRing::F101XYZ);
      UnitTailSeries f = random_unit_tail(rng, R);
      UnitTailSeries g = random_polynomial_series(rng, R, k - 1);
      DMReport rep = dm_check(f, g, k, default_d_max(f, g, k));
      if (rep.verdict == Verdict::Verified) ++verified;
    }
  }
  return expect(verified == 80, detail, std::to_string(verified) + "/80 verified");
}

// --- criterion 7: mu oracle equivalence -----------------------------------
bool mu_oracle_criterion(std::string& detail) {
  std::mt19937_64 rng(20250810);
  RingPtr rings[2] = {quv(), make_ring({"x", "y", "z"}, FieldSpec::rational())};
  unsigned matches = 0;
  for (int done = 0; done < 200; ++done) {
    RingPtr R = rings[done % 2];
    std::vector<Monomial> monos;
    std::vector<Polynomial> gens;
    unsigned n = 1 + rng() % 6;
    for (unsigned t = 0; t < n; ++t) {
      Monomial m = random_monomial(rng, R, 5);
      monos.push_back(m);
      gens.push_back(Polynomial::term(R, m, FieldElement::one(R->field())));
    }
    Ideal I(R, std::move(gens));
    unsigned mu = mu_at_point(I, RationalPoint::origin(R));
    if (mu == oracles::minimal_monomial_generator_count(monos)) ++matches;
  }
  return expect(matches == 200, detail, std::to_string(matches) + "/200 matches");
}

// --- criterion 8: Gauss-failure sanity via one CLI run ---------------------
bool gauss_sanity_criterion(std::string& detail) {
  std::string f = write_temp("f.txt", "u + v*X");
  std::string g = write_temp("g.txt", "v + u*X");
  CliResult r = run_cli({"reduction", f, g, "--k", "2"});
  bool ok = expect(r.code == 0, detail, "exit code " + std::to_string(r.code));
  ok &= expect(r.out.find("k = 1: refuted") != std::string::npos, detail, "k=1 not refuted");
  ok &= expect(r.out.find("k = 2: verified") != std::string::npos, detail, "k=2 not verified");
  ok &= expect(r.out.find("reduction number: 1 (bound 1)") != std::string::npos, detail,
               "reduction number != 1");
  return ok;
}

// --- criterion 9: parser round trip and rejections -------------------------
bool parser_criterion(std::string& detail) {
  std::mt19937_64 rng(3141592);
  bool ok = true;
  unsigned round_trips = 0;
  for (RingPtr R : {quv(), f101xyz()}) {
    for (int i = 0; i < 500; ++i) {
      Polynomial p = random_poly(rng, R, 5, 6);
      std::string s = print_poly(p);
      if (parse_poly(s, R) == p && print_poly(parse_poly(s, R)) == s) ++round_trips;
    }
  }
  ok &= expect(round_trips == 1000, detail,
               std::to_string(round_trips) + "/1000 round trips");

  RingPtr R = quv();
  const char* malformed[] = {"",     "u +",  "u * ",    "(u + v", "u ^",
                             "u ^ v", "3/",   "3/0",     "u v",    "u $ v",
                             "w + 1", "u^70000", "()",   "u +* v"};
  unsigned rejected = 0;
  for (const char* src : malformed) {
    try {
      parse_poly(src, R);
    } catch (const Error& e) {
      // every rejection carries a line:column position or a named cause
      std::string msg = e.what();
      if (e.code() == Errc::SyntaxError && msg.find(":") != std::string::npos) ++rejected;
    }
  }
  ok &= expect(rejected == sizeof(malformed) / sizeof(malformed[0]), detail,
               std::to_string(rejected) + " malformed inputs rejected");
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "Rush correction (cmd_rush, exact)", 1.0, rush_criterion},
      {2, "main theorem corpus 200/200 (seed 42)", 120.0, corpus_criterion},
      {3, "counterexample k=1 (witness a0*b1)", 5.0, counterexample_criterion_k1},
      {3, "counterexample k=2", 60.0, counterexample_criterion_k2},
      {4, "Proposition 1 on 50 unit-content pairs", 30.0, proposition1_criterion},
      {5, "corollary reduction numbers 200/200", 240.0, corollary_criterion},
      {6, "GGP polynomial specialization 80/80", 120.0, ggp_criterion},
      {7, "mu oracle equivalence 200/200", 60.0, mu_oracle_criterion},
      {8, "Gauss-failure sanity via one reduction run", 1.0, gauss_sanity_criterion},
      {9, "parser round trip and rejections", 30.0, parser_criterion},
  };

  int failures = 0;
  for (auto& c : criteria) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.budget_seconds) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over budget");
    }
    std::printf("%s  criterion %d: %s (%.2fs < %.0fs)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.name.c_str(), secs, c.budget_seconds, detail.empty() ? "" : " — ",
                detail.c_str());
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
