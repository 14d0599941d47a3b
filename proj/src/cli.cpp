#include "dmkit/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dmkit/dmcheck.hpp"
#include "dmkit/exprio.hpp"

namespace dmkit {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::InvalidArgument, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

RingPtr ring_from_flags(const RunConfig& cfg) {
  std::vector<std::string> vars;
  for (const auto& v : split(cfg.vars, ',')) {
    std::string t = trimmed(v);
    if (!t.empty()) vars.push_back(t);
  }
  return make_ring(std::move(vars), FieldSpec::parse(cfg.field), parse_order(cfg.order));
}

FieldElement parse_field_literal(const FieldSpec& field, const std::string& text) {
  std::string s = trimmed(text);
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  auto slash = s.find('/');
  try {
    mpz_class num(slash == std::string::npos ? s : s.substr(0, slash));
    mpz_class den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
    FieldElement v = FieldElement::from_fraction(field, num, den);
    return neg ? -v : v;
  } catch (const std::invalid_argument&) {
    fail(Errc::InvalidArgument, "bad coordinate '" + text + "'");
  }
}

RationalPoint point_from_flag(const RingPtr& ring, const std::optional<std::string>& flag) {
  if (!flag) return RationalPoint::origin(ring);
  std::vector<FieldElement> coords;
  for (const auto& c : split(*flag, ',')) coords.push_back(parse_field_literal(ring->field(), c));
  return RationalPoint(ring, std::move(coords));
}

UnitTailSeries load_series_input(const std::string& path, const RingPtr& text_ring,
                                 unsigned precision) {
  std::string data = read_file(path);
  std::size_t i = data.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && data[i] == '{') return load_series_string(data);
  return parse_series_text(data, text_ring, precision);
}

unsigned resolve_d_max(const RunConfig& cfg, const UnitTailSeries& f, const UnitTailSeries& g,
                       unsigned k) {
  if (cfg.d_max) return *cfg.d_max;
  if (const char* env = std::getenv("DMKIT_DMAX")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      fail(Errc::InvalidArgument, std::string("bad DMKIT_DMAX value '") + env + "'");
    }
  }
  return default_d_max(f, g, k);
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Verified: return 0;
    case Verdict::Refuted: return 1;
    case Verdict::Inconclusive: return 3;
  }
  return 3;
}

std::string opt_str(const std::optional<unsigned>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

void print_report_text(std::ostream& os, const DMReport& r) {
  os << "check: " << r.check << "\n";
  os << "ring: " << r.ring->str() << "\n";
  os << "k: " << r.k << " (" << provenance_name(r.k_provenance);
  if (r.k_upper_bound) os << "; generator-count bound " << *r.k_upper_bound;
  os << ")\n";
  os << "d_max: " << r.d_max << "\n";
  os << "verdict: " << verdict_name(r.verdict) << "\n";
  if (r.d_cert) os << "d_cert: " << *r.d_cert << "\n";
  if (r.min_exponent) os << "min exponent: " << *r.min_exponent << "\n";
  if (r.reduction_num) os << "reduction number: " << *r.reduction_num << "\n";
  auto join = [](const std::vector<std::string>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += v[i];
    }
    return s.empty() ? "(0)" : s + ")";
  };
  os << "lhs: " << (r.lhs_generators.empty() ? "(0)" : join(r.lhs_generators)) << "\n";
  os << "rhs: " << (r.rhs_generators.empty() ? "(0)" : join(r.rhs_generators)) << "\n";
  os << "lhs gb fingerprint: " << r.lhs_fingerprint << "\n";
  os << "rhs gb fingerprint: " << r.rhs_fingerprint << "\n";
  if (!r.certificates.empty()) {
    std::size_t valid = 0;
    for (const auto& c : r.certificates) valid += c.validate() ? 1 : 0;
    os << "certificates: " << valid << "/" << r.certificates.size() << " valid\n";
  }
}

int cmd_content(const RunConfig& cfg, std::ostream& out) {
  UnitTailSeries f = load_series_input(cfg.inputs[0], ring_from_flags(cfg), cfg.precision);
  Ideal c = content(f);
  if (cfg.json) {
    json j{{"ring", ring_to_json(*f.ring())},
           {"content_generators", json::array()},
           {"groebner_basis", json::array()}};
    for (const auto& g : c.generators()) j["content_generators"].push_back(print_poly(g));
    for (const auto& g : c.basis()) j["groebner_basis"].push_back(print_poly(g));
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "ring: " << f.ring()->str() << "\n";
  out << "content: " << print_ideal_generators(c) << "\n";
  out << "groebner basis: ";
  if (c.basis().empty()) {
    out << "(0)\n";
  } else {
    out << "(";
    for (std::size_t i = 0; i < c.basis().size(); ++i) {
      if (i) out << ", ";
      out << print_poly(c.basis()[i]);
    }
    out << ")\n";
  }
  return 0;
}

int cmd_dm(const RunConfig& cfg, std::ostream& out) {
  RingPtr text_ring = ring_from_flags(cfg);
  UnitTailSeries f = load_series_input(cfg.inputs[0], text_ring, cfg.precision);
  UnitTailSeries g = load_series_input(cfg.inputs[1], text_ring, cfg.precision);
  require_same_ring(f.ring(), g.ring());
  RationalPoint pt = point_from_flag(f.ring(), cfg.point);

  CheckOptions opts;
  unsigned k;
  if (cfg.k) {
    k = *cfg.k;
    opts.provenance = ExponentProvenance::User;
  } else {
    k = dm_exponent(g, pt);
    opts.provenance = ExponentProvenance::MuAtPoint;
  }
  unsigned d_max = resolve_d_max(cfg, f, g, k);
  DMReport rep = dm_check(f, g, k, d_max, opts);
  if (cfg.min_exponent) rep.min_exponent = dm_min_exponent(f, g, std::max(k, 1u), d_max);

  if (cfg.json)
    out << dump_report(rep) << "\n";
  else
    print_report_text(out, rep);
  return verdict_code(rep.verdict);
}

int cmd_reduction(const RunConfig& cfg, std::ostream& out) {
  RingPtr text_ring = ring_from_flags(cfg);
  UnitTailSeries f = load_series_input(cfg.inputs[0], text_ring, cfg.precision);
  UnitTailSeries g = load_series_input(cfg.inputs[1], text_ring, cfg.precision);
  require_same_ring(f.ring(), g.ring());
  RationalPoint pt = point_from_flag(f.ring(), cfg.point);

  CheckOptions opts;
  unsigned k;
  if (cfg.k) {
    k = *cfg.k;
  } else {
    k = dm_exponent(g, pt);
    opts.provenance = ExponentProvenance::MuAtPoint;
  }
  unsigned d_max = resolve_d_max(cfg, f, g, k);

  // per-exponent verdicts up to k, then the corollary at k
  CheckOptions quiet;
  quiet.want_certificates = false;
  json verdicts = json::array();
  std::ostringstream text;
  DMReport last;
  for (unsigned kk = 1; kk <= k; ++kk) {
    last = dm_check(f, g, kk, d_max, kk == k ? opts : quiet);
    verdicts.push_back(json{{"k", kk}, {"verdict", verdict_name(last.verdict)}});
    text << "k = " << kk << ": " << verdict_name(last.verdict);
    if (last.d_cert) text << " (d_cert = " << *last.d_cert << ")";
    text << "\n";
  }
  bool within = false;
  if (last.verdict == Verdict::Verified) {
    TruncatedSeries fg = series_mul(expand(f, *last.d_cert), expand(g, *last.d_cert));
    Ideal J = truncated_content(fg, *last.d_cert);
    Ideal I = ideal_product(content(f), content(g));
    last.reduction_num = reduction_number(J, I, k - 1);
    within = last.reduction_num.has_value();
    text << "reduction number: " << opt_str(last.reduction_num) << " (bound " << k - 1 << ")\n";
  }
  if (cfg.json) {
    json j = report_to_json(last);
    j["verdicts"] = verdicts;
    j["within_bound"] = within;
    out << j.dump(2) << "\n";
  } else {
    out << text.str();
  }
  if (last.verdict == Verdict::Verified && !within) return 1;
  return verdict_code(last.verdict);
}

int cmd_counterexample(const RunConfig& cfg, std::ostream& out) {
  unsigned k = cfg.k.value_or(1);
  CounterexampleReport rep = generic_counterexample(k, FieldSpec::parse(cfg.field));
  if (cfg.json) {
    json j{{"k", rep.k},
           {"ring", ring_to_json(*rep.ring)},
           {"inequality_certified", rep.inequality_certified},
           {"witness", print_poly(rep.witness)},
           {"lhs_generators_fingerprint", rep.lhs_fingerprint},
           {"rhs_gb_fingerprint", rep.rhs_fingerprint},
           {"contrast", report_to_json(rep.contrast)}};
    out << j.dump(2) << "\n";
  } else {
    out << "k: " << rep.k << "\n";
    out << "ring: " << rep.ring->str() << "\n";
    if (rep.inequality_certified)
      out << "inequality certified; witness " << print_poly(rep.witness) << "\n";
    else
      out << "inequality NOT certified\n";
    out << "contrast at k+1 = " << rep.k + 1 << ": " << verdict_name(rep.contrast.verdict);
    if (rep.contrast.d_cert) out << " (d_cert = " << *rep.contrast.d_cert << ")";
    out << "\n";
  }
  return rep.inequality_certified && rep.contrast.verdict == Verdict::Verified ? 0 : 1;
}

int cmd_rush(const RunConfig& cfg, std::ostream& out) {
  RushReport rep = rush_example_check();
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  if (cfg.json) {
    json coeffs = json::array();
    for (const auto& c : rep.fg_coefficients) coeffs.push_back(print_poly(c));
    auto cert = [](const MembershipCertificate& c) {
      json gens = json::array(), cofs = json::array();
      for (const auto& g : c.generators) gens.push_back(print_poly(g));
      for (const auto& q : c.cofactors) cofs.push_back(print_poly(q));
      return json{{"target", print_poly(c.target)},
                  {"generators", gens},
                  {"cofactors", cofs},
                  {"valid", c.validate()}};
    };
    json j{{"ring", ring_to_json(*rep.ring)},
           {"fg_coefficients", coeffs},
           {"coefficients_match", rep.coefficients_match},
           {"cfg_equals_cg", rep.cfg_equals_cg},
           {"content_is_uv", rep.content_is_uv},
           {"identity", report_to_json(rep.identity)},
           {"lift_v", cert(rep.lift_v)},
           {"lift_u_minus_v", cert(rep.lift_u_minus_v)},
           {"paper_cofactors_v_ok", rep.paper_cofactors_v_ok},
           {"paper_cofactors_u_minus_v_ok", rep.paper_cofactors_u_minus_v_ok},
           {"ok", rep.ok()}};
    out << j.dump(2) << "\n";
  } else {
    out << "ring: " << rep.ring->str() << "\n";
    out << "fg coefficients through X^4: [";
    for (std::size_t i = 0; i < rep.fg_coefficients.size(); ++i) {
      if (i) out << ", ";
      out << print_poly(rep.fg_coefficients[i]);
    }
    out << "]\n";
    out << "coefficients match [uv, u+v^2, v+v^2, ...]: " << yn(rep.coefficients_match) << "\n";
    out << "c(fg) = c(g): " << yn(rep.cfg_equals_cg) << "\n";
    out << "c(g) = (u, v): " << yn(rep.content_is_uv) << "\n";
    out << "identity check: " << verdict_name(rep.identity.verdict);
    if (rep.identity.d_cert) out << " (d_cert = " << *rep.identity.d_cert << ")";
    out << "\n";
    auto show_cert = [&](const char* name, const MembershipCertificate& c) {
      out << name << ": " << (c.validate() ? "valid" : "INVALID") << "; cofactors (";
      for (std::size_t i = 0; i < c.cofactors.size(); ++i) {
        if (i) out << ", ";
        out << print_poly(c.cofactors[i]);
      }
      out << ")\n";
    };
    show_cert("lift v", rep.lift_v);
    show_cert("lift u - v", rep.lift_u_minus_v);
    out << "paper cofactors for v validate: " << yn(rep.paper_cofactors_v_ok) << "\n";
    out << "paper cofactors for u - v validate: " << yn(rep.paper_cofactors_u_minus_v_ok) << "\n";
  }
  return rep.ok() ? 0 : 1;
}

int cmd_mu(const RunConfig& cfg, std::ostream& out) {
  RingPtr ring = ring_from_flags(cfg);
  std::vector<Polynomial> gens;
  for (const auto& src : split(cfg.inputs[0], ',')) gens.push_back(parse_poly(src, ring));
  Ideal I(ring, std::move(gens));
  RationalPoint pt = point_from_flag(ring, cfg.point);
  unsigned mu = mu_at_point(I, pt);
  auto mins = minimal_generators_at(I, pt);
  if (cfg.json) {
    json j{{"ring", ring_to_json(*ring)},
           {"point", pt.str()},
           {"mu", mu},
           {"minimal_generators", json::array()}};
    for (const auto& g : mins) j["minimal_generators"].push_back(print_poly(g));
    out << j.dump(2) << "\n";
  } else {
    out << "mu = " << mu << "\n";
    out << "minimal generators at " << pt.str() << ": (";
    for (std::size_t i = 0; i < mins.size(); ++i) {
      if (i) out << ", ";
      out << print_poly(mins[i]);
    }
    out << ")\n";
  }
  return 0;
}

int cmd_corpus(const RunConfig& cfg, bool unit_content, bool with_reduction, std::ostream& out) {
  CorpusOptions opts;
  opts.seed = cfg.seed;
  opts.count = cfg.count;
  opts.threads = cfg.threads;
  opts.unit_content = unit_content;
  opts.with_reduction = with_reduction;
  std::string rname = trimmed(cfg.vars) == "x,y,z" || cfg.field == "Fp:101" ? "f101xyz" : "quv";
  opts.ring = rname == "f101xyz" ? CorpusRing::F101XYZ : CorpusRing::RationalUV;
  CorpusResult res = run_corpus(opts);

  bool any_refuted = false, any_inconclusive = false;
  for (const auto& row : res.rows) {
    any_refuted |= row.verdict == Verdict::Refuted;
    any_inconclusive |= row.verdict == Verdict::Inconclusive;
  }
  if (cfg.json) {
    json rows = json::array();
    for (const auto& r : res.rows) {
      json jr{{"index", r.index},
              {"seed", r.pair_seed},
              {"k", r.k},
              {"verdict", verdict_name(r.verdict)}};
      if (r.d_cert) jr["d_cert"] = *r.d_cert;
      if (r.reduction_num) jr["reduction_number"] = *r.reduction_num;
      rows.push_back(jr);
    }
    json j{{"seed", res.seed},
           {"ring", ring_to_json(*corpus_ring(opts.ring))},
           {"total", res.total},
           {"verified", res.verified},
           {"all_reductions_within_bound", res.all_reductions_ok},
           {"rows", rows}};
    out << j.dump(2) << "\n";
  } else {
    out << "seed: " << res.seed << "\n";
    out << "ring: " << corpus_ring(opts.ring)->str() << "\n";
    out << "verified: " << res.verified << "/" << res.total << "\n";
    if (with_reduction)
      out << "reductions within bound: " << (res.all_reductions_ok ? "yes" : "no") << "\n";
    out << "  idx        seed  k  verdict       d_cert  r\n";
    for (const auto& r : res.rows) {
      char line[128];
      std::snprintf(line, sizeof line, "%5u  %10llu  %u  %-12s  %6s  %s\n", r.index,
                    static_cast<unsigned long long>(r.pair_seed % 10000000000ull), r.k,
                    verdict_name(r.verdict).c_str(), opt_str(r.d_cert).c_str(),
                    opt_str(r.reduction_num).c_str());
      out << line;
    }
  }
  if (res.verified == res.total && (!with_reduction || res.all_reductions_ok)) return 0;
  return any_refuted ? 1 : (any_inconclusive ? 3 : 1);
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult res;
  std::ostringstream out, err;
  RunConfig cfg;
  bool corpus_unit_content = false, corpus_with_reduction = false;

  CLI::App app{"content ideals and the power-series Dedekind-Mertens identity"};
  app.require_subcommand(1);

  auto add_ring_flags = [&](CLI::App* sub) {
    sub->add_option("--vars", cfg.vars, "ring variables for text inputs (default u,v)");
    sub->add_option("--field", cfg.field, "ground field: Q or Fp:<p> (default Q)");
    sub->add_option("--order", cfg.order, "monomial order: grevlex or lex")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    sub->add_option("--precision", cfg.precision, "working precision for series (default 16)");
    sub->add_flag("--json", cfg.json, "machine-readable JSON output");
  };

  CLI::App* content = app.add_subcommand("content", "content ideal of a series");
  content->add_option("series-file", cfg.inputs, "series input (SeriesDoc JSON or text)")
      ->required()
      ->expected(1);
  add_ring_flags(content);

  CLI::App* dm = app.add_subcommand("dm", "certify c(f)^k c(g) = c(f)^(k-1) c(fg)");
  dm->add_option("files", cfg.inputs, "f and g inputs")->required()->expected(2);
  dm->add_option("--k", cfg.k, "exponent override (default mu(c(g)) at --point)");
  dm->add_option("--point", cfg.point, "rational point c1,c2,... (default origin)");
  dm->add_option("--dmax", cfg.d_max, "truncation depth budget");
  dm->add_flag("--min-exponent", cfg.min_exponent, "also search for the least verifying exponent");
  add_ring_flags(dm);

  CLI::App* red = app.add_subcommand("reduction", "corollary: reduction number of c(fg)");
  red->add_option("files", cfg.inputs, "f and g inputs")->required()->expected(2);
  red->add_option("--k", cfg.k, "exponent (default mu(c(g)) at --point)");
  red->add_option("--point", cfg.point, "rational point (default origin)");
  red->add_option("--dmax", cfg.d_max, "truncation depth budget");
  add_ring_flags(red);

  CLI::App* ce = app.add_subcommand("counterexample", "generic tightness example");
  ce->add_option("--k", cfg.k, "inequality exponent (default 1)");
  add_ring_flags(ce);

  CLI::App* rush = app.add_subcommand("rush", "Rush's corrected example over Q[u,v]");
  add_ring_flags(rush);

  CLI::App* mu = app.add_subcommand("mu", "local minimal generator count of an ideal");
  mu->add_option("generators", cfg.inputs, "comma-separated generator list")
      ->required()
      ->expected(1);
  mu->add_option("--point", cfg.point, "rational point (default origin)");
  add_ring_flags(mu);

  CLI::App* corpus = app.add_subcommand("corpus", "seeded random identity corpus");
  corpus->add_option("--seed", cfg.seed, "corpus seed (default 42)");
  corpus->add_option("--count", cfg.count, "number of pairs (default 100)");
  corpus->add_option("--threads", cfg.threads, "worker threads (default hardware)");
  corpus->add_flag("--unit-content", corpus_unit_content, "force c(f) = R, check c(fg) = c(g)");
  corpus->add_flag("--reduction", corpus_with_reduction, "also check corollary reduction numbers");
  add_ring_flags(corpus);

  std::vector<const char*> argv;
  argv.push_back("dmkit");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (content->parsed()) {
      cfg.subcommand = "content";
      res.code = cmd_content(cfg, out);
    } else if (dm->parsed()) {
      cfg.subcommand = "dm";
      res.code = cmd_dm(cfg, out);
    } else if (red->parsed()) {
      cfg.subcommand = "reduction";
      res.code = cmd_reduction(cfg, out);
    } else if (ce->parsed()) {
      cfg.subcommand = "counterexample";
      res.code = cmd_counterexample(cfg, out);
    } else if (rush->parsed()) {
      cfg.subcommand = "rush";
      res.code = cmd_rush(cfg, out);
    } else if (mu->parsed()) {
      cfg.subcommand = "mu";
      res.code = cmd_mu(cfg, out);
    } else if (corpus->parsed()) {
      cfg.subcommand = "corpus";
      res.code = cmd_corpus(cfg, corpus_unit_content, corpus_with_reduction, out);
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    res.code = 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    res.code = 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    res.code = 2;
  }
  res.out = out.str();
  res.err = err.str();
  return res;
}

}  // namespace dmkit
