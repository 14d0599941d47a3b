#include "dmkit/exprio.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>

namespace dmkit {

namespace {

using nlohmann::json;

constexpr unsigned kMaxExponent = 1u << 16;

struct Token {
  enum Kind { Ident, Integer, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
  Kind kind;
  std::string text;
  int line;
  int col;
};

const char* token_desc(Token::Kind k) {
  switch (k) {
    case Token::Ident: return "identifier";
    case Token::Integer: return "integer";
    case Token::Plus: return "'+'";
    case Token::Minus: return "'-'";
    case Token::Star: return "'*'";
    case Token::Caret: return "'^'";
    case Token::Slash: return "'/'";
    case Token::LParen: return "'('";
    case Token::RParen: return "')'";
    case Token::End: return "end of input";
  }
  return "token";
}

[[noreturn]] void syntax_error(int line, int col, const std::string& msg) {
  fail(Errc::SyntaxError, std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    int tline = line, tcol = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back(Token{Token::Ident, std::string(src.substr(i, j - i)), tline, tcol});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back(Token{Token::Integer, std::string(src.substr(i, j - i)), tline, tcol});
      advance(j - i);
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case '+': kind = Token::Plus; break;
      case '-': kind = Token::Minus; break;
      case '*': kind = Token::Star; break;
      case '^': kind = Token::Caret; break;
      case '/': kind = Token::Slash; break;
      case '(': kind = Token::LParen; break;
      case ')': kind = Token::RParen; break;
      default:
        syntax_error(tline, tcol, std::string("unexpected character '") + c + "'");
    }
    out.push_back(Token{kind, std::string(1, c), tline, tcol});
    advance(1);
  }
  out.push_back(Token{Token::End, "", line, col});
  return out;
}

Polynomial poly_pow(Polynomial base, unsigned e) {
  Polynomial acc = Polynomial::from_int(base.ring(), 1);
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, RingPtr ring) : toks_(std::move(toks)), ring_(std::move(ring)) {}

  Polynomial run() {
    Polynomial p = expr();
    if (peek().kind != Token::End)
      syntax_error(peek().line, peek().col,
                   std::string("unexpected ") + token_desc(peek().kind) + " after expression");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  Polynomial expr() {
    bool negate = false;
    if (accept(Token::Minus))
      negate = true;
    else
      accept(Token::Plus);
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      bool minus = next().kind == Token::Minus;
      Polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept(Token::Star)) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept(Token::Caret)) {
      const Token& e = peek();
      if (e.kind != Token::Integer)
        syntax_error(e.line, e.col,
                     std::string("expected a non-negative integer exponent, found ") +
                         token_desc(e.kind));
      next();
      mpz_class v(e.text);
      if (v > kMaxExponent)
        syntax_error(e.line, e.col, "exponent overflow: " + e.text + " exceeds " +
                                        std::to_string(kMaxExponent));
      return poly_pow(std::move(b), static_cast<unsigned>(v.get_ui()));
    }
    return b;
  }

  Polynomial base() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Ident: {
        next();
        auto idx = ring_->var_index(t.text);
        if (!idx)
          syntax_error(t.line, t.col, "unknown identifier '" + t.text + "' in " + ring_->str());
        return Polynomial::variable(ring_, *idx);
      }
      case Token::Integer: {
        next();
        mpz_class num(t.text);
        if (accept(Token::Slash)) {
          const Token& d = peek();
          if (d.kind != Token::Integer)
            syntax_error(d.line, d.col,
                         std::string("expected an integer denominator, found ") +
                             token_desc(d.kind));
          next();
          mpz_class den(d.text);
          if (den == 0) syntax_error(d.line, d.col, "zero denominator");
          return Polynomial::constant(ring_,
                                      FieldElement::from_fraction(ring_->field(), num, den));
        }
        return Polynomial::constant(ring_, FieldElement::from_integer(ring_->field(), num));
      }
      case Token::LParen: {
        next();
        Polynomial p = expr();
        if (!accept(Token::RParen))
          syntax_error(peek().line, peek().col,
                       std::string("expected ')', found ") + token_desc(peek().kind));
        return p;
      }
      default:
        syntax_error(t.line, t.col, std::string("expected a factor, found ") + token_desc(t.kind));
    }
  }

  std::vector<Token> toks_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

std::string coeff_abs_str(const FieldElement& c, bool* negative) {
  *negative = false;
  if (c.is_rational() && c.rat() < 0) {
    *negative = true;
    return (-c).str();
  }
  return c.str();
}

std::string mono_str(const RingSpec& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    std::uint32_t e = m.exp(i);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.var(i);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

std::string fingerprint_list(const RingPtr& ring, const std::vector<Polynomial>& ps) {
  std::string acc = ring->str();
  for (const auto& p : ps) {
    acc += ";";
    acc += print_poly(p);
  }
  return hex64(fnv1a(acc));
}

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
  fail(Errc::SchemaError, path + ": " + msg);
}

const json& need(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path + "." + key, "missing field");
  return *it;
}

std::string need_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

unsigned need_nat(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) schema_error(path, "expected a non-negative integer");
  return j.get<unsigned>();
}

Polynomial parse_poly_at(const std::string& src, const RingPtr& ring, const std::string& path) {
  try {
    return parse_poly(src, ring);
  } catch (const Error& e) {
    schema_error(path, std::string("bad polynomial: ") + e.what());
  }
}

}  // namespace

Polynomial parse_poly(std::string_view src, const RingPtr& ring) {
  return Parser(lex(src), ring).run();
}

std::string print_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const RingSpec& ring = *p.ring();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = false;
    std::string cs = coeff_abs_str(t.coeff, &neg);
    std::string ms = mono_str(ring, t.mono);
    std::string piece;
    if (ms.empty())
      piece = cs;
    else if (cs == "1")
      piece = ms;
    else
      piece = cs + "*" + ms;
    if (first) {
      out += neg ? "-" + piece : piece;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += piece;
    }
  }
  return out;
}

std::string print_ideal_generators(const Ideal& I) {
  if (I.is_zero_ideal()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < I.generators().size(); ++i) {
    if (i) s += ", ";
    s += print_poly(I.generators()[i]);
  }
  return s + ")";
}

std::string gb_fingerprint(const Ideal& I) { return fingerprint_list(I.ring(), I.basis()); }

std::string generators_fingerprint(const Ideal& I) {
  return fingerprint_list(I.ring(), I.generators());
}

UnitTailSeries parse_series_text(std::string_view src, const RingPtr& ring, unsigned precision) {
  std::vector<std::string> vars = ring->vars();
  vars.push_back(ring->series_var());
  RingPtr extended =
      make_ring(std::move(vars), ring->field(), ring->order(), ring->series_var() + "_tail");
  Polynomial p = parse_poly(src, extended);

  const std::size_t xi = ring->arity();
  unsigned max_deg = 0;
  for (const auto& t : p.terms()) max_deg = std::max(max_deg, t.mono.exp(xi));
  unsigned prec = std::max(precision, max_deg);

  std::vector<std::vector<Term>> buckets(max_deg + 1);
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> exps(t.mono.exps().begin(), t.mono.exps().end() - 1);
    buckets[t.mono.exp(xi)].push_back(Term{Monomial(std::move(exps)), t.coeff});
  }
  std::vector<UnitTailTerm> terms;
  for (unsigned j = 0; j <= max_deg; ++j) {
    Polynomial c(ring, std::move(buckets[j]));
    if (!c.is_zero()) terms.push_back(UnitTailTerm{std::move(c), j, UnitSeries::one(ring)});
  }
  return UnitTailSeries(ring, prec, std::move(terms));
}

nlohmann::json ring_to_json(const RingSpec& ring) {
  return json{{"vars", ring.vars()}, {"field", ring.field().str()}, {"order", order_name(ring.order())}};
}

RingPtr ring_from_json(const nlohmann::json& j, const std::string& path) {
  const json& jvars = need(j, "vars", path);
  if (!jvars.is_array() || jvars.empty()) schema_error(path + ".vars", "expected a non-empty array");
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < jvars.size(); ++i)
    vars.push_back(need_string(jvars[i], path + ".vars[" + std::to_string(i) + "]"));
  FieldSpec field;
  try {
    field = FieldSpec::parse(need_string(need(j, "field", path), path + ".field"));
  } catch (const Error& e) {
    if (e.code() == Errc::SchemaError) schema_error(path + ".field", e.what());
    throw;
  }
  MonomialOrder order = MonomialOrder::Grevlex;
  if (j.contains("order")) {
    std::string o = need_string(j["order"], path + ".order");
    if (o != "grevlex" && o != "lex")
      schema_error(path + ".order", "expected \"grevlex\" or \"lex\", got \"" + o + "\"");
    order = parse_order(o);
  }
  try {
    return make_ring(std::move(vars), field, order);
  } catch (const Error& e) {
    schema_error(path, e.what());
  }
}

UnitTailSeries load_series(const nlohmann::json& doc) {
  if (!doc.is_object()) schema_error("$", "expected a SeriesDoc object");
  RingPtr ring = ring_from_json(need(doc, "ring", "$"), "ring");
  unsigned precision = 16;
  if (doc.contains("precision")) precision = need_nat(doc["precision"], "precision");

  const json& jterms = need(doc, "terms", "$");
  if (!jterms.is_array()) schema_error("terms", "expected an array");
  std::vector<UnitTailTerm> terms;
  for (std::size_t i = 0; i < jterms.size(); ++i) {
    const std::string path = "terms[" + std::to_string(i) + "]";
    const json& jt = jterms[i];
    if (!jt.is_object()) schema_error(path, "expected an object");
    Polynomial a = parse_poly_at(need_string(need(jt, "a", path), path + ".a"), ring, path + ".a");
    unsigned jexp = need_nat(need(jt, "j", path), path + ".j");
    if (jexp > precision)
      schema_error(path + ".j", "exponent " + std::to_string(jexp) + " exceeds precision " +
                                    std::to_string(precision));
    const json& ju = need(jt, "unit", path);
    UnitSeries unit = UnitSeries::one(ring);
    if (ju.is_string()) {
      std::string name = ju.get<std::string>();
      if (name == "one")
        unit = UnitSeries::one(ring);
      else if (name == "geom")
        unit = UnitSeries::geometric(ring);
      else
        schema_error(path + ".unit", "expected \"one\", \"geom\" or {\"coeffs\": [...]}");
    } else if (ju.is_object()) {
      const json& jc = need(ju, "coeffs", path + ".unit");
      if (!jc.is_array() || jc.empty())
        schema_error(path + ".unit.coeffs", "expected a non-empty array");
      std::vector<Polynomial> cs;
      for (std::size_t c = 0; c < jc.size(); ++c)
        cs.push_back(parse_poly_at(
            need_string(jc[c], path + ".unit.coeffs[" + std::to_string(c) + "]"), ring,
            path + ".unit.coeffs[" + std::to_string(c) + "]"));
      if (!cs[0].as_nonzero_scalar())
        schema_error(path + ".unit.coeffs[0]", "unit constant term must be a nonzero scalar");
      unit = UnitSeries(ring, std::move(cs), UnitSeries::Extension::Zeros);
    } else {
      schema_error(path + ".unit", "expected \"one\", \"geom\" or {\"coeffs\": [...]}");
    }
    terms.push_back(UnitTailTerm{std::move(a), jexp, std::move(unit)});
  }
  try {
    return UnitTailSeries(ring, precision, std::move(terms));
  } catch (const Error& e) {
    schema_error("terms", e.what());
  }
}

UnitTailSeries load_series_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema_error("$", std::string("invalid JSON: ") + e.what());
  }
  return load_series(doc);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Refuted: return "refuted";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict parse_verdict(const std::string& s) {
  if (s == "verified") return Verdict::Verified;
  if (s == "refuted") return Verdict::Refuted;
  if (s == "inconclusive") return Verdict::Inconclusive;
  fail(Errc::SchemaError, "unknown verdict '" + s + "'");
}

std::string provenance_name(ExponentProvenance p) {
  switch (p) {
    case ExponentProvenance::User: return "user";
    case ExponentProvenance::MuAtPoint: return "mu_at_point";
    case ExponentProvenance::GeneratorCountBound: return "generator_count_bound";
  }
  return "user";
}

ExponentProvenance parse_provenance(const std::string& s) {
  if (s == "user") return ExponentProvenance::User;
  if (s == "mu_at_point") return ExponentProvenance::MuAtPoint;
  if (s == "generator_count_bound") return ExponentProvenance::GeneratorCountBound;
  fail(Errc::SchemaError, "unknown exponent provenance '" + s + "'");
}

nlohmann::json report_to_json(const DMReport& r) {
  json j{{"schema", "dm-report/1"},
         {"check", r.check},
         {"ring", ring_to_json(*r.ring)},
         {"k", r.k},
         {"k_provenance", provenance_name(r.k_provenance)},
         {"d_max", r.d_max},
         {"verdict", verdict_name(r.verdict)},
         {"lhs_generators", r.lhs_generators},
         {"rhs_generators", r.rhs_generators},
         {"lhs_fingerprint", r.lhs_fingerprint},
         {"rhs_fingerprint", r.rhs_fingerprint}};
  if (r.k_upper_bound) j["k_upper_bound"] = *r.k_upper_bound;
  if (r.d_cert) j["d_cert"] = *r.d_cert;
  if (r.min_exponent) j["min_exponent"] = *r.min_exponent;
  if (r.reduction_num) j["reduction_number"] = *r.reduction_num;
  if (r.seed) j["seed"] = *r.seed;
  json certs = json::array();
  for (const auto& c : r.certificates) {
    json gens = json::array(), cofs = json::array();
    for (const auto& g : c.generators) gens.push_back(print_poly(g));
    for (const auto& q : c.cofactors) cofs.push_back(print_poly(q));
    certs.push_back(json{{"target", print_poly(c.target)}, {"generators", gens}, {"cofactors", cofs}});
  }
  j["certificates"] = certs;
  return j;
}

std::string dump_report(const DMReport& r) { return report_to_json(r).dump(2); }

DMReport load_report(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    schema_error("$", std::string("invalid JSON: ") + e.what());
  }
  if (need_string(need(j, "schema", "$"), "schema") != "dm-report/1")
    schema_error("schema", "expected \"dm-report/1\"");
  DMReport r;
  r.check = need_string(need(j, "check", "$"), "check");
  r.ring = ring_from_json(need(j, "ring", "$"), "ring");
  r.k = need_nat(need(j, "k", "$"), "k");
  r.k_provenance = parse_provenance(need_string(need(j, "k_provenance", "$"), "k_provenance"));
  r.d_max = need_nat(need(j, "d_max", "$"), "d_max");
  r.verdict = parse_verdict(need_string(need(j, "verdict", "$"), "verdict"));
  if (j.contains("k_upper_bound")) r.k_upper_bound = need_nat(j["k_upper_bound"], "k_upper_bound");
  if (j.contains("d_cert")) r.d_cert = need_nat(j["d_cert"], "d_cert");
  if (j.contains("min_exponent")) r.min_exponent = need_nat(j["min_exponent"], "min_exponent");
  if (j.contains("reduction_number"))
    r.reduction_num = need_nat(j["reduction_number"], "reduction_number");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) schema_error("seed", "expected a non-negative integer");
    r.seed = j["seed"].get<std::uint64_t>();
  }
  for (const auto& key : {"lhs_generators", "rhs_generators"}) {
    const json& arr = need(j, key, "$");
    if (!arr.is_array()) schema_error(key, "expected an array");
    auto& dst = std::string(key) == "lhs_generators" ? r.lhs_generators : r.rhs_generators;
    for (std::size_t i = 0; i < arr.size(); ++i)
      dst.push_back(need_string(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
  }
  r.lhs_fingerprint = need_string(need(j, "lhs_fingerprint", "$"), "lhs_fingerprint");
  r.rhs_fingerprint = need_string(need(j, "rhs_fingerprint", "$"), "rhs_fingerprint");
  const json& certs = need(j, "certificates", "$");
  if (!certs.is_array()) schema_error("certificates", "expected an array");
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const std::string path = "certificates[" + std::to_string(i) + "]";
    const json& jc = certs[i];
    MembershipCertificate cert{Polynomial(r.ring), {}, {}};
    cert.target = parse_poly_at(need_string(need(jc, "target", path), path + ".target"), r.ring,
                                path + ".target");
    const json& gens = need(jc, "generators", path);
    const json& cofs = need(jc, "cofactors", path);
    if (!gens.is_array() || !cofs.is_array()) schema_error(path, "expected generator/cofactor arrays");
    for (std::size_t t = 0; t < gens.size(); ++t)
      cert.generators.push_back(parse_poly_at(
          need_string(gens[t], path + ".generators[" + std::to_string(t) + "]"), r.ring,
          path + ".generators[" + std::to_string(t) + "]"));
    for (std::size_t t = 0; t < cofs.size(); ++t)
      cert.cofactors.push_back(parse_poly_at(
          need_string(cofs[t], path + ".cofactors[" + std::to_string(t) + "]"), r.ring,
          path + ".cofactors[" + std::to_string(t) + "]"));
    r.certificates.push_back(std::move(cert));
  }
  return r;
}

}  // namespace dmkit
