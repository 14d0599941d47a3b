#include "dmkit/field.hpp"

#include <utility>

namespace dmkit {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on (a, p); p prime and a != 0 mod p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotMember: return "NotMember";
    case Errc::ZeroIdeal: return "ZeroIdeal";
    case Errc::NotSubideal: return "NotSubideal";
    case Errc::ZeroSeries: return "ZeroSeries";
    case Errc::InsufficientUnitPrecision: return "InsufficientUnitPrecision";
    case Errc::PrecisionExceeded: return "PrecisionExceeded";
    case Errc::RecurrenceMismatch: return "RecurrenceMismatch";
    case Errc::NotStabilized: return "NotStabilized";
    case Errc::ContentNotUnit: return "ContentNotUnit";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::CheckFailed: return "CheckFailed";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ull << 32)) fail(Errc::InvalidArgument, "prime modulus must be < 2^32");
  if (!is_prime(p)) fail(Errc::InvalidArgument, "modulus " + std::to_string(p) + " is not prime");
  return FieldSpec{Kind::Prime, p};
}

std::string FieldSpec::str() const {
  return kind == Kind::Rational ? "Q" : "Fp:" + std::to_string(p);
}

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "Q") return rational();
  if (s.rfind("Fp:", 0) == 0) {
    std::size_t pos = 0;
    unsigned long long p = 0;
    try {
      p = std::stoull(s.substr(3), &pos);
    } catch (const std::exception&) {
      fail(Errc::SchemaError, "bad field descriptor '" + s + "'");
    }
    if (pos != s.size() - 3) fail(Errc::SchemaError, "bad field descriptor '" + s + "'");
    return prime(p);
  }
  fail(Errc::SchemaError, "unknown field '" + s + "' (expected \"Q\" or \"Fp:<p>\")");
}

FieldElement FieldElement::zero(const FieldSpec& f) {
  return f.kind == FieldSpec::Kind::Rational ? FieldElement(mpq_class(0))
                                             : FieldElement(Mod{0, f.p});
}

FieldElement FieldElement::one(const FieldSpec& f) {
  return f.kind == FieldSpec::Kind::Rational ? FieldElement(mpq_class(1))
                                             : FieldElement(Mod{f.p == 1 ? 0 : 1, f.p});
}

FieldElement FieldElement::from_integer(const FieldSpec& f, const mpz_class& n) {
  if (f.kind == FieldSpec::Kind::Rational) return FieldElement(mpq_class(n));
  mpz_class r = n % mpz_class(static_cast<unsigned long>(f.p));
  if (r < 0) r += static_cast<unsigned long>(f.p);
  return FieldElement(Mod{r.get_ui(), f.p});
}

FieldElement FieldElement::from_fraction(const FieldSpec& f, const mpz_class& num,
                                         const mpz_class& den) {
  if (den == 0) fail(Errc::InvalidArgument, "zero denominator");
  if (f.kind == FieldSpec::Kind::Rational) {
    mpq_class q(num, den);
    q.canonicalize();
    return FieldElement(std::move(q));
  }
  FieldElement d = from_integer(f, den);
  if (d.is_zero()) fail(Errc::InvalidArgument, "denominator vanishes mod " + std::to_string(f.p));
  return from_integer(f, num) * d.inverse();
}

FieldElement FieldElement::rational(mpq_class q) {
  q.canonicalize();
  return FieldElement(std::move(q));
}

FieldElement FieldElement::modular(std::uint64_t value, std::uint64_t p) {
  FieldSpec f = FieldSpec::prime(p);
  return FieldElement(Mod{value % f.p, f.p});
}

FieldSpec FieldElement::field() const {
  if (is_rational()) return FieldSpec::rational();
  return FieldSpec{FieldSpec::Kind::Prime, mod().prime};
}

bool FieldElement::is_zero() const {
  return is_rational() ? rat() == 0 : mod().value == 0;
}

bool FieldElement::is_one() const {
  return is_rational() ? rat() == 1 : mod().value == 1;
}

const mpq_class& FieldElement::rat() const {
  if (!is_rational()) fail(Errc::FieldMismatch, "not a rational element");
  return std::get<mpq_class>(v_);
}

std::uint64_t FieldElement::residue() const {
  if (is_rational()) fail(Errc::FieldMismatch, "not a prime-field element");
  return mod().value;
}

void FieldElement::check_same(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field())
    fail(Errc::FieldMismatch, "mixed fields " + a.field().str() + " and " + b.field().str());
}

FieldElement FieldElement::operator-() const {
  if (is_rational()) return FieldElement(mpq_class(-rat()));
  const Mod& m = mod();
  return FieldElement(Mod{m.value == 0 ? 0 : m.prime - m.value, m.prime});
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(Errc::InvalidArgument, "inverse of zero");
  if (is_rational()) return FieldElement(mpq_class(1 / rat()));
  const Mod& m = mod();
  return FieldElement(Mod{mod_inv(m.value, m.prime), m.prime});
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement::check_same(a, b);
  if (a.is_rational()) return FieldElement(mpq_class(a.rat() + b.rat()));
  const auto& ma = a.mod();
  std::uint64_t s = ma.value + b.mod().value;
  if (s >= ma.prime) s -= ma.prime;
  return FieldElement(FieldElement::Mod{s, ma.prime});
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement::check_same(a, b);
  if (a.is_rational()) return FieldElement(mpq_class(a.rat() * b.rat()));
  const auto& ma = a.mod();
  return FieldElement(FieldElement::Mod{mod_mul(ma.value, b.mod().value, ma.prime), ma.prime});
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool FieldElement::operator==(const FieldElement& o) const {
  if (is_rational() != o.is_rational()) return false;
  if (is_rational()) return rat() == o.rat();
  return mod() == o.mod();
}

std::string FieldElement::str() const {
  if (!is_rational()) return std::to_string(mod().value);
  const mpq_class& q = rat();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace dmkit
