#include "dmkit/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>

namespace dmkit {

namespace {

bool identifier_shaped(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

std::string order_name(MonomialOrder o) {
  return o == MonomialOrder::Grevlex ? "grevlex" : "lex";
}

MonomialOrder parse_order(const std::string& s) {
  if (s == "grevlex") return MonomialOrder::Grevlex;
  if (s == "lex") return MonomialOrder::Lex;
  fail(Errc::SchemaError, "unknown monomial order '" + s + "'");
}

RingSpec::RingSpec(std::vector<std::string> vars, FieldSpec field, MonomialOrder order,
                   std::string series_var)
    : vars_(std::move(vars)), field_(field), order_(order), series_var_(std::move(series_var)) {
  std::unordered_set<std::string> seen;
  for (const auto& v : vars_) {
    if (!identifier_shaped(v)) fail(Errc::InvalidArgument, "bad variable name '" + v + "'");
    if (!seen.insert(v).second) fail(Errc::InvalidArgument, "duplicate variable '" + v + "'");
    if (v == series_var_)
      fail(Errc::InvalidArgument,
           "series variable '" + series_var_ + "' may not be a ring variable");
  }
  if (!identifier_shaped(series_var_))
    fail(Errc::InvalidArgument, "bad series variable name '" + series_var_ + "'");
}

std::optional<std::size_t> RingSpec::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

bool RingSpec::operator==(const RingSpec& o) const {
  return vars_ == o.vars_ && field_ == o.field_ && order_ == o.order_ &&
         series_var_ == o.series_var_;
}

std::string RingSpec::str() const {
  std::string s = field_.str() + "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ",";
    s += vars_[i];
  }
  return s + "] " + order_name(order_);
}

RingPtr make_ring(std::vector<std::string> vars, FieldSpec field, MonomialOrder order,
                  std::string series_var) {
  return std::make_shared<const RingSpec>(std::move(vars), field, order, std::move(series_var));
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b))
    fail(Errc::RingMismatch, "ring mismatch: " + a->str() + " vs " + b->str());
}

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  r.degree_ += o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
  r.degree_ -= o.degree_;
  return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && o.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.arity());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

int Monomial::cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::Lex) {
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
      if (a.exps_[i] != b.exps_[i]) return a.exps_[i] < b.exps_[i] ? -1 : 1;
    }
    return 0;
  }
  // grevlex: total degree first, ties broken by the last nonzero entry of
  // the exponent difference (smaller there means greater).
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
  for (std::size_t i = a.exps_.size(); i-- > 0;) {
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] > b.exps_[i] ? -1 : 1;
  }
  return 0;
}

RationalPoint::RationalPoint(RingPtr ring, std::vector<FieldElement> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {
  if (coords_.size() != ring_->arity())
    fail(Errc::InvalidArgument, "point arity " + std::to_string(coords_.size()) +
                                    " does not match ring arity " +
                                    std::to_string(ring_->arity()));
  for (const auto& c : coords_)
    if (c.field() != ring_->field())
      fail(Errc::FieldMismatch, "point coordinate not in " + ring_->field().str());
}

RationalPoint RationalPoint::origin(const RingPtr& ring) {
  std::vector<FieldElement> cs(ring->arity(), FieldElement::zero(ring->field()));
  return RationalPoint(ring, std::move(cs));
}

bool RationalPoint::is_origin() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const FieldElement& c) { return c.is_zero(); });
}

RationalPoint RationalPoint::negated() const {
  std::vector<FieldElement> cs;
  cs.reserve(coords_.size());
  for (const auto& c : coords_) cs.push_back(-c);
  return RationalPoint(ring_, std::move(cs));
}

std::string RationalPoint::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].str();
  }
  return s + ")";
}

}  // namespace dmkit
