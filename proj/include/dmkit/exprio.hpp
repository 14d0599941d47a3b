#ifndef DMKIT_EXPRIO_HPP
#define DMKIT_EXPRIO_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <string_view>

#include "dmkit/report.hpp"
#include "dmkit/series.hpp"

namespace dmkit {

/// Parses the polynomial grammar
///   expr   := sign? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := ident | number | '(' expr ')'
///   number := integer ('/' integer)?
/// over the ring's variables. Implicit multiplication is not allowed.
/// Syntax errors carry "line:column:" positions.
Polynomial parse_poly(std::string_view src, const RingPtr& ring);

/// Canonical text form; parse_poly(print_poly(p)) == p.
std::string print_poly(const Polynomial& p);

/// "(g1, g2, ...)"; the zero ideal prints as "(0)".
std::string print_ideal_generators(const Ideal& I);

/// FNV-1a fingerprint of the reduced Groebner basis (equal ideals of the
/// same ring always agree).
std::string gb_fingerprint(const Ideal& I);
/// Fingerprint of a raw generator list (no basis computation).
std::string generators_fingerprint(const Ideal& I);

/// Same grammar with the ring's series variable admitted as an extra
/// identifier; the result is an exactly known polynomial series.
UnitTailSeries parse_series_text(std::string_view src, const RingPtr& ring,
                                 unsigned precision = 16);

nlohmann::json ring_to_json(const RingSpec& ring);
RingPtr ring_from_json(const nlohmann::json& j, const std::string& path = "ring");

/// SeriesDoc loader:
///   {"ring": {"vars": [...], "field": "Q"|"Fp:<p>", "order": "grevlex"|"lex"},
///    "precision": d,
///    "terms": [{"a": <poly>, "j": <nat>, "unit": "one"|"geom"|{"coeffs": [<poly>, ...]}}]}
/// Schema violations report the offending field path.
UnitTailSeries load_series(const nlohmann::json& doc);
UnitTailSeries load_series_string(const std::string& text);

/// Report serialization, schema "dm-report/1".
nlohmann::json report_to_json(const DMReport& r);
std::string dump_report(const DMReport& r);
DMReport load_report(const std::string& json_text);

}  // namespace dmkit

#endif
