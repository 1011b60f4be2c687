#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "crystalkit/multisegment.hpp"
#include "crystalkit/pbw.hpp"
#include "crystalkit/tableau.hpp"

// Document layer: the three element kinds as JSON, plus compact canonical
// text forms used for graph labels and counterexample reports.
//
//   {"kind":"ms","rank":n,"segments":[[start,end,mult],...]}   sorted, mult>=1
//   {"kind":"tab","rank":n,"rows":[[...],...]}
//   {"kind":"pbw","rank":n,"exponents":[a_1,...,a_N]}
//
// parse_document(serialize(d)) == d, and serialization is byte-stable.

namespace crystalkit {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Document = std::variant<Multisegment, Tableau, LusztigDatum>;

Document parse_document(const std::string& text);

nlohmann::ordered_json to_json(const Multisegment& m);
nlohmann::ordered_json to_json(const Tableau& b);
nlohmann::ordered_json to_json(const LusztigDatum& a);
nlohmann::ordered_json to_json(const Document& d);

std::string serialize(const Document& d);

// "[1,1]^2 [2,3]" with multiplicities as carets; the empty multisegment is
// printed as an empty-set sign.
std::string to_text(const Multisegment& m);
// Rows joined by '/', entries by ','.
std::string to_text(const Tableau& b);
// "(a_1,...,a_N)".
std::string to_text(const LusztigDatum& a);

}  // namespace crystalkit
