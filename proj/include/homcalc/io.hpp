#ifndef HOMCALC_IO_HPP
#define HOMCALC_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <homcalc/algebroid.hpp>
#include <homcalc/cochain.hpp>
#include <homcalc/homlie.hpp>
#include <homcalc/report.hpp>

namespace homcalc
{

// Every reader throws ParseError; the message names the JSON path of the
// offending value, and position() is the offset inside that value's text
// (or the byte offset for malformed JSON).

Json parse_json_text(std::string_view text);
Json read_json_file(const std::string &path);
/// Two-space indented, trailing newline. Key order is sorted, so output is
/// deterministic.
std::string dump_json(const Json &j);

/// {"base": {"vars", "phi"}, "rank", "alpha", "anchor", "bracket", "variant"}
HomAlgebroid algebroid_from_json(const Json &j);
Json algebroid_to_json(const HomAlgebroid &ab);

/// {"dim", "c", "alpha"}
HomLieAlgebra homlie_from_json(const Json &j);
Json homlie_to_json(const HomLieAlgebra &g);
/// The Hom-Lie fields plus {"dimV", "rho", "beta"}.
Representation representation_from_json(const Json &j);
Json representation_to_json(const Representation &r);

enum class InstanceKind { algebroid, homlie, representation };
/// algebroid if "base" is present, representation if "dimV" is, else homlie.
InstanceKind detect_kind(const Json &j);

/// {"kind": "basis", "k", "twist", "components": {"1,2": "x"}} (1-based
/// indices) or {"kind": "function", "poly"}.
Cochain cochain_from_json(const Json &j, const BaseGeometry &base);

/// "[e1, x*e2 - (y + 1)*e1]": polynomials in the base variables and e1..er,
/// linear in the e's. Brackets are optional.
std::vector<Section> parse_sections(std::string_view text, const HomAlgebroid &ab);

} // namespace homcalc

#endif
