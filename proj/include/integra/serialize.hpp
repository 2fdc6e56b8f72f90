#pragma once
// JSON encoding of every value type. Output is canonical: sorted keys, two
// space indentation, trailing newline.
//
// Rings      {"ring":"Z"} {"ring":"Zmod","m":8} {"ring":"Q"}
//            {"ring":"Poly","base":R,"var":"Y"} {"ring":"QuotMonic","base":R,"mod":[..],"var":"X"}
// Elements   Z, Z/m: integer (decimal string beyond 64 bits); Q: integer or [num, den];
//            univariate: lowest-first coefficient array, [] for zero.
// Bindings   {"var": value-in-algebra} or {"var": {"ring":R,"value":v}}.
#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "integra/lombardi.hpp"
#include "integra/matrix.hpp"

namespace integra {

using Json = nlohmann::json;

Json to_json(const Ring& r);
Json to_json(const Element& e);
Json to_json(const Ideal& i);
Json to_json(const Semifiltration& s);
Json to_json(const Matrix& m);
Json to_json(const RingCertificate& c);
Json to_json(const SemifilCertificate& c);
Json to_json(const ReesCertificate& c);
Json to_json(const Relation& r);
Json to_json(const TwoSidedData& d);
Json to_json(const InverseLikeData& d);
Json to_json(const ModulePresentation& mp);
Json to_json(const MembershipWitness& w, const WitnessContext& ctx);

// Parsers throw ParseError naming the offending field.
Ring ring_from_json(const Json& j);
Element element_from_json(const Json& j, const Ring& ring);
Ideal ideal_from_json(const Json& j);
Semifiltration semifiltration_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
RingCertificate certificate_from_json(const Json& j);
/// Requires the "semifiltration" field.
SemifilCertificate semifil_certificate_from_json(const Json& j);
ReesCertificate rees_certificate_from_json(const Json& j);
Relation relation_from_json(const Json& j);
TwoSidedData two_sided_from_json(const Json& j);
InverseLikeData inverse_like_from_json(const Json& j);
ModulePresentation module_from_json(const Json& j);
std::pair<MembershipWitness, WitnessContext> witness_from_json(const Json& j);

std::string dump(const Json& j);
/// `source` names the text in diagnostics.
Json parse_json(std::string_view text, std::string_view source = "<input>");
Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

}  // namespace integra
