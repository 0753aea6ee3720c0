#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "nck/freealg.hpp"
#include "nck/ncdgq.hpp"
#include "nck/ncvirt.hpp"
#include "nck/quiver.hpp"

// JSON (de)serialization for every public value type. Emission is
// deterministic: map iteration orders are canonical and integer coefficients
// are emitted as JSON numbers when they fit in 64 bits, decimal strings
// otherwise; parsers accept both forms. All malformed input surfaces as
// SchemaError.
namespace nck::io {

using json = nlohmann::json;

json to_json(const Character& a);
json to_json(const SuperChar& g);
json to_json(const RationalCharacter& r);
json to_json(const Partition& p);
json to_json(const ObstructionTheory& ot);
json to_json(const GradedGenSet& gens);
json to_json(const FreeAlgebraElement& x, const GradedGenSet& gens);
json to_json(const FiltrationReport& r);
json to_json(const NcdgData& d);
json to_json(const GradedAlgebraPresentation& a);
json to_json(const Quiver& qv);
json to_json(const Rep& rep);
json qsq_verdict_to_json(const QsqVerdict& v, const GradedGenSet& letters);

Character character_from_json(const json& j);
SuperChar superchar_from_json(const json& j);
RationalCharacter rational_character_from_json(const json& j);
Partition partition_from_json(const json& j);
ObstructionTheory obstruction_from_json(const json& j);
GradedGenSet genset_from_json(const json& j);
FreeAlgebraElement element_from_json(const json& j, const GradedGenSet& gens);
FiltrationReport filtration_from_json(const json& j);
NcdgData ncdg_from_json(const json& j);
GradedAlgebraPresentation presentation_from_json(const json& j);
Quiver quiver_from_json(const json& j);
Rep rep_from_json(const json& j);

json parse_text(const std::string& text);
json parse_file(const std::string& path);

} // namespace nck::io
