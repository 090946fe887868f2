#pragma once

#include <string>

#include "json.hpp"
#include "mgt/center.hpp"
#include "mgt/clifford.hpp"
#include "mgt/cohomology.hpp"
#include "mgt/orthogonal.hpp"
#include "mgt/subgroups.hpp"

namespace mgt {

using Json = nlohmann::json;

Json to_json(const RootOfUnity& x);
RootOfUnity root_from_json(const Json& j);

Json to_json(const FiniteAbelianGroup& g);
FiniteAbelianGroup group_from_json(const Json& j);

Json to_json(const QuadraticForm& q);
QuadraticForm form_from_json(const Json& j);

Json to_json(const Homomorphism& f);
Homomorphism hom_from_json(const Json& j);

Json to_json(const Cochain& c);
Cochain cochain_from_json(const Json& j);

Json to_json(const Subgroup& s);
Json to_json(const Polarization& p);
Json to_json(const CohomologyGroup& h);
Json to_json(const AbelianThreeCocycle& x);
Json to_json(const CenterClassification& c);
Json to_json(const SpinReport& r);
Json to_json(const SpinorModuleReport& r);
Json to_json(const TorsorReport& r);
Json to_json(const EmReport& r);
Json to_json(const SplitCheckReport& r);

// "ev:<spec>" | "split:<n>,<p>" | "trivial:<spec>" | "file:<path>" (a JSON
// form file) -> quadratic form; metric-group callers check nondegeneracy.
QuadraticForm parse_form_spec(const std::string& spec);

}  // namespace mgt
