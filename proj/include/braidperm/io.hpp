#pragma once

#include "json.hpp"

#include "braidperm/census.hpp"
#include "braidperm/cohomology.hpp"
#include "braidperm/commutator.hpp"

namespace braidperm {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// {"k", "n", "sigma": [[1-indexed images]...], "cycles": ["(1,2)", ...]}
Json hom_to_json(const BraidHom& h);
// Accepts either "sigma" image arrays or "cycles" strings, bare or wrapped
// in a census record or a "hom" object.
BraidHom hom_from_json(const Json& j);

Json perm_to_json(const Permutation& p);
Json classification_to_json(const HomClassification& c);
// {"representative", "flags", "class_size", "seeds"}
Json record_to_json(const CensusRecord& r);
Json bprime_to_json(const BPrimeHom& h);
Json bprime_record_to_json(const BPrimeRecord& r);
Json cochain_to_json(const Cochain& z);
Json invariants_to_json(const AbelianInvariants& inv);

}  // namespace braidperm
