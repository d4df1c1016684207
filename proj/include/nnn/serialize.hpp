#pragma once

#include <string>

#include "json.hpp"
#include "nnn/aut_engine.hpp"
#include "nnn/cayley.hpp"
#include "nnn/classifier.hpp"
#include "nnn/sweep.hpp"
#include "nnn/verify.hpp"

namespace nnn {

// Insertion-ordered so records print with a fixed field order.
using Json = nlohmann::ordered_json;

Json to_json(const Perm& p);
Perm perm_from_json(const Json& j);

Json to_json(const PermGroup& g);  // {"degree", "generators"}
PermGroup perm_group_from_json(const Json& j);

Json to_json(const GroupSpec& g);  // {"family", "n"}
GroupSpec group_from_json(const Json& j);

Json to_json(const ElemSet& s);  // sorted codes
ElemSet elem_set_from_json(const GroupSpec& g, const Json& j);

/// {"r"} for cyclic groups, {"r", "s"} for dihedral ones; the four
/// automorphisms of D_4 without that form serialize as {"map": [...]}.
Json to_json(const GroupAut& a);
GroupAut group_aut_from_json(const GroupSpec& g, const Json& j);

Json to_json(const CayleyDigraph& c);  // {"group", "set"}
CayleyDigraph digraph_from_json(const Json& j);

/// An integer when it fits in 53 bits, otherwise a decimal string.
Json count_to_json(const BigCount& c);
BigCount count_from_json(const Json& j);

Json to_json(const AutResult& a);  // {"order", "generators"}

Json to_json(const Classification& c);
Classification classification_from_json(const Json& j);

Json to_json(const SweepSummary& s, const GroupSpec& g);
Json to_json(const NonNormalityCertificate& c, const GroupSpec& g);
Json to_json(const WitnessReport& w);
Json to_json(const GroupCheck& c);
Json to_json(const VerifyReport& r);

/// Compact one-line form used for JSON-lines output.
std::string dump_line(const Json& j);

}  // namespace nnn
