#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "elemdiff/groups.hpp"
#include "elemdiff/jets.hpp"
#include "elemdiff/labelling.hpp"
#include "elemdiff/multiindex.hpp"
#include "elemdiff/relations.hpp"
#include "elemdiff/trees.hpp"

namespace elemdiff::io {

using Json = nlohmann::ordered_json;

Json toJson(const LabelledTree& tree);
LabelledTree treeFromJson(const Json& j);

Json toJson(const MultiIndex& m);
MultiIndex multiIndexFromJson(const Json& j);

// {d, D, components: [{"a,b": "p/q", ...}, ...]}; exponent keys list one entry per variable.
Json toJson(const Jet& jet);
Jet jetFromJson(const Json& j);
// Either a single jet object or {"jets": [...]} / a bare array.
std::vector<Jet> jetsFromJson(const Json& j);

// {n, terms: [{tree: {...}, coeff: "p/q"}]}
Json toJson(const TreeRelation& r);
TreeRelation relationFromJson(const Json& j);

Json toJson(const RankCertificate& c);
Json toJson(const DimensionResult& r);
Json toJson(const CertifyResult& r);
Json toJson(const LabelledObject& o);
Json toJson(const BlockBasis& b);
Json toJson(const SubgroupClass& g);
Json toJson(const ScanReport& report);

/// Header row of class representatives, one row per character.
std::string characterCsv(const std::vector<CharacterRow>& rows);

Json readJsonFile(const std::string& path);

}  // namespace elemdiff::io
