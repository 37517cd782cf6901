#pragma once

#include <string>

#include <json.hpp>

#include "perind/model6.hpp"
#include "perind/periodindex.hpp"

namespace perind {

// Model document, schema_version "1". Matrices are row-major lists; T is the
// list of nonzero symmetry-orbit triples; v2 is a bit list over the W basis.
struct ModelFile {
    std::string name;  // optional metadata
    SixManifoldModel manifold;
};

nlohmann::json model_to_json(const ModelFile& f);
ModelFile model_from_json(const nlohmann::json& j);  // throws MalformedInput

nlohmann::json report_entry_to_json(const BrauerClassReport& r);
nlohmann::json report_to_json(const Model& m, const std::vector<BrauerClassReport>& reports);

}  // namespace perind
