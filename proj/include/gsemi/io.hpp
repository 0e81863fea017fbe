#pragma once

#include <string>

#include <json.hpp>

#include "gsemi/dynkin.hpp"
#include "gsemi/repcat.hpp"

namespace gsemi {

using Json = nlohmann::ordered_json;

// Full gp-module report {m, classes, gsemisimple, one_gorenstein, singularity}.
Json gp_report_json(const BoundQuiverAlgebra& alg);
std::string gp_report_text(const BoundQuiverAlgebra& alg);

Json sn_list_json(const BoundQuiverAlgebra& alg, int n);
Json sequence_json(const BoundQuiverAlgebra& alg, const AlmostSplitSequence& seq);
Json component_json(const BoundQuiverAlgebra& alg, const StableComponent& comp);
Json components_json(const BoundQuiverAlgebra& alg, const std::vector<StableComponent>& comps,
                     int n);
Json dynkin_report_json(const CmReport& report, bool with_roots,
                        const std::vector<std::vector<int>>& roots);
Json stable_rep_json(const BoundQuiverAlgebra& alg, const StableRep& rep);
Json gp_rep_json(const BoundQuiverAlgebra& alg, const GpRep& rep);

std::string component_dot(const BoundQuiverAlgebra& alg, const StableComponent& comp);
std::string components_dot(const BoundQuiverAlgebra& alg,
                           const std::vector<StableComponent>& comps);
std::string relation_quiver_dot(const BoundQuiverAlgebra& alg, const RelationQuiver& rq);

// Rep files. `base_dir` resolves a relative quiver file reference.
StableRep parse_stable_rep(const BoundQuiverAlgebra& alg, const Json& doc,
                           const std::string& base_dir, std::uint32_t p);
GpRep parse_gp_rep(const BoundQuiverAlgebra& alg, const Json& doc, const std::string& base_dir);

Quiver parse_quiver_file(const std::string& path);

}  // namespace gsemi
