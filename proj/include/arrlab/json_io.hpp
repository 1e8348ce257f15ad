#pragma once

#include <string>

#include <json.hpp>

#include "arrlab/constructor.hpp"
#include "arrlab/geometry.hpp"
#include "arrlab/graphs.hpp"
#include "arrlab/lattice.hpp"
#include "arrlab/presentations.hpp"

namespace arrlab {

using Json = nlohmann::ordered_json;

Json arrangement_to_json(const Arrangement& a);
Json multiple_points_to_json(const std::vector<MultiplePoint>& pts);
Json lattice_to_json(const IntersectionLattice& l);
Json fan_to_json(const FanGraph& f);
Json jy_to_json(const JYGraph& g);
Json forest_to_json(const ForestCertificate& c);
Json presentation_to_json(const Presentation& p);
Json transcript_to_json(const Transcript& t);
Transcript transcript_from_json(const Json& j, const Presentation& context);
Json normalize_to_json(const NormalizeResult& r);
Json compare_to_json(const CompareResult& r);
Json plan_to_json(const BuildPlan& p);

std::string fan_to_graphviz(const FanGraph& f);
std::string jy_to_graphviz(const JYGraph& g);

}  // namespace arrlab
