#pragma once

#include <vector>

#include "coordmech/instance.hpp"
#include "json.hpp"

namespace coordmech {

/// Priority-routing image of an unweighted scheduling instance. Machine i
/// becomes a path P_i of Q unit arcs with cost slope 1/Q toward a common
/// sink; job j enters P_i through a constant-cost connector (cost p_ij / 2)
/// at the node leaving exactly a p_ij fraction of the path ahead. Arc
/// priorities run shortest-first, ties by job id.
///
/// The path is kept implicit: a player's entry point is the offset
/// 1 - p_ij in [0, 1), and arc payments telescope into exact trapezoid
/// sums over offset intervals, so Q never has to be materialized.
struct RoutingInstance {
    Instance scaled;     // processing times divided by `scale`, all <= 1
    Rat scale;           // max finite processing time of the source instance
    mpz_class subdivisions;  // Q: least common multiple of scaled denominators
};

struct RoutingChoice {
    std::vector<int> path_of;  // chosen machine path per player
};

/// Build the routing image. Rejects weighted instances.
RoutingInstance to_priority_routing(const Instance& inst);

/// Exact per-player payments for one choice of paths, in the scaled units
/// of `routing.scaled`.
std::vector<Rat> routing_costs(const RoutingInstance& routing, const RoutingChoice& choice);

/// True when every player's payment in the routing image equals its
/// ShortestFirst completion time in the scheduling instance, exactly.
bool equivalence_check(const Instance& inst, const Assignment& asg);

/// Interop export: scale, Q, per-machine path description, connectors with
/// their offsets and constant costs.
nlohmann::json routing_to_json(const RoutingInstance& routing);

}  // namespace coordmech
