#pragma once

#include <optional>
#include <vector>

#include "coordmech/instance.hpp"

namespace coordmech {

inline constexpr long long kDefaultStateCap = 10'000'000;

struct OptResult {
    Assignment assignment;  // lexicographically least among the optima
    Rat cost;               // SmithRule cost, the weighted completion optimum
};

/// Exhaustive optimum: enumerates every feasible assignment and scores it
/// with SmithRule (per-machine optimal, so this is the true optimum of the
/// scheduling problem). Throws when the feasible state count exceeds `cap`.
OptResult brute_force_opt(const Instance& inst, long long cap = kDefaultStateCap);

/// Every pure Nash equilibrium of the game induced by `policy`, in
/// lexicographic order of machine_of. May be empty for SmithRule.
std::vector<Assignment> enumerate_pure_nash(const Instance& inst, PolicyKind policy,
                                            long long cap = kDefaultStateCap);

/// Empirical price-of-anarchy data for one instance: opt is always the
/// SmithRule cost of the best assignment; each Nash is costed under the
/// policy's own completion times.
struct PoAReport {
    Rat opt_cost;
    std::vector<Rat> nash_costs;
    std::optional<Rat> worst_ratio;  // empty when no pure Nash exists
    PolicyKind policy;
    long long enumerated_states = 0;
};

PoAReport poa_report(const Instance& inst, PolicyKind policy, long long cap = kDefaultStateCap);

}  // namespace coordmech
