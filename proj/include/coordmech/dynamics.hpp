#pragma once

#include <stdexcept>
#include <vector>

#include "coordmech/instance.hpp"

namespace coordmech {

/// Requested for a policy without a potential function (SmithRule: the
/// induced games may have no pure Nash equilibrium at all).
struct NoPotentialError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exact potential of an assignment:
///   PS:     1/2 C^PS + 1/2 lambda
///   Rand:   1/2 C^R  + 1/2 lambda
///   Approx: 1/2 C^A  +     lambda
/// Throws NoPotentialError for SmithRule.
Rat potential(const Instance& inst, const Assignment& asg, PolicyKind policy);

struct BestResponse {
    int machine = -1;
    Rat weighted_cost;  // w_j * c_j after the move
};

/// Cheapest feasible machine for one job given everyone else fixed.
/// Ties break toward the current machine, then the lowest machine index.
BestResponse best_response(const Instance& inst, const Assignment& asg, int job,
                           PolicyKind policy);

struct NashVerdict {
    bool is_nash = false;
    // One strictly improving move when is_nash is false.
    int witness_job = -1;
    int witness_machine = -1;
};

/// Non-strict Nash check: no job has a strictly cheaper feasible machine.
NashVerdict is_nash(const Instance& inst, const Assignment& asg, PolicyKind policy);

/// Total best-response regret Delta(x) = sum_j (w_j c_j(x) - w_j c_j(x_{-j}, br_j)).
/// Zero exactly at Nash assignments.
Rat delta_gap(const Instance& inst, const Assignment& asg, PolicyKind policy);

struct DynamicsConfig {
    Rat alpha;             // relative improvement threshold, in (0, epsilon)
    Rat epsilon;           // in (0, 1/8)
    long long max_steps = 1000000;
    PolicyKind policy = PolicyKind::ProportionalSharing;
};

void validate_config(const DynamicsConfig& config);

struct DynamicsStep {
    int job;
    int from_machine;
    int to_machine;
    Rat cost_before, cost_after;            // weighted cost of the mover
    Rat potential_before, potential_after;  // drops by exactly the cost drop
};

struct DynamicsTrace {
    std::vector<DynamicsStep> steps;
    Assignment final_assignment;
    bool converged = false;
};

/// Best-response dynamics: while some job can move to a machine costing at
/// most (1 - alpha) times its current weighted cost, move the one with the
/// largest absolute improvement (ties by lowest job id) to its best
/// response. Stops at convergence or after max_steps.
DynamicsTrace basic_dynamics(const Instance& inst, const DynamicsConfig& config,
                             const Assignment& start);

struct ApproxResult {
    Assignment assignment;
    Rat smith_cost;  // the emitted schedule applies SmithRule, not Approx
    DynamicsTrace trace;
};

/// Combinatorial approximation for weighted completion time: run basic
/// dynamics under the Approx policy with alpha = epsilon / 2, then cost the
/// final assignment under SmithRule. At convergence the result is within
/// 2 / (1 - 4 alpha / 3) of the optimum.
ApproxResult approx_schedule(const Instance& inst, const Rat& epsilon, const Assignment& start,
                             long long max_steps = 1000000);

}  // namespace coordmech
