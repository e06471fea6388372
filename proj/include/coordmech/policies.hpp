#pragma once

#include <cstdint>
#include <vector>

#include "coordmech/instance.hpp"

namespace coordmech {

/// Closed-form per-job completion times of an assignment under one policy.
///
/// SmithRule runs each machine's jobs in ascending rho (ties by job id);
/// ProportionalSharing time-multiplexes by weight; Rand orders jobs randomly
/// with Pr[j before k] = rho_k / (rho_j + rho_k) and reports the exact
/// expectation; Approx charges the ProportionalSharing completion plus the
/// job's own processing time.
CostReport policy_completion(const Instance& inst, const Assignment& asg, PolicyKind policy);

/// Weighted cost w_j * c_j(x_{-j}, target) of job `query.job` if it ran on
/// `query.target_machine` while everything else stays put. With the target
/// equal to the job's current machine this is its term in policy_completion.
Rat deviation_cost(const Instance& inst, const Assignment& asg, const DeviationQuery& query,
                   PolicyKind policy);

/// Same computation against a precomputed jobs_by_machine grouping, so that
/// sweeps over many deviations avoid rescanning every job each time. The
/// mover may appear in the target's occupant list; it is skipped.
Rat deviation_cost(const Instance& inst, const std::vector<std::vector<int>>& grouped,
                   const DeviationQuery& query, PolicyKind policy);

/// Pr[job with ratio rho_j precedes job with ratio rho_k] = rho_k/(rho_j+rho_k).
/// Both ratios zero is defined as 1/2.
Rat rand_precedence_prob(const Rat& rho_j, const Rat& rho_k);

/// One sample of the Rand ordering on a machine: repeatedly pick a job with
/// probability proportional to its rho, schedule it last, remove, repeat.
/// Deterministic in the seed.
std::vector<int> rand_sample_order(const Instance& inst, int machine,
                                   const std::vector<int>& jobset, std::uint64_t seed);

/// Event-driven fluid oracle for ProportionalSharing: between completions
/// each live job k is served at rate w_k / (total live weight). Returns the
/// exact completion times, parallel to `jobset`.
std::vector<Rat> fluid_simulate_ps(const Instance& inst, int machine,
                                   const std::vector<int>& jobset);

/// Exhaustive oracle for Rand: enumerates every ordering with its chain
/// probability and returns exact expected completion times, parallel to
/// `jobset`. Requires |jobset| <= 9.
std::vector<Rat> rand_exhaustive_expectation(const Instance& inst, int machine,
                                             const std::vector<int>& jobset);

}  // namespace coordmech
