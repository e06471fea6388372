#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coordmech/rational.hpp"

namespace coordmech {

/// Scheduling policy run by every machine of the coordination mechanism.
/// ShortestFirst and EqualSharing are not separate variants: they are
/// SmithRule / ProportionalSharing on unit-weight instances.
enum class PolicyKind {
    SmithRule,
    ProportionalSharing,
    Rand,
    Approx,
};

std::string policy_name(PolicyKind policy);
PolicyKind policy_from_name(const std::string& name);

/// One feasible (machine, processing time) cell of a job, with the derived
/// ratio rho = p / w cached at construction.
struct ProcEntry {
    int machine = -1;
    Rat p;
    Rat rho;
};

/// A weighted-job / unrelated-machine instance. Processing times are stored
/// sparsely per job; machines absent from a job's list are forbidden for it.
/// Immutable after construction; build through make_instance*.
struct Instance {
    int num_jobs = 0;
    int num_machines = 0;
    std::vector<Rat> weight;                       // strictly positive
    std::vector<long long> job_id;                 // distinct; lower id = higher priority
    std::vector<std::vector<ProcEntry>> feasible;  // per job, sorted by machine

    bool allowed(int machine, int job) const { return entry(machine, job) != nullptr; }
    const ProcEntry* entry(int machine, int job) const;

    /// Processing time / ratio of a feasible cell. Throws if forbidden.
    const Rat& proc(int machine, int job) const;
    const Rat& rho(int machine, int job) const;

    bool unit_weights() const;
};

/// Dense processing matrix indexed [machine][job]; nullopt marks a
/// forbidden cell.
using ProcMatrix = std::vector<std::vector<std::optional<Rat>>>;

/// Validating constructors. Empty `ids` assigns 0..n-1.
/// Throws std::invalid_argument with a distinct diagnostic per violation:
/// non-positive weight, non-positive processing time, job with no feasible
/// machine, duplicate job id, shape mismatch.
Instance make_instance(std::vector<Rat> weights, const ProcMatrix& proc,
                       std::vector<long long> ids = {});
Instance make_instance_sparse(std::vector<Rat> weights, int num_machines,
                              std::vector<std::vector<std::pair<int, Rat>>> proc_by_job,
                              std::vector<long long> ids = {});

/// Job -> machine map, 0-based.
struct Assignment {
    std::vector<int> machine_of;

    bool operator==(const Assignment& other) const = default;
};

/// Throws std::invalid_argument if some job sits on a forbidden machine.
void check_feasible(const Instance& inst, const Assignment& asg);

/// Jobs grouped by the machine they occupy.
std::vector<std::vector<int>> jobs_by_machine(const Instance& inst, const Assignment& asg);

/// Per-job completion times under some policy together with the weighted
/// social cost and the load term lambda = sum_j w_j p_{x_j j}.
struct CostReport {
    std::vector<Rat> completion;  // expected completion for Rand
    Rat weighted_total;
    Rat lambda_term;
};

/// Load term lambda(x) = sum_j w_j * p_{x_j j}.
Rat lambda_term(const Instance& inst, const Assignment& asg);

/// Smith ordering: ascending rho, ties by ascending job id.
/// True when job a runs strictly before job b on the given machine.
bool smith_before(const Instance& inst, int machine, int job_a, int job_b);

/// A hypothetical unilateral move of one job.
struct DeviationQuery {
    int job = -1;
    int target_machine = -1;
};

/// Instance plus the two reference assignments of a lower-bound family and
/// the ratio the family approaches as its size parameter grows.
struct LowerBoundBundle {
    Instance instance;
    Assignment opt_assignment;
    Assignment nash_assignment;
    Rat target_ratio;
};

}  // namespace coordmech
