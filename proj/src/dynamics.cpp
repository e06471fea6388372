#include "coordmech/dynamics.hpp"

#include "coordmech/policies.hpp"

namespace coordmech {

Rat potential(const Instance& inst, const Assignment& asg, PolicyKind policy) {
    const Rat half = make_rat(1, 2);
    switch (policy) {
        case PolicyKind::SmithRule:
            throw NoPotentialError("SmithRule induces no potential function");
        case PolicyKind::ProportionalSharing:
        case PolicyKind::Rand: {
            const CostReport report = policy_completion(inst, asg, policy);
            return half * report.weighted_total + half * report.lambda_term;
        }
        case PolicyKind::Approx: {
            const CostReport report = policy_completion(inst, asg, policy);
            return half * report.weighted_total + report.lambda_term;
        }
    }
    throw std::logic_error("potential: unknown policy");
}

namespace {

BestResponse best_response_grouped(const Instance& inst,
                                   const std::vector<std::vector<int>>& grouped,
                                   const Assignment& asg, int job, PolicyKind policy) {
    const int current = asg.machine_of[static_cast<size_t>(job)];
    BestResponse best;
    best.machine = current;
    best.weighted_cost = deviation_cost(inst, grouped, DeviationQuery{job, current}, policy);
    for (const ProcEntry& e : inst.feasible[static_cast<size_t>(job)]) {
        if (e.machine == current) continue;
        const Rat cost = deviation_cost(inst, grouped, DeviationQuery{job, e.machine}, policy);
        if (cost < best.weighted_cost) {
            best.machine = e.machine;
            best.weighted_cost = cost;
        }
    }
    return best;
}

}  // namespace

BestResponse best_response(const Instance& inst, const Assignment& asg, int job,
                           PolicyKind policy) {
    if (job < 0 || job >= inst.num_jobs) {
        throw std::invalid_argument("best_response: bad job index");
    }
    return best_response_grouped(inst, jobs_by_machine(inst, asg), asg, job, policy);
}

NashVerdict is_nash(const Instance& inst, const Assignment& asg, PolicyKind policy) {
    check_feasible(inst, asg);
    const auto grouped = jobs_by_machine(inst, asg);
    for (int j = 0; j < inst.num_jobs; ++j) {
        const int current = asg.machine_of[static_cast<size_t>(j)];
        const Rat own = deviation_cost(inst, grouped, DeviationQuery{j, current}, policy);
        for (const ProcEntry& e : inst.feasible[static_cast<size_t>(j)]) {
            if (e.machine == current) continue;
            if (deviation_cost(inst, grouped, DeviationQuery{j, e.machine}, policy) < own) {
                return NashVerdict{false, j, e.machine};
            }
        }
    }
    return NashVerdict{true, -1, -1};
}

Rat delta_gap(const Instance& inst, const Assignment& asg, PolicyKind policy) {
    check_feasible(inst, asg);
    const auto grouped = jobs_by_machine(inst, asg);
    Rat gap = 0;
    for (int j = 0; j < inst.num_jobs; ++j) {
        const int current = asg.machine_of[static_cast<size_t>(j)];
        const Rat own = deviation_cost(inst, grouped, DeviationQuery{j, current}, policy);
        gap += own - best_response_grouped(inst, grouped, asg, j, policy).weighted_cost;
    }
    return gap;
}

void validate_config(const DynamicsConfig& config) {
    if (!(config.alpha > 0 && config.alpha < config.epsilon &&
          config.epsilon < make_rat(1, 8))) {
        throw std::invalid_argument("dynamics config requires 0 < alpha < epsilon < 1/8");
    }
    if (config.max_steps < 0) {
        throw std::invalid_argument("dynamics config requires max_steps >= 0");
    }
}

DynamicsTrace basic_dynamics(const Instance& inst, const DynamicsConfig& config,
                             const Assignment& start) {
    validate_config(config);
    if (config.policy == PolicyKind::SmithRule) {
        throw NoPotentialError("basic dynamics requires a policy with a potential");
    }
    check_feasible(inst, start);

    DynamicsTrace trace;
    Assignment asg = start;
    Rat phi = potential(inst, asg, config.policy);
    const Rat keep_factor = 1 - config.alpha;

    for (long long step = 0; step < config.max_steps; ++step) {
        const auto grouped = jobs_by_machine(inst, asg);
        int mover = -1;
        BestResponse mover_best;
        Rat mover_cost, mover_gain;
        for (int j = 0; j < inst.num_jobs; ++j) {
            const int current = asg.machine_of[static_cast<size_t>(j)];
            const Rat own =
                deviation_cost(inst, grouped, DeviationQuery{j, current}, config.policy);
            const BestResponse br = best_response_grouped(inst, grouped, asg, j, config.policy);
            if (br.machine == current) continue;
            if (br.weighted_cost > keep_factor * own) continue;  // not an alpha-improvement
            const Rat gain = own - br.weighted_cost;
            const bool wins =
                mover < 0 || gain > mover_gain ||
                (gain == mover_gain && inst.job_id[static_cast<size_t>(j)] <
                                           inst.job_id[static_cast<size_t>(mover)]);
            if (wins) {
                mover = j;
                mover_best = br;
                mover_cost = own;
                mover_gain = gain;
            }
        }
        if (mover < 0) {
            trace.converged = true;
            break;
        }

        DynamicsStep record;
        record.job = mover;
        record.from_machine = asg.machine_of[static_cast<size_t>(mover)];
        record.to_machine = mover_best.machine;
        record.cost_before = mover_cost;
        record.cost_after = mover_best.weighted_cost;
        record.potential_before = phi;
        asg.machine_of[static_cast<size_t>(mover)] = mover_best.machine;
        phi = potential(inst, asg, config.policy);
        record.potential_after = phi;
        trace.steps.push_back(std::move(record));
    }

    // A false flag here means max_steps ran out; callers treat that as a
    // reported condition, not an error.
    trace.final_assignment = std::move(asg);
    return trace;
}

ApproxResult approx_schedule(const Instance& inst, const Rat& epsilon, const Assignment& start,
                             long long max_steps) {
    if (!(epsilon > 0 && epsilon < make_rat(1, 8))) {
        throw std::invalid_argument("approx_schedule requires 0 < epsilon < 1/8");
    }
    DynamicsConfig config;
    config.alpha = epsilon / 2;
    config.epsilon = epsilon;
    config.max_steps = max_steps;
    config.policy = PolicyKind::Approx;

    ApproxResult result;
    result.trace = basic_dynamics(inst, config, start);
    result.assignment = result.trace.final_assignment;
    result.smith_cost =
        policy_completion(inst, result.assignment, PolicyKind::SmithRule).weighted_total;
    return result;
}

}  // namespace coordmech
