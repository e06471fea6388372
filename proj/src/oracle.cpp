#include "coordmech/oracle.hpp"

#include <stdexcept>

#include "coordmech/dynamics.hpp"
#include "coordmech/policies.hpp"

namespace coordmech {

namespace {

long long feasible_state_count(const Instance& inst, long long cap) {
    long long states = 1;
    for (const auto& row : inst.feasible) {
        states *= static_cast<long long>(row.size());
        if (states > cap) {
            throw std::runtime_error("state cap exceeded: more than " + std::to_string(cap) +
                                     " feasible assignments");
        }
    }
    return states;
}

// Odometer over each job's feasible machine list, lexicographic in
// machine_of because the lists are sorted by machine index.
template <typename Visit>
void for_each_assignment(const Instance& inst, Visit&& visit) {
    const int n = inst.num_jobs;
    std::vector<size_t> pick(static_cast<size_t>(n), 0);
    Assignment asg;
    asg.machine_of.resize(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        asg.machine_of[static_cast<size_t>(j)] = inst.feasible[static_cast<size_t>(j)][0].machine;
    }
    while (true) {
        visit(const_cast<const Assignment&>(asg));
        int j = n - 1;
        while (j >= 0) {
            auto& row = inst.feasible[static_cast<size_t>(j)];
            if (++pick[static_cast<size_t>(j)] < row.size()) {
                asg.machine_of[static_cast<size_t>(j)] = row[pick[static_cast<size_t>(j)]].machine;
                break;
            }
            pick[static_cast<size_t>(j)] = 0;
            asg.machine_of[static_cast<size_t>(j)] = row[0].machine;
            --j;
        }
        if (j < 0) break;
    }
}

}  // namespace

OptResult brute_force_opt(const Instance& inst, long long cap) {
    feasible_state_count(inst, cap);
    OptResult best;
    bool first = true;
    for_each_assignment(inst, [&](const Assignment& asg) {
        Rat cost = policy_completion(inst, asg, PolicyKind::SmithRule).weighted_total;
        if (first || cost < best.cost) {
            best.assignment = asg;
            best.cost = std::move(cost);
            first = false;
        }
        // enumeration is lexicographic, so the first optimum found is the
        // lexicographically least one
    });
    return best;
}

std::vector<Assignment> enumerate_pure_nash(const Instance& inst, PolicyKind policy,
                                            long long cap) {
    feasible_state_count(inst, cap);
    std::vector<Assignment> equilibria;
    for_each_assignment(inst, [&](const Assignment& asg) {
        if (is_nash(inst, asg, policy).is_nash) equilibria.push_back(asg);
    });
    return equilibria;
}

PoAReport poa_report(const Instance& inst, PolicyKind policy, long long cap) {
    PoAReport report;
    report.policy = policy;
    report.enumerated_states = feasible_state_count(inst, cap);
    report.opt_cost = brute_force_opt(inst, cap).cost;

    for (const Assignment& nash : enumerate_pure_nash(inst, policy, cap)) {
        report.nash_costs.push_back(policy_completion(inst, nash, policy).weighted_total);
    }
    if (!report.nash_costs.empty()) {
        Rat worst = report.nash_costs.front();
        for (const Rat& c : report.nash_costs) {
            if (c > worst) worst = c;
        }
        report.worst_ratio = worst / report.opt_cost;
    }
    return report;
}

}  // namespace coordmech
