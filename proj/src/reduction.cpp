#include "coordmech/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "coordmech/json_io.hpp"
#include "coordmech/policies.hpp"

namespace coordmech {

RoutingInstance to_priority_routing(const Instance& inst) {
    if (!inst.unit_weights()) {
        throw std::invalid_argument("to_priority_routing: instance must be unweighted");
    }
    Rat max_p = 0;
    for (const auto& row : inst.feasible) {
        for (const ProcEntry& e : row) max_p = std::max(max_p, e.p);
    }

    RoutingInstance routing;
    routing.scale = max_p;

    std::vector<std::vector<std::pair<int, Rat>>> scaled(inst.feasible.size());
    mpz_class q = 1;
    for (size_t j = 0; j < inst.feasible.size(); ++j) {
        for (const ProcEntry& e : inst.feasible[j]) {
            Rat p = e.p / max_p;
            mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), p.get_den().get_mpz_t());
            scaled[j].emplace_back(e.machine, std::move(p));
        }
    }
    routing.subdivisions = std::move(q);
    routing.scaled = make_instance_sparse(inst.weight, inst.num_machines, std::move(scaled),
                                          inst.job_id);
    return routing;
}

std::vector<Rat> routing_costs(const RoutingInstance& routing, const RoutingChoice& choice) {
    const Instance& inst = routing.scaled;
    Assignment asg{choice.path_of};
    check_feasible(inst, asg);

    // Priority on every path arc: shortest processing time first, ties by id.
    // Player j walks the offset interval [1 - p_j, 1]; a higher-priority
    // player k overlaps it on [1 - p_k, 1] (p_k <= p_j), always ahead of j
    // there. With l players ahead, each unit arc charges the trapezoid
    // slice (l + 1/2) / Q, so a stretch of measure mu costs mu * (l + 1/2).
    std::vector<Rat> cost(static_cast<size_t>(inst.num_jobs), Rat(0));
    const auto grouped = jobs_by_machine(inst, asg);
    for (int i = 0; i < inst.num_machines; ++i) {
        for (int j : grouped[static_cast<size_t>(i)]) {
            const Rat& p_j = inst.proc(i, j);

            // Entry offsets of the players ahead of j, i.e. the points where
            // the count-ahead step function increments along j's walk.
            std::vector<Rat> ahead_entries;
            for (int k : grouped[static_cast<size_t>(i)]) {
                if (k == j) continue;
                if (smith_before(inst, i, k, j)) {
                    ahead_entries.push_back(1 - inst.proc(i, k));
                }
            }
            std::sort(ahead_entries.begin(), ahead_entries.end());

            Rat total = inst.proc(i, j) / 2;  // connector arc, constant cost p/2
            Rat position = 1 - p_j;
            long count_ahead = 0;
            // Entries before j's own entry point are already ahead when j
            // steps onto the path.
            size_t t = 0;
            while (t < ahead_entries.size() && ahead_entries[t] <= position) {
                ++count_ahead;
                ++t;
            }
            const Rat half = make_rat(1, 2);
            for (; t < ahead_entries.size(); ++t) {
                total += (ahead_entries[t] - position) * (count_ahead + half);
                position = ahead_entries[t];
                ++count_ahead;
            }
            total += (1 - position) * (count_ahead + half);
            cost[static_cast<size_t>(j)] = total;
        }
    }
    return cost;
}

bool equivalence_check(const Instance& inst, const Assignment& asg) {
    check_feasible(inst, asg);
    const RoutingInstance routing = to_priority_routing(inst);
    const std::vector<Rat> payments = routing_costs(routing, RoutingChoice{asg.machine_of});
    const CostReport schedule = policy_completion(inst, asg, PolicyKind::SmithRule);
    for (int j = 0; j < inst.num_jobs; ++j) {
        if (payments[static_cast<size_t>(j)] * routing.scale !=
            schedule.completion[static_cast<size_t>(j)]) {
            return false;
        }
    }
    return true;
}

nlohmann::json routing_to_json(const RoutingInstance& routing) {
    nlohmann::json doc;
    doc["scale"] = rat_to_json(routing.scale);
    doc["path_subdivisions"] = routing.subdivisions.get_str();
    doc["sink"] = "t";
    doc["priority"] = "increasing processing time, ties by job id";

    nlohmann::json paths = nlohmann::json::array();
    for (int i = 0; i < routing.scaled.num_machines; ++i) {
        nlohmann::json path;
        path["machine"] = i;
        path["arcs"] = routing.subdivisions.get_str();
        path["arc_cost"] = "x/" + routing.subdivisions.get_str();
        paths.push_back(std::move(path));
    }
    doc["paths"] = std::move(paths);

    nlohmann::json connectors = nlohmann::json::array();
    for (int j = 0; j < routing.scaled.num_jobs; ++j) {
        for (const ProcEntry& e : routing.scaled.feasible[static_cast<size_t>(j)]) {
            nlohmann::json arc;
            arc["player"] = j;
            arc["machine"] = e.machine;
            arc["entry_offset"] = rat_to_json(1 - e.p);
            arc["cost"] = rat_to_json(e.p / 2);
            connectors.push_back(std::move(arc));
        }
    }
    doc["connectors"] = std::move(connectors);
    return doc;
}

}  // namespace coordmech
