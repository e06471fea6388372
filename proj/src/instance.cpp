#include "coordmech/instance.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coordmech {

std::string policy_name(PolicyKind policy) {
    switch (policy) {
        case PolicyKind::SmithRule: return "SmithRule";
        case PolicyKind::ProportionalSharing: return "ProportionalSharing";
        case PolicyKind::Rand: return "Rand";
        case PolicyKind::Approx: return "Approx";
    }
    throw std::logic_error("policy_name: unknown policy");
}

PolicyKind policy_from_name(const std::string& name) {
    if (name == "SmithRule" || name == "sr" || name == "smith") return PolicyKind::SmithRule;
    if (name == "ProportionalSharing" || name == "ps") return PolicyKind::ProportionalSharing;
    if (name == "Rand" || name == "rand" || name == "r") return PolicyKind::Rand;
    if (name == "Approx" || name == "approx" || name == "a") return PolicyKind::Approx;
    throw std::invalid_argument("unknown policy '" + name + "'");
}

const ProcEntry* Instance::entry(int machine, int job) const {
    const auto& row = feasible[static_cast<size_t>(job)];
    auto it = std::lower_bound(row.begin(), row.end(), machine,
                               [](const ProcEntry& e, int m) { return e.machine < m; });
    if (it == row.end() || it->machine != machine) return nullptr;
    return &*it;
}

const Rat& Instance::proc(int machine, int job) const {
    const ProcEntry* e = entry(machine, job);
    if (e == nullptr) {
        throw std::invalid_argument("machine " + std::to_string(machine) +
                                    " is forbidden for job " + std::to_string(job));
    }
    return e->p;
}

const Rat& Instance::rho(int machine, int job) const {
    const ProcEntry* e = entry(machine, job);
    if (e == nullptr) {
        throw std::invalid_argument("machine " + std::to_string(machine) +
                                    " is forbidden for job " + std::to_string(job));
    }
    return e->rho;
}

bool Instance::unit_weights() const {
    return std::all_of(weight.begin(), weight.end(), [](const Rat& w) { return w == 1; });
}

namespace {

Instance finish_instance(std::vector<Rat> weights, int num_machines,
                         std::vector<std::vector<ProcEntry>> feasible,
                         std::vector<long long> ids) {
    Instance inst;
    inst.num_jobs = static_cast<int>(weights.size());
    inst.num_machines = num_machines;
    if (inst.num_jobs <= 0) throw std::invalid_argument("instance must have at least one job");
    if (num_machines <= 0) throw std::invalid_argument("instance must have at least one machine");

    if (ids.empty()) {
        ids.resize(weights.size());
        for (size_t j = 0; j < ids.size(); ++j) ids[j] = static_cast<long long>(j);
    }
    if (ids.size() != weights.size()) {
        throw std::invalid_argument("ids size does not match number of jobs");
    }
    std::set<long long> distinct(ids.begin(), ids.end());
    if (distinct.size() != ids.size()) {
        throw std::invalid_argument("job ids must be distinct");
    }
    if (!ids.empty() && *distinct.begin() < 0) {
        throw std::invalid_argument("job ids must be non-negative");
    }

    for (size_t j = 0; j < weights.size(); ++j) {
        if (weights[j] <= 0) {
            throw std::invalid_argument("job " + std::to_string(j) +
                                        " has non-positive weight");
        }
    }
    for (size_t j = 0; j < feasible.size(); ++j) {
        auto& row = feasible[j];
        if (row.empty()) {
            throw std::invalid_argument("job " + std::to_string(j) +
                                        " has no feasible machine");
        }
        std::sort(row.begin(), row.end(),
                  [](const ProcEntry& a, const ProcEntry& b) { return a.machine < b.machine; });
        for (size_t t = 0; t < row.size(); ++t) {
            if (row[t].machine < 0 || row[t].machine >= num_machines) {
                throw std::invalid_argument("machine index out of range for job " +
                                            std::to_string(j));
            }
            if (t > 0 && row[t].machine == row[t - 1].machine) {
                throw std::invalid_argument("duplicate machine entry for job " +
                                            std::to_string(j));
            }
            if (row[t].p <= 0) {
                throw std::invalid_argument("job " + std::to_string(j) +
                                            " has non-positive processing time");
            }
            row[t].rho = row[t].p / weights[j];
        }
    }

    inst.weight = std::move(weights);
    inst.job_id = std::move(ids);
    inst.feasible = std::move(feasible);
    return inst;
}

}  // namespace

Instance make_instance(std::vector<Rat> weights, const ProcMatrix& proc,
                       std::vector<long long> ids) {
    const size_t n = weights.size();
    const size_t m = proc.size();
    if (m == 0) throw std::invalid_argument("processing matrix has no machines");
    std::vector<std::vector<ProcEntry>> feasible(n);
    for (size_t i = 0; i < m; ++i) {
        if (proc[i].size() != n) {
            throw std::invalid_argument("processing matrix row " + std::to_string(i) +
                                        " does not match number of jobs");
        }
        for (size_t j = 0; j < n; ++j) {
            if (proc[i][j].has_value()) {
                feasible[j].push_back(ProcEntry{static_cast<int>(i), *proc[i][j], Rat()});
            }
        }
    }
    return finish_instance(std::move(weights), static_cast<int>(m), std::move(feasible),
                           std::move(ids));
}

Instance make_instance_sparse(std::vector<Rat> weights, int num_machines,
                              std::vector<std::vector<std::pair<int, Rat>>> proc_by_job,
                              std::vector<long long> ids) {
    if (proc_by_job.size() != weights.size()) {
        throw std::invalid_argument("sparse processing list does not match number of jobs");
    }
    std::vector<std::vector<ProcEntry>> feasible(weights.size());
    for (size_t j = 0; j < proc_by_job.size(); ++j) {
        feasible[j].reserve(proc_by_job[j].size());
        for (auto& [machine, p] : proc_by_job[j]) {
            feasible[j].push_back(ProcEntry{machine, std::move(p), Rat()});
        }
    }
    return finish_instance(std::move(weights), num_machines, std::move(feasible),
                           std::move(ids));
}

void check_feasible(const Instance& inst, const Assignment& asg) {
    if (static_cast<int>(asg.machine_of.size()) != inst.num_jobs) {
        throw std::invalid_argument("assignment does not match number of jobs");
    }
    for (int j = 0; j < inst.num_jobs; ++j) {
        const int i = asg.machine_of[static_cast<size_t>(j)];
        if (i < 0 || i >= inst.num_machines || !inst.allowed(i, j)) {
            throw std::invalid_argument("job " + std::to_string(j) +
                                        " assigned to forbidden machine " + std::to_string(i));
        }
    }
}

std::vector<std::vector<int>> jobs_by_machine(const Instance& inst, const Assignment& asg) {
    std::vector<std::vector<int>> grouped(static_cast<size_t>(inst.num_machines));
    for (int j = 0; j < inst.num_jobs; ++j) {
        grouped[static_cast<size_t>(asg.machine_of[static_cast<size_t>(j)])].push_back(j);
    }
    return grouped;
}

Rat lambda_term(const Instance& inst, const Assignment& asg) {
    check_feasible(inst, asg);
    Rat sum = 0;
    for (int j = 0; j < inst.num_jobs; ++j) {
        sum += inst.weight[static_cast<size_t>(j)] *
               inst.proc(asg.machine_of[static_cast<size_t>(j)], j);
    }
    return sum;
}

bool smith_before(const Instance& inst, int machine, int job_a, int job_b) {
    const Rat& ra = inst.rho(machine, job_a);
    const Rat& rb = inst.rho(machine, job_b);
    const int cmp = ::cmp(ra, rb);
    if (cmp != 0) return cmp < 0;
    return inst.job_id[static_cast<size_t>(job_a)] < inst.job_id[static_cast<size_t>(job_b)];
}

}  // namespace coordmech
