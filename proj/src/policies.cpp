#include "coordmech/policies.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace coordmech {

namespace {

// Completion of every job on one machine under SmithRule: prefix sums of
// processing times in Smith order.
void smith_completions(const Instance& inst, int machine, const std::vector<int>& jobs,
                       std::vector<Rat>& completion) {
    std::vector<int> order = jobs;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return smith_before(inst, machine, a, b);
    });
    Rat clock = 0;
    for (int j : order) {
        clock += inst.proc(machine, j);
        completion[static_cast<size_t>(j)] = clock;
    }
}

// Lemma-style closed form for ProportionalSharing:
//   c_j = sum_{k != j} w_k * min(rho_k, rho_j) + p_j.
Rat ps_completion_of(const Instance& inst, int machine, const std::vector<int>& jobs, int job) {
    const Rat& rho_j = inst.rho(machine, job);
    Rat c = inst.proc(machine, job);
    for (int k : jobs) {
        if (k == job) continue;
        c += inst.weight[static_cast<size_t>(k)] * std::min(inst.rho(machine, k), rho_j);
    }
    return c;
}

// Expected completion under Rand:
//   c_j = sum_{k != j} p_k * Pr[k ahead of j] + p_j,
// where Pr[k ahead of j] = rho_j / (rho_j + rho_k). The same expression
// covers both the resident case and a hypothetical deviator, since the
// other occupants are passed in either way.
Rat rand_completion_of(const Instance& inst, int machine, const std::vector<int>& occupants,
                       int job) {
    const Rat& rho_j = inst.rho(machine, job);
    Rat c = inst.proc(machine, job);
    for (int k : occupants) {
        if (k == job) continue;
        c += inst.proc(machine, k) * rand_precedence_prob(inst.rho(machine, k), rho_j);
    }
    return c;
}

}  // namespace

CostReport policy_completion(const Instance& inst, const Assignment& asg, PolicyKind policy) {
    check_feasible(inst, asg);
    CostReport report;
    report.completion.assign(static_cast<size_t>(inst.num_jobs), Rat(0));
    const auto grouped = jobs_by_machine(inst, asg);

    for (int i = 0; i < inst.num_machines; ++i) {
        const auto& jobs = grouped[static_cast<size_t>(i)];
        if (jobs.empty()) continue;
        switch (policy) {
            case PolicyKind::SmithRule:
                smith_completions(inst, i, jobs, report.completion);
                break;
            case PolicyKind::ProportionalSharing:
                for (int j : jobs) {
                    report.completion[static_cast<size_t>(j)] = ps_completion_of(inst, i, jobs, j);
                }
                break;
            case PolicyKind::Rand:
                for (int j : jobs) {
                    report.completion[static_cast<size_t>(j)] =
                        rand_completion_of(inst, i, jobs, j);
                }
                break;
            case PolicyKind::Approx:
                for (int j : jobs) {
                    report.completion[static_cast<size_t>(j)] =
                        ps_completion_of(inst, i, jobs, j) + inst.proc(i, j);
                }
                break;
        }
    }

    report.weighted_total = 0;
    for (int j = 0; j < inst.num_jobs; ++j) {
        report.weighted_total +=
            inst.weight[static_cast<size_t>(j)] * report.completion[static_cast<size_t>(j)];
    }
    report.lambda_term = lambda_term(inst, asg);
    return report;
}

namespace {

Rat deviation_cost_impl(const Instance& inst, const std::vector<int>& others,
                        const DeviationQuery& query, PolicyKind policy);

}  // namespace

Rat deviation_cost(const Instance& inst, const Assignment& asg, const DeviationQuery& query,
                   PolicyKind policy) {
    if (query.job < 0 || query.job >= inst.num_jobs) {
        throw std::invalid_argument("deviation_cost: bad job index");
    }
    std::vector<int> others;
    for (int k = 0; k < inst.num_jobs; ++k) {
        if (asg.machine_of[static_cast<size_t>(k)] == query.target_machine) others.push_back(k);
    }
    return deviation_cost_impl(inst, others, query, policy);
}

Rat deviation_cost(const Instance& inst, const std::vector<std::vector<int>>& grouped,
                   const DeviationQuery& query, PolicyKind policy) {
    if (query.job < 0 || query.job >= inst.num_jobs) {
        throw std::invalid_argument("deviation_cost: bad job index");
    }
    if (query.target_machine < 0 ||
        query.target_machine >= static_cast<int>(grouped.size())) {
        throw std::invalid_argument("deviation_cost: bad target machine");
    }
    return deviation_cost_impl(inst, grouped[static_cast<size_t>(query.target_machine)], query,
                               policy);
}

namespace {

// `others` holds the target's occupants and may include the mover, which
// every policy branch skips.
Rat deviation_cost_impl(const Instance& inst, const std::vector<int>& others,
                        const DeviationQuery& query, PolicyKind policy) {
    const int j = query.job;
    const int target = query.target_machine;
    if (!inst.allowed(target, j)) {
        throw std::invalid_argument("deviation_cost: target machine is forbidden for the job");
    }
    const Rat& w_j = inst.weight[static_cast<size_t>(j)];

    switch (policy) {
        case PolicyKind::SmithRule: {
            Rat c = inst.proc(target, j);
            for (int k : others) {
                if (k != j && smith_before(inst, target, k, j)) c += inst.proc(target, k);
            }
            return w_j * c;
        }
        case PolicyKind::ProportionalSharing: {
            const Rat& rho_j = inst.rho(target, j);
            Rat c = inst.proc(target, j);
            for (int k : others) {
                if (k == j) continue;
                c += inst.weight[static_cast<size_t>(k)] * std::min(inst.rho(target, k), rho_j);
            }
            return w_j * c;
        }
        case PolicyKind::Rand: {
            Rat c = rand_completion_of(inst, target, others, j);
            return w_j * c;
        }
        case PolicyKind::Approx: {
            const Rat& rho_j = inst.rho(target, j);
            Rat c = 2 * inst.proc(target, j);
            for (int k : others) {
                if (k == j) continue;
                c += inst.weight[static_cast<size_t>(k)] * std::min(inst.rho(target, k), rho_j);
            }
            return w_j * c;
        }
    }
    throw std::logic_error("deviation_cost: unknown policy");
}

}  // namespace

Rat rand_precedence_prob(const Rat& rho_j, const Rat& rho_k) {
    if (rho_j < 0 || rho_k < 0) {
        throw std::invalid_argument("rand_precedence_prob: negative ratio");
    }
    if (rho_j == 0 && rho_k == 0) return make_rat(1, 2);
    return rho_k / (rho_j + rho_k);
}

std::vector<int> rand_sample_order(const Instance& inst, int machine,
                                   const std::vector<int>& jobset, std::uint64_t seed) {
    std::vector<int> remaining = jobset;
    std::vector<int> reversed;
    reversed.reserve(jobset.size());
    std::mt19937_64 rng(seed);

    while (!remaining.empty()) {
        Rat total = 0;
        for (int j : remaining) total += inst.rho(machine, j);
        size_t chosen = 0;
        if (remaining.size() > 1 && total > 0) {
            // Exact inversion sampling: u = r / 2^64 is an exact rational,
            // pick the first job whose cumulative rho exceeds u * total.
            const std::uint64_t r = rng();
            Rat threshold = Rat(mpz_class(r)) / Rat(mpz_class(1) << 64) * total;
            Rat cumulative = 0;
            for (size_t t = 0; t < remaining.size(); ++t) {
                cumulative += inst.rho(machine, remaining[t]);
                if (threshold < cumulative) {
                    chosen = t;
                    break;
                }
                chosen = t;
            }
        }
        reversed.push_back(remaining[chosen]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(chosen));
    }
    return std::vector<int>(reversed.rbegin(), reversed.rend());
}

std::vector<Rat> fluid_simulate_ps(const Instance& inst, int machine,
                                   const std::vector<int>& jobset) {
    std::vector<Rat> completion(jobset.size(), Rat(0));
    std::vector<Rat> remaining(jobset.size());
    std::vector<bool> live(jobset.size(), true);
    Rat live_weight = 0;
    for (size_t t = 0; t < jobset.size(); ++t) {
        remaining[t] = inst.proc(machine, jobset[t]);
        live_weight += inst.weight[static_cast<size_t>(jobset[t])];
    }

    Rat clock = 0;
    size_t done = 0;
    while (done < jobset.size()) {
        // Next event: the live job finishing first at its current rate
        // w_t / live_weight, i.e. after remaining_t * live_weight / w_t.
        Rat dt;
        bool first = true;
        for (size_t t = 0; t < jobset.size(); ++t) {
            if (!live[t]) continue;
            Rat finish = remaining[t] * live_weight / inst.weight[static_cast<size_t>(jobset[t])];
            if (first || finish < dt) {
                dt = finish;
                first = false;
            }
        }
        clock += dt;
        for (size_t t = 0; t < jobset.size(); ++t) {
            if (!live[t]) continue;
            remaining[t] -= dt * inst.weight[static_cast<size_t>(jobset[t])] / live_weight;
        }
        // Retire everything that hit zero (simultaneous completions allowed).
        Rat retired_weight = 0;
        for (size_t t = 0; t < jobset.size(); ++t) {
            if (live[t] && remaining[t] == 0) {
                live[t] = false;
                completion[t] = clock;
                retired_weight += inst.weight[static_cast<size_t>(jobset[t])];
                ++done;
            }
        }
        live_weight -= retired_weight;
    }
    return completion;
}

std::vector<Rat> rand_exhaustive_expectation(const Instance& inst, int machine,
                                             const std::vector<int>& jobset) {
    const size_t n = jobset.size();
    if (n > 9) {
        throw std::invalid_argument("rand_exhaustive_expectation: jobset too large (max 9)");
    }
    std::vector<Rat> expected(n, Rat(0));
    if (n == 0) return expected;

    std::vector<size_t> perm(n);
    for (size_t t = 0; t < n; ++t) perm[t] = t;

    std::vector<Rat> rho(n), p(n);
    for (size_t t = 0; t < n; ++t) {
        rho[t] = inst.rho(machine, jobset[t]);
        p[t] = inst.proc(machine, jobset[t]);
    }
    Rat rho_total = 0;
    for (const Rat& r : rho) rho_total += r;

    do {
        // Probability of this front-to-back ordering under the sampling
        // process: positions are drawn back to front, each with probability
        // rho / (total rho of the not-yet-placed jobs).
        Rat prob = 1;
        Rat pool = rho_total;
        for (size_t t = n; t-- > 0;) {
            if (pool == 0) {
                // All remaining ratios zero: uniform among them.
                prob /= static_cast<long>(t + 1);
            } else {
                prob *= rho[perm[t]] / pool;
            }
            pool -= rho[perm[t]];
        }
        Rat clock = 0;
        for (size_t t = 0; t < n; ++t) {
            clock += p[perm[t]];
            expected[perm[t]] += prob * clock;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    return expected;
}

}  // namespace coordmech
