// Acceptance suite: every release criterion of the library, one line each.
// Exact-rational checks carry zero tolerance; the only float comparisons
// are against irrational thresholds (pi/4, the golden-ratio bound).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "coordmech/dynamics.hpp"
#include "coordmech/generators.hpp"
#include "coordmech/geometry.hpp"
#include "coordmech/oracle.hpp"
#include "coordmech/policies.hpp"

using namespace coordmech;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Assignment random_assignment(const Instance& inst, std::mt19937_64& rng) {
    Assignment asg;
    asg.machine_of.resize(static_cast<size_t>(inst.num_jobs));
    for (int j = 0; j < inst.num_jobs; ++j) {
        const auto& row = inst.feasible[static_cast<size_t>(j)];
        asg.machine_of[static_cast<size_t>(j)] = row[rng() % row.size()].machine;
    }
    return asg;
}

Instance sweep_instance(int index) {
    // n <= 10, m <= 4 mix for the identity sweep
    RandomParams params;
    const int n = 3 + index % 8;
    const int m = 1 + index % 4;
    return gen_random(n, m, params, static_cast<std::uint64_t>(1000 + index));
}

bool crude_inequality_held = true;  // filled by criterion 1, reported by 7

// ---- criterion 1: exact cost identities over the random sweep ----
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(2024);
    bool pass = true;
    for (int i = 0; i < 200; ++i) {
        const Instance inst = sweep_instance(i);
        for (int rep = 0; rep < 20; ++rep) {
            const IdentityReport report = cost_identity_report(inst, random_assignment(inst, rng));
            pass &= report.all_identities_hold;
            crude_inequality_held &= report.c_r <= 2 * report.c_sr - report.lambda;
        }
    }
    const double elapsed = seconds_since(t0);
    pass &= elapsed < 10.0;
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "(200 instances x 20 assignments, exact, %.2f s < 10 s)", elapsed);
    report(1, pass, detail);
}

// ---- criterion 2: closed forms equal the oracles exactly ----
void criterion_2() {
    std::mt19937_64 rng(77);
    bool pass = true;
    for (int i = 0; i < 60; ++i) {
        // up to 8 jobs per machine, single- and multi-machine
        const int n = 4 + i % 5;
        const int m = 1 + i % 2;
        const Instance inst = gen_random(n, m, RandomParams{}, static_cast<std::uint64_t>(i + 1));
        const Assignment asg = random_assignment(inst, rng);
        const auto grouped = jobs_by_machine(inst, asg);
        const CostReport ps = policy_completion(inst, asg, PolicyKind::ProportionalSharing);
        const CostReport rd = policy_completion(inst, asg, PolicyKind::Rand);
        for (int machine = 0; machine < inst.num_machines; ++machine) {
            const auto& jobs = grouped[static_cast<size_t>(machine)];
            if (jobs.empty()) continue;
            const std::vector<Rat> fluid = fluid_simulate_ps(inst, machine, jobs);
            const std::vector<Rat> exhaustive = rand_exhaustive_expectation(inst, machine, jobs);
            for (size_t t = 0; t < jobs.size(); ++t) {
                pass &= ps.completion[static_cast<size_t>(jobs[t])] == fluid[t];
                pass &= rd.completion[static_cast<size_t>(jobs[t])] == exhaustive[t];
            }
        }
    }
    report(2, pass, "(fluid and exhaustive oracles, up to 8 jobs per machine, exact)");
}

// ---- criterion 3: exact potential property on 10^4 moves per policy ----
void criterion_3() {
    bool pass = true;
    for (PolicyKind policy : {PolicyKind::ProportionalSharing, PolicyKind::Rand,
                              PolicyKind::Approx}) {
        std::mt19937_64 rng(4096 + static_cast<int>(policy));
        int moves = 0;
        for (int i = 0; moves < 10000; ++i) {
            const Instance inst = sweep_instance(i % 200);
            Assignment asg = random_assignment(inst, rng);
            for (int rep = 0; rep < 40 && moves < 10000; ++rep, ++moves) {
                const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(inst.num_jobs));
                const auto& row = inst.feasible[static_cast<size_t>(j)];
                const int target = row[rng() % row.size()].machine;
                const Rat before = deviation_cost(
                    inst, asg, DeviationQuery{j, asg.machine_of[static_cast<size_t>(j)]}, policy);
                const Rat after = deviation_cost(inst, asg, DeviationQuery{j, target}, policy);
                const Rat phi_before = potential(inst, asg, policy);
                asg.machine_of[static_cast<size_t>(j)] = target;
                const Rat phi_after = potential(inst, asg, policy);
                pass &= phi_after - phi_before == after - before;
            }
        }
    }
    report(3, pass, "(10^4 unilateral moves per policy, rational equality)");
}

// ---- criterion 4: sampler matches the precedence law within 4 sigma ----
void criterion_4() {
    struct PairCase {
        long p2;        // second job's processing time (first has p = 1)
        double expect;  // Pr[job 0 first] = rho_2 / (rho_1 + rho_2)
    };
    const std::vector<PairCase> cases = {{1, 0.5}, {2, 2.0 / 3.0}, {5, 5.0 / 6.0}};
    bool pass = true;
    std::string detail = "(";
    for (const PairCase& pc : cases) {
        const Instance inst = make_instance(
            {Rat(1), Rat(1)},
            ProcMatrix{{std::optional<Rat>(Rat(1)), std::optional<Rat>(Rat(pc.p2))}});
        const int trials = 100000;
        int first = 0;
        for (int seed = 0; seed < trials; ++seed) {
            if (rand_sample_order(inst, 0, {0, 1}, static_cast<std::uint64_t>(seed))[0] == 0) {
                ++first;
            }
        }
        const double sigma = std::sqrt(pc.expect * (1.0 - pc.expect) * trials);
        const double dev = std::abs(first - pc.expect * trials) / sigma;
        pass &= dev <= 4.0;
        char buf[48];
        std::snprintf(buf, sizeof buf, "rho(1,%ld): %.2f sigma; ", pc.p2, dev);
        detail += buf;
    }
    detail += "10^5 samples each)";
    report(4, pass, detail);
}

// ---- criterion 5: empirical PoA bounds over the small200 suite ----
void criterion_5() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    const double golden_bound = (3.0 + std::sqrt(5.0)) / 2.0;
    Rat worst_sr = 0, worst_ps = 0, worst_es = 0, worst_rand = 0;
    int sr_without_pne = 0;
    for (int id = 0; id < 200; ++id) {
        const Instance inst = suite_instance(id);

        const PoAReport sr = poa_report(inst, PolicyKind::SmithRule);
        if (sr.worst_ratio.has_value()) {
            pass &= *sr.worst_ratio <= 4;
            worst_sr = std::max(worst_sr, *sr.worst_ratio);
        } else {
            ++sr_without_pne;
        }

        const PoAReport ps = poa_report(inst, PolicyKind::ProportionalSharing);
        pass &= ps.worst_ratio.has_value();  // potential game: PNE exists
        if (ps.worst_ratio.has_value()) {
            pass &= to_double(*ps.worst_ratio) <= golden_bound + 1e-12;
            worst_ps = std::max(worst_ps, *ps.worst_ratio);
            if (inst.unit_weights()) {
                pass &= *ps.worst_ratio <= make_rat(5, 2);
                worst_es = std::max(worst_es, *ps.worst_ratio);
            }
        }

        const PoAReport rd = poa_report(inst, PolicyKind::Rand);
        pass &= rd.worst_ratio.has_value();
        if (rd.worst_ratio.has_value()) {
            pass &= *rd.worst_ratio <= make_rat(32, 15);
            worst_rand = std::max(worst_rand, *rd.worst_ratio);
        }
    }
    const double elapsed = seconds_since(t0);
    pass &= elapsed < 300.0;
    char detail[192];
    std::snprintf(detail, sizeof detail,
                  "(worst: SR %.4f<=4, PS %.4f<=2.618, unit-PS %.4f<=2.5, Rand %.4f<=32/15; "
                  "%d SR games without PNE; %.1f s < 300 s)",
                  to_double(worst_sr), to_double(worst_ps), to_double(worst_es),
                  to_double(worst_rand), sr_without_pne, elapsed);
    report(5, pass, detail);
}

// ---- criterion 6: lower-bound generators reach their targets ----
void criterion_6() {
    bool pass = true;

    Rat last = 0;
    Rat smith_ratio;
    for (int k = 1; k <= 4; ++k) {
        const LowerBoundBundle bundle = gen_smithrule_lowerbound(k, 144);
        pass &= is_nash(bundle.instance, bundle.nash_assignment, PolicyKind::SmithRule).is_nash;
        const Rat nash = policy_completion(bundle.instance, bundle.nash_assignment,
                                           PolicyKind::SmithRule).weighted_total;
        const Rat opt = policy_completion(bundle.instance, bundle.opt_assignment,
                                          PolicyKind::SmithRule).weighted_total;
        smith_ratio = nash / opt;
        pass &= smith_ratio >= last;  // monotone in k
        last = smith_ratio;
    }
    pass &= smith_ratio >= make_rat(23, 10);

    const LowerBoundBundle det = gen_tree_lowerbound(12, TreeVariant::Deterministic13_6);
    pass &= is_nash(det.instance, det.nash_assignment, PolicyKind::ProportionalSharing).is_nash;
    const Rat det_ratio =
        policy_completion(det.instance, det.nash_assignment, PolicyKind::ProportionalSharing)
            .weighted_total /
        policy_completion(det.instance, det.opt_assignment, PolicyKind::SmithRule).weighted_total;
    pass &= abs(det_ratio - det.target_ratio) * 50 <= det.target_ratio;

    const LowerBoundBundle rnd = gen_tree_lowerbound(12, TreeVariant::Rand5_3);
    pass &= is_nash(rnd.instance, rnd.nash_assignment, PolicyKind::Rand).is_nash;
    const Rat rnd_ratio =
        policy_completion(rnd.instance, rnd.nash_assignment, PolicyKind::Rand).weighted_total /
        policy_completion(rnd.instance, rnd.opt_assignment, PolicyKind::SmithRule).weighted_total;
    pass &= abs(rnd_ratio - rnd.target_ratio) * 50 <= rnd.target_ratio;

    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "(smith k=4: %.4f >= 2.3 monotone; tree depth 12: PS %.4f ~ 13/6, "
                  "Rand %.4f ~ 5/3, both Nash-verified, within 2%%)",
                  to_double(smith_ratio), to_double(det_ratio), to_double(rnd_ratio));
    report(6, pass, detail);
}

// ---- criterion 7: inequality suites ----
void criterion_7() {
    bool pass = lemma_ineq_check(500);
    pass &= crude_inequality_held;

    const double quarter_pi = std::acos(0.0) / 2.0;
    std::mt19937_64 rng(555);
    for (int t = 0; t < 100; ++t) {
        // rational inputs, checked along both the float and the exact route
        std::vector<std::pair<Rat, Rat>> points;
        std::vector<std::pair<double, double>> approx;
        const int n = 1 + static_cast<int>(rng() % 12);
        for (int j = 0; j < n; ++j) {
            const Rat r = make_rat(1 + static_cast<long long>(rng() % 1000), 100);
            const Rat u = make_rat(1 + static_cast<long long>(rng() % 1000), 100);
            points.push_back({r, u});
            approx.push_back({to_double(r), to_double(u)});
        }
        pass &= chung_ratio(approx) < quarter_pi + 1e-12;
        const auto [kernel_sum, min_sum] = chung_sums(points);
        pass &= to_double(kernel_sum / min_sum) < quarter_pi + 1e-12;
    }

    // Tight family r_j = 1/j^2, u_j = 1, grown incrementally: adding the
    // n-th point contributes its cross terms against the earlier ones.
    Rat previous = 0;
    Rat tight = 0;
    Rat kernel_sum = 0, min_sum = 0;
    std::vector<Rat> family;
    for (long long n = 1; n <= 200; ++n) {
        const Rat r_n = make_rat(1, n * n);
        for (const Rat& r_j : family) {
            kernel_sum += 2 * r_j * r_n / (r_j + r_n);
            min_sum += 2 * std::min(r_j, r_n);
        }
        kernel_sum += r_n / 2;
        min_sum += r_n;
        family.push_back(r_n);
        tight = kernel_sum / min_sum;
        pass &= to_double(tight) < quarter_pi + 1e-12;
        if (n > 1) pass &= tight > previous;  // strictly increasing along the family
        previous = tight;
    }
    {
        // the incremental sums agree with the direct quadratic route
        std::vector<std::pair<Rat, Rat>> points;
        for (const Rat& r : family) points.push_back({r, Rat(1)});
        const auto [direct_kernel, direct_min] = chung_sums(points);
        pass &= direct_kernel == kernel_sum && direct_min == min_sum;
    }

    const PdReport pd = kernel_pd_check(25);
    pass &= pd.positive_definite;
    for (const Rat& minor : pd.minors) pass &= minor > 0;

    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "(lemma-ineq to 500 exact; crude inequality on the criterion-1 sweep; "
                  "chung tight family n=200 -> %.6f < pi/4; pd(25) exact)",
                  to_double(tight));
    report(7, pass, detail);
}

// ---- criterion 8: the (2+eps)-approximation against brute force ----
void criterion_8() {
    bool pass = true;
    const Rat epsilon = make_rat(1, 20);
    const Rat bound = Rat(2) / (1 - 4 * (epsilon / 2) / 3);  // 60/29
    double ratio_sum = 0.0;
    double worst = 0.0;
    long long steps_total = 0;
    double log_bound_total = 0.0;
    for (int i = 0; i < 100; ++i) {
        const int n = 4 + i % 5;
        const int m = 2 + i % 2;
        const Instance inst = gen_random(n, m, RandomParams{},
                                         static_cast<std::uint64_t>(7000 + i));
        Assignment start;
        start.machine_of.assign(static_cast<size_t>(n), 0);
        const Rat phi0 = potential(inst, start, PolicyKind::Approx);
        const ApproxResult result = approx_schedule(inst, epsilon, start);
        pass &= result.trace.converged;
        const Rat opt = brute_force_opt(inst).cost;
        pass &= result.smith_cost <= bound * opt;  // exact rational comparison
        const double ratio = to_double(result.smith_cost / opt);
        ratio_sum += ratio;
        worst = std::max(worst, ratio);
        steps_total += static_cast<long long>(result.trace.steps.size());
        const Rat phi_final = potential(inst, result.assignment, PolicyKind::Approx);
        log_bound_total += static_cast<double>(n) / to_double(epsilon) *
                           std::log(to_double(phi0 / phi_final));
    }
    char detail[192];
    std::snprintf(detail, sizeof detail,
                  "(100 instances, eps=1/20: mean ratio %.4f, worst %.4f <= 60/29 = %.4f; "
                  "steps %lld vs (n/eps)log(Phi0/Phi*) total %.0f, logged only)",
                  ratio_sum / 100.0, worst, to_double(bound), steps_total, log_bound_total);
    report(8, pass, detail);
}

// ---- criterion 9: the priority-routing reduction ----
void criterion_9();

}  // namespace

#include "coordmech/reduction.hpp"

namespace {

bool routing_nash(const RoutingInstance& routing, const RoutingChoice& choice) {
    const Instance& inst = routing.scaled;
    const std::vector<Rat> own = routing_costs(routing, choice);
    for (int j = 0; j < inst.num_jobs; ++j) {
        for (const ProcEntry& e : inst.feasible[static_cast<size_t>(j)]) {
            if (e.machine == choice.path_of[static_cast<size_t>(j)]) continue;
            RoutingChoice moved = choice;
            moved.path_of[static_cast<size_t>(j)] = e.machine;
            if (routing_costs(routing, moved)[static_cast<size_t>(j)] <
                own[static_cast<size_t>(j)]) {
                return false;
            }
        }
    }
    return true;
}

void criterion_9() {
    bool pass = true;
    std::mt19937_64 rng(606);
    RandomParams unit;
    unit.weight_num_max = 1;
    unit.weight_den_max = 1;

    for (int i = 0; i < 50; ++i) {
        const Instance inst = gen_random(3 + i % 5, 1 + i % 3, unit,
                                         static_cast<std::uint64_t>(9000 + i));
        for (int rep = 0; rep < 10; ++rep) {
            pass &= equivalence_check(inst, random_assignment(inst, rng));
        }
    }

    // Nash correspondence by exhaustive deviation, m^n <= 10^4
    int checked_states = 0;
    for (int i = 0; i < 8; ++i) {
        const Instance inst = gen_random(4 + i % 2, 2 + i % 2, unit,
                                         static_cast<std::uint64_t>(9500 + i));
        const RoutingInstance routing = to_priority_routing(inst);
        for (int rep = 0; rep < 12; ++rep) {
            const Assignment asg = random_assignment(inst, rng);
            const bool lhs = is_nash(inst, asg, PolicyKind::SmithRule).is_nash;
            const bool rhs = routing_nash(routing, RoutingChoice{asg.machine_of});
            pass &= lhs == rhs;
            ++checked_states;
        }
    }
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "(50 instances x 10 assignments exact; Nash sets coincide on %d sampled "
                  "profiles)",
                  checked_states);
    report(9, pass, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", failures);
    }
    return failures;
}
