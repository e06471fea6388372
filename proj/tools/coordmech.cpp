// Command-line front end: instance generation, policy evaluation, dynamics
// runs, brute-force reports, and the invariant check suites.

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"

#include "coordmech/dynamics.hpp"
#include "coordmech/generators.hpp"
#include "coordmech/geometry.hpp"
#include "coordmech/json_io.hpp"
#include "coordmech/oracle.hpp"
#include "coordmech/policies.hpp"
#include "coordmech/reduction.hpp"

using namespace coordmech;

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("COORDMECH_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 1;
}

void emit(const Json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << '\n';
    } else {
        write_json_file(out_path, doc);
    }
}

Instance load_instance_file(const std::string& path) {
    return instance_from_json(read_json_file(path));
}

// Every job on its lowest-index feasible machine; the default starting
// point when no assignment file is given.
Assignment first_feasible_assignment(const Instance& inst) {
    Assignment asg;
    asg.machine_of.resize(static_cast<size_t>(inst.num_jobs));
    for (int j = 0; j < inst.num_jobs; ++j) {
        asg.machine_of[static_cast<size_t>(j)] = inst.feasible[static_cast<size_t>(j)][0].machine;
    }
    return asg;
}

Assignment assignment_or_default(const Instance& inst, const std::string& path) {
    if (path.empty()) return first_feasible_assignment(inst);
    Assignment asg = assignment_from_json(read_json_file(path));
    check_feasible(inst, asg);
    return asg;
}

Json identity_report_to_json(const IdentityReport& report) {
    Json doc;
    doc["c_sr"] = rat_to_json(report.c_sr);
    doc["c_ps"] = rat_to_json(report.c_ps);
    doc["c_r"] = rat_to_json(report.c_r);
    doc["c_a"] = rat_to_json(report.c_a);
    doc["lambda"] = rat_to_json(report.lambda);
    doc["phi_norm_sq"] = rat_to_json(report.phi_norm_sq);
    doc["kernel_norm_sq"] = rat_to_json(report.kernel_norm_sq);
    doc["all_identities_hold"] = report.all_identities_hold;
    return doc;
}

Json trace_to_json(const DynamicsTrace& trace, bool with_steps) {
    Json doc;
    if (with_steps) {
        Json steps = Json::array();
        for (const DynamicsStep& step : trace.steps) {
            Json record;
            record["job"] = step.job;
            record["from"] = step.from_machine;
            record["to"] = step.to_machine;
            record["cost_before"] = rat_to_json(step.cost_before);
            record["cost_after"] = rat_to_json(step.cost_after);
            record["potential_before"] = rat_to_json(step.potential_before);
            record["potential_after"] = rat_to_json(step.potential_after);
            steps.push_back(std::move(record));
        }
        doc["steps"] = std::move(steps);
    }
    doc["step_count"] = trace.steps.size();
    doc["final_assignment"] = assignment_to_json(trace.final_assignment);
    doc["converged"] = trace.converged;
    return doc;
}

Json poa_report_to_json(const PoAReport& report) {
    Json doc;
    doc["policy"] = policy_name(report.policy);
    doc["opt_cost"] = rat_to_json(report.opt_cost);
    Json costs = Json::array();
    for (const Rat& c : report.nash_costs) costs.push_back(rat_to_json(c));
    doc["nash_costs"] = std::move(costs);
    doc["worst_ratio"] =
        report.worst_ratio.has_value() ? rat_to_json(*report.worst_ratio) : Json(nullptr);
    doc["enumerated_states"] = report.enumerated_states;
    return doc;
}

constexpr int kSuiteSize = 200;
constexpr const char* kCsvHeader = "instance_id,policy,opt,cost,ratio,steps";

std::string csv_row(int id, PolicyKind policy, const Rat& opt, const Rat& cost,
                    const Rat& ratio, long long steps) {
    return std::to_string(id) + "," + policy_name(policy) + "," + rat_to_string(opt) + "," +
           rat_to_string(cost) + "," + rat_to_string(ratio) + "," + std::to_string(steps);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coordination mechanisms for selfish scheduling on unrelated machines"};
    app.require_subcommand(1);

    std::string instance_path, assignment_path, x0_path, out_path, policy_str = "sr";
    std::string variant_str = "det", suite;
    int gen_n = 5, gen_m = 3, lb_k = 2, lb_m = 4, depth = 4;
    std::uint64_t seed = default_seed();
    RandomParams bounds;
    std::string delta_str = "1/1048576", alpha_str = "1/100", epsilon_str = "1/20";
    long long max_steps = 1000000, cap = kDefaultStateCap;
    bool identities = false;
    long long ineq_k = -1;
    int pd_kappa = -1, identity_sweep = -1;
    bool check_all = false;

    // ---- gen ----
    CLI::App* gen = app.add_subcommand("gen", "generate instances and lower-bound bundles");
    gen->require_subcommand(1);

    CLI::App* gen_random_cmd = gen->add_subcommand("random", "random instance");
    gen_random_cmd->add_option("--n", gen_n, "jobs")->check(CLI::PositiveNumber);
    gen_random_cmd->add_option("--m", gen_m, "machines")->check(CLI::PositiveNumber);
    gen_random_cmd->add_option("--seed", seed, "defaults to COORDMECH_SEED or 1");
    gen_random_cmd->add_option("--weight-num-max", bounds.weight_num_max);
    gen_random_cmd->add_option("--weight-den-max", bounds.weight_den_max);
    gen_random_cmd->add_option("--proc-num-max", bounds.proc_num_max);
    gen_random_cmd->add_option("--proc-den-max", bounds.proc_den_max);
    gen_random_cmd->add_option("-o,--out", out_path);

    CLI::App* gen_smith = gen->add_subcommand("smith-lb", "SmithRule lower-bound family");
    gen_smith->add_option("--k", lb_k, "group count")->check(CLI::PositiveNumber);
    gen_smith->add_option("--m", lb_m, "machines")->check(CLI::PositiveNumber);
    gen_smith->add_option("-o,--out", out_path);

    CLI::App* gen_tree = gen->add_subcommand("tree-lb", "tree lower-bound family");
    gen_tree->add_option("--depth", depth)->check(CLI::PositiveNumber);
    gen_tree->add_option("--variant", variant_str, "det | rand");
    gen_tree->add_option("--delta", delta_str, "tie-breaking perturbation");
    gen_tree->add_option("-o,--out", out_path);

    // ---- eval ----
    CLI::App* eval = app.add_subcommand("eval", "evaluate completion times or cost identities");
    eval->add_option("--instance", instance_path)->required();
    eval->add_option("--assignment", assignment_path);
    eval->add_option("--policy", policy_str, "sr | ps | rand | approx");
    eval->add_flag("--identities", identities, "emit the identity report instead");
    eval->add_option("-o,--out", out_path);

    // ---- dynamics ----
    CLI::App* dynamics_cmd = app.add_subcommand("dynamics", "run best-response dynamics");
    dynamics_cmd->add_option("--instance", instance_path)->required();
    dynamics_cmd->add_option("--x0", x0_path);
    dynamics_cmd->add_option("--policy", policy_str, "ps | rand | approx");
    dynamics_cmd->add_option("--alpha", alpha_str);
    dynamics_cmd->add_option("--epsilon", epsilon_str);
    dynamics_cmd->add_option("--max-steps", max_steps);
    bool summary_only = false;
    dynamics_cmd->add_flag("--summary-only", summary_only, "omit per-step records");
    dynamics_cmd->add_option("-o,--out", out_path);

    // ---- approx ----
    CLI::App* approx_cmd = app.add_subcommand("approx", "combinatorial approximation schedule");
    approx_cmd->add_option("--instance", instance_path);
    approx_cmd->add_option("--x0", x0_path);
    approx_cmd->add_option("--epsilon", epsilon_str);
    approx_cmd->add_option("--max-steps", max_steps);
    approx_cmd->add_option("--suite", suite, "run the named suite (small200) and emit CSV");
    approx_cmd->add_option("--cap", cap, "state cap for the optimum comparison");
    approx_cmd->add_option("-o,--out", out_path);

    // ---- poa ----
    CLI::App* poa_cmd = app.add_subcommand("poa", "brute-force price-of-anarchy report");
    poa_cmd->add_option("--instance", instance_path);
    poa_cmd->add_option("--policy", policy_str, "sr | ps | rand | approx");
    poa_cmd->add_option("--suite", suite, "run the named suite (small200) and emit CSV");
    poa_cmd->add_option("--cap", cap);
    poa_cmd->add_option("-o,--out", out_path);

    // ---- check ----
    CLI::App* check_cmd = app.add_subcommand("check", "invariant and inequality suites");
    check_cmd->add_option("--lemma-ineq", ineq_k, "exhaustive integer-pair inequality up to k");
    check_cmd->add_option("--pd", pd_kappa, "kernel positive-definiteness grid size");
    check_cmd->add_option("--identities", identity_sweep, "random identity sweep size");
    check_cmd->add_flag("--all", check_all, "run every suite at its default size");

    // ---- routing ----
    CLI::App* routing_cmd = app.add_subcommand("routing", "export the priority-routing image");
    routing_cmd->add_option("--instance", instance_path)->required();
    routing_cmd->add_option("-o,--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_random_cmd->parsed()) {
            emit(instance_to_json(gen_random(gen_n, gen_m, bounds, seed)), out_path);
        } else if (gen_smith->parsed()) {
            emit(bundle_to_json(gen_smithrule_lowerbound(lb_k, lb_m)), out_path);
        } else if (gen_tree->parsed()) {
            TreeVariant variant;
            if (variant_str == "det") {
                variant = TreeVariant::Deterministic13_6;
            } else if (variant_str == "rand") {
                variant = TreeVariant::Rand5_3;
            } else {
                throw std::invalid_argument("unknown tree variant '" + variant_str + "'");
            }
            emit(bundle_to_json(gen_tree_lowerbound(depth, variant, parse_rat(delta_str))),
                 out_path);
        } else if (eval->parsed()) {
            const Instance inst = load_instance_file(instance_path);
            const Assignment asg = assignment_or_default(inst, assignment_path);
            if (identities) {
                emit(identity_report_to_json(cost_identity_report(inst, asg)), out_path);
            } else {
                emit(cost_report_to_json(
                         policy_completion(inst, asg, policy_from_name(policy_str))),
                     out_path);
            }
        } else if (dynamics_cmd->parsed()) {
            const Instance inst = load_instance_file(instance_path);
            DynamicsConfig config;
            config.alpha = parse_rat(alpha_str);
            config.epsilon = parse_rat(epsilon_str);
            config.max_steps = max_steps;
            config.policy = policy_from_name(policy_str);
            emit(trace_to_json(basic_dynamics(inst, config,
                                              assignment_or_default(inst, x0_path)),
                               !summary_only),
                 out_path);
        } else if (approx_cmd->parsed()) {
            const Rat epsilon = parse_rat(epsilon_str);
            if (!suite.empty()) {
                if (suite != "small200") throw std::invalid_argument("unknown suite " + suite);
                std::cout << kCsvHeader << '\n';
                for (int id = 0; id < kSuiteSize; ++id) {
                    const Instance inst = suite_instance(id);
                    const ApproxResult result = approx_schedule(
                        inst, epsilon, first_feasible_assignment(inst), max_steps);
                    const Rat opt = brute_force_opt(inst, cap).cost;
                    std::cout << csv_row(id, PolicyKind::Approx, opt, result.smith_cost,
                                         result.smith_cost / opt,
                                         static_cast<long long>(result.trace.steps.size()))
                              << '\n';
                }
                return 0;
            }
            const Instance inst = load_instance_file(instance_path);
            const ApproxResult result =
                approx_schedule(inst, epsilon, assignment_or_default(inst, x0_path), max_steps);
            Json doc;
            doc["assignment"] = assignment_to_json(result.assignment);
            doc["smith_cost"] = rat_to_json(result.smith_cost);
            doc["converged"] = result.trace.converged;
            doc["steps"] = result.trace.steps.size();
            long long states = 1;
            bool small = true;
            for (const auto& row : inst.feasible) {
                states *= static_cast<long long>(row.size());
                if (states > cap) {
                    small = false;
                    break;
                }
            }
            if (small) {
                const Rat opt = brute_force_opt(inst, cap).cost;
                doc["opt_cost"] = rat_to_json(opt);
                doc["ratio"] = rat_to_json(result.smith_cost / opt);
            } else {
                doc["opt_cost"] = nullptr;
                doc["ratio"] = nullptr;
            }
            emit(doc, out_path);
        } else if (poa_cmd->parsed()) {
            const PolicyKind policy = policy_from_name(policy_str);
            if (!suite.empty()) {
                if (suite != "small200") throw std::invalid_argument("unknown suite " + suite);
                std::cout << kCsvHeader << '\n';
                for (int id = 0; id < kSuiteSize; ++id) {
                    const Instance inst = suite_instance(id);
                    const PoAReport report = poa_report(inst, policy, cap);
                    if (!report.worst_ratio.has_value()) continue;  // no pure Nash
                    Rat worst = report.nash_costs.front();
                    for (const Rat& c : report.nash_costs) worst = std::max(worst, c);
                    std::cout << csv_row(id, policy, report.opt_cost, worst,
                                         *report.worst_ratio, report.enumerated_states)
                              << '\n';
                }
                return 0;
            }
            emit(poa_report_to_json(poa_report(load_instance_file(instance_path), policy, cap)),
                 out_path);
        } else if (check_cmd->parsed()) {
            if (check_all) {
                if (ineq_k < 0) ineq_k = 500;
                if (pd_kappa < 0) pd_kappa = 25;
                if (identity_sweep < 0) identity_sweep = 50;
            }
            bool all_pass = true;
            if (ineq_k >= 0) {
                const bool pass = lemma_ineq_check(ineq_k);
                all_pass &= pass;
                std::cout << "lemma-ineq up to " << ineq_k << ": " << (pass ? "PASS" : "FAIL")
                          << '\n';
            }
            if (pd_kappa > 0) {
                const bool pass = kernel_pd_check(pd_kappa).positive_definite;
                all_pass &= pass;
                std::cout << "kernel positive definite up to " << pd_kappa << ": "
                          << (pass ? "PASS" : "FAIL") << '\n';
            }
            if (identity_sweep > 0) {
                bool pass = true;
                std::mt19937_64 rng(seed);
                for (int t = 0; t < identity_sweep; ++t) {
                    const Instance inst = suite_instance(t);
                    Assignment asg;
                    asg.machine_of.resize(static_cast<size_t>(inst.num_jobs));
                    for (int j = 0; j < inst.num_jobs; ++j) {
                        const auto& row = inst.feasible[static_cast<size_t>(j)];
                        asg.machine_of[static_cast<size_t>(j)] =
                            row[rng() % row.size()].machine;
                    }
                    pass &= cost_identity_report(inst, asg).all_identities_hold;
                }
                all_pass &= pass;
                std::cout << "cost identities on " << identity_sweep
                          << " random assignments: " << (pass ? "PASS" : "FAIL") << '\n';
            }
            return all_pass ? 0 : 1;
        } else if (routing_cmd->parsed()) {
            emit(routing_to_json(to_priority_routing(load_instance_file(instance_path))),
                 out_path);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 0;
}
