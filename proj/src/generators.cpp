#include "coordmech/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace coordmech {

namespace {

// Uniform draw in [1, bound] that stays reproducible across platforms
// (distribution objects are implementation-defined; a plain modulus is not).
long long draw(std::mt19937_64& rng, long long bound) {
    return static_cast<long long>(rng() % static_cast<std::uint64_t>(bound)) + 1;
}

}  // namespace

Instance gen_random(int n, int m, const RandomParams& params, std::uint64_t seed) {
    if (n < 1 || m < 1) throw std::invalid_argument("gen_random: need n, m >= 1");
    if (params.weight_num_max < 1 || params.weight_den_max < 1 || params.proc_num_max < 1 ||
        params.proc_den_max < 1) {
        throw std::invalid_argument("gen_random: degenerate bounds");
    }
    std::mt19937_64 rng(seed);
    std::vector<Rat> weights;
    weights.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        weights.push_back(
            make_rat(draw(rng, params.weight_num_max), draw(rng, params.weight_den_max)));
    }
    ProcMatrix proc(static_cast<size_t>(m),
                    std::vector<std::optional<Rat>>(static_cast<size_t>(n)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            proc[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                make_rat(draw(rng, params.proc_num_max), draw(rng, params.proc_den_max));
        }
    }
    return make_instance(std::move(weights), proc);
}

Instance suite_instance(int index) {
    if (index < 0) throw std::invalid_argument("suite_instance: index must be >= 0");
    RandomParams params;
    if (index % 2 == 1) {
        params.weight_num_max = 1;
        params.weight_den_max = 1;
    }
    const int n = 3 + index % 3;
    const int m = 2 + index % 2;
    return gen_random(n, m, params, static_cast<std::uint64_t>(index) + 1);
}

LowerBoundBundle gen_smithrule_lowerbound(int k, int m) {
    if (k < 1 || m < 1) throw std::invalid_argument("gen_smithrule_lowerbound: need k, m >= 1");
    for (int x = 1; x <= k; ++x) {
        if (m % (x * x) != 0) {
            throw std::invalid_argument("gen_smithrule_lowerbound: m must be divisible by x^2 "
                                        "for every x <= k (fails at x = " +
                                        std::to_string(x) + ")");
        }
    }

    // Enumerate jobs in priority order: larger y (= more allowed machines)
    // first, so the job index doubles as the Smith tie-breaking id.
    struct GroupJob {
        int x;
        int y;
    };
    std::vector<GroupJob> jobs;
    for (int x = 1; x <= k; ++x) {
        const int count = m / (x * x);
        for (int y = 1; y <= count; ++y) jobs.push_back(GroupJob{x, y});
    }
    std::sort(jobs.begin(), jobs.end(), [](const GroupJob& a, const GroupJob& b) {
        if (a.y != b.y) return a.y > b.y;
        return a.x < b.x;
    });

    const int n = static_cast<int>(jobs.size());
    std::vector<Rat> weights(static_cast<size_t>(n), Rat(1));
    std::vector<std::vector<std::pair<int, Rat>>> feasible(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < jobs[static_cast<size_t>(j)].y; ++i) {
            feasible[static_cast<size_t>(j)].emplace_back(i, Rat(1));
        }
    }

    LowerBoundBundle bundle;
    bundle.instance = make_instance_sparse(std::move(weights), m, std::move(feasible));
    bundle.target_ratio = Rat(4);

    bundle.opt_assignment.machine_of.resize(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        bundle.opt_assignment.machine_of[static_cast<size_t>(j)] =
            jobs[static_cast<size_t>(j)].y - 1;
    }

    // Greedy in priority order: place on the machine with the least load
    // among the allowed ones (unit jobs, so load minimizes completion),
    // breaking ties toward the smallest index.
    bundle.nash_assignment.machine_of.resize(static_cast<size_t>(n));
    std::vector<int> load(static_cast<size_t>(m), 0);
    for (int j = 0; j < n; ++j) {
        int best = 0;
        for (int i = 1; i < jobs[static_cast<size_t>(j)].y; ++i) {
            if (load[static_cast<size_t>(i)] < load[static_cast<size_t>(best)]) best = i;
        }
        bundle.nash_assignment.machine_of[static_cast<size_t>(j)] = best;
        ++load[static_cast<size_t>(best)];
    }
    return bundle;
}

namespace {

struct TreeLayout {
    int depth;
    int tree_count;    // 2^(depth+1) - 1
    int leaves;        // 2^depth
    int chain_count;   // 2 * depth * leaves
    bool with_ballast;

    int tree_node(int heap_index) const { return heap_index; }
    int leaf(int t) const { return (1 << depth) - 1 + t; }
    int chain(int dist, int t, int side) const {
        return tree_count + (dist - 1) * 2 * leaves + 2 * t + side;
    }
    int ballast(int t) const { return tree_count + chain_count + t; }
    int total_machines() const { return tree_count + chain_count + (with_ballast ? leaves : 0); }
};

}  // namespace

LowerBoundBundle gen_tree_lowerbound(int depth, TreeVariant variant, const Rat& delta) {
    if (depth < 1) throw std::invalid_argument("gen_tree_lowerbound: depth must be >= 1");
    if (delta < 0) throw std::invalid_argument("gen_tree_lowerbound: delta must be >= 0");

    const bool det = variant == TreeVariant::Deterministic13_6;
    const Rat b = det ? make_rat(3, 2) : make_rat(4, 3);
    const Rat s = det ? make_rat(1, 2) : make_rat(2, 3);
    // Stuck calibration jobs pin the deterministic family's limiting ratio
    // at 13/6; the Rand family needs none to reach 5/3.
    const Rat ballast_size = make_rat(16, 7);

    TreeLayout layout;
    layout.depth = depth;
    layout.leaves = 1 << depth;
    layout.tree_count = 2 * layout.leaves - 1;
    layout.chain_count = 2 * depth * layout.leaves;
    layout.with_ballast = det;

    // Per-machine processing time: base decay value times the tie-breaking
    // perturbation (1 + delta * rank / machine_count), with rank the
    // breadth-first machine index. Normalizing by the machine count keeps
    // the perturbation below delta everywhere, so it breaks every deviation
    // tie toward staying put without shifting the cost ratios.
    const int total = layout.total_machines();
    std::vector<Rat> machine_proc(static_cast<size_t>(total));
    auto perturb = [&](int machine, const Rat& base) -> Rat {
        return base * (1 + delta * machine / total);
    };
    {
        Rat level_value = 1;  // b^(depth - d), walked down from the root value
        for (int d = 0; d < depth; ++d) level_value *= b;
        for (int d = 0; d <= depth; ++d) {
            const int first = (1 << d) - 1;
            const int count = 1 << d;
            for (int t = 0; t < count; ++t) {
                machine_proc[static_cast<size_t>(first + t)] = perturb(first + t, level_value);
            }
            level_value /= b;
        }

        Rat chain_value = 1;  // s^(dist-1)
        for (int dist = 1; dist <= depth; ++dist) {
            for (int t = 0; t < layout.leaves; ++t) {
                for (int side = 0; side < 2; ++side) {
                    const int i = layout.chain(dist, t, side);
                    machine_proc[static_cast<size_t>(i)] = perturb(i, chain_value);
                }
            }
            chain_value *= s;
        }
        if (layout.with_ballast) {
            for (int t = 0; t < layout.leaves; ++t) {
                const int i = layout.ballast(t);
                machine_proc[static_cast<size_t>(i)] = perturb(i, ballast_size);
            }
        }
    }

    std::vector<std::vector<std::pair<int, Rat>>> feasible;
    std::vector<int> nash_of, opt_of;
    auto add_arc = [&](int head, int tail) {
        feasible.push_back({{head, machine_proc[static_cast<size_t>(head)]},
                            {tail, machine_proc[static_cast<size_t>(tail)]}});
        nash_of.push_back(head);
        opt_of.push_back(tail);
    };
    auto add_loop = [&](int machine) {
        feasible.push_back({{machine, machine_proc[static_cast<size_t>(machine)]}});
        nash_of.push_back(machine);
        opt_of.push_back(machine);
    };

    // Tree arcs: every non-root node toward its parent.
    for (int v = 1; v < layout.tree_count; ++v) add_arc((v - 1) / 2, v);
    // Junction arcs: first chain machine of each side toward its leaf.
    for (int t = 0; t < layout.leaves; ++t) {
        for (int side = 0; side < 2; ++side) add_arc(layout.leaf(t), layout.chain(1, t, side));
    }
    // Chain arcs: distance k toward distance k-1.
    for (int dist = 2; dist <= depth; ++dist) {
        for (int t = 0; t < layout.leaves; ++t) {
            for (int side = 0; side < 2; ++side) {
                add_arc(layout.chain(dist - 1, t, side), layout.chain(dist, t, side));
            }
        }
    }
    // Anchor loops at the chain ends, calibration loops on their own machines.
    for (int t = 0; t < layout.leaves; ++t) {
        for (int side = 0; side < 2; ++side) add_loop(layout.chain(depth, t, side));
    }
    if (layout.with_ballast) {
        for (int t = 0; t < layout.leaves; ++t) add_loop(layout.ballast(t));
    }

    const size_t n = feasible.size();
    LowerBoundBundle bundle;
    bundle.instance = make_instance_sparse(std::vector<Rat>(n, Rat(1)), total,
                                           std::move(feasible));
    bundle.nash_assignment.machine_of = std::move(nash_of);
    bundle.opt_assignment.machine_of = std::move(opt_of);
    bundle.target_ratio = det ? make_rat(13, 6) : make_rat(5, 3);
    return bundle;
}

}  // namespace coordmech
