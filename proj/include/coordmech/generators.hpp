#pragma once

#include <cstdint>

#include "coordmech/instance.hpp"

namespace coordmech {

/// Bounds for gen_random: numerators and denominators are drawn uniformly
/// from [1, max]. Every bound must be at least 1.
struct RandomParams {
    long long weight_num_max = 10;
    long long weight_den_max = 4;
    long long proc_num_max = 10;
    long long proc_den_max = 4;
};

/// Random instance with bounded rational weights and processing times.
/// Deterministic in the seed, with no forbidden cells.
Instance gen_random(int n, int m, const RandomParams& params, std::uint64_t seed);

/// The standardized "small200" sweep instance for empirical price-of-anarchy
/// runs: 3..5 jobs on 2..3 machines, small enough for full equilibrium
/// enumeration. Odd indices carry unit weights, even ones rational weights.
Instance suite_instance(int index);

/// Lower-bound family for SmithRule: k job groups on m machines, group x
/// holding m/x^2 unit jobs, the y-th of which may run on machines 1..y.
/// Larger-y jobs get higher priority (lower id); the Nash assignment is the
/// greedy best-machine placement in priority order, the optimal one sends
/// the y-th job of each group to machine y. Requires x^2 | m for x <= k.
LowerBoundBundle gen_smithrule_lowerbound(int k, int m);

enum class TreeVariant {
    Deterministic13_6,  // decay pair (3/2, 1/2); PS-Nash family approaching 13/6
    Rand5_3,            // decay pair (4/3, 2/3); Rand-Nash family approaching 5/3
};

/// Tree lower-bound family: machines form a binary tree of depth `depth`
/// with two decay chains of length `depth` below each leaf, plus an anchor
/// loop at every chain end. Jobs are the arcs directed toward the root;
/// each runs on its head (Nash position) or its tail (optimal position).
/// Processing on a tree machine at depth d is b^(depth-d), on the k-th
/// chain machine s^(k-1), with (b, s) chosen per variant so that every
/// deviation is an exact tie; the per-machine factor (1 + delta * index)
/// then breaks all ties toward staying put, making the Nash strict.
LowerBoundBundle gen_tree_lowerbound(int depth, TreeVariant variant,
                                     const Rat& delta = Rat(1, 1048576));

}  // namespace coordmech
