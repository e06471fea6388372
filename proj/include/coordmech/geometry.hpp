#pragma once

#include <map>
#include <utility>
#include <vector>

#include "coordmech/instance.hpp"

namespace coordmech {

/// Image of an assignment as one step function per machine:
///   f_i(y) = total weight of jobs on machine i with rho >= y,
/// stored as (rho, weight-at-that-rho) breakpoints sorted by rho.
struct StepProfile {
    std::vector<std::vector<std::pair<Rat, Rat>>> levels;
};

StepProfile step_profile(const Instance& inst, const Assignment& asg);

/// L2 inner product summed over machines: sum_i integral f_i * g_i dy,
/// integrated exactly over the merged breakpoints.
Rat l2_inner(const StepProfile& a, const StepProfile& b);

/// Signature of an assignment: per machine, the map from each exact rho
/// value to the total weight of assigned jobs with that ratio.
struct Signature {
    std::vector<std::map<Rat, Rat>> by_machine;
};

Signature signature(const Instance& inst, const Assignment& asg);

/// Kernel inner product sum_i sum_{r,s} a^i_r b^i_s * rs/(r+s) over the
/// sparse signature keys.
Rat kernel_inner(const Signature& a, const Signature& b);

/// Exact Sylvester check of the kernel matrix M_{rs} = rs/(r+s) on the
/// dense integer grid {1..kappa}: every leading principal minor must be
/// strictly positive. kappa <= 40 keeps the exact determinants tractable.
struct PdReport {
    bool positive_definite = false;
    std::vector<Rat> minors;  // leading principal minors, sizes 1..kappa
};

PdReport kernel_pd_check(int kappa);

/// Ratio  (sum_{r,s} u_r u_s rs/(r+s)) / (sum_{r,s} u_r u_s min(r,s))
/// for positive points (r, u); stays below pi/4 for every input.
double chung_ratio(const std::vector<std::pair<double, double>>& points);

/// Exact route for rational inputs: the two double sums behind chung_ratio,
/// (kernel sum, min sum), so that the only rounding left when comparing
/// against pi/4 is one final division.
std::pair<Rat, Rat> chung_sums(const std::vector<std::pair<Rat, Rat>>& points);

/// Exhaustively verifies k*(k+1) <= k^2/3 + (5/3) k*(k*+1)/2 for all
/// integer pairs 0 <= k, k* <= max_k in exact arithmetic.
bool lemma_ineq_check(long long max_k);

/// All cost quantities of one assignment computed along two routes
/// (policy formulas vs inner-product forms) with the exact identities
///   C^SR = 1/2 <phi,phi> + 1/2 lambda,   C^PS = <phi,phi>,
///   C^R  = |u|_M^2 + 1/2 lambda,         C^A  = 2 C^SR,
/// and the inequality C^R <= 2 C^SR - lambda.
struct IdentityReport {
    Rat c_sr, c_ps, c_r, c_a;
    Rat lambda;
    Rat phi_norm_sq;     // <phi(x), phi(x)>
    Rat kernel_norm_sq;  // |u(x)|^2 under M
    bool all_identities_hold = false;
};

IdentityReport cost_identity_report(const Instance& inst, const Assignment& asg);

}  // namespace coordmech
