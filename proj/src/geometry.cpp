#include "coordmech/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coordmech/policies.hpp"

namespace coordmech {

StepProfile step_profile(const Instance& inst, const Assignment& asg) {
    check_feasible(inst, asg);
    StepProfile profile;
    profile.levels.resize(static_cast<size_t>(inst.num_machines));
    const auto grouped = jobs_by_machine(inst, asg);
    for (int i = 0; i < inst.num_machines; ++i) {
        std::map<Rat, Rat> at_rho;
        for (int j : grouped[static_cast<size_t>(i)]) {
            at_rho[inst.rho(i, j)] += inst.weight[static_cast<size_t>(j)];
        }
        auto& level = profile.levels[static_cast<size_t>(i)];
        level.assign(at_rho.begin(), at_rho.end());
    }
    return profile;
}

namespace {

// integral over [0, inf) of f * g for one machine. Both step functions drop
// at their breakpoints; on a segment ending at y the factor is the total
// weight at rho >= y, i.e. a suffix sum.
Rat l2_inner_one(const std::vector<std::pair<Rat, Rat>>& fa,
                 const std::vector<std::pair<Rat, Rat>>& fb) {
    if (fa.empty() || fb.empty()) return Rat(0);

    std::vector<Rat> cuts;
    cuts.reserve(fa.size() + fb.size());
    for (const auto& [rho, w] : fa) cuts.push_back(rho);
    for (const auto& [rho, w] : fb) cuts.push_back(rho);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    Rat total_a = 0, total_b = 0;
    for (const auto& [rho, w] : fa) total_a += w;
    for (const auto& [rho, w] : fb) total_b += w;

    Rat integral = 0;
    Rat prev = 0;
    size_t ia = 0, ib = 0;
    for (const Rat& cut : cuts) {
        // On (prev, cut] both functions still carry every weight with
        // rho >= cut; suffix sums were not yet reduced past `prev`.
        integral += (cut - prev) * total_a * total_b;
        while (ia < fa.size() && fa[ia].first == cut) total_a -= fa[ia++].second;
        while (ib < fb.size() && fb[ib].first == cut) total_b -= fb[ib++].second;
        prev = cut;
        if (total_a == 0 || total_b == 0) break;
    }
    return integral;
}

}  // namespace

Rat l2_inner(const StepProfile& a, const StepProfile& b) {
    if (a.levels.size() != b.levels.size()) {
        throw std::invalid_argument("l2_inner: profiles have different machine sets");
    }
    Rat sum = 0;
    for (size_t i = 0; i < a.levels.size(); ++i) {
        sum += l2_inner_one(a.levels[i], b.levels[i]);
    }
    return sum;
}

Signature signature(const Instance& inst, const Assignment& asg) {
    check_feasible(inst, asg);
    Signature sig;
    sig.by_machine.resize(static_cast<size_t>(inst.num_machines));
    for (int j = 0; j < inst.num_jobs; ++j) {
        const int i = asg.machine_of[static_cast<size_t>(j)];
        sig.by_machine[static_cast<size_t>(i)][inst.rho(i, j)] +=
            inst.weight[static_cast<size_t>(j)];
    }
    return sig;
}

Rat kernel_inner(const Signature& a, const Signature& b) {
    if (a.by_machine.size() != b.by_machine.size()) {
        throw std::invalid_argument("kernel_inner: signatures have different machine sets");
    }
    Rat sum = 0;
    for (size_t i = 0; i < a.by_machine.size(); ++i) {
        for (const auto& [r, ur] : a.by_machine[i]) {
            for (const auto& [s, vs] : b.by_machine[i]) {
                sum += ur * vs * r * s / (r + s);
            }
        }
    }
    return sum;
}

PdReport kernel_pd_check(int kappa) {
    if (kappa < 1 || kappa > 40) {
        throw std::invalid_argument("kernel_pd_check: kappa must lie in [1, 40]");
    }
    const size_t n = static_cast<size_t>(kappa);
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (size_t r = 0; r < n; ++r) {
        for (size_t s = 0; s < n; ++s) {
            const long rr = static_cast<long>(r + 1);
            const long ss = static_cast<long>(s + 1);
            m[r][s] = Rat(rr) * Rat(ss) / Rat(rr + ss);
        }
    }

    // Gaussian elimination without pivoting: for a positive definite matrix
    // every pivot is positive and the k-th leading principal minor is the
    // product of the first k pivots.
    PdReport report;
    report.positive_definite = true;
    Rat minor = 1;
    for (size_t k = 0; k < n; ++k) {
        const Rat pivot = m[k][k];
        if (pivot <= 0) {
            report.positive_definite = false;
            report.minors.push_back(minor * pivot);
            return report;
        }
        minor *= pivot;
        report.minors.push_back(minor);
        for (size_t r = k + 1; r < n; ++r) {
            const Rat factor = m[r][k] / pivot;
            for (size_t s = k; s < n; ++s) {
                m[r][s] -= factor * m[k][s];
            }
        }
    }
    return report;
}

double chung_ratio(const std::vector<std::pair<double, double>>& points) {
    if (points.empty()) throw std::invalid_argument("chung_ratio: empty input");
    for (const auto& [r, u] : points) {
        if (!(r > 0) || !(u > 0)) {
            throw std::invalid_argument("chung_ratio: points must be strictly positive");
        }
    }
    double kernel_sum = 0.0;
    double min_sum = 0.0;
    for (const auto& [r, ur] : points) {
        for (const auto& [s, us] : points) {
            kernel_sum += ur * us * (r * s) / (r + s);
            min_sum += ur * us * std::min(r, s);
        }
    }
    return kernel_sum / min_sum;
}

std::pair<Rat, Rat> chung_sums(const std::vector<std::pair<Rat, Rat>>& points) {
    if (points.empty()) throw std::invalid_argument("chung_sums: empty input");
    Rat kernel_sum = 0;
    Rat min_sum = 0;
    for (const auto& [r, ur] : points) {
        if (r <= 0 || ur <= 0) {
            throw std::invalid_argument("chung_sums: points must be strictly positive");
        }
        for (const auto& [s, us] : points) {
            kernel_sum += ur * us * r * s / (r + s);
            min_sum += ur * us * std::min(r, s);
        }
    }
    return {kernel_sum, min_sum};
}

bool lemma_ineq_check(long long max_k) {
    if (max_k < 0) throw std::invalid_argument("lemma_ineq_check: max_k must be >= 0");
    // k*(k+1) <= k^2/3 + (5/3) * k*(k*+1)/2, multiplied through by 6:
    //   6 k* (k+1) <= 2 k^2 + 5 k* (k*+1)
    for (long long k = 0; k <= max_k; ++k) {
        for (long long ks = 0; ks <= max_k; ++ks) {
            if (6 * ks * (k + 1) > 2 * k * k + 5 * ks * (ks + 1)) {
                return false;
            }
        }
    }
    return true;
}

IdentityReport cost_identity_report(const Instance& inst, const Assignment& asg) {
    IdentityReport report;
    report.c_sr = policy_completion(inst, asg, PolicyKind::SmithRule).weighted_total;
    report.c_ps = policy_completion(inst, asg, PolicyKind::ProportionalSharing).weighted_total;
    report.c_r = policy_completion(inst, asg, PolicyKind::Rand).weighted_total;
    report.c_a = policy_completion(inst, asg, PolicyKind::Approx).weighted_total;
    report.lambda = lambda_term(inst, asg);

    const StepProfile phi = step_profile(inst, asg);
    report.phi_norm_sq = l2_inner(phi, phi);
    const Signature u = signature(inst, asg);
    report.kernel_norm_sq = kernel_inner(u, u);

    const Rat half = make_rat(1, 2);
    report.all_identities_hold =
        report.c_sr == half * report.phi_norm_sq + half * report.lambda &&
        report.c_ps == report.phi_norm_sq &&
        report.c_r == report.kernel_norm_sq + half * report.lambda &&
        report.c_a == 2 * report.c_sr &&
        report.c_r <= 2 * report.c_sr - report.lambda;
    return report;
}

}  // namespace coordmech
