#include "paulimix/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "paulimix/errors.hpp"

namespace paulimix {

namespace {

void require_finite(const BlochVector& r) {
    if (!(std::isfinite(r.x) && std::isfinite(r.y) && std::isfinite(r.z)))
        throw InvalidInputError("Bloch vector has a non-finite component");
}

void require_states(const StateSet& set) {
    if (set.size() == 0) throw InvalidInputError("state set is empty");
    for (const BlochVector& s : set.states)
        if (std::abs(s.norm() - 1.0) > kInputTol)
            throw InvalidInputError("state set contains a non-pure state, |r| = " +
                                    std::to_string(s.norm()));
}

void require_config(const SolverConfig& cfg) {
    if (!(cfg.tol > 0.0)) throw InvalidInputError("tol must be positive");
    if (cfg.max_iter < 1) throw InvalidInputError("max_iter must be positive");
    if (cfg.grid_resolution < 1) throw InvalidInputError("grid_resolution must be positive");
}

double soft_shrink(double c, double theta) {
    const double m = std::abs(c) - theta;
    if (m <= 0.0) return 0.0;
    return std::copysign(m, c);
}

struct GridBest {
    double d2 = std::numeric_limits<double>::infinity();
    std::array<int, 8> counts{};
};

void grid_descend(const std::vector<BlochVector>& states, const BlochVector& r,
                  int resolution, std::size_t i, int rem, BlochVector m,
                  std::array<int, 8>& counts, GridBest& best) {
    if (i + 1 == states.size()) {
        counts[i] = rem;
        const BlochVector d = r - (m + states[i] * (static_cast<double>(rem) / resolution));
        const double d2 = d.dot(d);
        if (d2 < best.d2) {
            best.d2 = d2;
            best.counts = counts;
        }
        return;
    }
    for (int c = 0; c <= rem; ++c) {
        counts[i] = c;
        grid_descend(states, r, resolution, i + 1, rem - c,
                     m + states[i] * (static_cast<double>(c) / resolution), counts, best);
    }
}

}  // namespace

Projection project_cross_polytope(const BlochVector& r) {
    require_finite(r);
    const double l1 = r.norm1();
    if (l1 <= 1.0) return {r, 0.0};
    // Soft threshold on the sorted absolute coordinates (dominant octant).
    double s[3] = {std::abs(r.x), std::abs(r.y), std::abs(r.z)};
    std::sort(s, s + 3, std::greater<>());
    double cum = 0.0;
    double theta = 0.0;
    for (int j = 0; j < 3; ++j) {
        cum += s[j];
        const double t = (cum - 1.0) / (j + 1);
        if (s[j] > t) theta = t;
    }
    const BlochVector nearest{soft_shrink(r.x, theta), soft_shrink(r.y, theta),
                              soft_shrink(r.z, theta)};
    return {nearest, (r - nearest).norm()};
}

WeightVector weights_from_polytope_point(const BlochVector& m) {
    require_finite(m);
    const double l1 = m.norm1();
    if (l1 > 1.0 + kInputTol)
        throw InvalidInputError("point outside the reachable cross-polytope, |m|_1 = " +
                                std::to_string(l1));
    const double slack = std::max(0.0, 1.0 - l1);
    return {std::max(m.z, 0.0) + 0.5 * slack, std::max(-m.z, 0.0) + 0.5 * slack,
            std::max(m.x, 0.0),               std::max(-m.x, 0.0),
            std::max(m.y, 0.0),               std::max(-m.y, 0.0)};
}

Solution frank_wolfe_solve(const StateSet& set, const BlochVector& r,
                           const SolverConfig& cfg) {
    require_states(set);
    require_finite(r);
    if (r.norm() > 1.0 + kInputTol)
        throw InvalidInputError("Bloch vector outside the unit ball: |r| = " +
                                std::to_string(r.norm()));
    require_config(cfg);

    const std::size_t n = set.size();
    const auto& s = set.states;

    // Start from the vertex most aligned with the target.
    std::size_t start = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (s[i].dot(r) > s[start].dot(r)) start = i;
    WeightVector p(n, 0.0);
    p[start] = 1.0;
    BlochVector m = s[start];

    std::vector<double> g(n, 0.0);
    for (int iter = 0;; ++iter) {
        // Gradient of 0.5 |r - sum_i p_i s_i|^2 in p, up to the simplex
        // constant: g_i = <s_i, m - r>.
        const BlochVector res = m - r;
        std::size_t fw = 0, away = 0;
        double dot_gp = 0.0;
        bool have_away = false;
        for (std::size_t i = 0; i < n; ++i) {
            g[i] = s[i].dot(res);
            dot_gp += g[i] * p[i];
            if (g[i] < g[fw]) fw = i;
            if (p[i] > 0.0 && (!have_away || g[i] > g[away])) {
                away = i;
                have_away = true;
            }
        }
        const double gap = dot_gp - g[fw];
        if (gap <= cfg.tol) break;
        if (iter >= cfg.max_iter)
            throw NonConvergenceError("conditional-gradient solver stopped at gap " +
                                          std::to_string(gap) + " after " +
                                          std::to_string(cfg.max_iter) + " iterations",
                                      gap);

        BlochVector dir{};
        double gamma_max = 0.0;
        bool drop_candidate = false;
        if (gap >= g[away] - dot_gp || p[away] >= 1.0) {
            dir = s[fw] - m;
            gamma_max = 1.0;
        } else {
            dir = m - s[away];
            gamma_max = p[away] / (1.0 - p[away]);
            drop_candidate = true;
        }
        const double denom = dir.dot(dir);
        if (denom <= 0.0)
            throw NonConvergenceError("conditional-gradient solver stalled at gap " +
                                          std::to_string(gap),
                                      gap);
        const double gamma =
            std::clamp((r - m).dot(dir) / denom, 0.0, gamma_max);
        if (drop_candidate) {
            for (double& pi : p) pi *= 1.0 + gamma;
            p[away] -= gamma;
            if (p[away] < 1e-15) p[away] = 0.0;
        } else {
            for (double& pi : p) pi *= 1.0 - gamma;
            p[fw] += gamma;
        }
        double sum = 0.0;
        for (double pi : p) sum += pi;
        m = {};
        for (std::size_t i = 0; i < n; ++i) {
            p[i] /= sum;
            m = m + s[i] * p[i];
        }
    }
    for (double& pi : p)
        if (pi < 0.0) pi = 0.0;
    return {(r - m).norm(), p, std::nullopt, true};
}

Solution grid_search(const StateSet& set, const BlochVector& r, const SolverConfig& cfg) {
    require_states(set);
    require_finite(r);
    require_config(cfg);
    if (set.size() > 8)
        throw InvalidInputError("state set too large for exhaustive search: " +
                                std::to_string(set.size()));
    GridBest best;
    std::array<int, 8> counts{};
    grid_descend(set.states, r, cfg.grid_resolution, 0, cfg.grid_resolution, {}, counts,
                 best);
    WeightVector w(set.size(), 0.0);
    for (std::size_t i = 0; i < set.size(); ++i)
        w[i] = static_cast<double>(best.counts[i]) / cfg.grid_resolution;
    return {std::sqrt(best.d2), w, std::nullopt, true};
}

KktReport kkt_check(const UvParams& p, const WeightVector& w, double tol) {
    if (w.size() != 6)
        throw InvalidInputError("KKT check needs six weights, got " +
                                std::to_string(w.size()));
    const std::array<double, 6> c = {p.a,       1.0 - p.a, 0.5 - p.u,
                                     0.5 + p.u, 0.5 - p.v, 0.5 + p.v};
    double total = 0.0;
    double min_w = w[0];
    for (double wi : w) {
        total += wi;
        min_w = std::min(min_w, wi);
    }
    // Row i couples full weight to the antipodal partner, half to the rest.
    std::array<double, 6> coupled{};
    for (int i = 0; i < 6; ++i) {
        const int partner = i ^ 1;
        coupled[i] = w[partner] + 0.5 * (total - w[i] - w[partner]);
    }

    KktReport rep;
    int support = 0;
    double lambda_sum = 0.0;
    for (int i = 0; i < 6; ++i)
        if (w[i] > tol) {
            ++support;
            lambda_sum += c[i] - coupled[i];
        }
    rep.lambda = support > 0 ? lambda_sum / support : 0.0;

    double min_lambda_i = 0.0;
    for (int i = 0; i < 6; ++i) {
        const double row = c[i] - coupled[i] - rep.lambda;
        if (w[i] > tol) {
            rep.lambda_i[i] = 0.0;
            rep.stationarity_residual = std::max(rep.stationarity_residual, std::abs(row));
        } else {
            rep.lambda_i[i] = row;
            min_lambda_i = std::min(min_lambda_i, row);
        }
        rep.complementarity_residual =
            std::max(rep.complementarity_residual, std::abs(rep.lambda_i[i] * w[i]));
    }
    rep.feasibility_ok = std::abs(total - 1.0) <= tol && min_w >= -tol;
    rep.pass = rep.stationarity_residual <= tol && rep.complementarity_residual <= tol &&
               min_lambda_i >= -tol && rep.feasibility_ok;
    return rep;
}

}  // namespace paulimix
