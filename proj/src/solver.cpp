#include "paulimix/solver.hpp"

#include <cmath>
#include <string>

#include "paulimix/errors.hpp"

namespace paulimix {

namespace {

const double kSqrt3 = std::sqrt(3.0);

void require_finite(const BlochVector& r) {
    if (!(std::isfinite(r.x) && std::isfinite(r.y) && std::isfinite(r.z)))
        throw InvalidInputError("Bloch vector has a non-finite component");
}

void clamp_weights(WeightVector& w) {
    for (double& wi : w)
        if (wi < 0.0) wi = 0.0;
}

}  // namespace

std::string_view to_string(Region region) {
    switch (region) {
        case Region::Exact: return "Exact";
        case Region::CaseI: return "CaseI";
        case Region::CaseII: return "CaseII";
        case Region::CaseIII: return "CaseIII";
        case Region::CaseIV: return "CaseIV";
    }
    return "?";
}

WeightVector CanonicalMap::apply_weights(const WeightVector& w) const {
    if (w.size() != 6)
        throw InvalidInputError("canonical map needs six weights, got " +
                                std::to_string(w.size()));
    WeightVector out = w;
    if (sign_z < 0) std::swap(out[0], out[1]);
    if (sign_x < 0) std::swap(out[2], out[3]);
    if (sign_y < 0) std::swap(out[4], out[5]);
    return out;
}

std::pair<double, double> compute_uv(const AkPhiParams& params) {
    const AkPhiParams q = params.checked();
    const double c = q.k * std::sqrt(q.a * (1.0 - q.a));
    return {c * std::cos(q.phi), c * std::sin(q.phi)};
}

std::pair<UvParams, CanonicalMap> canonicalize(const BlochVector& r) {
    require_finite(r);
    if (r.norm() > 1.0 + kInputTol)
        throw InvalidInputError("Bloch vector outside the unit ball: |r| = " +
                                std::to_string(r.norm()));
    CanonicalMap map{r.x < 0.0 ? -1 : 1, r.y < 0.0 ? -1 : 1, r.z < 0.0 ? -1 : 1};
    UvParams p{std::max(0.0, 0.5 * (1.0 - std::abs(r.z))), 0.5 * std::abs(r.x),
               0.5 * std::abs(r.y)};
    return {p, map};
}

Region classify(const UvParams& p) {
    if (p.a - p.u - p.v >= 0.0) return Region::Exact;
    if (p.u + p.v > 0.5 * (3.0 - 4.0 * p.a)) return Region::CaseIV;
    if (p.a - p.u + 2.0 * p.v < 0.0) return Region::CaseII;
    if (p.a - p.v + 2.0 * p.u < 0.0) return Region::CaseIII;
    return Region::CaseI;
}

WeightVector solve_exact_family(const UvParams& p, const ExactFamilyParams& t) {
    const double slack = p.a - p.u - p.v;
    if (!(slack >= -kInputTol))
        throw InvalidInputError("state is not exactly decomposable: a - u - v = " +
                                std::to_string(slack));
    double t1 = t.t1;
    double t2 = t.t2;
    if (!(t1 >= -kInputTol) || !(t2 >= -kInputTol))
        throw InvalidInputError("family parameters must be non-negative");
    t1 = std::max(t1, 0.0);
    t2 = std::max(t2, 0.0);
    if (!(t1 + t2 <= slack + kInputTol))
        throw InvalidInputError("family parameters exceed the p1 >= 0 bound: t1 + t2 = " +
                                std::to_string(t1 + t2));
    WeightVector w{1.0 - p.a - p.u - p.v - t1 - t2,
                   p.a - p.u - p.v - t1 - t2,
                   2.0 * p.u + t1,
                   t1,
                   2.0 * p.v + t2,
                   t2};
    clamp_weights(w);
    return w;
}

Solution solve(const BlochVector& r) {
    const auto [p, map] = canonicalize(r);
    const Region region = classify(p);
    double d = 0.0;
    WeightVector w(6, 0.0);
    switch (region) {
        case Region::Exact:
            w = solve_exact_family(p, {});
            break;
        case Region::CaseI: {
            d = 2.0 * (p.u + p.v - p.a) / kSqrt3;
            w[0] = 1.0 - (4.0 * p.a + 2.0 * p.u + 2.0 * p.v) / 3.0;
            w[2] = (2.0 * p.a - 2.0 * p.v + 4.0 * p.u) / 3.0;
            w[4] = (2.0 * p.a - 2.0 * p.u + 4.0 * p.v) / 3.0;
            break;
        }
        case Region::CaseII: {
            const double g = p.u - p.a;
            d = std::sqrt(4.0 * p.v * p.v + 2.0 * g * g);
            w[0] = 1.0 - p.a - p.u;
            w[2] = p.a + p.u;
            break;
        }
        case Region::CaseIII: {
            const double g = p.v - p.a;
            d = std::sqrt(4.0 * p.u * p.u + 2.0 * g * g);
            w[0] = 1.0 - p.a - p.v;
            w[4] = p.a + p.v;
            break;
        }
        case Region::CaseIV: {
            const double g = p.u + p.v - 0.5;
            const double h = 1.0 - 2.0 * p.a;
            d = std::sqrt(h * h + 2.0 * g * g);
            w[2] = 0.5 + p.u - p.v;
            w[4] = 0.5 - p.u + p.v;
            break;
        }
    }
    clamp_weights(w);
    return {d, map.apply_weights(w), region, true};
}

Solution solve(const AkPhiParams& params) { return solve(bloch_from_akphi(params)); }

double sacchi_threshold(double a, double phi) {
    if (!(std::isfinite(a) && std::isfinite(phi)))
        throw InvalidInputError("non-finite threshold arguments");
    const double pop = a * (1.0 - a);
    const double trig = std::cos(phi) + std::sin(phi);
    if (!(pop > 0.0))
        throw InvalidInputError("threshold undefined for a(1-a) = 0, a = " +
                                std::to_string(a));
    if (!(trig > 0.0))
        throw InvalidInputError("threshold undefined for cos(phi) + sin(phi) <= 0");
    return a / (std::sqrt(pop) * trig);
}

Solution sacchi_reference(const AkPhiParams& params) {
    const AkPhiParams q = params.checked();
    if (q.a > 0.5 + kInputTol)
        throw InvalidInputError("Sacchi reference expects the canonical octant a <= 1/2");
    auto [u, v] = compute_uv(q);
    if (u < -kInputTol || v < -kInputTol)
        throw InvalidInputError("Sacchi reference expects phi in [0, pi/2]");
    return sacchi_reference(UvParams{std::min(q.a, 0.5), std::max(u, 0.0), std::max(v, 0.0)});
}

Solution sacchi_reference(const UvParams& p) {
    // Window in Bloch terms: k > k_th <=> u+v > a, and
    // k <= a/sqrt(a(1-a)) <=> sqrt(u^2+v^2) <= a.
    if (!(p.u + p.v > p.a))
        throw OutOfWindowError("k <= k_th: the state is exactly decomposable");
    if (!(std::sqrt(p.u * p.u + p.v * p.v) <= p.a + kInputTol))
        throw OutOfWindowError("k > a/sqrt(a(1-a)): outside Sacchi's case-(i) window");
    Solution sol;
    sol.distance = 2.0 * (p.u + p.v - p.a) / kSqrt3;
    sol.weights = WeightVector(6, 0.0);
    sol.weights[0] = 1.0 - (4.0 * p.a + 2.0 * p.u + 2.0 * p.v) / 3.0;
    sol.weights[2] = (2.0 * p.a - 2.0 * p.v + 4.0 * p.u) / 3.0;
    sol.weights[4] = (2.0 * p.a - 2.0 * p.u + 4.0 * p.v) / 3.0;
    double min_w = sol.weights[0];
    for (double wi : sol.weights) min_w = std::min(min_w, wi);
    sol.valid = min_w >= -kInputTol;
    return sol;
}

}  // namespace paulimix
