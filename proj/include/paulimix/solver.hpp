#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "paulimix/qubit.hpp"

namespace paulimix {

// Canonical-octant coordinates: a = (1-z)/2, u = x/2, v = y/2 with
// a in [0, 1/2] and u, v >= 0.
struct UvParams {
    double a = 0.0;
    double u = 0.0;
    double v = 0.0;
};

enum class Region { Exact, CaseI, CaseII, CaseIII, CaseIV };

std::string_view to_string(Region region);

// Sign flips taking an arbitrary Bloch vector into the canonical octant.
// Applying the map twice is the identity.
struct CanonicalMap {
    int sign_x = 1;
    int sign_y = 1;
    int sign_z = 1;

    BlochVector apply(const BlochVector& r) const {
        return {sign_x * r.x, sign_y * r.y, sign_z * r.z};
    }

    // De-canonicalizes six-state weights: swaps (p2,p3) iff sign_x = -1,
    // (p4,p5) iff sign_y = -1, (p0,p1) iff sign_z = -1.
    WeightVector apply_weights(const WeightVector& w) const;
};

struct Solution {
    double distance = 0.0;
    WeightVector weights;
    // Set by the analytic path; empty for numeric oracles and the Sacchi form.
    std::optional<Region> region;
    // All weights >= 0; false only for the Sacchi reference.
    bool valid = true;
};

// Free parameters of the exact-decomposition family (both >= 0, bounded by
// p1 = a - u - v - t1 - t2 >= 0).
struct ExactFamilyParams {
    double t1 = 0.0;
    double t2 = 0.0;
};

std::pair<double, double> compute_uv(const AkPhiParams& params);

std::pair<UvParams, CanonicalMap> canonicalize(const BlochVector& r);

Region classify(const UvParams& p);

WeightVector solve_exact_family(const UvParams& p, const ExactFamilyParams& t);

// Nearest six-state mixture in trace norm, via the closed forms of the
// region classification. Weights come back in the original orientation.
Solution solve(const BlochVector& r);
Solution solve(const AkPhiParams& params);

// Coherence threshold k_th = a / (sqrt(a(1-a)) (cos phi + sin phi));
// k > k_th exactly when u + v > a.
double sacchi_threshold(double a, double phi);

// The earlier reference solution: the CaseI closed form evaluated
// unconditionally inside the window k_th < k <= a/sqrt(a(1-a)).
// Weights may be negative; `valid` then flags the solution.
Solution sacchi_reference(const AkPhiParams& params);
Solution sacchi_reference(const UvParams& p);

}  // namespace paulimix
