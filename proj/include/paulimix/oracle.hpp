#pragma once

#include <array>
#include <cstdint>

#include "paulimix/solver.hpp"

namespace paulimix {

// Result of checking a weight vector against the stationarity system
//   sum_{j != i} w_ij p_j + lambda_i + lambda = c_i,   w_ij = 1 for the
// antipodal partner and 1/2 otherwise, with c = (a, 1-a, 1/2-u, 1/2+u,
// 1/2-v, 1/2+v), plus feasibility, dual feasibility and complementarity.
struct KktReport {
    double lambda = 0.0;                    // equality multiplier
    std::array<double, 6> lambda_i{};       // inequality multipliers
    double stationarity_residual = 0.0;     // max violation over the support rows
    bool feasibility_ok = false;            // weights on the simplex
    double complementarity_residual = 0.0;  // max |lambda_i * p_i|
    bool pass = false;
};

struct SolverConfig {
    double tol = 1e-10;         // convergence threshold on the FW gap
    int max_iter = 100000;
    int grid_resolution = 60;   // simplex lattice denominator
};

struct Projection {
    BlochVector nearest;
    double distance = 0.0;
};

// Euclidean projection onto the cross-polytope {|x|+|y|+|z| <= 1} by the
// sort-based soft-threshold method in the dominant octant.
Projection project_cross_polytope(const BlochVector& r);

// Six-state weights reproducing a point of the cross-polytope, slack split
// evenly on the z pair.
WeightVector weights_from_polytope_point(const BlochVector& m);

// Away-step conditional-gradient minimization of |r - sum_i p_i r_i| over
// the simplex. The returned distance is within sqrt(2*tol) of optimal.
Solution frank_wolfe_solve(const StateSet& set, const BlochVector& r,
                           const SolverConfig& cfg = {});

// Exhaustive search over all weight vectors with entries that are multiples
// of 1/grid_resolution; within 2/grid_resolution of optimal.
Solution grid_search(const StateSet& set, const BlochVector& r,
                     const SolverConfig& cfg = {});

// Evaluates the stationarity system at canonical (a,u,v): lambda_i = 0 on
// the support of w, lambda solved from the support rows by least squares,
// remaining lambda_i from their own rows. Failures are reported, not raised.
KktReport kkt_check(const UvParams& p, const WeightVector& w, double tol);

}  // namespace paulimix
