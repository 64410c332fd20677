#pragma once

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <string>

#include "paulimix/oracle.hpp"
#include "paulimix/solver.hpp"

namespace paulimix::frontend {

struct SweepSpec {
    enum class Mode { Comment, Sacchi, Diff };

    double phi = std::numbers::pi / 3.0;
    int grid = 201;  // points per axis; a and k both run [0, 1] inclusive
    Mode mode = Mode::Comment;
};

struct VerifySpec {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    double tol = 1e-9;
};

struct VerifyReport {
    std::uint64_t states_checked = 0;  // random samples plus boundary booster
    double oracle_deviation = 0.0;     // max |analytic D - projection D|
    double reconstruction_deviation = 0.0;
    double simplex_deviation = 0.0;
    double symmetry_deviation = 0.0;
    std::uint64_t kkt_failures = 0;
    bool pass = false;
};

// Shortest decimal with at least 12 significant digits that parses back to
// exactly the same double.
std::string format_number(double x);

void run_solve(const AkPhiParams& params, std::ostream& os);
void run_solve(const BlochVector& r, std::ostream& os);

// CSV per mode: comment/sacchi use header a,k,phi,u,v,region,D,p0..p5
// (sacchi leaves region blank and appends a `valid` column); diff uses
// a,k,phi,D_comment,D_sacchi,diff. Rows are a-major, then k.
void run_sweep(const SweepSpec& spec, std::ostream& os);

// Seeded uniform-in-ball samples plus 10^4 stratified samples near each
// region boundary; checks analytic-vs-projection agreement, reconstruction,
// simplex feasibility, the 48-fold symmetry, and KKT certification.
VerifyReport run_verify(const VerifySpec& spec, std::ostream& os);

void run_counterexamples(std::ostream& os);

}  // namespace paulimix::frontend
