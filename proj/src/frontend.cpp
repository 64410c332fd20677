#include "paulimix/frontend.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

#include "paulimix/errors.hpp"
#include "paulimix/random.hpp"

namespace paulimix::frontend {

namespace {

constexpr double kKktTol = 1e-9;
constexpr std::uint64_t kBoosterPerBoundary = 10000;

std::string format_fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

// KKT certification of an analytic solution: the checker works in the
// canonical octant, so fold the weights back before checking.
KktReport certify(const BlochVector& r, const Solution& sol, double tol) {
    const auto [p, map] = canonicalize(r);
    return kkt_check(p, map.apply_weights(sol.weights), tol);
}

void print_solution(const Solution& sol, const KktReport& kkt, std::ostream& os) {
    os << "D = " << format_number(sol.distance) << "\n";
    os << "region = " << (sol.region ? to_string(*sol.region) : "-") << "\n";
    for (int i = 0; i < 6; ++i)
        os << "p" << i << " = " << format_number(sol.weights[i]) << "\n";
    os << "kkt = " << (kkt.pass ? "pass" : "fail") << "\n";
}

// Generation-time self check: weights on the simplex and the trace-norm
// distance reproduced by the reconstructed mixture.
void check_row(const BlochVector& r, const Solution& sol) {
    double sum = 0.0;
    for (double w : sol.weights) {
        if (w < 0.0) throw std::logic_error("sweep row has a negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::logic_error("sweep row weights leave the simplex");
    const BlochVector m = mixture(StateSet::pauli_eigenstates(), sol.weights);
    const double tn = trace_norm(bloch_to_matrix(r) - bloch_to_matrix(m));
    if (std::abs(tn - sol.distance) > 1e-12)
        throw std::logic_error("sweep row distance does not match the trace norm");
}

struct SweepPoint {
    AkPhiParams params;
    BlochVector r;
    double u = 0.0;
    double v = 0.0;
};

template <typename RowFn>
void for_each_sweep_point(const SweepSpec& spec, RowFn&& row) {
    if (spec.grid < 2) throw InvalidInputError("sweep grid must have at least 2 points");
    AkPhiParams{0.0, 0.0, spec.phi}.checked();  // validate phi up front
    const int n = spec.grid;
    for (int ia = 0; ia < n; ++ia) {
        const double a = static_cast<double>(ia) / (n - 1);
        for (int ik = 0; ik < n; ++ik) {
            const double k = static_cast<double>(ik) / (n - 1);
            SweepPoint pt;
            pt.params = AkPhiParams{a, k, spec.phi};
            pt.r = bloch_from_akphi(pt.params);
            const auto uv = compute_uv(pt.params);
            pt.u = uv.first;
            pt.v = uv.second;
            row(pt);
        }
    }
}

void write_prefix(std::ostream& os, const SweepPoint& pt) {
    os << format_number(pt.params.a) << ',' << format_number(pt.params.k) << ','
       << format_number(pt.params.phi) << ',' << format_number(pt.u) << ','
       << format_number(pt.v);
}

void write_weights(std::ostream& os, const WeightVector& w) {
    for (double wi : w) os << ',' << format_number(wi);
}

// Region-boundary sample in canonical coordinates, pushed through a random
// signed permutation; falls back to a plain ball sample if the rejection
// loop runs dry (the stream stays deterministic either way).
BlochVector boundary_sample(Rng& rng, int boundary) {
    const auto& syms = octahedral_symmetries();
    for (int attempt = 0; attempt < 256; ++attempt) {
        const double mag = std::pow(10.0, rng.uniform(-12.0, -2.0));
        const double delta = rng.uniform() < 0.5 ? -mag : mag;
        double a = 0.0, u = 0.0, v = 0.0;
        switch (boundary) {
            case 0: {  // exact decomposability: a = u + v
                u = rng.uniform(0.0, 0.35);
                v = rng.uniform(0.0, 0.35);
                a = u + v + delta;
                break;
            }
            case 1: {  // CaseI / CaseIV: u + v = (3 - 4a)/2
                a = rng.uniform(0.41, 0.5);
                const double s = 0.5 * (3.0 - 4.0 * a) + delta;
                const double f = rng.uniform(0.4, 0.6);
                u = f * s;
                v = s - u;
                break;
            }
            case 2: {  // CaseI / CaseII: a - u + 2v = 0
                a = rng.uniform(0.05, 0.35);
                u = rng.uniform(a, a + 0.3);
                v = 0.5 * (u - a) + delta;
                break;
            }
            default: {  // CaseI / CaseIII: a - v + 2u = 0
                a = rng.uniform(0.05, 0.35);
                v = rng.uniform(a, a + 0.3);
                u = 0.5 * (v - a) + delta;
                break;
            }
        }
        if (a < 0.0 || a > 0.5 || u < 0.0 || v < 0.0) continue;
        const BlochVector r{2.0 * u, 2.0 * v, 1.0 - 2.0 * a};
        if (r.norm() > 1.0) continue;
        return syms[rng.index(syms.size())].apply(r);
    }
    return rng.in_ball();
}

std::string format_metric(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

}  // namespace

std::string format_number(double x) {
    if (x == 0.0) return "0";
    char buf[64];
    for (int prec = 12; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

void run_solve(const AkPhiParams& params, std::ostream& os) {
    const BlochVector r = bloch_from_akphi(params);
    const Solution sol = solve(r);
    print_solution(sol, certify(r, sol, kKktTol), os);
}

void run_solve(const BlochVector& r, std::ostream& os) {
    const Solution sol = solve(r);
    print_solution(sol, certify(r, sol, kKktTol), os);
}

void run_sweep(const SweepSpec& spec, std::ostream& os) {
    std::uint64_t row = 0;
    switch (spec.mode) {
        case SweepSpec::Mode::Comment:
            os << "a,k,phi,u,v,region,D,p0,p1,p2,p3,p4,p5\n";
            for_each_sweep_point(spec, [&](const SweepPoint& pt) {
                const Solution sol = solve(pt.r);
                if (row++ % 100 == 0) check_row(pt.r, sol);
                write_prefix(os, pt);
                os << ',' << to_string(*sol.region) << ',' << format_number(sol.distance);
                write_weights(os, sol.weights);
                os << '\n';
            });
            break;
        case SweepSpec::Mode::Sacchi:
            os << "a,k,phi,u,v,region,D,p0,p1,p2,p3,p4,p5,valid\n";
            for_each_sweep_point(spec, [&](const SweepPoint& pt) {
                write_prefix(os, pt);
                const auto [p, map] = canonicalize(pt.r);
                try {
                    const Solution sol = sacchi_reference(p);
                    os << ",," << format_number(sol.distance);
                    write_weights(os, map.apply_weights(sol.weights));
                    os << ',' << (sol.valid ? '1' : '0');
                } catch (const OutOfWindowError&) {
                    os << ",,,,,,,,,";
                }
                os << '\n';
            });
            break;
        case SweepSpec::Mode::Diff:
            os << "a,k,phi,D_comment,D_sacchi,diff\n";
            for_each_sweep_point(spec, [&](const SweepPoint& pt) {
                const Solution sol = solve(pt.r);
                os << format_number(pt.params.a) << ',' << format_number(pt.params.k)
                   << ',' << format_number(pt.params.phi) << ','
                   << format_number(sol.distance) << ',';
                const auto [p, map] = canonicalize(pt.r);
                try {
                    const Solution ref = sacchi_reference(p);
                    os << format_number(ref.distance) << ','
                       << format_number(sol.distance - ref.distance);
                } catch (const OutOfWindowError&) {
                    os << ',';
                }
                os << '\n';
            });
            break;
    }
}

VerifyReport run_verify(const VerifySpec& spec, std::ostream& os) {
    if (spec.samples < 1) throw InvalidInputError("verify needs at least one sample");
    if (!(spec.tol > 0.0)) throw InvalidInputError("verify tol must be positive");

    const StateSet& b3 = StateSet::pauli_eigenstates();
    const auto& syms = octahedral_symmetries();
    Rng rng(spec.seed);
    VerifyReport rep;

    auto check_state = [&](const BlochVector& r) {
        const Solution sol = solve(r);
        const Projection proj = project_cross_polytope(r);
        rep.oracle_deviation =
            std::max(rep.oracle_deviation, std::abs(sol.distance - proj.distance));

        double sum = 0.0;
        double min_w = sol.weights[0];
        for (double w : sol.weights) {
            sum += w;
            min_w = std::min(min_w, w);
        }
        rep.simplex_deviation = std::max(rep.simplex_deviation, std::abs(sum - 1.0));
        rep.simplex_deviation = std::max(rep.simplex_deviation, std::max(0.0, -min_w));

        const BlochVector m = mixture(b3, sol.weights);
        const double tn = trace_norm(bloch_to_matrix(r) - bloch_to_matrix(m));
        rep.reconstruction_deviation =
            std::max(rep.reconstruction_deviation, std::abs(tn - sol.distance));

        for (const SignedPermutation& sym : syms) {
            const double d = solve(sym.apply(r)).distance;
            rep.symmetry_deviation =
                std::max(rep.symmetry_deviation, std::abs(d - sol.distance));
        }

        if (!certify(r, sol, spec.tol).pass) ++rep.kkt_failures;
        ++rep.states_checked;
    };

    for (std::uint64_t i = 0; i < spec.samples; ++i) check_state(rng.in_ball());
    for (int boundary = 0; boundary < 4; ++boundary)
        for (std::uint64_t i = 0; i < kBoosterPerBoundary; ++i)
            check_state(boundary_sample(rng, boundary));

    rep.pass = rep.oracle_deviation <= spec.tol &&
               rep.reconstruction_deviation <= spec.tol &&
               rep.simplex_deviation <= spec.tol && rep.symmetry_deviation <= spec.tol &&
               rep.kkt_failures == 0;

    os << "states checked           " << rep.states_checked << "\n";
    os << "oracle deviation         " << format_metric(rep.oracle_deviation) << "\n";
    os << "reconstruction deviation " << format_metric(rep.reconstruction_deviation) << "\n";
    os << "simplex deviation        " << format_metric(rep.simplex_deviation) << "\n";
    os << "symmetry deviation       " << format_metric(rep.symmetry_deviation) << "\n";
    os << "kkt failures             " << rep.kkt_failures << " / " << rep.states_checked
       << "\n";
    os << "verify: " << (rep.pass ? "PASS" : "FAIL") << " (tol "
       << format_number(spec.tol) << ")\n";
    return rep;
}

void run_counterexamples(std::ostream& os) {
    os << "Invalid reference weights for the B3 approximation, case (i) formulas\n";
    os << "applied outside their validity region, with the corrected solutions.\n";

    const AkPhiParams first{0.5, 1.0, std::numbers::pi / 4.0};
    const Solution ref1 = sacchi_reference(first);
    const Solution sol1 = solve(first);
    os << "\nstate (a=0.5, k=1, phi=pi/4):\n";
    os << "  reference: p0 = " << format_fixed6(ref1.weights[0])
       << (ref1.valid ? "" : " (INVALID)") << ", p2 = " << format_fixed6(ref1.weights[2])
       << ", p4 = " << format_fixed6(ref1.weights[4])
       << ", D = " << format_fixed6(ref1.distance) << "\n";
    os << "  corrected: D = " << format_fixed6(sol1.distance) << ", region = "
       << to_string(*sol1.region) << ", p2 = " << format_fixed6(sol1.weights[2])
       << ", p4 = " << format_fixed6(sol1.weights[4]) << "\n";

    const AkPhiParams second{0.5, 1.0, std::numbers::pi / 3.0};
    const Solution ref2 = sacchi_reference(second);
    const Solution sol2 = solve(second);
    os << "\nstate (a=0.5, k=1, phi=pi/3):\n";
    os << "  reference: D = " << format_fixed6(ref2.distance)
       << (ref2.valid ? "" : " (INVALID)") << ", p0 = " << format_fixed6(ref2.weights[0])
       << "\n";
    os << "  corrected: D = " << format_fixed6(sol2.distance) << ", region = "
       << to_string(*sol2.region) << ", p2 = " << format_fixed6(sol2.weights[2])
       << ", p4 = " << format_fixed6(sol2.weights[4]) << "\n";
}

}  // namespace paulimix::frontend
