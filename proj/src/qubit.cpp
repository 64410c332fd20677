#include "paulimix/qubit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "paulimix/errors.hpp"

namespace paulimix {

namespace {

double clamp_range(double x, double lo, double hi, const char* name) {
    if (x >= lo && x <= hi) return x;
    if (x >= lo - kInputTol && x < lo) return lo;
    if (x > hi && x <= hi + kInputTol) return hi;
    throw InvalidInputError(std::string(name) + " out of range [" +
                            std::to_string(lo) + ", " + std::to_string(hi) +
                            "]: " + std::to_string(x));
}

void require_finite(const BlochVector& r) {
    if (!(std::isfinite(r.x) && std::isfinite(r.y) && std::isfinite(r.z)))
        throw InvalidInputError("Bloch vector has a non-finite component");
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double BlochVector::norm1() const { return std::abs(x) + std::abs(y) + std::abs(z); }

AkPhiParams AkPhiParams::checked() const {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    AkPhiParams q;
    q.a = clamp_range(a, 0.0, 1.0, "a");
    q.k = clamp_range(k, 0.0, 1.0, "k");
    q.phi = phi;
    if (!(q.phi >= 0.0 && q.phi < two_pi)) {
        if (q.phi >= -kInputTol && q.phi < 0.0)
            q.phi = 0.0;
        else if (q.phi >= two_pi && q.phi <= two_pi + kInputTol)
            q.phi = 0.0;
        else
            throw InvalidInputError("phi out of range [0, 2*pi): " + std::to_string(phi));
    }
    return q;
}

const StateSet& StateSet::pauli_eigenstates() {
    static const StateSet set{
        {{0, 0, 1}, {0, 0, -1}, {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}},
        {"z+", "z-", "x+", "x-", "y+", "y-"}};
    return set;
}

BlochVector SignedPermutation::apply(const BlochVector& r) const {
    const double in[3] = {r.x, r.y, r.z};
    return {sign[0] * in[source[0]], sign[1] * in[source[1]], sign[2] * in[source[2]]};
}

WeightVector SignedPermutation::apply_weights(const WeightVector& w) const {
    if (w.size() != 6)
        throw InvalidInputError("signed permutation needs six weights, got " +
                                std::to_string(w.size()));
    // Weight pair holding axis j of the mixture Bloch vector.
    static constexpr int pair_of_axis[3][2] = {{2, 3}, {4, 5}, {0, 1}};
    WeightVector out(6, 0.0);
    for (int axis = 0; axis < 3; ++axis) {
        const int* to = pair_of_axis[axis];
        const int* from = pair_of_axis[source[axis]];
        const bool flip = sign[axis] < 0;
        out[to[0]] = w[from[flip ? 1 : 0]];
        out[to[1]] = w[from[flip ? 0 : 1]];
    }
    return out;
}

const std::array<SignedPermutation, 48>& octahedral_symmetries() {
    static const std::array<SignedPermutation, 48> all = [] {
        constexpr std::array<std::array<int, 3>, 6> perms{
            {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        std::array<SignedPermutation, 48> out{};
        std::size_t n = 0;
        for (const auto& perm : perms)
            for (int bits = 0; bits < 8; ++bits)
                out[n++] = SignedPermutation{perm,
                                             {(bits & 1) ? -1 : 1,
                                              (bits & 2) ? -1 : 1,
                                              (bits & 4) ? -1 : 1}};
        return out;
    }();
    return all;
}

HermitianMatrix2 density_from_akphi(const AkPhiParams& params) {
    const AkPhiParams q = params.checked();
    const double c = q.k * std::sqrt(q.a * (1.0 - q.a));
    return {1.0 - q.a, q.a, Complex(c * std::cos(q.phi), -c * std::sin(q.phi))};
}

BlochVector bloch_from_akphi(const AkPhiParams& params) {
    const AkPhiParams q = params.checked();
    const double c = q.k * std::sqrt(q.a * (1.0 - q.a));
    return {2.0 * c * std::cos(q.phi), 2.0 * c * std::sin(q.phi), 1.0 - 2.0 * q.a};
}

HermitianMatrix2 bloch_to_matrix(const BlochVector& r) {
    require_finite(r);
    if (r.norm() > 1.0 + kInputTol)
        throw InvalidInputError("Bloch vector outside the unit ball: |r| = " +
                                std::to_string(r.norm()));
    return {0.5 * (1.0 + r.z), 0.5 * (1.0 - r.z), Complex(0.5 * r.x, -0.5 * r.y)};
}

BlochVector matrix_to_bloch(const HermitianMatrix2& m) {
    if (std::abs(m.trace() - 1.0) > kInputTol)
        throw InvalidInputError("density matrix must have unit trace, got " +
                                std::to_string(m.trace()));
    return {2.0 * m.off.real(), -2.0 * m.off.imag(), m.d0 - m.d1};
}

double trace_norm(const HermitianMatrix2& m) {
    if (!(std::isfinite(m.d0) && std::isfinite(m.d1) && std::isfinite(m.off.real()) &&
          std::isfinite(m.off.imag())))
        throw InvalidInputError("matrix has a non-finite entry");
    const double mid = 0.5 * (m.d0 + m.d1);
    const double half_gap = 0.5 * (m.d0 - m.d1);
    const double radius = std::sqrt(half_gap * half_gap + std::norm(m.off));
    return std::abs(mid + radius) + std::abs(mid - radius);
}

BlochVector mixture(const StateSet& set, const WeightVector& w) {
    if (w.size() != set.size())
        throw InvalidInputError("weight count " + std::to_string(w.size()) +
                                " does not match state count " + std::to_string(set.size()));
    double sum = 0.0;
    BlochVector m{};
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!(w[i] >= -kInputTol))
            throw InvalidInputError("negative mixing weight: " + std::to_string(w[i]));
        sum += w[i];
        m = m + set.states[i] * w[i];
    }
    if (std::abs(sum - 1.0) > kInputTol)
        throw InvalidInputError("mixing weights sum to " + std::to_string(sum));
    return m;
}

}  // namespace paulimix
