#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace paulimix {

using Complex = std::complex<double>;

// Violations of a documented range up to this size are clamped into range;
// anything larger raises InvalidInputError.
inline constexpr double kInputTol = 1e-12;

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
    double norm1() const;  // |x| + |y| + |z|
    double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }

    BlochVector operator+(const BlochVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
    BlochVector operator-(const BlochVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
    BlochVector operator*(double s) const { return {s * x, s * y, s * z}; }
};

// Hermitian 2x2 matrix: real diagonal, one independent off-diagonal entry.
struct HermitianMatrix2 {
    double d0 = 0.0;        // entry (0,0)
    double d1 = 0.0;        // entry (1,1)
    Complex off{0.0, 0.0};  // entry (0,1); entry (1,0) is its conjugate

    double trace() const { return d0 + d1; }
    double det() const { return d0 * d1 - std::norm(off); }

    HermitianMatrix2 operator-(const HermitianMatrix2& o) const {
        return {d0 - o.d0, d1 - o.d1, off - o.off};
    }
};

// Qubit state parameters: populations (1-a, a), coherence magnitude k in
// units of the maximal sqrt(a(1-a)), relative phase phi.
struct AkPhiParams {
    double a = 0.0;
    double k = 0.0;
    double phi = 0.0;

    // Returns a copy with sub-tolerance violations clamped into
    // a,k in [0,1], phi in [0, 2*pi); throws InvalidInputError otherwise.
    AkPhiParams checked() const;
};

// Finite set of pure states given by their (unit) Bloch vectors.
struct StateSet {
    std::vector<BlochVector> states;
    std::vector<std::string> labels;

    std::size_t size() const { return states.size(); }

    // The six Pauli eigenstates in the fixed order z+, z-, x+, x-, y+, y-.
    static const StateSet& pauli_eigenstates();
};

// Mixing weights over a StateSet, same order as the set.
using WeightVector = std::vector<double>;

// Signed axis permutation of Bloch space: output axis i takes input axis
// source[i] times sign[i]. These 48 maps permute the Pauli eigenstates.
struct SignedPermutation {
    std::array<int, 3> source{0, 1, 2};
    std::array<int, 3> sign{1, 1, 1};

    BlochVector apply(const BlochVector& r) const;
    // The induced permutation of six-state weights (pairs swap on sign flips).
    WeightVector apply_weights(const WeightVector& w) const;
};

const std::array<SignedPermutation, 48>& octahedral_symmetries();

HermitianMatrix2 density_from_akphi(const AkPhiParams& params);
BlochVector bloch_from_akphi(const AkPhiParams& params);

HermitianMatrix2 bloch_to_matrix(const BlochVector& r);
BlochVector matrix_to_bloch(const HermitianMatrix2& m);

// Sum of the absolute eigenvalues, from the closed-form 2x2 eigenvalues.
double trace_norm(const HermitianMatrix2& m);

// Bloch vector of sum_i w[i] * set.states[i]; w must lie on the simplex.
BlochVector mixture(const StateSet& set, const WeightVector& w);

}  // namespace paulimix
