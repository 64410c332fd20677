#pragma once

#include <stdexcept>
#include <string>

namespace paulimix {

// A parameter lies outside its documented range by more than the 1e-12
// validation tolerance (smaller violations are clamped by the callee).
struct InvalidInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// sacchi_reference was asked about a state outside the case-(i) validity
// window k_th < k <= a/sqrt(a(1-a)).
struct OutOfWindowError : std::domain_error {
    using std::domain_error::domain_error;
};

// An iterative solver hit max_iter with the convergence gap still above tol.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, double gap)
        : std::runtime_error(what), gap_(gap) {}

    double gap() const noexcept { return gap_; }

private:
    double gap_;
};

}  // namespace paulimix
