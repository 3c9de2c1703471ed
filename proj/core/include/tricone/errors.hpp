#pragma once

#include <stdexcept>
#include <string>

namespace tricone {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input text could not be parsed (bad token, bad permutation digits,
// duplicate or missing row, malformed JSON payload, ...).
struct ParseError : Error {
    using Error::Error;
};

// The face pairing map is not an involution.
struct NotInvolutive : Error {
    using Error::Error;
};

// A face has no partner (boundary face or reference to a missing
// tetrahedron); closed pseudo-manifolds require all faces paired.
struct UnpairedFace : Error {
    using Error::Error;
};

// A face pairing induces an orientation-preserving map between faces
// (even extended permutation), or an edge is glued to itself reversed.
struct NotOrientable : Error {
    using Error::Error;
};

// A vertex link fails to assemble as an oriented closed surface.
struct NonOrientableLink : Error {
    using Error::Error;
};

// A shape parameter has non-positive imaginary part where positivity
// is required.
struct NotPositivelyOriented : Error {
    using Error::Error;
};

// A shape parameter hit the degenerate set {0, 1} (or infinity).
struct DegenerateShape : Error {
    using Error::Error;
};

// A normal-curve step sequence is not a closed combinatorial path.
struct InvalidPath : Error {
    using Error::Error;
};

// Two curves asked to intersect do not live on the same vertex link.
struct NotSameLink : Error {
    using Error::Error;
};

// Evaluation of a rational map at one of its poles.
struct PoleError : Error {
    using Error::Error;
};

// Outcome of an iterative solve.  Non-convergence is data, not an
// exception: callers inspect the status.
enum class SolveStatus {
    Converged,
    MaxIterations,           // iteration cap reached before tolerance
    LeftDomain,              // line search could not keep Im z > 0
    RankDeficientJacobian,   // numerical rank below parameter count
    InfeasibleTarget,        // target violates the sum constraint
    StepTooLarge,            // continuation corrector failed to converge
};

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Converged: return "Converged";
        case SolveStatus::MaxIterations: return "MaxIterations";
        case SolveStatus::LeftDomain: return "LeftDomain";
        case SolveStatus::RankDeficientJacobian: return "RankDeficientJacobian";
        case SolveStatus::InfeasibleTarget: return "InfeasibleTarget";
        case SolveStatus::StepTooLarge: return "StepTooLarge";
    }
    return "Unknown";
}

}  // namespace tricone
