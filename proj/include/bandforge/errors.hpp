#pragma once

#include <stdexcept>
#include <string>

namespace bandforge {

/// Base class for every error the library raises.  The CLI maps these to
/// process exit codes: UsageError -> 2, any GeometryError -> 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed request surface: unknown preset, bad --params string, grid spec
/// that cannot be parsed, mutually exclusive flags.
struct UsageError : Error {
    using Error::Error;
};

/// Anything wrong with the geometry itself.
struct GeometryError : Error {
    using Error::Error;
};

/// Parameters outside the model's domain (negative lengths, zero scale, ...).
struct InvalidParams : GeometryError {
    using GeometryError::GeometryError;
};

/// Structurally valid parameters that produce unusable geometry, e.g. a flat
/// prismatoid (z below the degeneracy threshold) fed to the verifier.
struct DegenerateGeometry : GeometryError {
    using GeometryError::GeometryError;
};

/// The even-indexed (or odd-indexed) vertex curvatures disagree beyond
/// tolerance; the solid has lost its three-fold symmetry.
struct InternalSymmetryError : GeometryError {
    using GeometryError::GeometryError;
};

/// Verdict cells that ought to be related by a symmetry of the solid disagree.
struct SymmetryViolation : GeometryError {
    using GeometryError::GeometryError;
};

/// The parameter solver found no root inside its bracket.
struct Infeasible : GeometryError {
    using GeometryError::GeometryError;
};

}  // namespace bandforge
