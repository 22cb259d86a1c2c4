#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A matrix handed to a Hermitian-only routine deviates from m == adjoint(m)
// beyond tolerance.
class NotHermitian final : public Error {
public:
    using Error::Error;
};

// A matrix handed to psd_sqrt has an eigenvalue below the clamping threshold.
class NotPSD final : public Error {
public:
    using Error::Error;
};

// Propagator entries fail the |a|^2 + |b|^2 = 1 unitarity check.
class NotUnitary final : public Error {
public:
    using Error::Error;
};

// A dense matrix is not a valid density matrix (Hermitian, PSD, unit trace).
class NotDensityMatrix final : public Error {
public:
    using Error::Error;
};

// Pure-state amplitudes are not normalized.
class NotNormalized final : public Error {
public:
    using Error::Error;
};

// An X-state violates unit trace or block positivity.
class StateInvalid final : public Error {
public:
    using Error::Error;
};

// A GeneralizedWernerSpec violates its constraints.
class SpecInvalid final : public Error {
public:
    using Error::Error;
};

// A Werner mixing parameter lies outside [-1/3, 1].
class AlphaOutOfRange final : public Error {
public:
    using Error::Error;
};

// A scalar argument lies outside its documented domain.
class ParamOutOfRange final : public Error {
public:
    using Error::Error;
};

// A scenario of the wrong kind was passed to a kind-specific routine.
class WrongScenarioKind final : public Error {
public:
    using Error::Error;
};

// Malformed or inconsistent run configuration (CLI and scenario parsing).
class ConfigInvalid final : public Error {
public:
    using Error::Error;
};

} // namespace qcorr
