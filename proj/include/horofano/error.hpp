#pragma once

#include <stdexcept>
#include <string>

namespace horofano {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The input does not describe a valid Q-factorial Fano embedding
/// (or is malformed). CLI exit code 2.
struct ValidationError : Error {
    using Error::Error;
};

/// An identity that must hold on every valid instance failed. CLI exit code 3.
struct InconsistencyError : Error {
    using Error::Error;
};

}  // namespace horofano
