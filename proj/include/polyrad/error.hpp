#pragma once

#include <stdexcept>
#include <string>

namespace polyrad {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, non-finite entries, unparsable files.
class InputError : public Error {
public:
  using Error::Error;
};

/// The numerical engine could not produce a result (empty slice, degenerate
/// composition, non-finite objective, estimator disagreement).
class ComputationError : public Error {
public:
  using Error::Error;
};

/// A caller contract on the data does not hold (e.g. Q is not norm-one).
class PreconditionError : public Error {
public:
  using Error::Error;
};

} // namespace polyrad
