#pragma once

#include <stdexcept>
#include <string>

namespace bicm {

/// Malformed or inconsistent input (bad dimensions, invalid labeling,
/// probabilities outside (0,1), unknown catalog names).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A bit probability equal to 0 or 1.
class DegenerateShapingError : public InputError {
public:
    explicit DegenerateShapingError(const std::string& what) : InputError(what) {}
};

class InvalidLabelingError : public InputError {
public:
    explicit InvalidLabelingError(const std::string& what) : InputError(what) {}
};

/// A quantity could not be evaluated (zero symbol energy, non-finite
/// quadrature result, ...).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

class UndefinedAlphaError : public NumericError {
public:
    explicit UndefinedAlphaError(const std::string& what) : NumericError(what) {}
};

} // namespace bicm
