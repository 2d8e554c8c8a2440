#pragma once

#include <stdexcept>
#include <string>

namespace actpres {

// Malformed or inconsistent input (bad JSON, non-bijective images, wrong degree...).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured resource bound was hit (closure size, coset count, search budget).
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A mathematical check failed where the caller required it to hold.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace actpres
