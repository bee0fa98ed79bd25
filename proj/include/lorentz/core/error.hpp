#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lorentz {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A consecutive pair of a polyline that is not causally related.
class NonCausalStep : public Error {
public:
    explicit NonCausalStep(std::size_t i)
        : Error("non-causal consecutive pair at index " + std::to_string(i)), index(i) {}
    std::size_t index;
};

class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace lorentz
