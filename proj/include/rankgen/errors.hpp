#pragma once

#include <stdexcept>
#include <string>

namespace rankgen {

// Division by a series whose constant term is zero.
struct ZeroConstantTerm : std::domain_error {
    ZeroConstantTerm()
        : std::domain_error("series division requires a divisor with nonzero constant term") {}
};

// Square root of a series whose constant term is not 1.
struct NonUnitConstantTerm : std::domain_error {
    NonUnitConstantTerm()
        : std::domain_error("series square root requires constant term 1") {}
};

// A family index outside the range where the family is defined (e.g. d_k for k < 2).
struct UnsupportedIndex : std::invalid_argument {
    explicit UnsupportedIndex(const std::string& what) : std::invalid_argument(what) {}
};

// Enumeration request above the configured size cap (memory/time guard).
struct SizeCapExceeded : std::runtime_error {
    SizeCapExceeded(int requested_size, int size_cap)
        : std::runtime_error("tree size " + std::to_string(requested_size) +
                             " exceeds the enumeration cap " + std::to_string(size_cap)),
          requested(requested_size),
          cap(size_cap) {}
    int requested;
    int cap;
};

}  // namespace rankgen
