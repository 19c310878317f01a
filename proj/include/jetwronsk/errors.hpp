#ifndef JETWRONSK_ERRORS_HPP
#define JETWRONSK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jetwronsk {

// Text didn't conform to the polynomial grammar. offset is 0-based.
struct ParseError : std::runtime_error {
    ParseError(std::size_t offset, const std::string& expected)
        : std::runtime_error("parse error at offset " + std::to_string(offset) + ": expected " +
                             expected),
          offset(offset),
          expected(expected) {}
    std::size_t offset;
    std::string expected;
};

// Exact polynomial division had a nonzero remainder where an identity
// guarantees divisibility. Seeing this means the factorization law broke.
struct DivisionFails : std::runtime_error {
    explicit DivisionFails(const std::string& what) : std::runtime_error(what) {}
};

// A jet derivative would need coordinates beyond the context's jet order.
struct OrderOverflow : std::runtime_error {
    explicit OrderOverflow(const std::string& what) : std::runtime_error(what) {}
};

// All first partials vanish at the requested base point of the hypersurface.
struct SingularPoint : std::runtime_error {
    explicit SingularPoint(const std::string& what) : std::runtime_error(what) {}
};

// The frame Wronskian vanishes at the evaluation point.
struct FrameDegenerate : std::runtime_error {
    explicit FrameDegenerate(const std::string& what) : std::runtime_error(what) {}
};

// gcd(u, v*delta) != 1, so the degree decomposition is not defined.
struct GcdError : std::runtime_error {
    explicit GcdError(const std::string& what) : std::runtime_error(what) {}
};

// d below the effective threshold d_0.
struct TooSmall : std::runtime_error {
    explicit TooSmall(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace jetwronsk

#endif
