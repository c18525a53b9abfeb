#pragma once

#include <stdexcept>
#include <string>

namespace wtss {

/// Malformed input: bad instance data, unknown vertex ids, invalid seeds.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An algorithm was called on an instance outside the class it solves.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive oracle was asked to enumerate an instance above its size limit.
class OracleLimitError : public std::runtime_error {
public:
    OracleLimitError(const std::string& oracle, int n, int limit)
        : std::runtime_error(oracle + ": instance has n=" + std::to_string(n) +
                             " vertices, oracle limit is " + std::to_string(limit)),
          n_(n),
          limit_(limit) {}

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int limit() const { return limit_; }

private:
    int n_;
    int limit_;
};

}  // namespace wtss
