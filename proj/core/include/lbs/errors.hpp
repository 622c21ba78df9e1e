#pragma once

#include <stdexcept>
#include <string>

namespace lbs {

// Energy outside the admissible set (inside the band, non-finite, too close to an edge).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EigensolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// No component clause matched although the point is off every boundary.
class ClassificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class MonotonicityError : public std::runtime_error {
public:
    MonotonicityError(const std::string& what, double k)
        : std::runtime_error(what), k_(k) {}
    double k() const noexcept { return k_; }

private:
    double k_;
};

}  // namespace lbs
