#ifndef RANKFORGE_ERRORS_HPP
#define RANKFORGE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rankforge {

/// Base class of every error thrown by this library.
class error : public std::runtime_error {
   public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A parameter violates a documented precondition (bad prime, bad degree,
/// reducible modulus, dependent evaluation points, off-diagonal position, ...).
class invalid_parameter_error : public error {
   public:
    using error::error;
};

/// Two values from different field specs were combined.
class spec_mismatch_error : public error {
   public:
    using error::error;
};

class division_by_zero_error : public error {
   public:
    using error::error;
};

/// The given elements do not form a basis of the extension.
class not_a_basis_error : public error {
   public:
    using error::error;
};

/// An enumeration would visit more objects than the configured budget allows.
class resource_limit_error : public error {
   public:
    using error::error;
};

/// A lattice function is missing a value required by Moebius inversion.
class incomplete_function_error : public error {
   public:
    using error::error;
};

/// Minimum distance requested for a code with fewer than two words.
class undefined_distance_error : public error {
   public:
    using error::error;
};

/// Input data is not realizable (non-integer transform output, checksum failure).
class inconsistent_input_error : public error {
   public:
    using error::error;
};

/// Operation hypothesis not met (e.g. quasi-MRD formula with dim divisible by m).
class not_applicable_error : public error {
   public:
    using error::error;
};

/// Default ceiling on the number of objects an exhaustive enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

inline void check_budget(std::uint64_t objects, std::uint64_t budget, const char* what) {
    if (objects > budget)
        throw resource_limit_error(std::string(what) + ": would visit " + std::to_string(objects) +
                                   " objects, budget is " + std::to_string(budget));
}

}  // namespace rankforge

#endif
