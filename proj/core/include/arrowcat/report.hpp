#ifndef ARROWCAT_REPORT_HPP
#define ARROWCAT_REPORT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "arrowcat/errors.hpp"

namespace arrowcat {

enum class ViolationKind {
    // composition tables
    functionality,
    associativity_equal,
    associativity_existence,
    identity_missing,
    identity_nonneutral,
    identity_nonunique,
    // standard presentation
    typing,
    composition_missing,
    unknown_reference,
    // functors and transformations
    totality,
    composition_not_preserved,
    identity_not_preserved,
    naturality,
    // adjunctions and limits
    triangle_identity,
    hom_bijection,
};

std::string_view to_string(ViolationKind kind) noexcept;

struct Violation {
    ViolationKind kind;
    std::vector<std::string> witnesses;  // at most 3 names
    std::string message;
};

/// Outcome of a validator. Validators never throw on a law violation; they
/// collect up to `max_violations` records and keep going.
struct ValidationReport {
    static constexpr std::size_t max_violations = 100;

    std::vector<Violation> violations;
    std::size_t suppressed = 0;

    bool ok() const noexcept { return violations.empty(); }
    explicit operator bool() const noexcept { return ok(); }

    void add(ViolationKind kind, std::vector<std::string> witnesses, std::string message);
    void merge(const ValidationReport& other);
    bool has(ViolationKind kind) const noexcept;
    std::string to_text() const;
};

// Thrown when a constructor is handed data that fails validation.
class invalid_data : public error {
public:
    invalid_data(const std::string& what, ValidationReport report)
        : error(what), report_(std::move(report)) {}
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

}  // namespace arrowcat

#endif  // ARROWCAT_REPORT_HPP
