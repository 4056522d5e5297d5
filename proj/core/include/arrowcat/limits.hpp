#ifndef ARROWCAT_LIMITS_HPP
#define ARROWCAT_LIMITS_HPP

// Terminal objects, binary products and equalizers, each verified by
// enumerating every competing cone. Together they generate all finite
// limits, so they are the scope of left-exactness checks.

#include <optional>
#include <string>
#include <vector>

#include "arrowcat/functor.hpp"

namespace arrowcat {

enum class LimitKind { terminal, product, equalizer };

std::string_view to_string(LimitKind kind) noexcept;

struct LimitCone {
    LimitKind kind;
    Arrow apex;               // an identity
    std::vector<Arrow> legs;  // none for terminal; p1, p2 for products; e for equalizers
};

std::vector<Arrow> terminal_objects(const Category& c);

/// hom(stage, object): the elements of `object` at stage `stage`.
std::vector<Arrow> generalized_elements(const Category& c, Arrow object, Arrow stage);

/// First identity, in arrow order, for which the universal property fails,
/// or nullopt when `apex` is terminal.
std::optional<Arrow> terminal_counterexample(const Category& c, Arrow apex);

bool is_product(const Category& c, Arrow a, Arrow b, const LimitCone& cone);
bool is_equalizer(const Category& c, Arrow f, Arrow g, const LimitCone& cone);

std::optional<LimitCone> binary_product(const Category& c, Arrow a, Arrow b);

/// Throws arrowcat::error unless f and g are parallel.
std::optional<LimitCone> equalizer(const Category& c, Arrow f, Arrow g);

struct LimitScope {
    bool terminal = true;
    bool products = true;
    bool equalizers = true;
};

/// The kinds of limit that `c` has in full.
LimitScope available_scope(const Category& c);

std::string to_string(const LimitScope& scope);

class inapplicable_scope : public error {
public:
    inapplicable_scope(LimitKind kind, std::vector<std::string> diagram);
    LimitKind kind() const noexcept { return kind_; }
    const std::vector<std::string>& diagram() const noexcept { return diagram_; }

private:
    LimitKind kind_;
    std::vector<std::string> diagram_;
};

struct LimitFailure {
    LimitKind kind;
    std::vector<std::string> diagram;  // source names of the limited diagram
    std::string counterexample;        // target object witnessing the failure
    std::string message;
};

struct LimitReport {
    std::vector<LimitFailure> failures;
    std::size_t cones_checked = 0;
    bool ok() const noexcept { return failures.empty(); }
    std::string to_text() const;
};

/// Checks that the image of every scoped limit cone in the source is a limit
/// cone in the target. Throws inapplicable_scope, naming the missing limit,
/// when the source does not have every limit of a scoped kind; throws
/// wiring_error for contravariant functors.
LimitReport preserves_finite_limits(const Functor& f, LimitScope scope = {});

}  // namespace arrowcat

#endif  // ARROWCAT_LIMITS_HPP
