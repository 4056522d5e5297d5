#ifndef ARROWCAT_NATURAL_HPP
#define ARROWCAT_NATURAL_HPP

#include <map>
#include <optional>
#include <string>

#include "arrowcat/functor.hpp"

namespace arrowcat {

/// Natural transformation between two functors with a common source and
/// target. Components are keyed by identities of the source.
class NatTransf {
public:
    /// Throws wiring_error when the functors do not share source, target and
    /// variance. Missing components are allowed here and reported by
    /// validate_nat.
    NatTransf(std::string name, Functor from, Functor to, std::map<Arrow, Arrow> components);

    const std::string& name() const noexcept { return name_; }
    const Functor& from() const noexcept { return from_; }
    const Functor& to() const noexcept { return to_; }
    const std::map<Arrow, Arrow>& components() const noexcept { return components_; }
    std::optional<Arrow> component(Arrow identity) const;

    /// Source identity name -> target morphism name.
    std::map<std::string, std::string> component_names() const;

private:
    std::string name_;
    Functor from_;
    Functor to_;
    std::map<Arrow, Arrow> components_;
};

/// Totality, typing (component at i lies in hom(F i, G i)) and every
/// naturality square.
ValidationReport validate_nat(const NatTransf& t);

/// Name-level construction. Throws name_not_found for unknown names and
/// not_an_identity when a key is not an identity of the source.
NatTransf nat_from_names(const std::string& name, const Functor& from, const Functor& to,
                         const std::map<std::string, std::string>& components);

/// Components are the identities at F(i).
NatTransf identity_transformation(const Functor& f);

/// Every component is an isomorphism of the target.
bool is_natural_isomorphism(const NatTransf& t);

}  // namespace arrowcat

#endif  // ARROWCAT_NATURAL_HPP
