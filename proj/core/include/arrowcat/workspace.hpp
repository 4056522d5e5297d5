#ifndef ARROWCAT_WORKSPACE_HPP
#define ARROWCAT_WORKSPACE_HPP

// Turns a parsed document into library values. Categories are validated
// once and cached; functors and transformations are rebuilt on request.

#include <map>
#include <mutex>
#include <string>

#include "arrowcat/catspec.hpp"
#include "arrowcat/natural.hpp"

namespace arrowcat::catspec {

class Workspace {
public:
    explicit Workspace(Document doc);

    const Document& document() const noexcept { return doc_; }
    bool has_category(const std::string& name) const { return doc_.categories.count(name) > 0; }
    bool has_functor(const std::string& name) const { return doc_.functors.count(name) > 0; }
    bool has_nat(const std::string& name) const { return doc_.nats.count(name) > 0; }

    /// Validator output for the declared category (standard or objectless).
    ValidationReport check_category(const std::string& name) const;
    /// Throws name_not_found, or invalid_data when the category is not valid.
    CategoryPtr category(const std::string& name) const;

    ValidationReport check_functor(const std::string& name) const;
    /// Throws invalid_data when the functor laws fail.
    Functor functor(const std::string& name) const;
    /// `Id(C)` or a composite chain; throws wiring_error when the chain does
    /// not compose.
    Functor functor(const FunctorExpr& expr) const;

    /// Component keys that name objects of a standard category are read as
    /// their identity arrows.
    NatTransf nat(const std::string& name) const;
    ValidationReport check_nat(const std::string& name) const;

private:
    Document doc_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, CategoryPtr> cache_;
};

}  // namespace arrowcat::catspec

#endif  // ARROWCAT_WORKSPACE_HPP
