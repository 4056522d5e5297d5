#ifndef ARROWCAT_FUNCTOR_HPP
#define ARROWCAT_FUNCTOR_HPP

// Functors stored as a single morphism-to-morphism map. The action on
// objects is the action on identities.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arrowcat/category.hpp"

namespace arrowcat {

using CategoryPtr = std::shared_ptr<const Category>;

inline CategoryPtr share(Category c) { return std::make_shared<const Category>(std::move(c)); }

enum class Variance { covariant, contravariant };

std::string_view to_string(Variance v) noexcept;

class Functor {
public:
    /// `map[i]` is the image of source arrow i. Throws arrowcat::error when
    /// the map is not total or points outside the target. Functor laws are
    /// not checked here; see validate_functor.
    Functor(std::string name, CategoryPtr source, CategoryPtr target, std::vector<Arrow> map,
            Variance variance = Variance::covariant);

    const std::string& name() const noexcept { return name_; }
    const Category& source() const noexcept { return *source_; }
    const Category& target() const noexcept { return *target_; }
    const CategoryPtr& source_ptr() const noexcept { return source_; }
    const CategoryPtr& target_ptr() const noexcept { return target_; }
    Variance variance() const noexcept { return variance_; }
    bool covariant() const noexcept { return variance_ == Variance::covariant; }

    Arrow operator()(Arrow a) const { return map_.at(a.index); }
    const std::vector<Arrow>& map() const noexcept { return map_; }

    /// Source morphism name -> target morphism name.
    std::map<std::string, std::string> assignment() const;

    /// The same map viewed as a covariant functor; a contravariant functor
    /// becomes covariant out of the opposite of its source.
    Functor as_covariant() const;

    Functor renamed(std::string name) const;

private:
    std::string name_;
    CategoryPtr source_;
    CategoryPtr target_;
    std::vector<Arrow> map_;
    Variance variance_;
};

/// Same source, target, variance and map. Names are labels and ignored.
bool same_functor(const Functor& a, const Functor& b);

/// Composition (reversed for contravariant functors) and identities,
/// including Phi(dom a) = dom Phi(a) and Phi(cod a) = cod Phi(a) (swapped
/// when contravariant), are checked on every defined composite.
ValidationReport validate_functor(const Functor& f);

/// Validates a name-level assignment: missing source morphisms are
/// totality violations; any other law failures are reported as above.
/// Throws name_not_found for names absent from the source or target.
ValidationReport validate_functor(const std::string& name, const CategoryPtr& source,
                                  const CategoryPtr& target,
                                  const std::map<std::string, std::string>& assignment,
                                  Variance variance = Variance::covariant);

/// Builds and validates; throws invalid_data on any violation.
Functor make_functor(const std::string& name, const CategoryPtr& source, const CategoryPtr& target,
                     const std::map<std::string, std::string>& assignment,
                     Variance variance = Variance::covariant);

Functor functor_identity(const CategoryPtr& c);

/// `after . before`, defined iff before's target equals after's source.
/// Two contravariant functors compose to a covariant one.
std::optional<Functor> functor_compose(const Functor& after, const Functor& before);

/// Identity functor on the source / target.
Functor functor_dom(const Functor& f);
Functor functor_cod(const Functor& f);

}  // namespace arrowcat

#endif  // ARROWCAT_FUNCTOR_HPP
