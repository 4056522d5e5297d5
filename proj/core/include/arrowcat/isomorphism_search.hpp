#ifndef ARROWCAT_ISOMORPHISM_SEARCH_HPP
#define ARROWCAT_ISOMORPHISM_SEARCH_HPP

#include <optional>
#include <vector>

#include "arrowcat/category.hpp"

namespace arrowcat {

/// Backtracking search for a bijection on morphisms that preserves
/// identities, domains, codomains and composition. Identities are matched
/// first using hom-class size signatures; arrows are then assigned hom-class
/// by hom-class with forced composites propagated eagerly.
///
/// Returns map[a.index] = image in `b`. Throws capacity_error when either
/// category has more than `cap` morphisms.
std::optional<std::vector<Arrow>> find_isomorphism_map(const Category& a, const Category& b,
                                                       std::size_t cap);

}  // namespace arrowcat

#endif  // ARROWCAT_ISOMORPHISM_SEARCH_HPP
