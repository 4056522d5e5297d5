#ifndef ARROWCAT_STANDARD_HPP
#define ARROWCAT_STANDARD_HPP

// Conventional objects-and-arrows presentation and the two converters that
// identify each object with its identity arrow.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arrowcat/category.hpp"

namespace arrowcat {

struct StdArrow {
    std::string name;
    std::string dom;
    std::string cod;
    auto operator<=>(const StdArrow&) const = default;
};

struct StdCategory {
    std::string name;
    std::vector<std::string> objects;
    std::vector<StdArrow> arrows;
    std::vector<CompositionEntry> table;
    std::map<std::string, std::string> id_of;  // object -> identity arrow
    bool operator==(const StdCategory&) const = default;
};

/// Typing, totality on composable pairs, associativity and neutrality of
/// every id_of(B). All violations are collected.
ValidationReport validate_standard(const StdCategory& c);

/// Adds the forced entries `f . id_A = f` and `id_B . f = f` that are
/// missing from the table. Objects without an identity get `id_<object>`.
/// Throws arrowcat::error if an auto-generated name collides.
void complete_identities(StdCategory& c);

/// Sorts objects, arrows and table entries into canonical order.
void canonicalize(StdCategory& c);

/// Throws invalid_data when `c` does not validate.
Category to_objectless(const StdCategory& c);

/// Objects are named after their identity morphisms.
StdCategory to_standard(const Category& c);

struct Renaming {
    std::map<std::string, std::string> objects;
    std::map<std::string, std::string> arrows;
};

inline constexpr std::size_t renaming_search_cap = 256;

/// A pair of bijections carrying objects, arrows, typing, identities and the
/// table of `a` exactly onto `b`, or nullopt. Throws capacity_error when
/// either side exceeds renaming_search_cap morphisms.
std::optional<Renaming> equal_up_to_renaming(const StdCategory& a, const StdCategory& b);

/// Applies an object renaming only (arrow names kept).
StdCategory rename_objects(const StdCategory& c, const std::map<std::string, std::string>& objects);

}  // namespace arrowcat

#endif  // ARROWCAT_STANDARD_HPP
