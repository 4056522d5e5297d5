#ifndef ARROWCAT_CATEGORY_HPP
#define ARROWCAT_CATEGORY_HPP

// Objectless finite categories: a set of morphism names with a partial
// composition table. Identities, domains and codomains are computed from the
// table; nothing about objects is ever supplied.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "arrowcat/report.hpp"

namespace arrowcat {

/// Index of a morphism within one Category. Only meaningful together with
/// the category that produced it.
struct Arrow {
    std::uint32_t index = 0;
    auto operator<=>(const Arrow&) const = default;
};

/// `after . before = result`: the composite "after applied after before".
struct CompositionEntry {
    std::string after;
    std::string before;
    std::string result;
    auto operator<=>(const CompositionEntry&) const = default;
};

/// Raw objectless presentation, as written in a catspec `objless` block.
struct ObjlessData {
    std::string name;
    std::vector<std::string> morphisms;
    std::vector<CompositionEntry> table;
    bool operator==(const ObjlessData&) const = default;
};

inline constexpr std::size_t max_category_size = 4096;

/// Letters, digits and `_`, not starting with a digit.
bool is_valid_name(std::string_view name) noexcept;

/// Checks associativity (both existence bullets and equality) and the
/// existence of two-sided neutral identities on both sides of every
/// morphism. Conflicting table entries are reported, not thrown.
///
/// Throws name_not_found if the table mentions an undeclared name, and
/// arrowcat::error for malformed or duplicate morphism names.
ValidationReport validate_objectless(const ObjlessData& data);

/// Morphisms that compose with themselves and are neutral in every defined
/// composition they take part in. Sorted by name.
std::vector<std::string> infer_identities(const ObjlessData& data);

struct CompositionProfile {
    std::vector<Arrow> right_partners;  // beta with beta . id defined
    std::vector<Arrow> left_partners;   // gamma with id . gamma defined
    bool operator==(const CompositionProfile&) const = default;
};

/// A validated objectless category. Immutable once constructed.
class Category {
public:
    /// Validates and canonicalises `data` (morphisms and table sorted by
    /// name). Throws invalid_data carrying the report when validation fails,
    /// capacity_error beyond max_category_size.
    explicit Category(ObjlessData data);

    const std::string& name() const noexcept { return data_.name; }
    std::size_t size() const noexcept { return data_.morphisms.size(); }
    const ObjlessData& data() const noexcept { return data_; }

    const std::string& name_of(Arrow a) const { return data_.morphisms.at(a.index); }
    std::optional<Arrow> find(std::string_view name) const;
    /// Throws name_not_found.
    Arrow arrow(std::string_view name) const;

    std::vector<Arrow> arrows() const;
    std::span<const Arrow> identities() const noexcept { return identities_; }
    bool is_identity(Arrow a) const { return identity_slot_.at(a.index) >= 0; }
    /// Position of an identity within identities(); -1 for non-identities.
    int identity_slot(Arrow a) const { return identity_slot_.at(a.index); }

    /// The unique identity i with `a . i` defined.
    Arrow dom(Arrow a) const { return dom_.at(a.index); }
    /// The unique identity i with `i . a` defined.
    Arrow cod(Arrow a) const { return cod_.at(a.index); }

    /// Defined exactly when cod(before) == dom(after).
    std::optional<Arrow> compose(Arrow after, Arrow before) const;

    /// All morphisms from identity `from` to identity `to`. Throws
    /// not_an_identity.
    std::span<const Arrow> hom(Arrow from, Arrow to) const;

    /// Throws not_an_identity.
    CompositionProfile profile(Arrow identity) const;
    bool discernible(Arrow first, Arrow second) const;

    struct Triple {
        Arrow after, before, result;
    };
    /// Every defined composition, ordered by (after, before).
    std::span<const Triple> compositions() const noexcept { return triples_; }

    /// Same morphisms, every composite reversed. Name toggles an `_op` suffix.
    Category opposite() const;

    /// Full subcategory on the given identities; morphism names are kept.
    Category full_subcategory(std::span<const Arrow> identities, std::string name) const;

    /// Structural equality: same morphism names and the same table. The
    /// category label is not compared.
    friend bool operator==(const Category& a, const Category& b) {
        return a.data_.morphisms == b.data_.morphisms && a.data_.table == b.data_.table;
    }

private:
    void require_identity(Arrow a) const;
    static std::uint64_t key(Arrow after, Arrow before) noexcept {
        return (std::uint64_t{after.index} << 32) | before.index;
    }

    ObjlessData data_;
    std::unordered_map<std::string, Arrow> by_name_;
    std::unordered_map<std::uint64_t, Arrow> table_;
    std::vector<Triple> triples_;
    std::vector<Arrow> identities_;
    std::vector<int> identity_slot_;
    std::vector<Arrow> dom_;
    std::vector<Arrow> cod_;
    // hom_[slot(from) * identities_.size() + slot(to)], only for small
    // identity counts; otherwise hom_sparse_.
    std::vector<std::vector<Arrow>> hom_;
    std::unordered_map<std::uint64_t, std::vector<Arrow>> hom_sparse_;
};

/// Free-function spellings of the name-based kernel queries.
std::string dom_id(const Category& c, std::string_view morphism);
std::string cod_id(const Category& c, std::string_view morphism);
std::optional<std::string> compose(const Category& c, std::string_view after,
                                   std::string_view before);
std::vector<std::string> hom_class(const Category& c, std::string_view from,
                                   std::string_view to);

std::vector<std::string> names_of(const Category& c, std::span<const Arrow> arrows);

}  // namespace arrowcat

#endif  // ARROWCAT_CATEGORY_HPP
