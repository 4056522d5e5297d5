#ifndef ARROWCAT_EQUIVALENCE_HPP
#define ARROWCAT_EQUIVALENCE_HPP

// Isomorphisms of arrows and categories, skeletons, and equivalence of
// categories decided through skeletons.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "arrowcat/natural.hpp"

namespace arrowcat {

/// The unique g with g . f = dom(f) and f . g = cod(f), if any.
std::optional<Arrow> is_isomorphism(const Category& c, Arrow f);

/// Partition of the identities into isomorphism classes. Blocks and their
/// members are sorted by arrow index.
std::vector<std::vector<Arrow>> iso_classes(const Category& c);

bool is_skeletal(const Category& c);

inline constexpr std::size_t default_search_cap = 64;

/// A functor with a strict two-sided inverse, re-validated before it is
/// returned. Throws capacity_error beyond `cap` morphisms on either side.
std::optional<Functor> find_category_isomorphism(const CategoryPtr& c, const CategoryPtr& d,
                                                 std::size_t cap = default_search_cap);

struct SkeletonResult {
    CategoryPtr skeleton;
    Functor inclusion;   // skeleton -> original
    Functor retraction;  // original -> skeleton
    NatTransf witness;   // Id_original => inclusion . retraction, invertible
    std::map<Arrow, Arrow> representatives;  // identity -> chosen identity (original indices)
};

/// Chooses, in every isomorphism class, the identity that comes first in a
/// seed-dependent permutation of the identities, and returns the full
/// subcategory on the chosen identities along with the equivalence data.
SkeletonResult skeleton(const CategoryPtr& c, std::uint64_t seed = 0);

/// The identities of `c` in the order used for representative choice.
std::vector<Arrow> seeded_identity_order(const Category& c, std::uint64_t seed);

struct EquivalenceWitness {
    Functor forward;   // F: C -> D
    Functor backward;  // G: D -> C
    NatTransf unit;    // Id_C => G . F
    NatTransf counit;  // Id_D => F . G
};

/// Functors valid and covariant, wiring matches, both transformations
/// natural with every component invertible.
ValidationReport validate_equivalence(const EquivalenceWitness& w);

/// Compares skeletons; on success assembles F = I_D . K . P_C and
/// G = I_C . K^-1 . P_D from the skeleton data and an isomorphism K between
/// the skeletons. The witness is re-validated before it is returned.
std::optional<EquivalenceWitness> are_equivalent(const CategoryPtr& c, const CategoryPtr& d,
                                                 std::size_t cap = default_search_cap);

inline constexpr std::size_t brute_force_cap = 12;

/// Exhaustive search over functor pairs and component choices, used as an
/// independent check on are_equivalent.
std::optional<EquivalenceWitness> brute_force_equivalence(const CategoryPtr& c, const CategoryPtr& d);

/// Every covariant functor c -> d, in a fixed enumeration order.
std::vector<Functor> enumerate_functors(const CategoryPtr& c, const CategoryPtr& d);

}  // namespace arrowcat

#endif  // ARROWCAT_EQUIVALENCE_HPP
