#ifndef ARROWCAT_GENERATORS_HPP
#define ARROWCAT_GENERATORS_HPP

// Category generators for fixtures, the CLI and property tests. Every
// generator either returns data that validates or throws arrowcat::error.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrowcat/category.hpp"
#include "arrowcat/natural.hpp"
#include "arrowcat/poset.hpp"
#include "arrowcat/standard.hpp"

namespace arrowcat {

/// One identity per element, named after it, and one arrow `x_y` for every
/// x < y (or x <= y with x != y in a preorder).
ObjlessData gen_poset(const std::string& name, const FinitePoset& p);

/// Name of the arrow x <= y in gen_poset(p), or nullopt when x is not below y.
std::optional<std::string> poset_arrow(const FinitePoset& p, std::size_t x, std::size_t y);

/// `table[a][b]` is the index of a . b. Throws when the table is not
/// associative or has no two-sided unit.
ObjlessData gen_monoid(const std::string& name, const std::vector<std::string>& elements,
                       const std::vector<std::vector<std::size_t>>& table);

/// All functions between the sets {0..n-1}, n = 0..max_size. Each entry of
/// `duplicates` adds one more copy of a set of that size. Objects are named
/// `set<n>`, copies `set<n>b`, `set<n>c`, ...; a function is named
/// `f_<dom>_<cod>_<images>` and identities `id_<object>`.
StdCategory gen_finset(std::size_t max_size, const std::vector<std::size_t>& duplicates = {},
                       std::string name = "");

/// n identities o0, o1, ... and nothing else.
ObjlessData gen_discrete(std::size_t n, std::string name = "");

/// Identities A, B with f: A -> B and g: B -> A inverse to each other.
ObjlessData gen_walking_iso(std::string name = "WalkingIso");

/// Disjoint union; the k-th part gets the prefix `c<k>_`.
ObjlessData coproduct(const std::string& name, const std::vector<ObjlessData>& parts);

/// Deterministic in (seed, max_morphisms): a random preorder, a random
/// transformation monoid, or a coproduct of such, with at most
/// max_morphisms morphisms (max_morphisms >= 1).
ObjlessData gen_random(std::uint64_t seed, std::size_t max_morphisms, std::string name = "");

/// A pair of monotone maps f: p -> q, g: q -> p as functors between the
/// gen_poset categories, with the unit x <= g f x and counit f g y <= y
/// wherever those arrows exist. Missing components are left out so that
/// validation reports them.
struct PosetAdjunction {
    CategoryPtr p;
    CategoryPtr q;
    Functor left;   // p -> q
    Functor right;  // q -> p
    NatTransf unit;
    NatTransf counit;
};

PosetAdjunction poset_adjunction(const FinitePoset& p, const std::string& p_name, const FinitePoset& q,
                                 const std::string& q_name, const MonotoneMap& f, const MonotoneMap& g);

/// The functor p -> q induced by a monotone map; throws if f is not monotone.
Functor monotone_functor(const std::string& name, const CategoryPtr& pc, const FinitePoset& p,
                         const CategoryPtr& qc, const FinitePoset& q, const MonotoneMap& f);

}  // namespace arrowcat

#endif  // ARROWCAT_GENERATORS_HPP
