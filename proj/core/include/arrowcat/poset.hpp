#ifndef ARROWCAT_POSET_HPP
#define ARROWCAT_POSET_HPP

// Finite (pre)orders and the Galois-connection test on monotone maps. The
// oracle works on the order relation alone and never builds a category.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "arrowcat/errors.hpp"

namespace arrowcat {

class FinitePoset {
public:
    /// Reflexive-transitive closure is not taken: `leq` must already be
    /// reflexive and transitive. Throws arrowcat::error otherwise.
    FinitePoset(std::vector<std::string> elements, std::vector<std::vector<bool>> leq);

    /// Builds the reflexive-transitive closure of the given pairs.
    static FinitePoset from_pairs(std::vector<std::string> elements,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& below);

    /// 0 < 1 < ... < n-1, elements named prefix0, prefix1, ...
    static FinitePoset chain(std::size_t n, const std::string& prefix);

    std::size_t size() const noexcept { return elements_.size(); }
    const std::string& element(std::size_t i) const { return elements_.at(i); }
    const std::vector<std::string>& elements() const noexcept { return elements_; }
    bool leq(std::size_t a, std::size_t b) const { return leq_.at(a).at(b); }

private:
    std::vector<std::string> elements_;
    std::vector<std::vector<bool>> leq_;
};

using MonotoneMap = std::vector<std::size_t>;

/// Throws arrowcat::error if `f` is not a monotone map p -> q.
void require_monotone(const FinitePoset& p, const FinitePoset& q, const MonotoneMap& f);

struct GaloisResult {
    bool holds = true;
    /// (x, y) with f(x) <= y and x <= g(y) disagreeing.
    std::vector<std::pair<std::size_t, std::size_t>> failing;
};

/// f(x) <= y  <=>  x <= g(y) for every x in p, y in q.
GaloisResult galois_oracle(const FinitePoset& p, const FinitePoset& q, const MonotoneMap& f,
                           const MonotoneMap& g);

}  // namespace arrowcat

#endif  // ARROWCAT_POSET_HPP
