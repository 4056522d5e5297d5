#include "arrowcat/poset.hpp"

namespace arrowcat {

FinitePoset::FinitePoset(std::vector<std::string> elements, std::vector<std::vector<bool>> leq)
    : elements_(std::move(elements)), leq_(std::move(leq)) {
    const auto n = elements_.size();
    if (leq_.size() != n) throw error("order relation has the wrong size");
    for (const auto& row : leq_)
        if (row.size() != n) throw error("order relation has the wrong size");
    for (std::size_t a = 0; a < n; ++a) {
        if (!leq_[a][a]) throw error("order is not reflexive at " + elements_[a]);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (leq_[a][b] && leq_[b][c] && !leq_[a][c])
                    throw error("order is not transitive at " + elements_[a] + " <= " + elements_[b] +
                                " <= " + elements_[c]);
    }
}

FinitePoset FinitePoset::from_pairs(std::vector<std::string> elements,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& below) {
    const auto n = elements.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
    for (auto [a, b] : below) leq.at(a).at(b) = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (leq[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (leq[k][j]) leq[i][j] = true;
    return FinitePoset(std::move(elements), std::move(leq));
}

FinitePoset FinitePoset::chain(std::size_t n, const std::string& prefix) {
    std::vector<std::string> elements;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        elements.push_back(prefix + std::to_string(i));
        for (std::size_t j = i; j < n; ++j) leq[i][j] = true;
    }
    return FinitePoset(std::move(elements), std::move(leq));
}

void require_monotone(const FinitePoset& p, const FinitePoset& q, const MonotoneMap& f) {
    if (f.size() != p.size()) throw error("map is not total on its domain");
    for (auto v : f)
        if (v >= q.size()) throw error("map leaves its codomain");
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.leq(a, b) && !q.leq(f[a], f[b]))
                throw error("map is not monotone: " + p.element(a) + " <= " + p.element(b) + " but " +
                            q.element(f[a]) + " is not below " + q.element(f[b]));
}

GaloisResult galois_oracle(const FinitePoset& p, const FinitePoset& q, const MonotoneMap& f,
                           const MonotoneMap& g) {
    require_monotone(p, q, f);
    require_monotone(q, p, g);
    GaloisResult r;
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < q.size(); ++y)
            if (q.leq(f[x], y) != p.leq(x, g[y])) {
                r.holds = false;
                r.failing.emplace_back(x, y);
            }
    return r;
}

}  // namespace arrowcat
