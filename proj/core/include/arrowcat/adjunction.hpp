#ifndef ARROWCAT_ADJUNCTION_HPP
#define ARROWCAT_ADJUNCTION_HPP

#include <string>
#include <utility>
#include <vector>

#include "arrowcat/limits.hpp"
#include "arrowcat/natural.hpp"

namespace arrowcat {

enum class AdjunctionMode {
    // Only the unit/counit data: both are natural with the stated ends.
    paper_literal,
    // Additionally both triangle identities and the induced hom bijections.
    standard,
};

std::string_view to_string(AdjunctionMode mode) noexcept;

/// F: D -> C left adjoint to G: C -> D, with unit Id_D => G.F and counit
/// F.G => Id_C.
struct AdjunctionCandidate {
    Functor left;
    Functor right;
    NatTransf unit;
    NatTransf counit;
    AdjunctionMode mode = AdjunctionMode::standard;
};

struct AdjunctionReport {
    AdjunctionMode mode = AdjunctionMode::standard;
    bool literal_ok = false;
    bool triangles_ok = false;
    bool hom_bijection_ok = false;
    ValidationReport violations;
    /// (x in D, y in C) with hom(F x, y) and hom(x, G y) not in bijection.
    std::vector<std::pair<std::string, std::string>> failing_pairs;

    bool ok() const noexcept {
        return mode == AdjunctionMode::paper_literal ? literal_ok
                                                     : literal_ok && triangles_ok && hom_bijection_ok;
    }
    std::string to_text() const;
};

/// Throws wiring_error, before any law is checked, when the functors and
/// transformations are not connected as described on AdjunctionCandidate.
AdjunctionReport check_adjunction(const AdjunctionCandidate& candidate);

struct AdmissibilityReport {
    AdjunctionReport adjunction;
    LimitReport limits;
    LimitScope scope;  // kinds actually checked
    bool ok() const noexcept { return adjunction.ok() && limits.ok(); }
    std::string to_text() const;
};

/// fstar: D -> C left adjoint (standard mode) to fsub: C -> D, with fstar
/// preserving every kind of finite limit the source has in full.
AdmissibilityReport is_admissible(const Functor& fstar, const Functor& fsub, const NatTransf& unit,
                                  const NatTransf& counit);

}  // namespace arrowcat

#endif  // ARROWCAT_ADJUNCTION_HPP
