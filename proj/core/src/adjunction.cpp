#include "arrowcat/adjunction.hpp"

namespace arrowcat {

std::string_view to_string(AdjunctionMode mode) noexcept {
    return mode == AdjunctionMode::standard ? "standard" : "paper-literal";
}

std::string AdjunctionReport::to_text() const {
    std::string out = "mode " + std::string(to_string(mode)) + ": " + (ok() ? "adjunction" : "not an adjunction") +
                      "\n";
    out += "  unit/counit natural: " + std::string(literal_ok ? "yes" : "no") + "\n";
    if (mode == AdjunctionMode::standard) {
        out += "  triangle identities: " + std::string(triangles_ok ? "yes" : "no") + "\n";
        out += "  hom bijections: " + std::string(hom_bijection_ok ? "yes" : "no") + "\n";
    }
    for (const auto& [x, y] : failing_pairs) out += "  failing pair x=" + x + ", y=" + y + "\n";
    if (!violations.ok()) out += violations.to_text();
    return out;
}

AdjunctionReport check_adjunction(const AdjunctionCandidate& a) {
    const Functor& F = a.left;
    const Functor& G = a.right;
    if (!F.covariant() || !G.covariant()) throw wiring_error("adjoint functors must be covariant");
    if (!(F.source() == G.target()) || !(F.target() == G.source()))
        throw wiring_error("left adjoint " + F.name() + " must run D -> C and right adjoint " + G.name() +
                           " C -> D");
    const auto gf = *functor_compose(G, F);
    const auto fg = *functor_compose(F, G);
    if (!same_functor(a.unit.from(), functor_identity(F.source_ptr())) || !same_functor(a.unit.to(), gf))
        throw wiring_error("unit " + a.unit.name() + " must run from Id_D to " + G.name() + " . " + F.name());
    if (!same_functor(a.counit.from(), fg) || !same_functor(a.counit.to(), functor_identity(F.target_ptr())))
        throw wiring_error("counit " + a.counit.name() + " must run from " + F.name() + " . " + G.name() +
                           " to Id_C");

    AdjunctionReport r;
    r.mode = a.mode;
    r.violations.merge(validate_functor(F));
    r.violations.merge(validate_functor(G));
    auto unit_report = validate_nat(a.unit);
    auto counit_report = validate_nat(a.counit);
    r.violations.merge(unit_report);
    r.violations.merge(counit_report);
    r.literal_ok = r.violations.ok();
    if (a.mode == AdjunctionMode::paper_literal) return r;

    const Category& C = F.target();
    const Category& D = F.source();

    r.triangles_ok = unit_report.ok() && counit_report.ok();
    if (r.triangles_ok) {
        // eps_{F x} . F(eta_x) = id_{F x}
        for (auto x : D.identities()) {
            const Arrow eta = *a.unit.component(x);
            auto lhs = C.compose(*a.counit.component(F(x)), F(eta));
            if (lhs != F(x)) {
                r.triangles_ok = false;
                r.violations.add(ViolationKind::triangle_identity, {D.name_of(x)},
                                 "counit at F(" + D.name_of(x) + ") after F(unit at " + D.name_of(x) +
                                     ") is not the identity");
            }
        }
        // G(eps_y) . eta_{G y} = id_{G y}
        for (auto y : C.identities()) {
            const Arrow eps = *a.counit.component(y);
            auto lhs = D.compose(G(eps), *a.unit.component(G(y)));
            if (lhs != G(y)) {
                r.triangles_ok = false;
                r.violations.add(ViolationKind::triangle_identity, {C.name_of(y)},
                                 "G(counit at " + C.name_of(y) + ") after unit at G(" + C.name_of(y) +
                                     ") is not the identity");
            }
        }
    }

    // hom_C(F x, y) ~ hom_D(x, G y) through k |-> G(k) . eta_x when the unit
    // is usable; otherwise the cardinalities alone decide.
    r.hom_bijection_ok = true;
    for (auto x : D.identities())
        for (auto y : C.identities()) {
            const auto left = C.hom(F(x), y);
            const auto right = D.hom(x, G(y));
            bool bijective = left.size() == right.size();
            if (bijective && unit_report.ok()) {
                const Arrow eta = *a.unit.component(x);
                std::vector<bool> hit(D.size(), false);
                for (auto k : left) {
                    auto image = D.compose(G(k), eta);
                    if (!image || hit[image->index]) {
                        bijective = false;
                        break;
                    }
                    hit[image->index] = true;
                }
            }
            if (!bijective) {
                r.hom_bijection_ok = false;
                r.failing_pairs.emplace_back(D.name_of(x), C.name_of(y));
                r.violations.add(ViolationKind::hom_bijection, {D.name_of(x), C.name_of(y)},
                                 "hom(" + C.name_of(F(x)) + ", " + C.name_of(y) + ") has " +
                                     std::to_string(left.size()) + " elements, hom(" + D.name_of(x) + ", " +
                                     D.name_of(G(y)) + ") has " + std::to_string(right.size()) +
                                     (left.size() == right.size() ? " but transposition is not bijective" : ""));
            }
        }
    return r;
}

std::string AdmissibilityReport::to_text() const {
    std::string out = ok() ? "admissible\n" : "not admissible\n";
    out += adjunction.to_text();
    out += "left exactness (" + to_string(scope) + "): " + limits.to_text();
    return out;
}

AdmissibilityReport is_admissible(const Functor& fstar, const Functor& fsub, const NatTransf& unit,
                                  const NatTransf& counit) {
    AdmissibilityReport r;
    r.adjunction = check_adjunction({fstar, fsub, unit, counit, AdjunctionMode::standard});
    r.scope = available_scope(fstar.source());
    r.limits = preserves_finite_limits(fstar, r.scope);
    return r;
}

}  // namespace arrowcat
