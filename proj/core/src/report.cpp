#include "arrowcat/report.hpp"

#include <algorithm>

namespace arrowcat {

std::string_view to_string(ViolationKind kind) noexcept {
    switch (kind) {
    case ViolationKind::functionality: return "functionality";
    case ViolationKind::associativity_equal: return "associativity-equal";
    case ViolationKind::associativity_existence: return "associativity-existence";
    case ViolationKind::identity_missing: return "identity-missing";
    case ViolationKind::identity_nonneutral: return "identity-nonneutral";
    case ViolationKind::identity_nonunique: return "identity-nonunique";
    case ViolationKind::typing: return "typing";
    case ViolationKind::composition_missing: return "composition-missing";
    case ViolationKind::unknown_reference: return "unknown-reference";
    case ViolationKind::totality: return "totality";
    case ViolationKind::composition_not_preserved: return "composition-not-preserved";
    case ViolationKind::identity_not_preserved: return "identity-not-preserved";
    case ViolationKind::naturality: return "naturality";
    case ViolationKind::triangle_identity: return "triangle-identity";
    case ViolationKind::hom_bijection: return "hom-bijection";
    }
    return "unknown";
}

void ValidationReport::add(ViolationKind kind, std::vector<std::string> witnesses,
                           std::string message) {
    if (violations.size() >= max_violations) {
        ++suppressed;
        return;
    }
    if (witnesses.size() > 3) witnesses.resize(3);
    violations.push_back({kind, std::move(witnesses), std::move(message)});
}

void ValidationReport::merge(const ValidationReport& other) {
    for (const auto& v : other.violations) add(v.kind, v.witnesses, v.message);
    suppressed += other.suppressed;
}

bool ValidationReport::has(ViolationKind kind) const noexcept {
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::to_text() const {
    if (ok()) return "ok\n";
    std::string out;
    for (const auto& v : violations) {
        out += to_string(v.kind);
        out += ": ";
        out += v.message;
        if (!v.witnesses.empty()) {
            out += " [";
            for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
                if (i) out += ", ";
                out += v.witnesses[i];
            }
            out += "]";
        }
        out += '\n';
    }
    if (suppressed) out += "... " + std::to_string(suppressed) + " more violations suppressed\n";
    return out;
}

}  // namespace arrowcat
