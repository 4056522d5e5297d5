#ifndef ARROWCAT_CATSPEC_HPP
#define ARROWCAT_CATSPEC_HPP

// The catspec text format (.cat files).
//
//   # comment
//   objless TwoChain {
//     arrows: i0, i1, a;
//     compose: i0 . i0 = i0, i1 . i1 = i1;
//     compose: a . i0 = a;
//     compose: i1 . a = a;
//   }
//   category Arrow2 {
//     objects: A, B;
//     arrow f: A -> B;
//     id A = one_A;              # optional; otherwise id_A
//   }
//   functor F: TwoChain -> Arrow2 { map a -> f; ... }
//   functor Op: C -> D contravariant { ... }
//   nat t: F => G { component i0: k; ... }
//   nat eta: Id(P) => g . f { ... }
//
// `g . f` always means g after f. Objectless blocks must list the whole
// table, identity compositions included; standard blocks get the identity
// compositions filled in.

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "arrowcat/category.hpp"
#include "arrowcat/functor.hpp"
#include "arrowcat/natural.hpp"
#include "arrowcat/standard.hpp"

namespace arrowcat::catspec {

struct SourceSpan {
    std::size_t line = 0;    // 1-based
    std::size_t column = 0;  // 1-based
    auto operator<=>(const SourceSpan&) const = default;
};

enum class DiagnosticKind {
    lexical,
    syntax,
    missing_terminator,
    unknown_name,
    duplicate_name,
    conflicting_composition,
};

std::string_view to_string(DiagnosticKind kind) noexcept;

struct Diagnostic {
    DiagnosticKind kind;
    SourceSpan span;
    std::string message;

    std::string to_text(std::string_view filename) const;
};

class parse_error : public error {
public:
    parse_error(std::string filename, std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }
    const std::string& filename() const noexcept { return filename_; }

private:
    std::string filename_;
    std::vector<Diagnostic> diagnostics_;
};

/// `Id(C)`, or a chain `h . g . f` stored outermost first.
struct FunctorExpr {
    std::string identity_of;
    std::vector<std::string> chain;

    bool is_identity() const noexcept { return !identity_of.empty(); }
    std::string to_text() const;
    bool operator==(const FunctorExpr&) const = default;
};

struct FunctorDecl {
    std::string name;
    std::string source;
    std::string target;
    Variance variance = Variance::covariant;
    std::map<std::string, std::string> map;
    bool operator==(const FunctorDecl&) const = default;
};

struct NatDecl {
    std::string name;
    FunctorExpr from;
    FunctorExpr to;
    std::map<std::string, std::string> components;
    bool operator==(const NatDecl&) const = default;
};

using CategoryDecl = std::variant<ObjlessData, StdCategory>;

struct Document {
    std::map<std::string, CategoryDecl> categories;
    std::map<std::string, FunctorDecl> functors;
    std::map<std::string, NatDecl> nats;
    /// Block positions keyed by entity name; not part of equality.
    std::map<std::string, SourceSpan> spans;

    bool empty() const noexcept { return categories.empty() && functors.empty() && nats.empty(); }
    friend bool operator==(const Document& a, const Document& b) {
        return a.categories == b.categories && a.functors == b.functors && a.nats == b.nats;
    }
};

/// All-or-nothing: any diagnostic raises parse_error carrying every
/// diagnostic found (lexical and syntax errors stop the scan).
Document parse(std::string_view text, std::string_view filename = "<input>");

/// Canonical text: entities by name, arrows and compositions sorted.
std::string serialize(const Document& doc);

Document read_file(const std::string& path);

/// Canonical forms used by parse and by the serializer.
void canonicalize(ObjlessData& data);

/// Declarations for library values.
ObjlessData declare(const Category& c);
FunctorDecl declare(const Functor& f);
/// Header is `from => to` by functor name; components keyed by identity.
NatDecl declare(const NatTransf& t);

}  // namespace arrowcat::catspec

#endif  // ARROWCAT_CATSPEC_HPP
