#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "arrowcat/catspec.hpp"

namespace arrowcat::catspec {

namespace {

enum class Tok { name, lbrace, rbrace, colon, semi, comma, dot, equals, arrow, fat_arrow, lparen, rparen, end };

const char* describe(Tok t) {
    switch (t) {
    case Tok::name: return "a name";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::colon: return "':'";
    case Tok::semi: return "';'";
    case Tok::comma: return "','";
    case Tok::dot: return "'.'";
    case Tok::equals: return "'='";
    case Tok::arrow: return "'->'";
    case Tok::fat_arrow: return "'=>'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::end: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

// Lexical and syntax errors abort the parse.
struct Abort {
    Diagnostic diagnostic;
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        const char ch = text[i];
        const SourceSpan here{line, col};
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        auto is_word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
        if (is_word(ch)) {
            std::size_t j = i;
            while (j < text.size() && is_word(text[j])) ++j;
            std::string word(text.substr(i, j - i));
            if (std::isdigit(static_cast<unsigned char>(ch)))
                throw Abort{{DiagnosticKind::lexical, here, "name '" + word + "' must not begin with a digit"}};
            out.push_back({Tok::name, std::move(word), here});
            advance(j - i);
            continue;
        }
        auto two = i + 1 < text.size() ? text.substr(i, 2) : std::string_view{};
        if (two == "->") {
            out.push_back({Tok::arrow, "->", here});
            advance(2);
            continue;
        }
        if (two == "=>") {
            out.push_back({Tok::fat_arrow, "=>", here});
            advance(2);
            continue;
        }
        Tok kind;
        switch (ch) {
        case '{': kind = Tok::lbrace; break;
        case '}': kind = Tok::rbrace; break;
        case ':': kind = Tok::colon; break;
        case ';': kind = Tok::semi; break;
        case ',': kind = Tok::comma; break;
        case '.': kind = Tok::dot; break;
        case '=': kind = Tok::equals; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        default: {
            std::string shown = std::isprint(static_cast<unsigned char>(ch))
                                    ? std::string(1, ch)
                                    : "\\x" + std::to_string(static_cast<unsigned char>(ch));
            throw Abort{{DiagnosticKind::lexical, here, "unexpected character '" + shown + "'"}};
        }
        }
        out.push_back({kind, std::string(1, ch), here});
        advance(1);
    }
    out.push_back({Tok::end, "", {line, col}});
    return out;
}

template <typename T>
struct Spanned {
    T value;
    SourceSpan span;
};

struct RawComposition {
    Spanned<std::string> after, before, result;
};

struct RawObjless {
    Spanned<std::string> name;
    std::vector<Spanned<std::string>> arrows;
    std::vector<RawComposition> table;
};

struct RawStd {
    Spanned<std::string> name;
    std::vector<Spanned<std::string>> objects;
    struct Arr {
        Spanned<std::string> name, dom, cod;
    };
    std::vector<Arr> arrows;
    std::vector<std::pair<Spanned<std::string>, Spanned<std::string>>> ids;
    std::vector<RawComposition> table;
};

struct RawFunctor {
    Spanned<std::string> name, source, target;
    Variance variance = Variance::covariant;
    std::vector<std::pair<Spanned<std::string>, Spanned<std::string>>> map;
};

struct RawExpr {
    FunctorExpr expr;
    std::vector<Spanned<std::string>> names;  // functor names, or the category for Id(C)
};

struct RawNat {
    Spanned<std::string> name;
    RawExpr from, to;
    std::vector<std::pair<Spanned<std::string>, Spanned<std::string>>> components;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    void run() {
        while (peek().kind != Tok::end) {
            const Token& kw = peek();
            if (kw.kind != Tok::name) fail_expected("a block keyword");
            if (kw.text == "objless")
                objless_block();
            else if (kw.text == "category")
                category_block();
            else if (kw.text == "functor")
                functor_block();
            else if (kw.text == "nat")
                nat_block();
            else
                throw Abort{{DiagnosticKind::syntax, kw.span,
                             "expected 'objless', 'category', 'functor' or 'nat', found '" + kw.text + "'"}};
        }
    }

    std::vector<RawObjless> objless;
    std::vector<RawStd> standard;
    std::vector<RawFunctor> functors;
    std::vector<RawNat> nats;

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }

    [[noreturn]] void fail_expected(const std::string& what) const {
        const Token& t = peek();
        throw Abort{{DiagnosticKind::syntax, t.span,
                     "expected " + what + ", found " + (t.kind == Tok::name ? "'" + t.text + "'" : describe(t.kind))}};
    }

    const Token& expect(Tok kind) {
        if (peek().kind != kind) fail_expected(describe(kind));
        return take();
    }

    Spanned<std::string> name() {
        const Token& t = expect(Tok::name);
        return {t.text, t.span};
    }

    void keyword(const char* word) {
        if (peek().kind != Tok::name || peek().text != word) fail_expected(std::string("'") + word + "'");
        take();
    }

    void terminator() {
        if (peek().kind == Tok::semi) {
            take();
            return;
        }
        // Anchor the diagnostic at the end of the statement that lacks it.
        const Token& prev = toks_[pos_ == 0 ? 0 : pos_ - 1];
        SourceSpan at{prev.span.line, prev.span.column + prev.text.size()};
        throw Abort{{DiagnosticKind::missing_terminator, at,
                     "missing ';' after '" + prev.text + "' (found " +
                         (peek().kind == Tok::name ? "'" + peek().text + "'" : std::string(describe(peek().kind))) +
                         ")"}};
    }

    std::vector<Spanned<std::string>> name_list() {
        std::vector<Spanned<std::string>> out{name()};
        while (peek().kind == Tok::comma) {
            take();
            out.push_back(name());
        }
        return out;
    }

    std::vector<RawComposition> composition_list() {
        std::vector<RawComposition> out;
        do {
            if (!out.empty()) take();
            RawComposition c;
            c.after = name();
            expect(Tok::dot);
            c.before = name();
            expect(Tok::equals);
            c.result = name();
            out.push_back(std::move(c));
        } while (peek().kind == Tok::comma);
        return out;
    }

    void objless_block() {
        take();
        RawObjless b;
        b.name = name();
        expect(Tok::lbrace);
        while (peek().kind != Tok::rbrace) {
            if (peek().kind != Tok::name) fail_expected("'arrows', 'compose' or '}'");
            const std::string kw = peek().text;
            if (kw == "arrows") {
                take();
                expect(Tok::colon);
                auto names = name_list();
                b.arrows.insert(b.arrows.end(), names.begin(), names.end());
            } else if (kw == "compose") {
                take();
                expect(Tok::colon);
                auto comps = composition_list();
                b.table.insert(b.table.end(), comps.begin(), comps.end());
            } else {
                fail_expected("'arrows', 'compose' or '}'");
            }
            terminator();
        }
        take();
        objless.push_back(std::move(b));
    }

    void category_block() {
        take();
        RawStd b;
        b.name = name();
        expect(Tok::lbrace);
        while (peek().kind != Tok::rbrace) {
            if (peek().kind != Tok::name) fail_expected("'objects', 'arrow', 'id', 'compose' or '}'");
            const std::string kw = peek().text;
            if (kw == "objects") {
                take();
                expect(Tok::colon);
                auto names = name_list();
                b.objects.insert(b.objects.end(), names.begin(), names.end());
            } else if (kw == "arrow") {
                take();
                RawStd::Arr a;
                a.name = name();
                expect(Tok::colon);
                a.dom = name();
                expect(Tok::arrow);
                a.cod = name();
                b.arrows.push_back(std::move(a));
            } else if (kw == "id") {
                take();
                auto object = name();
                expect(Tok::equals);
                auto arrow = name();
                b.ids.emplace_back(std::move(object), std::move(arrow));
            } else if (kw == "compose") {
                take();
                expect(Tok::colon);
                auto comps = composition_list();
                b.table.insert(b.table.end(), comps.begin(), comps.end());
            } else {
                fail_expected("'objects', 'arrow', 'id', 'compose' or '}'");
            }
            terminator();
        }
        take();
        standard.push_back(std::move(b));
    }

    void functor_block() {
        take();
        RawFunctor f;
        f.name = name();
        expect(Tok::colon);
        f.source = name();
        expect(Tok::arrow);
        f.target = name();
        if (peek().kind == Tok::name) {
            if (peek().text == "contravariant")
                f.variance = Variance::contravariant;
            else if (peek().text != "covariant")
                fail_expected("'contravariant', 'covariant' or '{'");
            take();
        }
        expect(Tok::lbrace);
        while (peek().kind != Tok::rbrace) {
            keyword("map");
            auto from = name();
            expect(Tok::arrow);
            auto to = name();
            f.map.emplace_back(std::move(from), std::move(to));
            terminator();
        }
        take();
        functors.push_back(std::move(f));
    }

    RawExpr functor_expr() {
        RawExpr e;
        if (peek().kind == Tok::name && peek().text == "Id" && toks_[pos_ + 1].kind == Tok::lparen) {
            take();
            take();
            auto c = name();
            expect(Tok::rparen);
            e.expr.identity_of = c.value;
            e.names.push_back(std::move(c));
            return e;
        }
        auto first = name();
        e.expr.chain.push_back(first.value);
        e.names.push_back(std::move(first));
        while (peek().kind == Tok::dot) {
            take();
            auto next = name();
            e.expr.chain.push_back(next.value);
            e.names.push_back(std::move(next));
        }
        return e;
    }

    void nat_block() {
        take();
        RawNat n;
        n.name = name();
        expect(Tok::colon);
        n.from = functor_expr();
        expect(Tok::fat_arrow);
        n.to = functor_expr();
        expect(Tok::lbrace);
        while (peek().kind != Tok::rbrace) {
            keyword("component");
            auto key = name();
            expect(Tok::colon);
            auto value = name();
            n.components.emplace_back(std::move(key), std::move(value));
            terminator();
        }
        take();
        nats.push_back(std::move(n));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// Name resolution over the parsed blocks.
class Resolver {
public:
    explicit Resolver(Parser& p) : p_(p) {}

    Document run() {
        Document doc;
        for (auto& b : p_.objless) declare_category(b.name);
        for (auto& b : p_.standard) declare_category(b.name);
        for (auto& b : p_.objless) objless(b, doc);
        for (auto& b : p_.standard) standard(b, doc);
        for (auto& f : p_.functors) functor(f, doc);
        for (auto& n : p_.nats) nat(n, doc);
        std::stable_sort(diags_.begin(), diags_.end(),
                         [](const Diagnostic& a, const Diagnostic& b) { return a.span < b.span; });
        if (!diags_.empty()) throw Abort{};  // caller collects diags()
        return doc;
    }

    std::vector<Diagnostic>& diags() { return diags_; }

private:
    void report(DiagnosticKind kind, SourceSpan span, std::string message) {
        diags_.push_back({kind, span, std::move(message)});
    }

    void declare_category(const Spanned<std::string>& name) {
        if (!category_names_.emplace(name.value, name.span).second)
            report(DiagnosticKind::duplicate_name, name.span, "category '" + name.value + "' is already defined");
    }

    // Morphism names of each category, for functor and nat resolution.
    std::map<std::string, std::set<std::string>> arrows_of_;
    // Objects (standard) or morphisms (objectless) usable as component keys.
    std::map<std::string, std::set<std::string>> keys_of_;
    std::map<std::string, SourceSpan> category_names_;
    std::map<std::string, const RawFunctor*> functor_by_name_;

    void check_table(const std::string& category, const std::vector<RawComposition>& table,
                     const std::set<std::string>& known, std::vector<CompositionEntry>& out) {
        std::map<std::pair<std::string, std::string>, std::string> seen;
        for (const auto& c : table) {
            bool ok = true;
            for (const auto* n : {&c.after, &c.before, &c.result})
                if (!known.count(n->value)) {
                    report(DiagnosticKind::unknown_name, n->span,
                           "'" + n->value + "' is not an arrow of " + category);
                    ok = false;
                }
            if (!ok) continue;
            auto [it, inserted] = seen.emplace(std::pair{c.after.value, c.before.value}, c.result.value);
            if (!inserted) {
                if (it->second != c.result.value)
                    report(DiagnosticKind::conflicting_composition, c.after.span,
                           c.after.value + " . " + c.before.value + " is already defined as " + it->second);
                continue;
            }
            out.push_back({c.after.value, c.before.value, c.result.value});
        }
    }

    void objless(const RawObjless& b, Document& doc) {
        ObjlessData data;
        data.name = b.name.value;
        std::set<std::string> known;
        for (const auto& a : b.arrows) {
            if (!known.insert(a.value).second)
                report(DiagnosticKind::duplicate_name, a.span, "arrow '" + a.value + "' is declared twice");
            else
                data.morphisms.push_back(a.value);
        }
        check_table(b.name.value, b.table, known, data.table);
        canonicalize(data);
        arrows_of_[b.name.value] = known;
        keys_of_[b.name.value] = known;
        doc.spans[b.name.value] = b.name.span;
        doc.categories.emplace(b.name.value, std::move(data));
    }

    void standard(const RawStd& b, Document& doc) {
        StdCategory c;
        c.name = b.name.value;
        std::set<std::string> objects, arrows;
        for (const auto& o : b.objects) {
            if (!objects.insert(o.value).second)
                report(DiagnosticKind::duplicate_name, o.span, "object '" + o.value + "' is declared twice");
            else
                c.objects.push_back(o.value);
        }
        for (const auto& a : b.arrows) {
            if (!arrows.insert(a.name.value).second) {
                report(DiagnosticKind::duplicate_name, a.name.span, "arrow '" + a.name.value + "' is declared twice");
                continue;
            }
            for (const auto* end : {&a.dom, &a.cod})
                if (!objects.count(end->value))
                    report(DiagnosticKind::unknown_name, end->span,
                           "'" + end->value + "' is not an object of " + c.name);
            c.arrows.push_back({a.name.value, a.dom.value, a.cod.value});
        }
        for (const auto& [object, arrow] : b.ids) {
            if (!objects.count(object.value)) {
                report(DiagnosticKind::unknown_name, object.span, "'" + object.value + "' is not an object of " + c.name);
                continue;
            }
            if (c.id_of.count(object.value)) {
                report(DiagnosticKind::duplicate_name, object.span,
                       "identity of '" + object.value + "' is declared twice");
                continue;
            }
            c.id_of.emplace(object.value, arrow.value);
            if (!arrows.count(arrow.value)) {
                arrows.insert(arrow.value);
                c.arrows.push_back({arrow.value, object.value, object.value});
            }
        }
        try {
            // Identities first so that compose lines may mention id_A.
            StdCategory probe = c;
            complete_identities(probe);
            for (const auto& a : probe.arrows) arrows.insert(a.name);
        } catch (const error& e) {
            report(DiagnosticKind::duplicate_name, b.name.span, e.what());
        }
        check_table(c.name, b.table, arrows, c.table);
        try {
            complete_identities(c);
        } catch (const error&) {
            // already reported
        }
        arrows_of_[c.name] = arrows;
        keys_of_[c.name] = objects;
        for (const auto& a : c.arrows) keys_of_[c.name].insert(a.name);
        doc.spans[c.name] = b.name.span;
        doc.categories.emplace(c.name, std::move(c));
    }

    bool known_category(const Spanned<std::string>& n) {
        if (category_names_.count(n.value)) return true;
        report(DiagnosticKind::unknown_name, n.span, "unknown category '" + n.value + "'");
        return false;
    }

    void functor(const RawFunctor& f, Document& doc) {
        if (doc.functors.count(f.name.value)) {
            report(DiagnosticKind::duplicate_name, f.name.span, "functor '" + f.name.value + "' is already defined");
            return;
        }
        FunctorDecl d{f.name.value, f.source.value, f.target.value, f.variance, {}};
        const bool src_ok = known_category(f.source);
        const bool tgt_ok = known_category(f.target);
        for (const auto& [from, to] : f.map) {
            if (src_ok && !arrows_of_[f.source.value].count(from.value))
                report(DiagnosticKind::unknown_name, from.span,
                       "'" + from.value + "' is not an arrow of " + f.source.value);
            if (tgt_ok && !arrows_of_[f.target.value].count(to.value))
                report(DiagnosticKind::unknown_name, to.span, "'" + to.value + "' is not an arrow of " + f.target.value);
            auto [it, inserted] = d.map.emplace(from.value, to.value);
            if (!inserted && it->second != to.value)
                report(DiagnosticKind::duplicate_name, from.span,
                       "'" + from.value + "' is mapped twice in functor " + f.name.value);
        }
        functor_by_name_[f.name.value] = &f;
        doc.spans[f.name.value] = f.name.span;
        doc.functors.emplace(d.name, std::move(d));
    }

    // Source and target category names of an expression, when resolvable.
    std::optional<std::pair<std::string, std::string>> ends(const RawExpr& e) {
        if (e.expr.is_identity()) {
            if (!known_category(e.names.front())) return std::nullopt;
            return std::pair{e.expr.identity_of, e.expr.identity_of};
        }
        bool ok = true;
        for (const auto& n : e.names)
            if (!functor_by_name_.count(n.value)) {
                report(DiagnosticKind::unknown_name, n.span, "unknown functor '" + n.value + "'");
                ok = false;
            }
        if (!ok) return std::nullopt;
        return std::pair{functor_by_name_[e.names.back().value]->source.value,
                         functor_by_name_[e.names.front().value]->target.value};
    }

    void nat(const RawNat& n, Document& doc) {
        if (doc.nats.count(n.name.value)) {
            report(DiagnosticKind::duplicate_name, n.name.span, "transformation '" + n.name.value + "' is already defined");
            return;
        }
        NatDecl d{n.name.value, n.from.expr, n.to.expr, {}};
        auto from = ends(n.from);
        auto to = ends(n.to);
        for (const auto& [key, value] : n.components) {
            if (from && !keys_of_[from->first].count(key.value))
                report(DiagnosticKind::unknown_name, key.span,
                       "'" + key.value + "' is not an object or identity of " + from->first);
            if (from && !arrows_of_[from->second].count(value.value))
                report(DiagnosticKind::unknown_name, value.span,
                       "'" + value.value + "' is not an arrow of " + from->second);
            auto [it, inserted] = d.components.emplace(key.value, value.value);
            if (!inserted && it->second != value.value)
                report(DiagnosticKind::duplicate_name, key.span, "component at '" + key.value + "' is given twice");
        }
        (void)to;
        doc.spans[n.name.value] = n.name.span;
        doc.nats.emplace(d.name, std::move(d));
    }

    Parser& p_;
    std::vector<Diagnostic> diags_;
};

}  // namespace

std::string_view to_string(DiagnosticKind kind) noexcept {
    switch (kind) {
    case DiagnosticKind::lexical: return "lexical";
    case DiagnosticKind::syntax: return "syntax";
    case DiagnosticKind::missing_terminator: return "missing-terminator";
    case DiagnosticKind::unknown_name: return "unknown-name";
    case DiagnosticKind::duplicate_name: return "duplicate-name";
    case DiagnosticKind::conflicting_composition: return "conflicting-composition";
    }
    return "unknown";
}

std::string Diagnostic::to_text(std::string_view filename) const {
    return std::string(filename) + ":" + std::to_string(span.line) + ":" + std::to_string(span.column) + ": " +
           std::string(to_string(kind)) + ": " + message;
}

parse_error::parse_error(std::string filename, std::vector<Diagnostic> diagnostics)
    : error([&] {
          std::string msg;
          for (const auto& d : diagnostics) msg += d.to_text(filename) + "\n";
          return msg;
      }()),
      filename_(std::move(filename)),
      diagnostics_(std::move(diagnostics)) {}

std::string FunctorExpr::to_text() const {
    if (is_identity()) return "Id(" + identity_of + ")";
    std::string out;
    for (std::size_t i = 0; i < chain.size(); ++i) out += (i ? " . " : "") + chain[i];
    return out;
}

void canonicalize(ObjlessData& data) {
    std::sort(data.morphisms.begin(), data.morphisms.end());
    std::sort(data.table.begin(), data.table.end());
    data.table.erase(std::unique(data.table.begin(), data.table.end()), data.table.end());
}

Document parse(std::string_view text, std::string_view filename) {
    try {
        Parser parser(lex(text));
        parser.run();
        Resolver resolver(parser);
        try {
            return resolver.run();
        } catch (const Abort&) {
            throw parse_error(std::string(filename), std::move(resolver.diags()));
        }
    } catch (const Abort& a) {
        throw parse_error(std::string(filename), {a.diagnostic});
    }
}

Document read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

}  // namespace arrowcat::catspec
