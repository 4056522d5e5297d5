#include "arrowcat/limits.hpp"

namespace arrowcat {

namespace {

// Object at which a product cone fails to be universal, if any.
std::optional<Arrow> product_counterexample(const Category& c, Arrow a, Arrow b, Arrow apex, Arrow p1,
                                            Arrow p2) {
    for (auto x : c.identities()) {
        const auto to_apex = c.hom(x, apex);
        for (auto f : c.hom(x, a))
            for (auto g : c.hom(x, b)) {
                std::size_t factorizations = 0;
                for (auto u : to_apex)
                    if (c.compose(p1, u) == f && c.compose(p2, u) == g) ++factorizations;
                if (factorizations != 1) return x;
            }
    }
    return std::nullopt;
}

std::optional<Arrow> equalizer_counterexample(const Category& c, Arrow f, Arrow g, Arrow apex, Arrow e) {
    const Arrow source = c.dom(f);
    for (auto z : c.identities()) {
        const auto to_apex = c.hom(z, apex);
        for (auto h : c.hom(z, source)) {
            if (c.compose(f, h) != c.compose(g, h)) continue;
            std::size_t factorizations = 0;
            for (auto u : to_apex)
                if (c.compose(e, u) == h) ++factorizations;
            if (factorizations != 1) return z;
        }
    }
    return std::nullopt;
}

void require_parallel(const Category& c, Arrow f, Arrow g) {
    if (c.dom(f) != c.dom(g) || c.cod(f) != c.cod(g))
        throw error(c.name_of(f) + " and " + c.name_of(g) + " are not parallel");
}

}  // namespace

std::string_view to_string(LimitKind kind) noexcept {
    switch (kind) {
    case LimitKind::terminal: return "terminal";
    case LimitKind::product: return "product";
    case LimitKind::equalizer: return "equalizer";
    }
    return "unknown";
}

std::optional<Arrow> terminal_counterexample(const Category& c, Arrow apex) {
    for (auto x : c.identities())
        if (c.hom(x, apex).size() != 1) return x;
    return std::nullopt;
}

std::vector<Arrow> terminal_objects(const Category& c) {
    std::vector<Arrow> out;
    for (auto t : c.identities())
        if (!terminal_counterexample(c, t)) out.push_back(t);
    return out;
}

std::vector<Arrow> generalized_elements(const Category& c, Arrow object, Arrow stage) {
    auto h = c.hom(stage, object);
    return {h.begin(), h.end()};
}

bool is_product(const Category& c, Arrow a, Arrow b, const LimitCone& cone) {
    if (cone.legs.size() != 2) return false;
    const Arrow p1 = cone.legs[0], p2 = cone.legs[1];
    if (c.dom(p1) != cone.apex || c.dom(p2) != cone.apex || c.cod(p1) != a || c.cod(p2) != b) return false;
    return !product_counterexample(c, a, b, cone.apex, p1, p2);
}

bool is_equalizer(const Category& c, Arrow f, Arrow g, const LimitCone& cone) {
    if (cone.legs.size() != 1) return false;
    const Arrow e = cone.legs[0];
    if (c.dom(e) != cone.apex || c.cod(e) != c.dom(f)) return false;
    if (c.compose(f, e) != c.compose(g, e)) return false;
    return !equalizer_counterexample(c, f, g, cone.apex, e);
}

std::optional<LimitCone> binary_product(const Category& c, Arrow a, Arrow b) {
    c.hom(a, b);  // both must be identities
    for (auto p : c.identities())
        for (auto p1 : c.hom(p, a))
            for (auto p2 : c.hom(p, b)) {
                LimitCone cone{LimitKind::product, p, {p1, p2}};
                if (!product_counterexample(c, a, b, p, p1, p2)) return cone;
            }
    return std::nullopt;
}

std::optional<LimitCone> equalizer(const Category& c, Arrow f, Arrow g) {
    require_parallel(c, f, g);
    for (auto e_apex : c.identities())
        for (auto e : c.hom(e_apex, c.dom(f))) {
            if (c.compose(f, e) != c.compose(g, e)) continue;
            if (!equalizer_counterexample(c, f, g, e_apex, e)) return LimitCone{LimitKind::equalizer, e_apex, {e}};
        }
    return std::nullopt;
}

LimitScope available_scope(const Category& c) {
    LimitScope scope;
    scope.terminal = !terminal_objects(c).empty();
    const auto ids = c.identities();
    for (std::size_t i = 0; i < ids.size() && scope.products; ++i)
        for (std::size_t j = i; j < ids.size() && scope.products; ++j)
            scope.products = binary_product(c, ids[i], ids[j]).has_value();
    for (auto f : c.arrows()) {
        if (!scope.equalizers) break;
        for (auto g : c.hom(c.dom(f), c.cod(f)))
            if (f < g && !equalizer(c, f, g)) {
                scope.equalizers = false;
                break;
            }
    }
    return scope;
}

std::string to_string(const LimitScope& scope) {
    std::string out;
    auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (!out.empty()) out += ",";
        out += name;
    };
    add(scope.terminal, "terminal");
    add(scope.products, "products");
    add(scope.equalizers, "equalizers");
    return out.empty() ? "none" : out;
}

inapplicable_scope::inapplicable_scope(LimitKind kind, std::vector<std::string> diagram)
    : error([&] {
          std::string msg = "source category lacks a ";
          msg += to_string(kind);
          if (!diagram.empty()) {
              msg += " of";
              for (const auto& d : diagram) msg += " " + d;
          }
          return msg;
      }()),
      kind_(kind),
      diagram_(std::move(diagram)) {}

std::string LimitReport::to_text() const {
    if (ok()) return "ok (" + std::to_string(cones_checked) + " cones preserved)\n";
    std::string out;
    for (const auto& f : failures) out += std::string(to_string(f.kind)) + ": " + f.message + "\n";
    return out;
}

LimitReport preserves_finite_limits(const Functor& f, LimitScope scope) {
    if (!f.covariant()) throw wiring_error("limit preservation is defined for covariant functors only");
    const Category& src = f.source();
    const Category& tgt = f.target();
    const auto ids = src.identities();

    // Collect the source cones first so a missing limit is reported before
    // any preservation check runs.
    struct Job {
        LimitCone cone;
        std::vector<Arrow> diagram;
    };
    std::vector<Job> jobs;
    if (scope.terminal) {
        auto ts = terminal_objects(src);
        if (ts.empty()) throw inapplicable_scope(LimitKind::terminal, {});
        for (auto t : ts) jobs.push_back({{LimitKind::terminal, t, {}}, {}});
    }
    if (scope.products) {
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i; j < ids.size(); ++j) {
                auto cone = binary_product(src, ids[i], ids[j]);
                if (!cone)
                    throw inapplicable_scope(LimitKind::product, {src.name_of(ids[i]), src.name_of(ids[j])});
                jobs.push_back({*cone, {ids[i], ids[j]}});
            }
    }
    if (scope.equalizers) {
        for (auto a : src.arrows())
            for (auto b : src.hom(src.dom(a), src.cod(a))) {
                if (b < a) continue;
                auto cone = equalizer(src, a, b);
                if (!cone) throw inapplicable_scope(LimitKind::equalizer, {src.name_of(a), src.name_of(b)});
                jobs.push_back({*cone, {a, b}});
            }
    }

    LimitReport report;
    for (const auto& job : jobs) {
        ++report.cones_checked;
        const auto& cone = job.cone;
        std::vector<std::string> diagram;
        for (auto d : job.diagram) diagram.push_back(src.name_of(d));
        std::optional<Arrow> bad;
        std::string what;
        switch (cone.kind) {
        case LimitKind::terminal:
            bad = terminal_counterexample(tgt, f(cone.apex));
            what = "terminal " + src.name_of(cone.apex) + " is sent to " + tgt.name_of(f(cone.apex)) +
                   ", which is not terminal";
            if (bad)
                what += ": hom(" + tgt.name_of(*bad) + ", " + tgt.name_of(f(cone.apex)) + ") has " +
                        std::to_string(tgt.hom(*bad, f(cone.apex)).size()) + " elements";
            break;
        case LimitKind::product: {
            const Arrow a = f(job.diagram[0]), b = f(job.diagram[1]);
            bad = product_counterexample(tgt, a, b, f(cone.apex), f(cone.legs[0]), f(cone.legs[1]));
            what = "image of the product " + src.name_of(cone.apex) + " of " + diagram[0] + " and " +
                   diagram[1] + " is not a product of " + tgt.name_of(a) + " and " + tgt.name_of(b);
            break;
        }
        case LimitKind::equalizer: {
            const Arrow a = f(job.diagram[0]), b = f(job.diagram[1]);
            const Arrow e = f(cone.legs[0]);
            if (tgt.compose(a, e) != tgt.compose(b, e))
                bad = f(cone.apex);
            else
                bad = equalizer_counterexample(tgt, a, b, f(cone.apex), e);
            what = "image of the equalizer " + src.name_of(cone.apex) + " of " + diagram[0] + " and " +
                   diagram[1] + " is not an equalizer";
            break;
        }
        }
        if (bad) {
            what += " (counterexample object " + tgt.name_of(*bad) + ")";
            report.failures.push_back({cone.kind, std::move(diagram), tgt.name_of(*bad), std::move(what)});
        }
    }
    return report;
}

}  // namespace arrowcat
