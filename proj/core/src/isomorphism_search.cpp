#include "arrowcat/isomorphism_search.hpp"

#include <algorithm>
#include <string>

namespace arrowcat {

namespace {

constexpr std::uint32_t unset = UINT32_MAX;

struct Signature {
    std::size_t endo = 0;
    std::vector<std::size_t> out;
    std::vector<std::size_t> in;
    bool operator==(const Signature&) const = default;
};

Signature signature(const Category& c, Arrow id) {
    Signature s;
    s.endo = c.hom(id, id).size();
    for (auto other : c.identities()) {
        s.out.push_back(c.hom(id, other).size());
        s.in.push_back(c.hom(other, id).size());
    }
    std::sort(s.out.begin(), s.out.end());
    std::sort(s.in.begin(), s.in.end());
    return s;
}

class Search {
public:
    Search(const Category& a, const Category& b) : a_(a), b_(b) {
        fwd_.assign(a.size(), unset);
        bwd_.assign(b.size(), unset);
        involving_.resize(a.size());
        const auto triples = a.compositions();
        for (std::size_t t = 0; t < triples.size(); ++t) {
            involving_[triples[t].after.index].push_back(t);
            if (triples[t].before != triples[t].after) involving_[triples[t].before.index].push_back(t);
        }
        for (auto id : a.identities()) sig_a_.push_back(signature(a, id));
        for (auto id : b.identities()) sig_b_.push_back(signature(b, id));
        obj_.assign(a.identities().size(), unset);
        obj_used_.assign(b.identities().size(), false);

        // Non-identity arrows grouped by hom-class, smallest classes first.
        for (auto x : a.identities())
            for (auto y : a.identities()) {
                std::vector<Arrow> cls;
                for (auto f : a.hom(x, y))
                    if (!a.is_identity(f)) cls.push_back(f);
                if (!cls.empty()) classes_.push_back(std::move(cls));
            }
        std::stable_sort(classes_.begin(), classes_.end(),
                         [](const auto& l, const auto& r) { return l.size() < r.size(); });
        for (const auto& cls : classes_) order_.insert(order_.end(), cls.begin(), cls.end());
    }

    std::optional<std::vector<Arrow>> run() {
        if (objects(0)) {
            std::vector<Arrow> out(a_.size());
            for (std::size_t i = 0; i < out.size(); ++i) out[i] = Arrow{fwd_[i]};
            return out;
        }
        return std::nullopt;
    }

private:
    bool objects(std::size_t slot) {
        const auto ids_a = a_.identities();
        const auto ids_b = b_.identities();
        if (slot == ids_a.size()) {
            const auto mark = trail_.size();
            bool ok = true;
            for (std::size_t i = 0; i < ids_a.size() && ok; ++i)
                ok = assign(ids_a[i], ids_b[obj_[i]]);
            if (ok && arrows(0)) return true;
            undo(mark);
            return false;
        }
        for (std::size_t cand = 0; cand < ids_b.size(); ++cand) {
            if (obj_used_[cand] || !(sig_a_[slot] == sig_b_[cand])) continue;
            bool consistent = true;
            for (std::size_t prev = 0; prev < slot && consistent; ++prev) {
                consistent = a_.hom(ids_a[prev], ids_a[slot]).size() ==
                                 b_.hom(ids_b[obj_[prev]], ids_b[cand]).size() &&
                             a_.hom(ids_a[slot], ids_a[prev]).size() ==
                                 b_.hom(ids_b[cand], ids_b[obj_[prev]]).size();
            }
            if (!consistent) continue;
            obj_[slot] = static_cast<std::uint32_t>(cand);
            obj_used_[cand] = true;
            if (objects(slot + 1)) return true;
            obj_used_[cand] = false;
            obj_[slot] = unset;
        }
        return false;
    }

    bool arrows(std::size_t pos) {
        while (pos < order_.size() && fwd_[order_[pos].index] != unset) ++pos;
        if (pos == order_.size()) return true;
        const Arrow f = order_[pos];
        const Arrow from = Arrow{fwd_[a_.dom(f).index]};
        const Arrow to = Arrow{fwd_[a_.cod(f).index]};
        for (auto cand : b_.hom(from, to)) {
            if (bwd_[cand.index] != unset || b_.is_identity(cand)) continue;
            const auto mark = trail_.size();
            if (assign(f, cand) && arrows(pos + 1)) return true;
            undo(mark);
        }
        return false;
    }

    // Assigns f -> x and propagates every composite this forces.
    bool assign(Arrow f, Arrow x) {
        std::vector<std::pair<Arrow, Arrow>> pending{{f, x}};
        while (!pending.empty()) {
            auto [p, q] = pending.back();
            pending.pop_back();
            if (fwd_[p.index] != unset) {
                if (fwd_[p.index] != q.index) return false;
                continue;
            }
            if (bwd_[q.index] != unset) return false;
            if (a_.is_identity(p) != b_.is_identity(q)) return false;
            fwd_[p.index] = q.index;
            bwd_[q.index] = p.index;
            trail_.push_back(p);
            for (auto t : involving_[p.index]) {
                const auto& tr = a_.compositions()[t];
                if (fwd_[tr.after.index] == unset || fwd_[tr.before.index] == unset) continue;
                auto image = b_.compose(Arrow{fwd_[tr.after.index]}, Arrow{fwd_[tr.before.index]});
                if (!image) return false;
                pending.emplace_back(tr.result, *image);
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            auto p = trail_.back();
            trail_.pop_back();
            bwd_[fwd_[p.index]] = unset;
            fwd_[p.index] = unset;
        }
    }

    const Category& a_;
    const Category& b_;
    std::vector<std::uint32_t> fwd_, bwd_;
    std::vector<std::vector<std::size_t>> involving_;
    std::vector<Signature> sig_a_, sig_b_;
    std::vector<std::uint32_t> obj_;
    std::vector<bool> obj_used_;
    std::vector<std::vector<Arrow>> classes_;
    std::vector<Arrow> order_;
    std::vector<Arrow> trail_;
};

}  // namespace

std::optional<std::vector<Arrow>> find_isomorphism_map(const Category& a, const Category& b,
                                                       std::size_t cap) {
    if (a.size() > cap || b.size() > cap)
        throw capacity_error("isomorphism search is capped at " + std::to_string(cap) +
                             " morphisms per category (got " + std::to_string(a.size()) + " and " +
                             std::to_string(b.size()) + ")");
    if (a.size() != b.size() || a.identities().size() != b.identities().size() ||
        a.compositions().size() != b.compositions().size())
        return std::nullopt;
    return Search(a, b).run();
}

}  // namespace arrowcat
