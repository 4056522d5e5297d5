#ifndef ARROWCAT_TESTS_SUPPORT_HPP
#define ARROWCAT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "arrowcat/catspec.hpp"
#include "arrowcat/generators.hpp"
#include "arrowcat/workspace.hpp"

namespace support {

using namespace arrowcat;

inline std::string fixture_path(const std::string& file) { return std::string(ARROWCAT_FIXTURE_DIR) + "/" + file; }
inline std::string negative_path(const std::string& file) { return std::string(ARROWCAT_NEGATIVE_DIR) + "/" + file; }

inline catspec::Workspace load(const std::string& file) { return catspec::Workspace(catspec::read_file(fixture_path(file))); }

inline CategoryPtr fixture(const std::string& file, const std::string& cat) { return load(file).category(cat); }

inline std::vector<std::string> files_in(const std::string& dir) {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".cat") out.push_back(e.path().filename().string());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::string> fixture_files() { return files_in(ARROWCAT_FIXTURE_DIR); }

/// Every category declared in any fixture file, deduplicated by name.
inline std::vector<CategoryPtr> fixture_categories() {
    std::map<std::string, CategoryPtr> by_name;
    for (const auto& file : fixture_files()) {
        auto ws = load(file);
        for (const auto& [name, decl] : ws.document().categories) by_name.emplace(name, ws.category(name));
    }
    std::vector<CategoryPtr> out;
    for (auto& [name, c] : by_name) out.push_back(c);
    return out;
}

inline std::vector<CategoryPtr> random_categories(std::size_t count, std::size_t max_morphisms, std::uint64_t base = 0) {
    std::vector<CategoryPtr> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(share(Category(gen_random(base + i, max_morphisms))));
    return out;
}

// Oracles below work on the raw table only.

using Table = std::map<std::pair<std::string, std::string>, std::string>;

inline Table table_of(const ObjlessData& d) {
    Table t;
    for (const auto& e : d.table) t[{e.after, e.before}] = e.result;
    return t;
}

/// Morphisms that compose with themselves and are neutral on both sides
/// wherever they compose.
inline std::set<std::string> oracle_identities(const ObjlessData& d) {
    const auto t = table_of(d);
    std::set<std::string> out;
    for (const auto& i : d.morphisms) {
        if (!t.count({i, i})) continue;
        bool neutral = true;
        for (const auto& [key, result] : t) {
            if (key.first == i && result != key.second) neutral = false;
            if (key.second == i && result != key.first) neutral = false;
        }
        if (neutral) out.insert(i);
    }
    return out;
}

inline std::size_t oracle_hom_size(const ObjlessData& d, const std::string& from, const std::string& to) {
    const auto t = table_of(d);
    std::size_t n = 0;
    for (const auto& m : d.morphisms)
        if (t.count({m, from}) && t.count({to, m})) ++n;
    return n;
}

}  // namespace support

#endif  // ARROWCAT_TESTS_SUPPORT_HPP
