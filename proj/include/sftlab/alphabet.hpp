#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sftlab {

using Symbol = std::int32_t;

// Symbols are indices into a table of display names.  All engine data
// structures store indices; names only matter for parsing and reports.
struct Alphabet {
    std::vector<std::string> names;

    int size() const { return static_cast<int>(names.size()); }

    bool operator==(const Alphabet&) const = default;

    // -1 when the name is not declared
    int index_of(std::string_view name) const {
        for (int i = 0; i < size(); ++i)
            if (names[static_cast<std::size_t>(i)] == name) return i;
        return -1;
    }

    const std::string& name_of(Symbol s) const { return names[static_cast<std::size_t>(s)]; }

    static Alphabet numeric(int k) {
        Alphabet a;
        a.names.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) a.names.push_back(std::to_string(i));
        return a;
    }

    // pair alphabet: index = i * b.size() + j, displayed as "(ai,bj)"
    static Alphabet pairs(const Alphabet& a, const Alphabet& b) {
        Alphabet p;
        p.names.reserve(static_cast<std::size_t>(a.size()) * static_cast<std::size_t>(b.size()));
        for (const auto& an : a.names)
            for (const auto& bn : b.names) p.names.push_back("(" + an + "," + bn + ")");
        return p;
    }
};

}  // namespace sftlab
