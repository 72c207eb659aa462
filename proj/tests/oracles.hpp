#pragma once

// Brute-force reference implementations for tests.  Everything here walks
// assignments directly and checks occurrences with plain loops, on purpose:
// no engine code paths are reused beyond the data types.

#include <set>
#include <vector>

#include "sftlab/sft.hpp"

namespace oracle {

using sftlab::Cell;
using sftlab::Pattern;
using sftlab::Sft;
using sftlab::Symbol;

inline std::vector<std::vector<Symbol>> all_words(int k, int len) {
    std::vector<std::vector<Symbol>> out;
    std::vector<Symbol> w(len, 0);
    while (true) {
        out.push_back(w);
        int i = len - 1;
        while (i >= 0 && w[i] == k - 1) w[i--] = 0;
        if (i < 0) break;
        ++w[i];
    }
    if (len == 0) out.assign(1, {});
    return out;
}

// does p (1d, arbitrary support) occur anywhere in word, any offset
inline bool occurs_1d(const std::vector<Symbol>& word, const Pattern& p) {
    int len = static_cast<int>(word.size());
    for (int v = -64; v < len + 64; ++v) {
        bool all_inside = true;
        bool match = true;
        for (const auto& [c, s] : p.cells) {
            int at = c[0] + v;
            if (at < 0 || at >= len) {
                all_inside = false;
                break;
            }
            if (word[at] != s) match = false;
        }
        if (all_inside && match) return true;
    }
    return false;
}

inline std::set<std::vector<Symbol>> words_1d(const Sft& x, int len) {
    std::set<std::vector<Symbol>> out;
    for (const auto& w : all_words(static_cast<int>(x.alphabet.size()), len)) {
        bool ok = true;
        for (const Pattern& p : x.forbidden)
            if (occurs_1d(w, p)) {
                ok = false;
                break;
            }
        if (ok) out.insert(w);
    }
    return out;
}

// generic-dimension box count by exhaustion; cells in row-major order over
// the given extents, origin at the box corner
inline long long box_count(const Sft& x, const std::vector<int>& extents) {
    int d = static_cast<int>(extents.size());
    long long total = 1;
    for (int e : extents) total *= e;
    std::vector<Symbol> grid(total, 0);
    int k = static_cast<int>(x.alphabet.size());
    auto at = [&](const Cell& c) {
        long long idx = 0;
        for (int i = 0; i < d; ++i) idx = idx * extents[i] + c[i];
        return grid[idx];
    };
    long long count = 0;
    while (true) {
        bool ok = true;
        for (const Pattern& p : x.forbidden) {
            Cell lo(d, 0), hi(d, 0);
            bool first = true;
            for (const auto& [c, s] : p.cells) {
                for (int i = 0; i < d; ++i) {
                    if (first || c[i] < lo[i]) lo[i] = c[i];
                    if (first || c[i] > hi[i]) hi[i] = c[i];
                }
                first = false;
            }
            // every shift v with the whole support inside the box
            Cell v(d, 0);
            bool any_left = true;
            for (int i = 0; i < d; ++i) {
                v[i] = -lo[i];
                if (extents[i] - (hi[i] - lo[i] + 1) < 0) any_left = false;
            }
            while (any_left && ok) {
                bool match = true;
                for (const auto& [c, s] : p.cells) {
                    Cell cc(d);
                    for (int i = 0; i < d; ++i) cc[i] = c[i] + v[i];
                    if (at(cc) != s) {
                        match = false;
                        break;
                    }
                }
                if (match) ok = false;
                int i = d - 1;
                while (i >= 0 && v[i] + hi[i] == extents[i] - 1) v[i--] = -lo[i];
                if (i < 0) break;
                ++v[i];
            }
            if (!ok) break;
        }
        if (ok) ++count;
        long long i = total - 1;
        while (i >= 0 && grid[i] == k - 1) grid[i--] = 0;
        if (i < 0) break;
        ++grid[i];
    }
    return count;
}

struct Domino {
    bool vertical = false;  // false: cells (0,0),(1,0); true: cells (0,0),(0,1)
    Symbol a = 0;           // symbol at (0,0)
    Symbol b = 0;           // symbol at the neighbor
};

// can a width x height binary grid avoid all the dominoes?  Row-by-row
// reachability; row masks encode cell (x, y) with x the bit index, and rows
// are scanned upward in y so vertical dominoes read (lower, upper).
inline bool domino_possible(const std::vector<Domino>& ds, int width, int height) {
    int nmask = 1 << width;
    auto bit = [](int mask, int i) { return (mask >> i) & 1; };
    std::vector<char> row_ok(nmask, 1);
    for (int m = 0; m < nmask; ++m)
        for (int xpos = 0; xpos + 1 < width && row_ok[m]; ++xpos)
            for (const Domino& d : ds)
                if (!d.vertical && bit(m, xpos) == d.a && bit(m, xpos + 1) == d.b)
                    row_ok[m] = 0;
    auto pair_ok = [&](int lower, int upper) {
        for (int xpos = 0; xpos < width; ++xpos)
            for (const Domino& d : ds)
                if (d.vertical && bit(lower, xpos) == d.a && bit(upper, xpos) == d.b)
                    return false;
        return true;
    };
    std::vector<char> reach(nmask, 0);
    for (int m = 0; m < nmask; ++m) reach[m] = row_ok[m];
    for (int y = 1; y < height; ++y) {
        std::vector<char> next(nmask, 0);
        for (int up = 0; up < nmask; ++up) {
            if (!row_ok[up]) continue;
            for (int low = 0; low < nmask; ++low)
                if (reach[low] && pair_ok(low, up)) {
                    next[up] = 1;
                    break;
                }
        }
        reach = next;
    }
    for (int m = 0; m < nmask; ++m)
        if (reach[m]) return true;
    return false;
}

}  // namespace oracle
