#include "sftlab/geometry.hpp"

#include <algorithm>

namespace sftlab {

namespace {

void require_dim(int dim, const Cell& v, const char* what) {
    if (static_cast<int>(v.size()) != dim)
        throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(dim) +
                                ", got " + std::to_string(v.size()));
}

}  // namespace

Cell cell_add(const Cell& a, const Cell& b) {
    require_dim(static_cast<int>(a.size()), b, "cell_add");
    Cell r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Cell cell_sub(const Cell& a, const Cell& b) {
    require_dim(static_cast<int>(a.size()), b, "cell_sub");
    Cell r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

std::vector<Cell> box_cells(const Cell& lo, const Cell& hi) {
    require_dim(static_cast<int>(lo.size()), hi, "box_cells");
    const std::size_t d = lo.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (hi[i] < lo[i]) throw Error("box_cells: empty box");
        total *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
    }
    std::vector<Cell> out;
    out.reserve(total);
    Cell c = lo;
    while (true) {
        out.push_back(c);
        // odometer: last coordinate varies fastest, so output is lexicographic
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (c[i] < hi[i]) {
                ++c[i];
                break;
            }
            c[i] = lo[i];
            if (i == 0) return out;
        }
    }
}

std::vector<Cell> Window::cells() const {
    Cell lo(static_cast<std::size_t>(dim), -radius);
    Cell hi(static_cast<std::size_t>(dim), radius);
    return box_cells(lo, hi);
}

std::size_t Window::cell_count() const {
    std::size_t n = 1;
    for (int i = 0; i < dim; ++i) n *= static_cast<std::size_t>(2 * radius + 1);
    return n;
}

bool Window::contains(const Cell& c) const {
    if (static_cast<int>(c.size()) != dim) return false;
    for (int x : c)
        if (x < -radius || x > radius) return false;
    return true;
}

std::vector<int> Pattern::extents() const {
    std::vector<int> ext(static_cast<std::size_t>(dim), 0);
    if (cells.empty()) return ext;
    Cell lo = cells.begin()->first;
    Cell hi = lo;
    for (const auto& [c, s] : cells) {
        for (int i = 0; i < dim; ++i) {
            lo[static_cast<std::size_t>(i)] = std::min(lo[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i)]);
            hi[static_cast<std::size_t>(i)] = std::max(hi[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i)]);
        }
    }
    for (int i = 0; i < dim; ++i)
        ext[static_cast<std::size_t>(i)] = hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)] + 1;
    return ext;
}

Pattern pattern_shift(const Pattern& p, const Cell& v) {
    require_dim(p.dim, v, "pattern_shift");
    Pattern out;
    out.dim = p.dim;
    for (const auto& [c, s] : p.cells) out.cells.emplace(cell_add(c, v), s);
    return out;
}

Pattern pattern_restrict(const Pattern& p, const Window& w) {
    if (w.dim != p.dim) throw DimensionMismatch("pattern_restrict: window dimension mismatch");
    Pattern out;
    out.dim = p.dim;
    for (const auto& [c, s] : p.cells)
        if (w.contains(c)) out.cells.emplace(c, s);
    return out;
}

std::vector<Cell> occurs_in(const Pattern& needle, const Pattern& hay) {
    if (needle.dim != hay.dim) throw DimensionMismatch("occurs_in: dimension mismatch");
    if (needle.empty()) throw Error("occurs_in: empty needle occurs everywhere");
    const Cell& n0 = needle.cells.begin()->first;
    std::vector<Cell> hits;
    // the first needle cell must land on some hay cell, which pins v
    for (const auto& [h, hs] : hay.cells) {
        if (hs != needle.cells.begin()->second) continue;
        Cell v = cell_sub(h, n0);
        bool all = true;
        for (const auto& [c, s] : needle.cells) {
            auto it = hay.cells.find(cell_add(c, v));
            if (it == hay.cells.end() || it->second != s) {
                all = false;
                break;
            }
        }
        if (all) hits.push_back(v);
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

bool patterns_compatible(const Pattern& p, const Pattern& q) {
    if (p.dim != q.dim) throw DimensionMismatch("patterns_compatible: dimension mismatch");
    const Pattern& small = p.size() <= q.size() ? p : q;
    const Pattern& big = p.size() <= q.size() ? q : p;
    for (const auto& [c, s] : small.cells) {
        auto it = big.cells.find(c);
        if (it != big.cells.end() && it->second != s) return false;
    }
    return true;
}

bool is_full_box(const Pattern& p, Cell* lo_out, Cell* hi_out) {
    if (p.cells.empty()) return false;
    Cell lo = p.cells.begin()->first;
    Cell hi = lo;
    for (const auto& [c, s] : p.cells) {
        for (int i = 0; i < p.dim; ++i) {
            std::size_t j = static_cast<std::size_t>(i);
            lo[j] = std::min(lo[j], c[j]);
            hi[j] = std::max(hi[j], c[j]);
        }
    }
    std::size_t want = 1;
    for (int i = 0; i < p.dim; ++i) {
        std::size_t j = static_cast<std::size_t>(i);
        want *= static_cast<std::size_t>(hi[j] - lo[j] + 1);
    }
    if (want != p.cells.size()) return false;
    if (lo_out) *lo_out = lo;
    if (hi_out) *hi_out = hi;
    return true;
}

Pattern flat_to_pattern(const std::vector<Cell>& cells, const std::vector<Symbol>& flat, int dim) {
    if (cells.size() != flat.size()) throw Error("flat_to_pattern: size mismatch");
    Pattern p;
    p.dim = dim;
    for (std::size_t i = 0; i < cells.size(); ++i) p.cells.emplace(cells[i], flat[i]);
    return p;
}

}  // namespace sftlab
