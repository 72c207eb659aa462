#pragma once

#include <map>
#include <vector>

#include "sftlab/alphabet.hpp"
#include "sftlab/errors.hpp"

namespace sftlab {

// One lattice point; size() is the dimension.  Doubles as a translation
// vector, which is why there is no separate offset type.
using Cell = std::vector<int>;

Cell cell_add(const Cell& a, const Cell& b);
Cell cell_sub(const Cell& a, const Cell& b);

// All points of the box [lo, hi] (bounds inclusive), lexicographic order.
// This ordering is the canonical cell order used everywhere.
std::vector<Cell> box_cells(const Cell& lo, const Cell& hi);

// The centered cube [-radius, radius]^dim.
struct Window {
    int dim = 1;
    int radius = 0;

    std::vector<Cell> cells() const;
    std::size_t cell_count() const;  // (2*radius+1)^dim
    bool contains(const Cell& c) const;
};

// A finite partial configuration.  std::map keeps the support in canonical
// (lexicographic) order, which serialization and enumeration rely on.
struct Pattern {
    int dim = 1;
    std::map<Cell, Symbol> cells;

    bool empty() const { return cells.empty(); }
    std::size_t size() const { return cells.size(); }

    // per-axis extent (max - min + 1); all zeros for the empty pattern
    std::vector<int> extents() const;

    bool operator==(const Pattern&) const = default;
};

Pattern pattern_shift(const Pattern& p, const Cell& v);
Pattern pattern_restrict(const Pattern& p, const Window& w);

// Translations v with shift(needle, v) contained in hay and agreeing with
// it.  The needle must be nonempty; results come back sorted.
std::vector<Cell> occurs_in(const Pattern& needle, const Pattern& hay);

// true iff p and q agree on the intersection of their supports
bool patterns_compatible(const Pattern& p, const Pattern& q);

// true iff the support is exactly a full box; reports its bounds on demand
bool is_full_box(const Pattern& p, Cell* lo = nullptr, Cell* hi = nullptr);

// Flat window values (canonical cell order) as a pattern and back.
Pattern flat_to_pattern(const std::vector<Cell>& cells, const std::vector<Symbol>& flat, int dim);

}  // namespace sftlab
