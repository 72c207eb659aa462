#include "sftlab/toeplitz.hpp"

#include <algorithm>
#include <set>

namespace sftlab {

namespace {

// scan guard for pathological enumerations; the default order needs about
// 3 * 2^k lookups to reach the k-th base
constexpr std::size_t kScanBudget = 20'000'000;
constexpr int kMaxSteps = 60;

long long positive_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

void validate_toeplitz(const ToeplitzSpec& spec) {
    if (spec.omega.empty()) throw Error("toeplitz: omega needs at least one bit");
    for (int b : spec.omega)
        if (b != 0 && b != 1) throw Error("toeplitz: omega bits must be 0 or 1");
    std::set<long long> seen;
    for (long long v : spec.enumeration)
        if (!seen.insert(v).second) throw Error("toeplitz: enumeration repeats " + std::to_string(v));
}

long long enumeration_at(const ToeplitzSpec& spec, std::size_t i) {
    if (i < 1) throw Error("enumeration_at: indices are 1-based");
    if (!spec.enumeration.empty()) {
        if (i > spec.enumeration.size())
            throw Error("toeplitz: enumeration exhausted before an uncolored element was found");
        return spec.enumeration[i - 1];
    }
    // 0, 1, -1, 2, -2, ...
    if (i == 1) return 0;
    long long half = static_cast<long long>(i / 2);
    return i % 2 == 0 ? half : -half;
}

ColoringStructure coloring_structure(const ToeplitzSpec& spec, int steps) {
    if (steps < 1) throw Error("coloring_structure: need at least one step");
    if (steps > kMaxSteps) throw Error("coloring_structure: step budget exceeded");
    ColoringStructure cs;
    // invariant: the uncolored set is exactly uncolored_base + uncolored_period * Z
    cs.uncolored_base = 0;
    cs.uncolored_period = 1;
    for (int k = 1; k <= steps; ++k) {
        long long base = 0;
        bool found = false;
        for (std::size_t i = 1; i <= kScanBudget; ++i) {
            long long n = enumeration_at(spec, i);
            if (positive_mod(n - cs.uncolored_base, cs.uncolored_period) == 0) {
                base = n;
                found = true;
                break;
            }
        }
        if (!found) throw Error("coloring_structure: enumeration scan budget exceeded");
        long long period = cs.uncolored_period * 2;  // 2^k
        cs.steps.push_back({base, period});
        // coloring base + 2^k Z out of a coset of 2^(k-1) Z leaves the
        // complementary coset of 2^k Z
        cs.uncolored_base = positive_mod(base + cs.uncolored_period, period);
        cs.uncolored_period = period;
    }
    return cs;
}

Pattern toeplitz_encode(const ToeplitzSpec& spec, int window_radius) {
    if (window_radius < 0) throw Error("toeplitz_encode: negative window radius");
    const long long lo = -window_radius;
    const long long hi = window_radius;
    const std::size_t total = static_cast<std::size_t>(hi - lo + 1);

    Pattern p;
    p.dim = 1;
    std::size_t filled = 0;
    long long uncolored_base = 0;
    long long uncolored_period = 1;
    for (std::size_t step = 0; step < spec.omega.size() && filled < total; ++step) {
        if (step >= static_cast<std::size_t>(kMaxSteps))
            throw Error("toeplitz_encode: step budget exceeded");
        long long base = 0;
        bool found = false;
        for (std::size_t i = 1; i <= kScanBudget; ++i) {
            long long n = enumeration_at(spec, i);
            if (positive_mod(n - uncolored_base, uncolored_period) == 0) {
                base = n;
                found = true;
                break;
            }
        }
        if (!found) throw Error("toeplitz_encode: enumeration scan budget exceeded");
        long long period = uncolored_period * 2;
        // color the window cells of this progression; disjointness from all
        // earlier progressions is the structural invariant
        long long first = base + period * ((lo - base) / period);
        while (first < lo) first += period;
        while (first - period >= lo) first -= period;
        for (long long c = first; c <= hi; c += period) {
            p.cells.emplace(Cell{static_cast<int>(c)}, static_cast<Symbol>(spec.omega[step]));
            ++filled;
        }
        uncolored_base = positive_mod(base + uncolored_period, period);
        uncolored_period = period;
    }
    if (filled < total) {
        for (long long c = lo; c <= hi; ++c) {
            if (!p.cells.count(Cell{static_cast<int>(c)}))
                throw WindowNotFilled(c, "toeplitz_encode: cell " + std::to_string(c) +
                                             " still uncolored after " +
                                             std::to_string(spec.omega.size()) + " bits");
        }
    }
    return p;
}

std::vector<int> toeplitz_decode(const Pattern& p, const ToeplitzSpec& spec, int k_max) {
    if (k_max < 1) throw Error("toeplitz_decode: need at least one step");
    if (p.dim != 1) throw DimensionMismatch("toeplitz_decode: one-dimensional patterns only");
    Cell lo, hi;
    if (!is_full_box(p, &lo, &hi) || lo[0] != -hi[0])
        throw Error("toeplitz_decode: expected an unshifted full window");
    const long long radius = hi[0];

    ToeplitzSpec structure_only;
    structure_only.enumeration = spec.enumeration;
    ColoringStructure cs = coloring_structure(structure_only, k_max);

    std::vector<int> bits;
    bits.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        const ColoringStep& st = cs.steps[static_cast<std::size_t>(k - 1)];
        long long first = positive_mod(st.base + radius, st.period) - radius;  // smallest >= -radius
        if (first > radius)
            throw NoRepresentative(k, "toeplitz_decode: progression " + std::to_string(k) +
                                           " has no cell in the window");
        Symbol value = -1;
        for (long long c = first; c <= radius; c += st.period) {
            Symbol s = p.cells.at(Cell{static_cast<int>(c)});
            if (s != 0 && s != 1) throw Error("toeplitz_decode: pattern is not binary");
            if (value == -1) value = s;
            else if (value != s)
                throw InconsistentColoring("toeplitz_decode: progression " + std::to_string(k) +
                                           " carries conflicting symbols");
        }
        bits.push_back(static_cast<int>(value));
    }
    return bits;
}

BlockLanguage orbit_language(const Pattern& p, int n) {
    Alphabet binary = Alphabet::numeric(2);
    return language_of_pattern(p, n, &binary);
}

bool syndetic_check(const Pattern& p, const Pattern& block, int gap) {
    if (p.dim != block.dim) throw DimensionMismatch("syndetic_check: dimension mismatch");
    if (gap < 1) throw Error("syndetic_check: gap must be positive");
    if (block.empty()) throw Error("syndetic_check: empty block");
    Cell lo, hi;
    if (!is_full_box(p, &lo, &hi)) throw Error("syndetic_check: support is not a full box");
    for (int i = 0; i < p.dim; ++i) {
        std::size_t j = static_cast<std::size_t>(i);
        if (gap > hi[j] - lo[j] + 1) throw Error("syndetic_check: gap larger than the window");
    }
    // anchors of all aligned gap-sized sub-boxes
    Cell alo = lo;
    Cell ahi(lo.size());
    for (std::size_t j = 0; j < lo.size(); ++j) ahi[j] = hi[j] - gap + 1;
    std::vector<int> ext = block.extents();
    Cell blo = block.cells.begin()->first;  // lower corner of the block's bounding box
    for (const auto& [c, s] : block.cells)
        for (std::size_t j = 0; j < blo.size(); ++j) blo[j] = std::min(blo[j], c[j]);
    for (const Cell& anchor : box_cells(alo, ahi)) {
        bool found = false;
        // try every placement of the block inside this sub-box
        Cell plo(anchor.size()), phi(anchor.size());
        bool any_position = true;
        for (std::size_t j = 0; j < anchor.size(); ++j) {
            plo[j] = anchor[j];
            phi[j] = anchor[j] + gap - ext[j];
            if (phi[j] < plo[j]) any_position = false;
        }
        if (any_position) {
            for (const Cell& place : box_cells(plo, phi)) {
                Cell v = cell_sub(place, blo);
                bool all = true;
                for (const auto& [c, s] : block.cells) {
                    auto it = p.cells.find(cell_add(c, v));
                    if (it == p.cells.end() || it->second != s) {
                        all = false;
                        break;
                    }
                }
                if (all) {
                    found = true;
                    break;
                }
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace sftlab
