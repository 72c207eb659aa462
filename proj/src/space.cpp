#include "sftlab/space.hpp"

#include <algorithm>

namespace sftlab {

std::string DyadicDistance::to_string() const {
    std::string v = exponent == 0 ? std::string("1") : "2^-" + std::to_string(exponent);
    return kind == Kind::exact ? v : "<=" + v;
}

bool dyadic_less(const DyadicDistance& a, const DyadicDistance& b) {
    if (a.exponent != b.exponent) return a.exponent > b.exponent;
    return a.kind == DyadicDistance::Kind::at_most && b.kind == DyadicDistance::Kind::exact;
}

BlockLanguage restrict_language(const BlockLanguage& l, int m) {
    if (m < 0) throw ResolutionError("restrict_language: negative resolution");
    if (m > l.resolution)
        throw ResolutionError("restrict_language: target resolution " + std::to_string(m) +
                              " exceeds language resolution " + std::to_string(l.resolution));
    BlockLanguage out;
    out.dim = l.dim;
    out.alphabet = l.alphabet;
    out.resolution = m;
    if (m == l.resolution) {
        out.blocks = l.blocks;
        return out;
    }
    // indices of the inner window's cells inside the outer flat layout
    std::vector<Cell> outer = l.window().cells();
    std::vector<std::size_t> keep;
    Window inner{l.dim, m};
    for (std::size_t i = 0; i < outer.size(); ++i)
        if (inner.contains(outer[i])) keep.push_back(i);
    for (const auto& flat : l.blocks) {
        std::vector<Symbol> small;
        small.reserve(keep.size());
        for (std::size_t i : keep) small.push_back(flat[i]);
        out.blocks.insert(std::move(small));
    }
    return out;
}

bool language_equal_at(const BlockLanguage& a, const BlockLanguage& b, int n) {
    if (a.dim != b.dim) throw DimensionMismatch("language_equal_at: dimension mismatch");
    if (n > a.resolution || n > b.resolution)
        throw ResolutionError("language_equal_at: resolution too low for comparison at " +
                              std::to_string(n));
    return restrict_language(a, n).blocks == restrict_language(b, n).blocks;
}

DyadicDistance hausdorff_proxy(const BlockLanguage& a, const BlockLanguage& b, int upto) {
    if (upto < 0) throw ResolutionError("hausdorff_proxy: negative resolution");
    if (upto > a.resolution || upto > b.resolution)
        throw ResolutionError("hausdorff_proxy: languages must have resolution at least " +
                              std::to_string(upto));
    for (int n = 0; n <= upto; ++n)
        if (!language_equal_at(a, b, n)) return DyadicDistance::exact(n);
    return DyadicDistance::at_most(upto + 1);
}

BlockLanguage language_of_pattern(const Pattern& p, int n, const Alphabet* alphabet) {
    if (n < 0) throw ResolutionError("language_of_pattern: negative resolution");
    Cell lo, hi;
    if (!is_full_box(p, &lo, &hi)) throw Error("language_of_pattern: support is not a full window");
    int radius = -1;
    for (int i = 0; i < p.dim; ++i) {
        std::size_t j = static_cast<std::size_t>(i);
        if (lo[j] != -hi[j] || (radius >= 0 && hi[j] != radius))
            throw Error("language_of_pattern: support is not a centered window");
        radius = hi[j];
    }
    if (radius < n) throw ResolutionError("language_of_pattern: support too small for resolution " +
                                          std::to_string(n));
    BlockLanguage out;
    out.dim = p.dim;
    out.resolution = n;
    if (alphabet) {
        out.alphabet = *alphabet;
    } else {
        Symbol top = 0;
        for (const auto& [c, s] : p.cells) top = std::max(top, s);
        out.alphabet = Alphabet::numeric(top + 1);
    }
    std::vector<Cell> offsets = Window{p.dim, n}.cells();
    Cell clo(static_cast<std::size_t>(p.dim), -(radius - n));
    Cell chi(static_cast<std::size_t>(p.dim), radius - n);
    for (const Cell& center : box_cells(clo, chi)) {
        std::vector<Symbol> flat;
        flat.reserve(offsets.size());
        for (const Cell& off : offsets) flat.push_back(p.cells.at(cell_add(center, off)));
        out.blocks.insert(std::move(flat));
    }
    return out;
}

}  // namespace sftlab
