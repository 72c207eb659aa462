#include "sftlab/perturb.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace sftlab {

BlockLanguage image_language(const Sft& w, const SlidingBlockCode& c, int m,
                             std::size_t block_budget) {
    if (m < 0) throw ResolutionError("image_language: negative resolution");
    return code_apply(c, admissible_blocks(w, m + c.radius, block_budget));
}

namespace {

// box shapes with at most `max_cells` cells, ordered by cell count then by
// extents; within one shape the contents enumerate densest symbol first
std::vector<std::vector<int>> candidate_shapes(int dim, int max_cells) {
    std::vector<std::vector<int>> shapes;
    std::vector<int> e(static_cast<std::size_t>(dim), 1);
    std::function<void(int)> go = [&](int axis) {
        if (axis == dim) {
            long long cells = 1;
            for (int x : e) cells *= x;
            if (cells <= max_cells) shapes.push_back(e);
            return;
        }
        for (int x = 1; x <= max_cells; ++x) {
            e[static_cast<std::size_t>(axis)] = x;
            go(axis + 1);
        }
    };
    go(0);
    std::sort(shapes.begin(), shapes.end(), [](const auto& a, const auto& b) {
        long long ca = 1, cb = 1;
        for (int x : a) ca *= x;
        for (int x : b) cb *= x;
        return std::tie(ca, a) < std::tie(cb, b);
    });
    return shapes;
}

// contents for one shape, lexicographic over symbols taken in descending
// order, so high symbols lead
void for_each_content_desc(int k, std::size_t count,
                           const std::function<void(const std::vector<Symbol>&)>& f) {
    std::vector<Symbol> w(count, static_cast<Symbol>(k - 1));
    while (true) {
        f(w);
        std::size_t i = count;
        while (i > 0) {
            --i;
            if (w[i] > 0) {
                --w[i];
                break;
            }
            w[i] = static_cast<Symbol>(k - 1);
            if (i == 0) return;
        }
        if (count == 0) return;
    }
}

int fit_radius(const std::vector<int>& extents) {
    int r = 0;
    for (int e : extents) r = std::max(r, (e - 1 + 1) / 2);  // 2r+1 >= e
    return r;
}

bool occurs_in_language(const Pattern& q, const BlockLanguage& lang) {
    for (const auto& flat : lang.blocks) {
        if (!occurs_in(q, lang.block_pattern(flat)).empty()) return true;
    }
    return false;
}

}  // namespace

PerturbationResult perturb_subsystem(const PerturbationRequest& req) {
    PerturbationResult res;
    res.pattern_budget = req.pattern_budget;
    res.image_budget = req.image_budget;
    if (req.keep_resolution < 0) throw ResolutionError("perturb_subsystem: negative keep resolution");
    if (req.pattern_budget < 1) throw Error("perturb_subsystem: pattern budget must be positive");
    if (req.image_budget < 0) throw Error("perturb_subsystem: negative image budget");

    const BlockLanguage keep = admissible_blocks(req.w, req.keep_resolution, req.block_budget);
    if (keep.blocks.empty()) return res;  // nothing to preserve

    // reference images, computed once per resolution on demand
    std::vector<std::optional<BlockLanguage>> image_w(static_cast<std::size_t>(req.image_budget) + 1);
    auto image_of_w = [&](int m) -> const BlockLanguage& {
        auto& slot = image_w[static_cast<std::size_t>(m)];
        if (!slot) slot = image_language(req.w, req.code, m, req.block_budget);
        return *slot;
    };

    // occurrence filters, one language per box-fitting radius
    std::map<int, BlockLanguage> occ_langs;
    auto occurrence_language = [&](int radius) -> const BlockLanguage& {
        auto it = occ_langs.find(radius);
        if (it == occ_langs.end())
            it = occ_langs.emplace(radius, admissible_blocks(req.w, radius, req.block_budget)).first;
        return it->second;
    };

    for (const auto& shape : candidate_shapes(req.w.dim, req.pattern_budget)) {
        Cell lo(shape.size(), 0);
        Cell hi(shape.size());
        for (std::size_t i = 0; i < shape.size(); ++i) hi[i] = shape[i] - 1;
        const std::vector<Cell> cells = box_cells(lo, hi);
        const int radius = fit_radius(shape);
        int max_extent = *std::max_element(shape.begin(), shape.end());

        std::optional<PerturbationFound> hit;
        for_each_content_desc(req.w.alphabet.size(), cells.size(), [&](const std::vector<Symbol>& content) {
            if (hit) return;
            Pattern q = flat_to_pattern(cells, content, req.w.dim);
            try {
                // patterns absent from w change nothing; skip them
                if (!occurs_in_language(q, occurrence_language(radius))) return;

                Sft w0 = req.w;
                w0.forbidden.push_back(q);

                // the subsystem must look identical at the keep resolution
                BlockLanguage keep0 = admissible_blocks(w0, req.keep_resolution, req.block_budget);
                if (keep0.blocks != keep.blocks) return;

                // reject candidates that collapse the subsystem outright; an
                // empty w0 is not a subsystem in any useful sense
                auto verdict = emptiness_semidecide(w0, req.keep_resolution + max_extent, req.block_budget);
                if (verdict.kind == EmptinessVerdict::Kind::empty) return;

                for (int m = 0; m <= req.image_budget; ++m) {
                    const BlockLanguage& a = image_of_w(m);
                    BlockLanguage b = image_language(w0, req.code, m, req.block_budget);
                    if (a.blocks == b.blocks) continue;
                    // more constraints only shrink the language, so the
                    // difference always sits on w's side
                    std::vector<Symbol> witness;
                    for (const auto& flat : a.blocks) {
                        if (!b.blocks.count(flat)) {
                            witness = flat;
                            break;
                        }
                    }
                    PerturbationFound f;
                    f.w0 = std::move(w0);
                    f.added_forbidden = q;
                    f.agreement_resolution = req.keep_resolution;
                    f.divergence_resolution = m;
                    f.witness_block = a.block_pattern(witness);
                    hit = std::move(f);
                    return;
                }
            } catch (const BudgetExceeded&) {
                // a candidate too expensive to evaluate is skipped, not fatal
            }
        });
        if (hit) {
            res.found = std::move(hit);
            return res;
        }
    }
    return res;
}

std::vector<Symbol> split_product_symbol(Symbol s, const std::vector<int>& sizes) {
    // the product folds left, so the rightmost factor is the innermost digit
    std::vector<Symbol> parts(sizes.size());
    std::size_t v = static_cast<std::size_t>(s);
    for (std::size_t i = sizes.size(); i > 0;) {
        --i;
        std::size_t k = static_cast<std::size_t>(sizes[i]);
        parts[i] = static_cast<Symbol>(v % k);
        v /= k;
    }
    return parts;
}

BlockLanguage project_language(const BlockLanguage& prod, const std::vector<int>& sizes,
                               std::size_t coordinate, const Alphabet& factor_alphabet) {
    if (coordinate >= sizes.size()) throw Error("project_language: coordinate out of range");
    BlockLanguage out;
    out.dim = prod.dim;
    out.alphabet = factor_alphabet;
    out.resolution = prod.resolution;
    for (const auto& flat : prod.blocks) {
        std::vector<Symbol> proj;
        proj.reserve(flat.size());
        for (Symbol s : flat) proj.push_back(split_product_symbol(s, sizes)[coordinate]);
        out.blocks.insert(std::move(proj));
    }
    return out;
}

bool product_projection_check(const std::vector<Sft>& factors, int n, std::size_t block_budget) {
    if (factors.empty()) throw Error("product_projection_check: no factors");
    if (n < 0) throw ResolutionError("product_projection_check: negative resolution");

    std::vector<int> sizes;
    sizes.reserve(factors.size());
    Sft prod = factors.front();
    sizes.push_back(factors.front().alphabet.size());
    for (std::size_t i = 1; i < factors.size(); ++i) {
        prod = product_sft(prod, factors[i]);
        sizes.push_back(factors[i].alphabet.size());
    }

    std::vector<BlockLanguage> langs;
    bool any_empty = false;
    for (const Sft& f : factors) {
        langs.push_back(admissible_blocks(f, n, block_budget));
        if (langs.back().blocks.empty()) any_empty = true;
    }
    BlockLanguage plang = admissible_blocks(prod, n, block_budget);

    // a dead factor admits no blocks, so the product must die with it
    if (any_empty) return plang.blocks.empty();

    for (std::size_t i = 0; i < factors.size(); ++i) {
        BlockLanguage proj = project_language(plang, sizes, i, factors[i].alphabet);
        if (proj.blocks != langs[i].blocks) return false;
    }
    return true;
}

}  // namespace sftlab
