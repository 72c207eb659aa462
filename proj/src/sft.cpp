#include "sftlab/sft.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace sftlab {

int Sft::diameter() const {
    int d = 1;
    for (const Pattern& q : forbidden)
        for (int e : q.extents()) d = std::max(d, e);
    return d;
}

void validate_sft(const Sft& x) {
    if (x.dim < 1) throw Error("sft: dimension must be at least 1");
    if (x.alphabet.size() < 1) throw Error("sft: empty alphabet");
    for (const Pattern& q : x.forbidden) {
        if (q.dim != x.dim) throw DimensionMismatch("sft: forbidden pattern dimension mismatch");
        if (q.cells.empty()) throw Error("sft: empty forbidden pattern would forbid everything");
        for (const auto& [c, s] : q.cells)
            if (s < 0 || s >= x.alphabet.size())
                throw Error("sft: forbidden pattern uses symbol outside the alphabet");
    }
}

Pattern BlockLanguage::block_pattern(const std::vector<Symbol>& flat) const {
    return flat_to_pattern(window().cells(), flat, dim);
}

namespace {

// One placement of a forbidden pattern inside the enumeration cell set,
// prechecked to fit.  `last` is the largest cell index it touches, so the
// check can run exactly once, when that cell gets its symbol.
struct Placement {
    std::vector<std::pair<int, Symbol>> need;  // (cell index, required symbol)
    int forbidden_index = 0;
};

struct Plan {
    std::vector<Cell> cells;
    std::vector<std::vector<Placement>> by_last;
};

Plan make_plan(const Sft& x, std::vector<Cell> cells) {
    Plan plan;
    plan.cells = std::move(cells);
    plan.by_last.resize(plan.cells.size());
    std::map<Cell, int> index;
    for (std::size_t i = 0; i < plan.cells.size(); ++i)
        index.emplace(plan.cells[i], static_cast<int>(i));
    for (std::size_t qi = 0; qi < x.forbidden.size(); ++qi) {
        const Pattern& q = x.forbidden[qi];
        if (q.cells.empty()) throw Error("admissible enumeration: empty forbidden pattern");
        const Cell& q0 = q.cells.begin()->first;
        // anchoring the first support cell at each enumeration cell visits
        // every placement exactly once
        for (const Cell& c : plan.cells) {
            Cell v = cell_sub(c, q0);
            Placement pl;
            pl.forbidden_index = static_cast<int>(qi);
            int last = -1;
            bool fits = true;
            for (const auto& [s, sym] : q.cells) {
                auto it = index.find(cell_add(s, v));
                if (it == index.end()) {
                    fits = false;
                    break;
                }
                pl.need.emplace_back(it->second, sym);
                last = std::max(last, it->second);
            }
            if (!fits) continue;
            plan.by_last[static_cast<std::size_t>(last)].push_back(std::move(pl));
        }
    }
    return plan;
}

// Depth-first over symbol assignments in canonical cell order.  A branch
// dies as soon as the newly placed cell completes a forbidden placement, so
// emitted blocks arrive already deduplicated and in lexicographic order.
void enumerate_admissible(const Sft& x, const Plan& plan, std::size_t block_budget,
                          const std::function<void(const std::vector<Symbol>&)>& emit) {
    const std::size_t ncells = plan.cells.size();
    const Symbol k = static_cast<Symbol>(x.alphabet.size());
    std::vector<Symbol> assign(ncells, 0);
    std::size_t emitted = 0;
    std::size_t nodes = 0;
    const std::size_t node_budget = block_budget * 16 + 1024;

    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == ncells) {
            if (emitted == block_budget)
                throw BudgetExceeded("admissible enumeration: block budget of " +
                                     std::to_string(block_budget) + " exceeded");
            ++emitted;
            emit(assign);
            return;
        }
        for (Symbol s = 0; s < k; ++s) {
            if (++nodes > node_budget)
                throw BudgetExceeded("admissible enumeration: search budget exceeded");
            assign[i] = s;
            bool ok = true;
            for (const Placement& pl : plan.by_last[i]) {
                bool all = true;
                for (const auto& [ci, sym] : pl.need) {
                    if (assign[static_cast<std::size_t>(ci)] != sym) {
                        all = false;
                        break;
                    }
                }
                if (all) {
                    ok = false;
                    break;
                }
            }
            if (ok) go(i + 1);
        }
    };
    if (ncells > 0) go(0);
    else emit(assign);  // zero-dimensional box: one empty block
}

}  // namespace

BlockLanguage admissible_blocks(const Sft& x, int resolution, std::size_t block_budget) {
    if (resolution < 0) throw ResolutionError("admissible_blocks: negative resolution");
    BlockLanguage lang;
    lang.dim = x.dim;
    lang.alphabet = x.alphabet;
    lang.resolution = resolution;
    Plan plan = make_plan(x, lang.window().cells());
    enumerate_admissible(x, plan, block_budget, [&](const std::vector<Symbol>& flat) {
        lang.blocks.insert(lang.blocks.end(), flat);
    });
    return lang;
}

std::vector<Pattern> admissible_boxes(const Sft& x, const std::vector<int>& extents,
                                      std::size_t block_budget) {
    if (static_cast<int>(extents.size()) != x.dim)
        throw DimensionMismatch("admissible_boxes: extents arity mismatch");
    for (int e : extents)
        if (e < 1) throw Error("admissible_boxes: extents must be positive");
    Cell lo(extents.size(), 0);
    Cell hi(extents.size());
    for (std::size_t i = 0; i < extents.size(); ++i) hi[i] = extents[i] - 1;
    std::vector<Cell> cells = box_cells(lo, hi);
    Plan plan = make_plan(x, cells);
    std::vector<Pattern> out;
    enumerate_admissible(x, plan, block_budget, [&](const std::vector<Symbol>& flat) {
        out.push_back(flat_to_pattern(cells, flat, x.dim));
    });
    return out;
}

namespace {

// Placement of a forbidden pattern wrapped into the fundamental domain.
// `conflict` marks placements whose wrapped cells would need two different
// symbols at once; those can never be violated.
struct ModPlacement {
    std::vector<std::pair<int, Symbol>> need;
    int last = 0;
};

std::optional<PeriodicWitness> witness_for_period(const Sft& x, const Cell& period,
                                                  std::size_t& nodes, std::size_t node_budget) {
    const int d = x.dim;
    Cell lo(static_cast<std::size_t>(d), 0);
    Cell hi(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) hi[static_cast<std::size_t>(i)] = period[static_cast<std::size_t>(i)] - 1;
    std::vector<Cell> cells = box_cells(lo, hi);
    std::map<Cell, int> index;
    for (std::size_t i = 0; i < cells.size(); ++i) index.emplace(cells[i], static_cast<int>(i));

    auto wrap = [&](const Cell& c) {
        Cell w(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            int p = period[i];
            int m = c[i] % p;
            if (m < 0) m += p;
            w[i] = m;
        }
        return w;
    };

    // every anchor in one fundamental domain covers all placements of the
    // periodic extension
    std::vector<std::vector<ModPlacement>> by_last(cells.size());
    for (const Pattern& q : x.forbidden) {
        for (const Cell& anchor : cells) {
            std::map<int, Symbol> need;
            bool conflict = false;
            for (const auto& [s, sym] : q.cells) {
                int ci = index.at(wrap(cell_add(anchor, s)));
                auto it = need.find(ci);
                if (it != need.end()) {
                    if (it->second != sym) {
                        conflict = true;
                        break;
                    }
                } else {
                    need.emplace(ci, sym);
                }
            }
            if (conflict) continue;
            ModPlacement mp;
            for (const auto& [ci, sym] : need) {
                mp.need.emplace_back(ci, sym);
                mp.last = std::max(mp.last, ci);
            }
            by_last[static_cast<std::size_t>(mp.last)].push_back(std::move(mp));
        }
    }

    const Symbol k = static_cast<Symbol>(x.alphabet.size());
    std::vector<Symbol> assign(cells.size(), 0);
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == cells.size()) return true;
        for (Symbol s = 0; s < k; ++s) {
            if (++nodes > node_budget) return false;
            assign[i] = s;
            bool ok = true;
            for (const ModPlacement& mp : by_last[i]) {
                bool all = true;
                for (const auto& [ci, sym] : mp.need) {
                    if (assign[static_cast<std::size_t>(ci)] != sym) {
                        all = false;
                        break;
                    }
                }
                if (all) {
                    ok = false;
                    break;
                }
            }
            if (ok && go(i + 1)) return true;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return PeriodicWitness{flat_to_pattern(cells, assign, d), period};
}

}  // namespace

std::optional<PeriodicWitness> periodic_witness_search(const Sft& x, int max_period,
                                                       std::size_t node_budget) {
    if (max_period < 1) throw Error("periodic_witness_search: max_period must be positive");
    std::size_t nodes = 0;
    // period vectors in lexicographic order make the first hit canonical
    Cell lo(static_cast<std::size_t>(x.dim), 1);
    Cell hi(static_cast<std::size_t>(x.dim), max_period);
    for (const Cell& period : box_cells(lo, hi)) {
        auto w = witness_for_period(x, period, nodes, node_budget);
        if (w) return w;
        if (nodes > node_budget) return std::nullopt;
    }
    return std::nullopt;
}

EmptinessVerdict emptiness_semidecide(const Sft& x, int budget_resolution, std::size_t block_budget) {
    if (budget_resolution < 0) throw ResolutionError("emptiness_semidecide: negative budget");
    for (int n = 0; n <= budget_resolution; ++n) {
        // a valid periodic point restricts to an admissible block at every
        // resolution, so the two sides can never both fire
        BlockLanguage lang = admissible_blocks(x, n, block_budget);
        if (lang.blocks.empty()) {
            EmptinessVerdict v;
            v.kind = EmptinessVerdict::Kind::empty;
            v.certificate_resolution = n;
            return v;
        }
        auto w = periodic_witness_search(x, n + 1);
        if (w) {
            EmptinessVerdict v;
            v.kind = EmptinessVerdict::Kind::nonempty;
            v.witness = std::move(w);
            return v;
        }
    }
    EmptinessVerdict v;
    v.kind = EmptinessVerdict::Kind::unknown;
    v.budget = budget_resolution;
    return v;
}

namespace {

// all ways to assign symbols from k to `count` slots, lexicographic
void for_each_word(int k, std::size_t count, const std::function<void(const std::vector<Symbol>&)>& f) {
    std::vector<Symbol> w(count, 0);
    while (true) {
        f(w);
        std::size_t i = count;
        while (i > 0) {
            --i;
            if (w[i] + 1 < k) {
                ++w[i];
                break;
            }
            w[i] = 0;
            if (i == 0) return;
        }
        if (count == 0) return;
    }
}

}  // namespace

Sft product_sft(const Sft& a, const Sft& b) {
    if (a.dim != b.dim) throw DimensionMismatch("product_sft: dimension mismatch");
    Sft p;
    p.dim = a.dim;
    p.alphabet = Alphabet::pairs(a.alphabet, b.alphabet);
    const int ka = a.alphabet.size();
    const int kb = b.alphabet.size();

    auto lift = [&](const Pattern& q, bool first_coordinate) {
        // spell out every completion of the unconstrained coordinate
        std::vector<Cell> support;
        for (const auto& [c, s] : q.cells) support.push_back(c);
        const int kother = first_coordinate ? kb : ka;
        for_each_word(kother, support.size(), [&](const std::vector<Symbol>& other) {
            Pattern lifted;
            lifted.dim = p.dim;
            std::size_t i = 0;
            for (const auto& [c, s] : q.cells) {
                Symbol pair = first_coordinate ? s * kb + other[i] : other[i] * kb + s;
                lifted.cells.emplace(c, pair);
                ++i;
            }
            p.forbidden.push_back(std::move(lifted));
            if (p.forbidden.size() > kDefaultBlockBudget)
                throw BudgetExceeded("product_sft: lifted forbidden set exceeds budget");
        });
    };
    for (const Pattern& q : a.forbidden) lift(q, true);
    for (const Pattern& q : b.forbidden) lift(q, false);
    return p;
}

Sft transition_sft(const BlockLanguage& adjacencies) {
    if (adjacencies.blocks.empty()) throw Error("transition_sft: empty input language");
    if (adjacencies.resolution < 1)
        throw ResolutionError("transition_sft: resolution must be at least 1 to observe axis pairs");
    const int d = adjacencies.dim;
    const int k = adjacencies.alphabet.size();
    std::vector<Cell> cells = adjacencies.window().cells();
    std::map<Cell, int> index;
    for (std::size_t i = 0; i < cells.size(); ++i) index.emplace(cells[i], static_cast<int>(i));

    // observed[axis][i*k+j]: pair (i at u, j at u+e_axis) appears somewhere
    std::vector<std::vector<bool>> observed(static_cast<std::size_t>(d),
                                            std::vector<bool>(static_cast<std::size_t>(k * k), false));
    std::vector<std::vector<std::pair<int, int>>> axis_pairs(static_cast<std::size_t>(d));
    for (int axis = 0; axis < d; ++axis) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            Cell nb = cells[i];
            nb[static_cast<std::size_t>(axis)] += 1;
            auto it = index.find(nb);
            if (it != index.end())
                axis_pairs[static_cast<std::size_t>(axis)].emplace_back(static_cast<int>(i), it->second);
        }
    }
    for (const auto& flat : adjacencies.blocks)
        for (int axis = 0; axis < d; ++axis)
            for (const auto& [i, j] : axis_pairs[static_cast<std::size_t>(axis)])
                observed[static_cast<std::size_t>(axis)]
                        [static_cast<std::size_t>(flat[static_cast<std::size_t>(i)] * k +
                                                  flat[static_cast<std::size_t>(j)])] = true;

    Sft y;
    y.dim = d;
    y.alphabet = adjacencies.alphabet;
    for (int axis = 0; axis < d; ++axis) {
        for (Symbol i = 0; i < k; ++i) {
            for (Symbol j = 0; j < k; ++j) {
                if (observed[static_cast<std::size_t>(axis)][static_cast<std::size_t>(i * k + j)]) continue;
                Pattern q;
                q.dim = d;
                Cell origin(static_cast<std::size_t>(d), 0);
                Cell step(static_cast<std::size_t>(d), 0);
                step[static_cast<std::size_t>(axis)] = 1;
                q.cells.emplace(origin, i);
                q.cells.emplace(step, j);
                y.forbidden.push_back(std::move(q));
            }
        }
    }
    return y;
}

Sft higher_block_sft(const BlockLanguage& l, std::size_t block_budget) {
    Sft y;
    y.dim = l.dim;
    y.alphabet = l.alphabet;
    std::vector<Cell> cells = l.window().cells();
    std::size_t complement = 0;
    for_each_word(l.alphabet.size(), cells.size(), [&](const std::vector<Symbol>& flat) {
        if (l.blocks.count(flat)) return;
        if (++complement > block_budget)
            throw BudgetExceeded("higher_block_sft: complement exceeds block budget");
        y.forbidden.push_back(flat_to_pattern(cells, flat, l.dim));
    });
    return y;
}

}  // namespace sftlab
