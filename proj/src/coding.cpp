#include "sftlab/coding.hpp"

#include <algorithm>
#include <functional>

namespace sftlab {

namespace {

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t cap) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

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

// flat indices of the sub-window [-r,r]^dim centered at `center`, relative
// to the outer window of the given radius
std::vector<std::size_t> subwindow_indices(int dim, int outer_radius, const Cell& center, int r) {
    std::vector<std::size_t> idx;
    std::vector<Cell> outer = Window{dim, outer_radius}.cells();
    std::map<Cell, std::size_t> where;
    for (std::size_t i = 0; i < outer.size(); ++i) where.emplace(outer[i], i);
    for (const Cell& off : Window{dim, r}.cells()) idx.push_back(where.at(cell_add(center, off)));
    return idx;
}

}  // namespace

SlidingBlockCode SlidingBlockCode::identity(const Alphabet& a, int dim) {
    SlidingBlockCode c;
    c.dim = dim;
    c.input_alphabet = a;
    c.output_alphabet = a;
    c.radius = 0;
    c.default_output = 0;
    for (Symbol s = 0; s < a.size(); ++s) c.rule.emplace(std::vector<Symbol>{s}, s);
    return c;
}

SlidingBlockCode SlidingBlockCode::constant(const Alphabet& in, const Alphabet& out, Symbol value,
                                            int dim) {
    SlidingBlockCode c;
    c.dim = dim;
    c.input_alphabet = in;
    c.output_alphabet = out;
    c.radius = 0;
    c.default_output = value;
    return c;
}

void validate_code(const SlidingBlockCode& c) {
    if (c.dim < 1) throw Error("code: dimension must be at least 1");
    if (c.input_alphabet.size() < 1 || c.output_alphabet.size() < 1)
        throw Error("code: empty alphabet");
    if (c.radius < 0) throw Error("code: negative radius");
    if (c.default_output < 0 || c.default_output >= c.output_alphabet.size())
        throw Error("code: default output outside the output alphabet");
    const std::size_t want = Window{c.dim, c.radius}.cell_count();
    for (const auto& [key, out] : c.rule) {
        if (key.size() != want) throw Error("code: rule key does not cover the window");
        for (Symbol s : key)
            if (s < 0 || s >= c.input_alphabet.size())
                throw Error("code: rule key uses symbol outside the input alphabet");
        if (out < 0 || out >= c.output_alphabet.size())
            throw Error("code: rule output outside the output alphabet");
    }
}

BlockLanguage code_apply(const SlidingBlockCode& c, const BlockLanguage& l) {
    if (c.dim != l.dim) throw DimensionMismatch("code_apply: dimension mismatch");
    if (c.input_alphabet.size() != l.alphabet.size())
        throw Error("code_apply: input alphabet mismatch");
    if (l.resolution < c.radius)
        throw ResolutionError("code_apply: language resolution below code radius");
    const int out_res = l.resolution - c.radius;
    BlockLanguage out;
    out.dim = l.dim;
    out.alphabet = c.output_alphabet;
    out.resolution = out_res;

    // per output cell, the flat indices of its input window
    std::vector<std::vector<std::size_t>> gather;
    for (const Cell& center : Window{l.dim, out_res}.cells())
        gather.push_back(subwindow_indices(l.dim, l.resolution, center, c.radius));

    std::vector<Symbol> win(Window{c.dim, c.radius}.cell_count());
    for (const auto& flat : l.blocks) {
        std::vector<Symbol> coded;
        coded.reserve(gather.size());
        for (const auto& idx : gather) {
            for (std::size_t i = 0; i < idx.size(); ++i) win[i] = flat[idx[i]];
            coded.push_back(c.apply(win));
        }
        out.blocks.insert(std::move(coded));
    }
    return out;
}

SlidingBlockCode compose_codes(const SlidingBlockCode& outer, const SlidingBlockCode& inner,
                               std::size_t budget) {
    if (outer.dim != inner.dim) throw DimensionMismatch("compose_codes: dimension mismatch");
    if (outer.input_alphabet.size() != inner.output_alphabet.size())
        throw Error("compose_codes: outer input alphabet does not match inner output alphabet");
    SlidingBlockCode c;
    c.dim = inner.dim;
    c.input_alphabet = inner.input_alphabet;
    c.output_alphabet = outer.output_alphabet;
    c.radius = outer.radius + inner.radius;

    // unseen inputs behave as if every inner lookup missed
    std::vector<Symbol> mid_default(Window{c.dim, outer.radius}.cell_count(), inner.default_output);
    c.default_output = outer.apply(mid_default);

    const std::size_t cells = Window{c.dim, c.radius}.cell_count();
    if (checked_pow(static_cast<std::size_t>(c.input_alphabet.size()), cells, budget) > budget)
        throw BudgetExceeded("compose_codes: rule table exceeds budget");

    std::vector<std::vector<std::size_t>> gather;
    for (const Cell& center : Window{c.dim, outer.radius}.cells())
        gather.push_back(subwindow_indices(c.dim, c.radius, center, inner.radius));

    std::vector<Symbol> win(Window{c.dim, inner.radius}.cell_count());
    std::vector<Symbol> mid(gather.size());
    for_each_word(c.input_alphabet.size(), cells, [&](const std::vector<Symbol>& flat) {
        for (std::size_t g = 0; g < gather.size(); ++g) {
            for (std::size_t i = 0; i < gather[g].size(); ++i) win[i] = flat[gather[g][i]];
            mid[g] = inner.apply(win);
        }
        Symbol out = outer.apply(mid);
        if (out != c.default_output) c.rule.emplace(flat, out);
    });
    return c;
}

SlidingBlockCode partition_refine(const SlidingBlockCode& c, int r, std::size_t alphabet_cap) {
    if (r < 0) throw Error("partition_refine: negative join radius");
    if (r == 0) return c;
    const std::size_t cube = Window{c.dim, r}.cell_count();
    const std::size_t kout = static_cast<std::size_t>(c.output_alphabet.size());
    const std::size_t tuples = checked_pow(kout, cube, alphabet_cap);
    if (tuples > alphabet_cap)
        throw BudgetExceeded("partition_refine: output alphabet exceeds cap");

    SlidingBlockCode rc;
    rc.dim = c.dim;
    rc.input_alphabet = c.input_alphabet;
    rc.radius = c.radius + r;

    // tuple names in mixed radix, first cube cell most significant
    rc.output_alphabet.names.reserve(tuples);
    {
        std::vector<Symbol> t(cube, 0);
        for (std::size_t n = 0; n < tuples; ++n) {
            std::string name = "(";
            for (std::size_t i = 0; i < cube; ++i) {
                if (i) name += ",";
                name += c.output_alphabet.name_of(t[i]);
            }
            name += ")";
            rc.output_alphabet.names.push_back(std::move(name));
            for (std::size_t i = cube; i > 0;) {
                --i;
                if (t[i] + 1 < static_cast<Symbol>(kout)) {
                    ++t[i];
                    break;
                }
                t[i] = 0;
            }
        }
    }

    auto encode = [&](const std::vector<Symbol>& tuple) {
        std::size_t v = 0;
        for (Symbol s : tuple) v = v * kout + static_cast<std::size_t>(s);
        return static_cast<Symbol>(v);
    };
    rc.default_output = encode(std::vector<Symbol>(cube, c.default_output));

    const std::size_t cells = Window{rc.dim, rc.radius}.cell_count();
    if (checked_pow(static_cast<std::size_t>(rc.input_alphabet.size()), cells, alphabet_cap) >
        alphabet_cap)
        throw BudgetExceeded("partition_refine: rule table exceeds cap");

    std::vector<std::vector<std::size_t>> gather;
    for (const Cell& u : Window{c.dim, r}.cells())
        gather.push_back(subwindow_indices(c.dim, rc.radius, u, c.radius));

    std::vector<Symbol> win(Window{c.dim, c.radius}.cell_count());
    std::vector<Symbol> tuple(cube);
    for_each_word(rc.input_alphabet.size(), cells, [&](const std::vector<Symbol>& flat) {
        for (std::size_t g = 0; g < cube; ++g) {
            for (std::size_t i = 0; i < gather[g].size(); ++i) win[i] = flat[gather[g][i]];
            tuple[g] = c.apply(win);
        }
        Symbol out = encode(tuple);
        if (out != rc.default_output) rc.rule.emplace(flat, out);
    });
    return rc;
}

std::vector<Symbol> refine_tuple_components(Symbol tuple, int base_alphabet, std::size_t cube) {
    std::size_t v = static_cast<std::size_t>(tuple);
    const std::size_t k = static_cast<std::size_t>(base_alphabet);
    std::vector<Symbol> rev;
    for (std::size_t i = 0; i < cube; ++i) {
        rev.push_back(static_cast<Symbol>(v % k));
        v /= k;
    }
    return {rev.rbegin(), rev.rend()};
}

int stability_radius(const Sft& x, const SlidingBlockCode& c) {
    if (x.dim != c.dim) throw DimensionMismatch("stability_radius: dimension mismatch");
    return x.diameter() + c.radius;
}

ImageCheck image_in_sft_check(const BlockLanguage& l, const SlidingBlockCode& c, const Sft& x) {
    if (l.dim != c.dim || x.dim != c.dim)
        throw DimensionMismatch("image_in_sft_check: dimension mismatch");
    if (x.alphabet.size() != c.output_alphabet.size())
        throw Error("image_in_sft_check: target alphabet does not match code output");
    if (l.resolution < x.diameter() + c.radius)
        throw ResolutionError("image_in_sft_check: resolution below diameter plus radius");
    const int out_res = l.resolution - c.radius;

    std::vector<Cell> out_cells = Window{l.dim, out_res}.cells();
    std::map<Cell, std::size_t> where;
    for (std::size_t i = 0; i < out_cells.size(); ++i) where.emplace(out_cells[i], i);

    // all placements of each forbidden pattern inside the output window
    struct Placed {
        std::size_t forbidden_index;
        Cell v;
        std::vector<std::pair<std::size_t, Symbol>> need;
    };
    std::vector<Placed> placements;
    for (std::size_t qi = 0; qi < x.forbidden.size(); ++qi) {
        const Pattern& q = x.forbidden[qi];
        const Cell& q0 = q.cells.begin()->first;
        for (const Cell& target : out_cells) {
            Cell v = cell_sub(target, q0);
            Placed pl{qi, v, {}};
            bool fits = true;
            for (const auto& [s, sym] : q.cells) {
                auto it = where.find(cell_add(s, v));
                if (it == where.end()) {
                    fits = false;
                    break;
                }
                pl.need.emplace_back(it->second, sym);
            }
            if (fits) placements.push_back(std::move(pl));
        }
    }
    std::sort(placements.begin(), placements.end(),
              [](const Placed& a, const Placed& b) {
                  return std::tie(a.forbidden_index, a.v) < std::tie(b.forbidden_index, b.v);
              });

    std::vector<std::vector<std::size_t>> gather;
    for (const Cell& center : out_cells)
        gather.push_back(subwindow_indices(l.dim, l.resolution, center, c.radius));

    std::vector<Symbol> win(Window{c.dim, c.radius}.cell_count());
    for (const auto& flat : l.blocks) {
        std::vector<Symbol> coded;
        coded.reserve(gather.size());
        for (const auto& idx : gather) {
            for (std::size_t i = 0; i < idx.size(); ++i) win[i] = flat[idx[i]];
            coded.push_back(c.apply(win));
        }
        for (const Placed& pl : placements) {
            bool all = true;
            for (const auto& [ci, sym] : pl.need) {
                if (coded[ci] != sym) {
                    all = false;
                    break;
                }
            }
            if (all) {
                ImageCheck res;
                res.ok = false;
                res.violation = ImageViolation{l.block_pattern(flat), pl.v, x.forbidden[pl.forbidden_index]};
                return res;
            }
        }
    }
    return ImageCheck{true, std::nullopt};
}

}  // namespace sftlab
