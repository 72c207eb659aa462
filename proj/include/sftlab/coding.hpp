#pragma once

#include "sftlab/space.hpp"

namespace sftlab {

// A radius-w local rule applied at every cell.  The stored map may be
// partial; window contents without an entry produce default_output, so the
// rule is total by construction.  Keys are flat window contents in
// canonical cell order, length (2w+1)^dim.
struct SlidingBlockCode {
    int dim = 1;
    Alphabet input_alphabet;
    Alphabet output_alphabet;
    int radius = 0;
    Symbol default_output = 0;
    std::map<std::vector<Symbol>, Symbol> rule;

    Symbol apply(const std::vector<Symbol>& window_flat) const {
        auto it = rule.find(window_flat);
        return it == rule.end() ? default_output : it->second;
    }

    static SlidingBlockCode identity(const Alphabet& a, int dim);
    static SlidingBlockCode constant(const Alphabet& in, const Alphabet& out, Symbol value, int dim);
};

void validate_code(const SlidingBlockCode& c);

// Apply the rule at every output cell; the result lives at resolution
// l.resolution - c.radius, which must be nonnegative.
BlockLanguage code_apply(const SlidingBlockCode& c, const BlockLanguage& l);

// outer after inner; radii add.  The composed rule is materialized over all
// windows of the combined radius, subject to the budget.
SlidingBlockCode compose_codes(const SlidingBlockCode& outer, const SlidingBlockCode& inner,
                               std::size_t budget = kDefaultBlockBudget);

// The join of the rule partition with its translates over the cube
// [-r, r]^dim: output symbols become tuples of c outputs across the cube,
// and the radius grows to c.radius + r.  r = 0 returns c itself.
SlidingBlockCode partition_refine(const SlidingBlockCode& c, int r,
                                  std::size_t alphabet_cap = kDefaultBlockBudget);

// tuple index -> component outputs, canonical cube order (for reports/tests);
// cube is the tuple length (2r+1)^dim of the refinement that produced it
std::vector<Symbol> refine_tuple_components(Symbol tuple, int base_alphabet, std::size_t cube);

// how far two inputs must agree for target-membership verdicts to agree
int stability_radius(const Sft& x, const SlidingBlockCode& c);

struct ImageViolation {
    Pattern input_block;  // first offending input block, canonical order
    Cell position;        // placement of the forbidden pattern in its image
    Pattern forbidden;
};

struct ImageCheck {
    bool ok = false;
    std::optional<ImageViolation> violation;
};

// true iff no coded block of l contains a forbidden pattern of x.  Needs
// l.resolution >= x.diameter() + c.radius so every constraint fits in the
// coded window.
ImageCheck image_in_sft_check(const BlockLanguage& l, const SlidingBlockCode& c, const Sft& x);

}  // namespace sftlab
