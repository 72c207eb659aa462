#pragma once

#include <optional>
#include <set>

#include "sftlab/geometry.hpp"

namespace sftlab {

// Default cap on enumerated blocks.  Exceeding a cap throws BudgetExceeded;
// results are never truncated silently.
inline constexpr std::size_t kDefaultBlockBudget = 1'000'000;

// A shift of finite type: everything not containing a forbidden pattern.
// Forbidden patterns must be nonempty and use only alphabet symbols.
struct Sft {
    int dim = 1;
    Alphabet alphabet;
    std::vector<Pattern> forbidden;

    // largest per-axis extent over all forbidden patterns; 1 when there are
    // none, so a radius-n window always sees every constraint that fits
    int diameter() const;
};

// Throws on malformed data (empty patterns, out-of-range symbols, dimension
// mismatches).  Engine operations assume validated inputs.
void validate_sft(const Sft& x);

// The set of locally admissible patterns on the window [-n, n]^dim, stored
// flat in canonical cell order.  Membership means no forbidden pattern
// occurs fully inside the window; it does not promise extendability.
struct BlockLanguage {
    int dim = 1;
    Alphabet alphabet;
    int resolution = 0;
    std::set<std::vector<Symbol>> blocks;

    Window window() const { return Window{dim, resolution}; }
    Pattern block_pattern(const std::vector<Symbol>& flat) const;
};

BlockLanguage admissible_blocks(const Sft& x, int resolution,
                                std::size_t block_budget = kDefaultBlockBudget);

// Same enumeration over the box with the given per-axis extents, anchored
// at the origin.  Results are patterns on [0, e_i) per axis, in canonical
// order of their flat contents.
std::vector<Pattern> admissible_boxes(const Sft& x, const std::vector<int>& extents,
                                      std::size_t block_budget = kDefaultBlockBudget);

// A periodic point given by its values on the fundamental domain
// [0, p_i) per axis.  Valid means the periodic extension contains no
// forbidden occurrence; this is checked at every anchor modulo the period.
struct PeriodicWitness {
    Pattern domain;
    Cell period;
};

// First valid witness in canonical order: period vectors lexicographic in
// [1, max_period]^dim, domain assignments lexicographic.  Absence is not a
// proof of emptiness.  The node budget bounds search work; running out of
// nodes also reports absence, which stays sound for the same reason.
std::optional<PeriodicWitness> periodic_witness_search(const Sft& x, int max_period,
                                                       std::size_t node_budget = 4 * kDefaultBlockBudget);

struct EmptinessVerdict {
    enum class Kind { empty, nonempty, unknown };
    Kind kind = Kind::unknown;
    int certificate_resolution = -1;          // kind == empty
    std::optional<PeriodicWitness> witness;   // kind == nonempty
    int budget = 0;                           // kind == unknown
};

// Interleaves the empty-window check at n = 0, 1, ... with periodic witness
// search at max_period = 1, 2, ...; the first conclusive side wins, so the
// verdict is deterministic for a given budget.
EmptinessVerdict emptiness_semidecide(const Sft& x, int budget_resolution,
                                      std::size_t block_budget = kDefaultBlockBudget);

// Product over the pair alphabet; forbidden sets are lifted through each
// coordinate (every completion of the other coordinate is spelled out).
Sft product_sft(const Sft& a, const Sft& b);

// Nearest-neighbour approximation: forbid the axis-adjacent symbol pairs
// the input language never exhibits.  Input must be nonempty with
// resolution >= 1 so every axis pair is observable.
Sft transition_sft(const BlockLanguage& adjacencies);

// Forbid every window pattern outside the language.  At the language's own
// resolution the result reproduces it exactly; below, everything is
// admissible, so this is an outer approximation.
Sft higher_block_sft(const BlockLanguage& l, std::size_t block_budget = kDefaultBlockBudget);

}  // namespace sftlab
