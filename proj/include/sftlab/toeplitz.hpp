#pragma once

#include "sftlab/space.hpp"

namespace sftlab {

// Recipe for a one-dimensional Toeplitz point.  The enumeration lists the
// order in which integers are considered when the next progression base is
// chosen; empty means the default order 0, 1, -1, 2, -2, ...  omega holds
// the bits written by successive coloring steps.
struct ToeplitzSpec {
    std::vector<long long> enumeration;  // empty: use the default order
    std::vector<int> omega;              // bits, each 0 or 1
};

void validate_toeplitz(const ToeplitzSpec& spec);

// i is 1-based; throws when a custom enumeration runs out
long long enumeration_at(const ToeplitzSpec& spec, std::size_t i);

struct ColoringStep {
    long long base = 0;    // first enumerated integer still uncolored
    long long period = 0;  // 2^k at step k
};

// The geometry of the coloring after some number of steps.  Step k colors
// the progression base_k + period_k * Z; what remains uncolored is always a
// single coset, recorded here.  None of this depends on the bits.
struct ColoringStructure {
    std::vector<ColoringStep> steps;
    long long uncolored_base = 0;
    long long uncolored_period = 1;
};

ColoringStructure coloring_structure(const ToeplitzSpec& spec, int steps);

// Color [-window_radius, window_radius] with the bits of omega, one
// progression per bit.  Stops early once the window is full; if the bits
// run out first, throws WindowNotFilled naming the leftmost uncolored cell.
Pattern toeplitz_encode(const ToeplitzSpec& spec, int window_radius);

// Recover omega(1..k_max) from an encoded window.  Only the enumeration of
// `spec` is consulted; p must be an unshifted full window as produced by
// the encoder.  Throws NoRepresentative when a progression misses the
// window and InconsistentColoring when the window contradicts itself.
std::vector<int> toeplitz_decode(const Pattern& p, const ToeplitzSpec& spec, int k_max);

// window-n blocks visible in p (delegates to language_of_pattern with a
// binary alphabet)
BlockLanguage orbit_language(const Pattern& p, int n);

// true iff every aligned sub-box of side `gap` inside p's support contains
// an occurrence of `block`
bool syndetic_check(const Pattern& p, const Pattern& block, int gap);

}  // namespace sftlab
