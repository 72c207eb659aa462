#pragma once

#include "sftlab/coding.hpp"

namespace sftlab {

// Search for a proper subsystem of w that is indistinguishable at the keep
// resolution but whose coded image differs at some deeper one.
struct PerturbationRequest {
    Sft w;
    SlidingBlockCode code;
    int keep_resolution = 1;  // languages must still agree here
    int pattern_budget = 4;   // max cells in a candidate forbidden pattern
    int image_budget = 3;     // max resolution probed for image divergence
    std::size_t block_budget = kDefaultBlockBudget;
};

struct PerturbationFound {
    Sft w0;                     // w plus one extra forbidden pattern
    Pattern added_forbidden;
    int agreement_resolution = 0;
    int divergence_resolution = 0;
    Pattern witness_block;      // in the image of w, gone from the image of w0
};

struct PerturbationResult {
    std::optional<PerturbationFound> found;
    int pattern_budget = 0;
    int image_budget = 0;
};

// coded window language of w at output resolution m
BlockLanguage image_language(const Sft& w, const SlidingBlockCode& c, int m,
                             std::size_t block_budget = kDefaultBlockBudget);

// Candidates are box patterns occurring in w's own language, smallest cell
// count first; ties enumerate box shapes lexicographically and contents
// densest symbol first.  All comparisons run on window languages, so both
// sides are outer approximations; a reported divergence is a certificate
// about those approximations, not about the full systems.  NotFound only
// means the budgets ran out.
PerturbationResult perturb_subsystem(const PerturbationRequest& req);

// Decode one symbol of an iterated binary product (left fold) back into
// per-factor symbols; sizes lists each factor's alphabet size in order.
std::vector<Symbol> split_product_symbol(Symbol s, const std::vector<int>& sizes);

// Project the iterated product of the factors onto each coordinate at
// resolution n and compare with the factor's own language.  When some
// factor has an empty language the product must collapse too; that counts
// as a pass.
bool product_projection_check(const std::vector<Sft>& factors, int n,
                              std::size_t block_budget = kDefaultBlockBudget);

// per-coordinate projection of a product language (exposed for reports)
BlockLanguage project_language(const BlockLanguage& prod, const std::vector<int>& sizes,
                               std::size_t coordinate, const Alphabet& factor_alphabet);

}  // namespace sftlab
