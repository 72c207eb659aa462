#pragma once

// Fixture builders and seeded random corpora shared by the unit tests and
// the acceptance runner.

#include <random>

#include "oracles.hpp"
#include "sftlab/coding.hpp"

namespace gen {

using namespace sftlab;

inline Alphabet binary() { return Alphabet::numeric(2); }

inline Pattern word(const std::vector<Symbol>& w, int start = 0) {
    Pattern p;
    p.dim = 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        p.cells[Cell{start + static_cast<int>(i)}] = w[i];
    return p;
}

inline Sft full_shift(int k = 2, int dim = 1) {
    Sft x;
    x.dim = dim;
    x.alphabet = Alphabet::numeric(k);
    return x;
}

// no two adjacent 1s (d=1)
inline Sft golden() {
    Sft x = full_shift();
    x.forbidden.push_back(word({1, 1}));
    return x;
}

// no two adjacent 1s in either direction (d=2)
inline Sft hard_square() {
    Sft x = full_shift(2, 2);
    Pattern h;
    h.dim = 2;
    h.cells[Cell{0, 0}] = 1;
    h.cells[Cell{1, 0}] = 1;
    Pattern v;
    v.dim = 2;
    v.cells[Cell{0, 0}] = 1;
    v.cells[Cell{0, 1}] = 1;
    x.forbidden = {h, v};
    return x;
}

// alphabet size 2..3, up to 3 forbidden contiguous words of length 1..3
inline Sft random_word_sft(std::mt19937& rng) {
    std::uniform_int_distribution<int> ksize(2, 3);
    int k = ksize(rng);
    Sft x = full_shift(k);
    std::uniform_int_distribution<int> nf(0, 3);
    std::uniform_int_distribution<int> len(1, 3);
    int count = nf(rng);
    std::uniform_int_distribution<int> sym(0, k - 1);
    for (int i = 0; i < count; ++i) {
        std::vector<Symbol> w(len(rng));
        for (auto& s : w) s = sym(rng);
        x.forbidden.push_back(word(w));
    }
    return x;
}

// like random_word_sft but only two-cell words, so the transition
// reconstruction can be exact
inline Sft random_pair_sft(std::mt19937& rng, int max_pairs = 3) {
    std::uniform_int_distribution<int> ksize(2, 3);
    int k = ksize(rng);
    Sft x = full_shift(k);
    std::uniform_int_distribution<int> nf(0, max_pairs);
    std::uniform_int_distribution<int> sym(0, k - 1);
    int count = nf(rng);
    for (int i = 0; i < count; ++i) x.forbidden.push_back(word({sym(rng), sym(rng)}));
    return x;
}

// binary 2d SFT with 1..4 distinct forbidden dominoes, plus the oracle view
inline Sft random_domino_sft(std::mt19937& rng, std::vector<oracle::Domino>* out) {
    Sft x = full_shift(2, 2);
    std::uniform_int_distribution<int> nf(1, 4);
    std::uniform_int_distribution<int> choice(0, 7);
    std::set<int> picked;
    int count = nf(rng);
    for (int i = 0; i < count; ++i) picked.insert(choice(rng));
    out->clear();
    for (int id : picked) {
        oracle::Domino d;
        d.vertical = id >= 4;
        d.a = (id >> 1) & 1;
        d.b = id & 1;
        out->push_back(d);
        Pattern p;
        p.dim = 2;
        p.cells[Cell{0, 0}] = d.a;
        p.cells[d.vertical ? Cell{0, 1} : Cell{1, 0}] = d.b;
        x.forbidden.push_back(p);
    }
    return x;
}

// radius-1 binary rule: output = x_{-1} xor x_{+1}
inline SlidingBlockCode xor_code() {
    SlidingBlockCode c;
    c.dim = 1;
    c.input_alphabet = binary();
    c.output_alphabet = binary();
    c.radius = 1;
    c.default_output = 0;
    for (Symbol a = 0; a < 2; ++a)
        for (Symbol b = 0; b < 2; ++b)
            for (Symbol cc = 0; cc < 2; ++cc)
                c.rule[{a, b, cc}] = a ^ cc;
    return c;
}

// random total radius-r code over the binary alphabet
inline SlidingBlockCode random_code(std::mt19937& rng, int radius) {
    SlidingBlockCode c;
    c.dim = 1;
    c.input_alphabet = binary();
    c.output_alphabet = binary();
    c.radius = radius;
    std::uniform_int_distribution<int> bit(0, 1);
    c.default_output = bit(rng);
    int len = 2 * radius + 1;
    for (const auto& w : oracle::all_words(2, len)) c.rule[w] = bit(rng);
    return c;
}

}  // namespace gen
