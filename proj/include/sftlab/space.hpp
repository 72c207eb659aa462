#pragma once

#include "sftlab/sft.hpp"

namespace sftlab {

// Distance between window languages in the fixed dyadic metric.  Exact(m)
// means the first disagreement is at resolution m, so the distance is
// 2^-m.  AtMost(e) means agreement everywhere up to the compared
// resolution; the true distance is below 2^-e but finite data cannot pin
// it, so AtMost(e) sorts strictly below Exact(e).
struct DyadicDistance {
    enum class Kind { exact, at_most };
    Kind kind = Kind::at_most;
    int exponent = 0;

    static DyadicDistance exact(int m) { return {Kind::exact, m}; }
    static DyadicDistance at_most(int e) { return {Kind::at_most, e}; }

    bool operator==(const DyadicDistance&) const = default;
    std::string to_string() const;
};

bool dyadic_less(const DyadicDistance& a, const DyadicDistance& b);
inline bool dyadic_leq(const DyadicDistance& a, const DyadicDistance& b) {
    return a == b || dyadic_less(a, b);
}

// Drop every cell outside [-m, m]^dim from every block.  m must not exceed
// the language's own resolution.
BlockLanguage restrict_language(const BlockLanguage& l, int m);

// set equality of the two restrictions at resolution n
bool language_equal_at(const BlockLanguage& a, const BlockLanguage& b, int n);

// First disagreement over n = 0..upto decides Exact(2^-n); full agreement
// yields AtMost(2^-(upto+1)).  Both languages need resolution >= upto.
DyadicDistance hausdorff_proxy(const BlockLanguage& a, const BlockLanguage& b, int upto);

// All window-n blocks of p whose window lies fully inside p's support.
// p must cover a centered window of radius >= n.  The alphabet defaults to
// numeric symbols 0..max used.
BlockLanguage language_of_pattern(const Pattern& p, int n, const Alphabet* alphabet = nullptr);

}  // namespace sftlab
