#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sftlab/geometry.hpp"

using namespace sftlab;

namespace {

Pattern word_pattern(const std::vector<Symbol>& w) {
    Pattern p;
    p.dim = 1;
    for (std::size_t i = 0; i < w.size(); ++i) p.cells[Cell{static_cast<int>(i)}] = w[i];
    return p;
}

}  // namespace

TEST_CASE("box_cells runs lexicographically") {
    auto cells = box_cells(Cell{0, 0}, Cell{1, 2});
    REQUIRE(cells.size() == 6);
    CHECK(cells.front() == Cell{0, 0});
    CHECK(cells[1] == Cell{0, 1});
    CHECK(cells[2] == Cell{0, 2});
    CHECK(cells[3] == Cell{1, 0});
    CHECK(cells.back() == Cell{1, 2});
    for (std::size_t i = 1; i < cells.size(); ++i) CHECK(cells[i - 1] < cells[i]);
}

TEST_CASE("window geometry") {
    Window w{2, 1};
    CHECK(w.cell_count() == 9);
    CHECK(w.cells().size() == 9);
    CHECK(w.contains(Cell{1, -1}));
    CHECK(!w.contains(Cell{2, 0}));
    Window w0{3, 0};
    CHECK(w0.cell_count() == 1);
    CHECK(w0.cells().front() == Cell{0, 0, 0});
}

TEST_CASE("cell arithmetic checks dimensions") {
    CHECK(cell_add(Cell{1, 2}, Cell{3, -1}) == Cell{4, 1});
    CHECK(cell_sub(Cell{1, 2}, Cell{3, -1}) == Cell{-2, 3});
    CHECK_THROWS_AS(cell_add(Cell{1}, Cell{1, 2}), DimensionMismatch);
}

TEST_CASE("pattern extents") {
    Pattern p;
    p.dim = 2;
    p.cells[Cell{0, 0}] = 0;
    p.cells[Cell{2, -1}] = 1;
    CHECK(p.extents() == std::vector<int>{3, 2});
    Pattern e;
    e.dim = 2;
    CHECK(e.extents() == std::vector<int>{0, 0});
}

TEST_CASE("shift and restrict") {
    Pattern p = word_pattern({0, 1, 0});
    Pattern q = pattern_shift(p, Cell{-1});
    CHECK(q.cells.at(Cell{-1}) == 0);
    CHECK(q.cells.at(Cell{1}) == 0);
    Pattern r = pattern_restrict(q, Window{1, 0});
    CHECK(r.size() == 1);
    CHECK(r.cells.at(Cell{0}) == 1);
}

TEST_CASE("occurs_in on words") {
    Pattern hay = word_pattern({0, 1, 1, 0, 1, 1});
    Pattern needle = word_pattern({1, 1});
    auto hits = occurs_in(needle, hay);
    CHECK(hits == std::vector<Cell>{Cell{1}, Cell{4}});
    Pattern missing = word_pattern({0, 0});
    CHECK(occurs_in(missing, hay).empty());
}

TEST_CASE("occurs_in with gapped support") {
    Pattern hay = word_pattern({1, 0, 1, 1, 0, 1});
    Pattern needle;
    needle.dim = 1;
    needle.cells[Cell{0}] = 1;
    needle.cells[Cell{2}] = 1;  // 1?1
    auto hits = occurs_in(needle, hay);
    CHECK(hits == std::vector<Cell>{Cell{0}, Cell{3}});
}

TEST_CASE("occurs_in input validation") {
    Pattern hay = word_pattern({0, 1});
    Pattern empty_needle;
    empty_needle.dim = 1;
    CHECK_THROWS_AS(occurs_in(empty_needle, hay), Error);
    Pattern wrong;
    wrong.dim = 2;
    wrong.cells[Cell{0, 0}] = 1;
    CHECK_THROWS_AS(occurs_in(wrong, hay), DimensionMismatch);
}

TEST_CASE("occurs_in matches the direct scan on random words") {
    std::mt19937 rng(7001);
    std::uniform_int_distribution<int> sym(0, 1);
    std::uniform_int_distribution<int> len(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Symbol> w(8);
        for (auto& s : w) s = sym(rng);
        std::vector<Symbol> n(len(rng));
        for (auto& s : n) s = sym(rng);
        Pattern hay = word_pattern(w);
        Pattern needle = word_pattern(n);
        bool engine = !occurs_in(needle, hay).empty();
        CHECK(engine == oracle::occurs_1d(w, needle));
    }
}

TEST_CASE("patterns_compatible") {
    Pattern a = word_pattern({0, 1});
    Pattern b;
    b.dim = 1;
    b.cells[Cell{1}] = 1;
    b.cells[Cell{2}] = 0;
    CHECK(patterns_compatible(a, b));
    b.cells[Cell{1}] = 0;
    CHECK(!patterns_compatible(a, b));
}

TEST_CASE("is_full_box") {
    Pattern p = word_pattern({0, 1, 0});
    Cell lo, hi;
    CHECK(is_full_box(p, &lo, &hi));
    CHECK(lo == Cell{0});
    CHECK(hi == Cell{2});
    p.cells.erase(Cell{1});
    CHECK(!is_full_box(p));
    Pattern sq;
    sq.dim = 2;
    for (const Cell& c : box_cells(Cell{-1, 0}, Cell{0, 1})) sq.cells[c] = 0;
    CHECK(is_full_box(sq, &lo, &hi));
    CHECK(lo == Cell{-1, 0});
    CHECK(hi == Cell{0, 1});
}

TEST_CASE("flat_to_pattern round trip") {
    Window w{2, 1};
    auto cells = w.cells();
    std::vector<Symbol> flat(cells.size());
    for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = static_cast<Symbol>(i % 3);
    Pattern p = flat_to_pattern(cells, flat, 2);
    REQUIRE(p.size() == cells.size());
    std::size_t i = 0;
    for (const auto& [c, s] : p.cells) {
        CHECK(c == cells[i]);
        CHECK(s == flat[i]);
        ++i;
    }
}
