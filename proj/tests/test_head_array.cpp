#include <algorithm>
#include <random>

#include "doctest.h"
#include "ribbon/head_array.hpp"
#include "ribbon/oracle.hpp"

using namespace ribbon;

namespace {

Partition P(std::vector<int> parts) { return Partition::from_parts(std::move(parts)); }

// 9-ribbon example of shape (8,7,6,5,1) and weight (3,3,2,1)
const std::vector<std::vector<int>> kNineRibbons{
    {0, 0, 0, 0, 0, 3, 0, 0}, {1, 1, 0, 1, 0, 0, 0}, {0, 0, 0, 2, 0, 4}, {0, 2, 3, 0, 0}, {2}};

// skew example of shape (8,7,6,5,1,1)/(3,3,1) and weight (2,2,2,1)
const std::vector<std::vector<int>> kSkewSeven{{-1, -1, -1, 0, 0, 3, 0, 0},
                                               {-1, -1, -1, 1, 0, 0, 0},
                                               {-1, 0, 0, 2, 0, 4},
                                               {0, 2, 3, 0, 0},
                                               {0},
                                               {1}};

int chain_spin2(const HeadArray& array) {
    Partition current = array.outer();
    int total = 0;
    for (int label = array.max_label(); label >= 1; --label) {
        std::vector<int> pos(static_cast<size_t>(current.part(1)), 0);
        for (const Cell& head : array.cells_with_label(label))
            pos[static_cast<size_t>(head.col) - 1] = -array.k();
        StripResult res = apply_strip(current, pos, array.k(), StripMode::remove);
        REQUIRE(res.ok());
        total += res.outcome.spin2;
        current = res.outcome.shape;
    }
    return total;
}

}  // namespace

TEST_CASE("decoding the 9-ribbon matrix") {
    const HeadArray array(3, kNineRibbons);
    CHECK(array.outer() == P({8, 7, 6, 5, 1}));
    CHECK(array.inner() == Partition{});
    const RibbonTableau tableau = decode(array);
    CHECK(tableau.ribbons().size() == 9);
    CHECK(tableau_weight(tableau) == std::vector<int>{3, 3, 2, 1});
    CHECK(tableau_spin2(tableau) == 8);
    CHECK(chain_spin2(array) == tableau_spin2(tableau));
    CHECK(encode(tableau) == array);
    CHECK(validate(tableau).ok);
}

TEST_CASE("decoding the skew 7-ribbon matrix") {
    const HeadArray array(3, kSkewSeven);
    CHECK(array.outer() == P({8, 7, 6, 5, 1, 1}));
    CHECK(array.inner() == P({3, 3, 1}));
    const RibbonTableau tableau = decode(array);
    CHECK(tableau.ribbons().size() == 7);
    CHECK(tableau_weight(tableau) == std::vector<int>{2, 2, 2, 1});
    CHECK(tableau_spin2(tableau) == 6);
    CHECK(chain_spin2(array) == 6);
    CHECK(encode(tableau) == array);
    CHECK(validate(tableau).ok);
}

TEST_CASE("single ribbon matrices") {
    const HeadArray horizontal(3, {{1, 0, 0}});
    const RibbonTableau tableau = decode(horizontal);
    REQUIRE(tableau.ribbons().size() == 1);
    CHECK(tableau.ribbons()[0].cells == std::vector<Cell>{{1, 1}, {1, 2}, {1, 3}});
    CHECK(tableau_spin2(tableau) == 0);
    CHECK(encode(tableau) == horizontal);

    const HeadArray vertical(3, {{1}, {0}, {0}});
    CHECK(tableau_spin2(decode(vertical)) == 2);
}

TEST_CASE("empty coding") {
    const HeadArray array(3, {{-1, -1}, {-1}});
    const RibbonTableau tableau = decode(array);
    CHECK(tableau.ribbons().empty());
    CHECK(tableau.shape().outer() == P({2, 1}));
    CHECK(encode(tableau) == array);
    CHECK(render_text(RibbonTableau(SkewShape{}, 3, {})).empty());
}

TEST_CASE("invalid codings are rejected") {
    CHECK_THROWS_AS(HeadArray(3, {{0, -1}}), InvalidCoding);        // -1 not a prefix
    CHECK_THROWS_AS(HeadArray(3, {{2, 0, 0}}), InvalidCoding);      // label gap
    CHECK_THROWS_AS(HeadArray(3, {{1, 0}}), InvalidCoding);         // count mismatch
    CHECK_THROWS_AS(HeadArray(3, {{1, 1, 1}}), InvalidCoding);      // 3 heads for 3 cells
    CHECK_THROWS_AS(HeadArray(3, {{0, 0}, {1, 0, 0}}), InvalidCoding);  // rows not a partition
    CHECK_THROWS_AS(HeadArray(1, {{1}, {1}}), InvalidCoding);       // head off the frontier
    // structurally fine but undecodable: head not on the frontier
    CHECK_THROWS_AS(decode(HeadArray(3, {{0, 1, 0}, {0, 0}, {0}})), InvalidCoding);
}

TEST_CASE("head off the frontier throws at decode") {
    // (2,2,2) strip coded with the head in the wrong row
    std::vector<std::vector<int>> rows{{1, 1}, {0, 0}, {0, 0}};
    CHECK_THROWS_AS(decode(HeadArray(3, rows)), InvalidCoding);
    std::vector<std::vector<int>> good{{0, 0}, {0, 0}, {1, 1}};
    CHECK(tableau_spin2(decode(HeadArray(3, good))) == 4);
}

TEST_CASE("validate flags the first bad label") {
    const RibbonTableau tableau = decode(HeadArray(3, kSkewSeven));
    std::vector<Ribbon> swapped = tableau.ribbons();
    for (Ribbon& r : swapped) {
        if (r.label == 1)
            r.label = 4;
        else if (r.label == 4)
            r.label = 1;
    }
    const RibbonTableau bad(tableau.shape(), tableau.k(), std::move(swapped));
    const ValidationReport report = validate(bad);
    CHECK_FALSE(report.ok);
    CHECK(report.first_bad_label == 4);
}

TEST_CASE("text and json round trips, both orientations") {
    const HeadArray array(3, kSkewSeven);
    CHECK(HeadArray::parse_text(array.to_text(), 3) == array);
    CHECK(HeadArray::parse_text(array.to_text(Orientation::bottom_up), 3,
                                Orientation::bottom_up) == array);
    // the printed matrix convention lists the shortest row first
    const std::string printed =
        "1\n0\n0 2 3 0 0\n-1 0 0 2 0 4\n-1 -1 -1 1 0 0 0\n-1 -1 -1 0 0 3 0 0\n";
    CHECK(HeadArray::parse_text(printed, 3, Orientation::bottom_up) == array);
    CHECK(HeadArray::from_json(array.to_json()) == array);
}

TEST_CASE("rendering") {
    const RibbonTableau horizontal = decode(HeadArray(3, {{1, 0, 0}}));
    CHECK(render_text(horizontal) == "+-----+\n|1 1 1|\n+-----+");
    const RibbonTableau vertical = decode(HeadArray(3, {{1}, {0}, {0}}));
    CHECK(render_text(vertical) == "+-+\n|1|\n| |\n|1|\n| |\n|1|\n+-+");
    const std::string big = render_text(decode(HeadArray(3, kSkewSeven)));
    CHECK(std::count(big.begin(), big.end(), '\n') == 12);
    for (char label : {'1', '2', '3', '4'}) CHECK(big.find(label) != std::string::npos);
}

TEST_CASE("tableau from a label grid") {
    // vertical strip of (2,2,2), both ribbons labelled 1
    const RibbonTableau strip = tableau_from_grid("1 1\n1 1\n1 1\n", 3);
    CHECK(tableau_spin2(strip) == 4);
    CHECK(tableau_weight(strip) == std::vector<int>{2});
    CHECK(encode(strip) == HeadArray(3, {{0, 0}, {0, 0}, {1, 1}}));
    // the other tiling of (2,2,2) is not a strip
    CHECK_THROWS_AS(tableau_from_grid("1 1\n1 1\n1 1\n", 2), InvalidCoding);
    CHECK_THROWS_AS(tableau_from_grid("1 2\n2 1\n", 1), InvalidCoding);
    // grid round trip through decode
    const RibbonTableau skew = decode(HeadArray(3, kSkewSeven));
    std::string grid;
    {
        std::vector<std::vector<int>> cells;
        for (int r = 1; r <= skew.shape().outer().rows(); ++r) {
            std::vector<int> row(static_cast<size_t>(skew.shape().outer().part(r)), -1);
            cells.push_back(std::move(row));
        }
        for (const Ribbon& rib : skew.ribbons())
            for (const Cell& c : rib.cells)
                cells[static_cast<size_t>(c.row) - 1][static_cast<size_t>(c.col) - 1] = rib.label;
        for (const auto& row : cells) {
            for (size_t i = 0; i < row.size(); ++i) grid += (i ? " " : "") + std::to_string(row[i]);
            grid += "\n";
        }
    }
    const RibbonTableau rebuilt = tableau_from_grid(grid, 3);
    CHECK(encode(rebuilt) == HeadArray(3, kSkewSeven));
}

namespace {

bool is_ssyt_filling(const std::vector<std::vector<int>>& grid) {
    int max_label = 0;
    for (size_t r = 0; r < grid.size(); ++r) {
        if (grid[r].empty()) return false;
        if (r > 0 && grid[r].size() > grid[r - 1].size()) return false;
        bool in_prefix = true;
        int prev = 0;
        for (size_t c = 0; c < grid[r].size(); ++c) {
            const int e = grid[r][c];
            if (e == -1) {
                if (!in_prefix) return false;
                continue;
            }
            if (e < 1) return false;
            in_prefix = false;
            if (prev > e) return false;  // rows weakly increase
            prev = e;
            max_label = std::max(max_label, e);
            if (r > 0 && c < grid[r - 1].size()) {
                const int above = grid[r - 1][c];
                if (above != -1 && above >= e) return false;  // columns strictly increase
            }
            if (r > 0 && c >= grid[r - 1].size()) return false;  // cell with no row above it
        }
    }
    // -1 prefixes must form a partition and labels must be packed
    std::vector<int> inner;
    for (const auto& row : grid) {
        int len = 0;
        while (len < static_cast<int>(row.size()) && row[static_cast<size_t>(len)] == -1) ++len;
        inner.push_back(len);
    }
    if (!Partition::try_normalized(inner)) return false;
    std::vector<bool> used(static_cast<size_t>(max_label) + 1, false);
    for (const auto& row : grid)
        for (int e : row)
            if (e >= 1) used[static_cast<size_t>(e)] = true;
    for (int l = 1; l <= max_label; ++l)
        if (!used[static_cast<size_t>(l)]) return false;
    return true;
}

bool decodes_cleanly(const std::vector<std::vector<int>>& grid) {
    try {
        decode(HeadArray(1, grid));
        return true;
    } catch (const InvalidCoding&) {
        return false;
    }
}

}  // namespace

TEST_CASE("order one codings accept exactly the semistandard fillings") {
    std::mt19937 rng(77);
    int accepted = 0;
    for (int round = 0; round < 3000; ++round) {
        const auto shapes = partitions_of(2 + static_cast<int>(rng() % 6));
        const Partition outer = shapes[rng() % shapes.size()];
        std::vector<std::vector<int>> grid;
        for (int r = 1; r <= outer.rows(); ++r) {
            std::vector<int> row;
            for (int c = 1; c <= outer.part(r); ++c)
                row.push_back(1 + static_cast<int>(rng() % 3));
            grid.push_back(std::move(row));
        }
        const bool ssyt = is_ssyt_filling(grid);
        accepted += ssyt;
        REQUIRE(decodes_cleanly(grid) == ssyt);
    }
    CHECK(accepted > 50);  // the sample covers both outcomes
}
