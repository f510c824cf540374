#include "qshift/error.hpp"
#include "qshift/shapes.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace qshift;

namespace {

std::vector<Cell> cells(std::initializer_list<std::pair<int, int>> list)
{
    std::vector<Cell> out;
    for (auto [r, c] : list)
        out.push_back({r, c});
    std::sort(out.begin(), out.end());
    return out;
}

void expect_error(ErrorCode code, const std::function<void()>& f)
{
    try {
        f();
        ADD_FAILURE() << "no error, expected " << to_string(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

// All (outer, inner) pairs with |outer| <= n.
std::vector<SkewShape> all_pairs(int n)
{
    std::vector<SkewShape> out;
    for (const auto& outer : strict_partitions_up_to(n)) {
        for (const auto& inner : contained_partitions(outer))
            out.push_back(make_skew(outer, inner));
    }
    return out;
}

} // namespace

TEST(Partition, ParsesExample)
{
    EXPECT_EQ(parse_partition("7,4,2,1"), StrictPartition({7, 4, 2, 1}));
    EXPECT_EQ(parse_partition("7 4  2,1"), StrictPartition({7, 4, 2, 1}));
    EXPECT_EQ(parse_partition("7,4,2,1").size(), 14);
}

TEST(Partition, EmptyText)
{
    EXPECT_TRUE(parse_partition("").empty());
    EXPECT_TRUE(parse_partition("  ").empty());
    EXPECT_EQ(parse_partition("").size(), 0);
}

TEST(Partition, Errors)
{
    expect_error(ErrorCode::NotStrictlyDecreasing, [] { parse_partition("4,4,1"); });
    expect_error(ErrorCode::NotStrictlyDecreasing, [] { parse_partition("1,2"); });
    expect_error(ErrorCode::NonPositivePart, [] { parse_partition("3,0"); });
    expect_error(ErrorCode::NonPositivePart, [] { parse_partition("3,-1"); });
    expect_error(ErrorCode::MalformedToken, [] { parse_partition("3,x"); });
    expect_error(ErrorCode::MalformedToken, [] { parse_partition("3,,1"); });
    expect_error(ErrorCode::MalformedToken, [] { parse_partition(",3"); });
    expect_error(ErrorCode::MalformedToken, [] { parse_partition("3,"); });
}

TEST(Partition, ToStringRoundTrip)
{
    for (const auto& p : strict_partitions_up_to(10))
        EXPECT_EQ(parse_partition(p.to_string()), p);
}

TEST(Partition, CountsOfStrictPartitions)
{
    // Partitions of n into distinct parts.
    const std::vector<std::size_t> expected = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27};
    for (int n = 0; n < static_cast<int>(expected.size()); ++n)
        EXPECT_EQ(strict_partitions_of(n).size(), expected[static_cast<std::size_t>(n)]) << n;
}

TEST(Partition, GeneratorsAreStrictAndDistinct)
{
    std::set<StrictPartition> seen;
    for (const auto& p : strict_partitions_up_to(12)) {
        EXPECT_TRUE(StrictPartition::is_strict(p.parts()));
        EXPECT_TRUE(seen.insert(p).second);
    }
    const auto inside = contained_partitions({4, 2});
    // {}, 1, 2, 2,1, 3, 3,1, 3,2, 4, 4,1, 4,2
    EXPECT_EQ(inside.size(), 10u);
    EXPECT_TRUE(std::is_sorted(inside.begin(), inside.end()));
    for (const auto& p : inside)
        EXPECT_TRUE(StrictPartition({4, 2}).contains(p));
}

TEST(Skew, ExampleTwoShape)
{
    const SkewShape s = make_skew({7, 4, 2, 1}, {4, 2});
    EXPECT_EQ(s.size(), 8u);
    EXPECT_EQ(s.cells(), cells({{1, 5}, {1, 6}, {1, 7}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {4, 4}}));
}

TEST(Skew, VerticalDomino)
{
    const SkewShape s = make_skew({2, 1}, {1});
    EXPECT_EQ(s.cells(), cells({{1, 2}, {2, 2}}));
}

TEST(Skew, StraightShapeRows)
{
    const SkewShape s = make_straight({7, 4, 2, 1});
    for (int r = 1; r <= 4; ++r)
        EXPECT_EQ(s.row_begin(r), r);
    EXPECT_EQ(s.row_length(1), 7);
    EXPECT_EQ(s.row_length(4), 1);
}

TEST(Skew, NotContained)
{
    expect_error(ErrorCode::NotContained, [] { make_skew({3}, {4}); });
    expect_error(ErrorCode::NotContained, [] { make_skew({3}, {2, 1}); });
}

TEST(Skew, EmptyShapes)
{
    EXPECT_TRUE(SkewShape().empty());
    EXPECT_TRUE(make_skew({3, 1}, {3, 1}).empty());
    EXPECT_TRUE(cells_reading_order(SkewShape()).empty());
}

TEST(Skew, ReadingOrder)
{
    EXPECT_EQ(cells_reading_order(make_skew({2, 1}, {1})), (std::vector<Cell>{{2, 2}, {1, 2}}));
    const auto order = cells_reading_order(make_skew({7, 4, 2, 1}, {4, 2}));
    ASSERT_EQ(order.size(), 8u);
    EXPECT_EQ(order.front(), (Cell{4, 4}));
    EXPECT_EQ(order.back(), (Cell{1, 7}));
}

TEST(Skew, RowsAreIntervals)
{
    for (const SkewShape& s : all_pairs(10)) {
        for (int r = 1; r <= s.num_rows(); ++r) {
            std::vector<int> cols;
            for (const Cell& c : s.cells()) {
                if (c.row == r)
                    cols.push_back(c.col);
            }
            for (std::size_t i = 1; i < cols.size(); ++i)
                EXPECT_EQ(cols[i], cols[i - 1] + 1) << s.to_string();
        }
    }
}

TEST(Skew, IndexOf)
{
    const SkewShape s = make_skew({5, 3, 1}, {2});
    for (std::size_t i = 0; i < s.size(); ++i)
        EXPECT_EQ(s.index_of(s.cells()[i]), i);
    EXPECT_FALSE(s.index_of({1, 1}).has_value());
    EXPECT_FALSE(s.index_of({4, 4}).has_value());
}

// Every box whose row above is nonempty has a box of that row at or right
// of its own column.
TEST(Skew, RowAboveReachesRight)
{
    for (const SkewShape& s : all_pairs(12)) {
        for (const Cell& c : s.cells()) {
            if (c.row == 1 || s.row_length(c.row - 1) == 0)
                continue;
            EXPECT_GE(s.row_end(c.row - 1) - 1, c.col) << s.to_string();
        }
    }
}

// u = first column of row r, and (r-1, u-1) is a box: then every nonempty
// row r' >= r-1 starts exactly at column u + r' - r.
TEST(Skew, LeftBoundaryFollowsDiagonal)
{
    std::size_t checked = 0;
    for (const SkewShape& s : all_pairs(12)) {
        for (int r = 2; r <= s.num_rows(); ++r) {
            if (s.row_length(r) == 0)
                continue;
            const int u = s.row_begin(r);
            if (!s.contains({r - 1, u - 1}))
                continue;
            for (int other = r - 1; other <= s.num_rows(); ++other) {
                if (s.row_length(other) == 0)
                    continue;
                ++checked;
                EXPECT_EQ(s.row_begin(other), u + other - r) << s.to_string() << " row " << other;
            }
        }
    }
    EXPECT_GT(checked, 0u);
}

TEST(Canonical, DominoClass)
{
    const SkewShape a = canonicalize(make_skew({3, 2}, {2, 1}));
    const SkewShape b = canonicalize(make_skew({2, 1}, {1}));
    EXPECT_EQ(a, b);
    EXPECT_EQ(normalized_cells(a), cells({{1, 1}, {2, 1}}));
    EXPECT_TRUE(is_translate(make_skew({3, 2}, {2, 1}), make_skew({2, 1}, {1})));
}

TEST(Canonical, StraightIsFixed)
{
    EXPECT_EQ(canonicalize(make_straight({5, 3, 2})), make_straight({5, 3, 2}));
    for (const auto& p : strict_partitions_up_to(10))
        EXPECT_EQ(canonicalize(make_straight(p)), make_straight(p));
}

TEST(Canonical, DropsEmptyFirstRow)
{
    const SkewShape s = make_skew({4, 3, 2, 1}, {4, 1});
    const SkewShape c = canonicalize(s);
    EXPECT_GT(c.row_length(1), 0);
    EXPECT_EQ(normalized_cells(c), normalized_cells(s));
    EXPECT_EQ(c.num_rows(), 3);
}

TEST(Canonical, IdempotentAndSound)
{
    const auto shapes = all_pairs(9);
    for (const SkewShape& s : shapes) {
        const SkewShape c = canonicalize(s);
        EXPECT_EQ(canonicalize(c), c);
        EXPECT_EQ(normalized_cells(c), normalized_cells(s)) << s.to_string();
    }
    // Equal canonical forms iff equal normalized cell sets.
    for (std::size_t i = 0; i < shapes.size(); i += 7) {
        for (std::size_t j = 0; j < shapes.size(); j += 3) {
            const bool same_cells = normalized_cells(shapes[i]) == normalized_cells(shapes[j]);
            EXPECT_EQ(canonicalize(shapes[i]) == canonicalize(shapes[j]), same_cells);
        }
    }
}

TEST(Canonical, KeepsEmptyMiddleRows)
{
    // Boxes (1,5) and (3,3); row 2 is empty.
    const SkewShape s = make_skew({5, 3, 1}, {4, 3});
    const SkewShape c = canonicalize(s);
    EXPECT_EQ(normalized_cells(c), normalized_cells(s));
    EXPECT_EQ(c.size(), 2u);
    EXPECT_EQ(c.num_rows(), 3);
}

TEST(Classes, StreamMatchesAllPairs)
{
    // A pair with |outer| <= 8 has outer_1 <= 8 and at most 8 boxes.
    std::set<SkewShape> from_pairs;
    for (const SkewShape& s : all_pairs(8)) {
        if (!s.empty())
            from_pairs.insert(canonicalize(s));
    }
    const auto classes = skew_classes(8, 8);
    const std::set<SkewShape> listed(classes.begin(), classes.end());
    EXPECT_EQ(listed.size(), classes.size());
    for (const SkewShape& s : from_pairs)
        EXPECT_TRUE(listed.contains(s)) << s.to_string();
    for (const SkewShape& s : classes) {
        EXPECT_EQ(canonicalize(s), s);
        EXPECT_LE(s.size(), 8u);
        EXPECT_FALSE(s.empty());
    }
}

TEST(Diagonals, Domino)
{
    const auto d = diagonals(make_skew({2, 1}, {1}));
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(d[0].extent(), 0);
    EXPECT_EQ(d[1].extent(), 0);
}

TEST(Diagonals, SingleCell)
{
    const auto d = diagonals(make_straight({1}));
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].extent(), 0);
    EXPECT_EQ(d[0].offset, 0);
}

TEST(Diagonals, ConstantOffset)
{
    // (1,2), (1,3), (2,2): col-row is 1, 2 and 0.
    const auto d = diagonals(make_skew({3, 1}, {1}));
    ASSERT_EQ(d.size(), 3u);
    EXPECT_EQ(d[0].offset, 0);
    EXPECT_EQ(d[2].offset, 2);

    const auto big = diagonals(make_straight({4, 2}));
    std::size_t total = 0;
    for (const Diagonal& diag : big) {
        total += diag.cells.size();
        for (const Cell& c : diag.cells)
            EXPECT_EQ(c.col - c.row, diag.offset);
        for (std::size_t i = 1; i < diag.cells.size(); ++i)
            EXPECT_EQ(diag.cells[i], (Cell{diag.cells[i - 1].row + 1, diag.cells[i - 1].col + 1}));
    }
    EXPECT_EQ(total, 6u);
    EXPECT_EQ(big[1].extent(), 1); // (1,2), (2,3)
}

TEST(Hooks, RecognizesHooks)
{
    const Hook h{3, 4, {2, 2}};
    const auto cs = h.cells();
    EXPECT_EQ(cs.size(), 6u);
    const auto back = as_hook(cs);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, h);
    EXPECT_TRUE(as_hook(make_skew({2, 1}, {1}).cells()).has_value());
    EXPECT_FALSE(as_hook(make_straight({2, 1}).cells()).has_value());
    EXPECT_FALSE(as_hook(make_skew({3, 1}, {2}).cells()).has_value());
}

TEST(Render, Straight)
{
    EXPECT_EQ(render_ascii(make_straight({7, 4, 2, 1})),
              "[][][][][][][]\n"
              " .[][][][]\n"
              " . .[][]\n"
              " . . .[]\n");
}

TEST(Render, ExampleTwo)
{
    EXPECT_EQ(render_ascii(make_skew({7, 4, 2, 1}, {4, 2})),
              " . . . .[][][]\n"
              " . . .[][]\n"
              " . .[][]\n"
              " . . .[]\n");
}

TEST(Render, Empty)
{
    EXPECT_EQ(render_ascii(SkewShape()), "");
}
