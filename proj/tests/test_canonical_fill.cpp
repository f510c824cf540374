#include "qshift/canonical_fill.hpp"
#include "qshift/error.hpp"

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

std::vector<std::string> rows_of(const Tableau& t)
{
    std::vector<std::string> out;
    const SkewShape& s = t.shape();
    for (int r = 1; r <= s.num_rows(); ++r) {
        std::vector<Letter> row;
        for (int c = s.row_begin(r); c < s.row_end(r); ++c)
            row.push_back(t.at({r, c}));
        out.push_back(to_string(row));
    }
    return out;
}

} // namespace

TEST(Layers, Domino)
{
    const auto layers = compute_layers(make_skew({2, 1}, {1}));
    ASSERT_EQ(layers.size(), 1u);
    EXPECT_EQ(layers[0].k, 1);
    EXPECT_EQ(layers[0].cells, cells({{1, 2}, {2, 2}}));
    EXPECT_EQ(layers[0].components.size(), 1u);
}

TEST(Layers, Staircase)
{
    const auto layers = compute_layers(make_straight({3, 2, 1}));
    ASSERT_EQ(layers.size(), 3u);
    EXPECT_EQ(layers[0].cells.size(), 3u);
    EXPECT_EQ(layers[1].cells.size(), 2u);
    EXPECT_EQ(layers[2].cells.size(), 1u);
}

TEST(Layers, WorkedExample)
{
    const SkewShape s = make_skew({7, 5, 3, 2, 1}, {4, 1});
    const auto layers = compute_layers(s);
    ASSERT_EQ(layers.size(), 3u);
    EXPECT_EQ(layers[2].cells, cells({{4, 5}, {5, 5}}));
    EXPECT_EQ(layers[1].cells, cells({{2, 6}, {3, 4}, {3, 5}, {4, 4}}));
    EXPECT_EQ(layers[0].cells.size(), 7u);
}

TEST(Layers, PartitionTheShape)
{
    for (const SkewShape& s : skew_classes(9, 9)) {
        const auto layers = compute_layers(s);
        std::set<Cell> seen;
        for (const Layer& l : layers) {
            EXPECT_FALSE(l.cells.empty());
            std::size_t in_components = 0;
            for (const auto& comp : l.components)
                in_components += comp.size();
            EXPECT_EQ(in_components, l.cells.size());
            for (const Cell& c : l.cells)
                EXPECT_TRUE(seen.insert(c).second);
        }
        EXPECT_EQ(seen.size(), s.size());
    }
}

// For k >= 2, P_k is exactly the set of boxes whose up-left neighbour is in
// P_{k-1}.
TEST(Layers, NextLayerFollowsPrevious)
{
    for (const SkewShape& s : skew_classes(10, 10)) {
        const auto layers = compute_layers(s);
        for (std::size_t k = 1; k < layers.size(); ++k) {
            const auto& prev = layers[k - 1].cells;
            std::vector<Cell> expected;
            for (const Cell& c : s.cells()) {
                if (std::binary_search(prev.begin(), prev.end(), c.up_left()))
                    expected.push_back(c);
            }
            EXPECT_EQ(layers[k].cells, expected) << s.to_string();
        }
    }
}

// For k >= 2 and a box of P_k: the box above is in P_k or P_{k-1}, and when
// it is in P_{k-1} so is its left neighbour.
TEST(Layers, BoxAboveStructure)
{
    for (const SkewShape& s : skew_classes(12, 12)) {
        const auto layers = compute_layers(s);
        auto layer_of = [&](Cell c) -> int {
            for (const Layer& l : layers) {
                if (std::binary_search(l.cells.begin(), l.cells.end(), c))
                    return l.k;
            }
            return 0;
        };
        for (std::size_t i = 1; i < layers.size(); ++i) {
            const int k = layers[i].k;
            for (const Cell& c : layers[i].cells) {
                const int above = layer_of(c.above());
                ASSERT_TRUE(above == k || above == k - 1) << s.to_string();
                if (above == k - 1)
                    ASSERT_EQ(layer_of(c.above().left()), k - 1) << s.to_string();
            }
        }
    }
}

TEST(Filling, Domino)
{
    const Tableau t = canonical_filling(make_skew({2, 1}, {1}));
    EXPECT_EQ(t.at({1, 2}), Letter(1, true));
    EXPECT_EQ(t.at({2, 2}), Letter(1, false));
    EXPECT_EQ(to_string(row_word(t)), "1 1'");
}

TEST(Filling, WorkedExample)
{
    const Tableau t = canonical_filling(make_skew({7, 5, 3, 2, 1}, {4, 1}));
    EXPECT_EQ(rows_of(t), (std::vector<std::string>{"1' 1 1", "1' 1 1 2", "1 2' 2", "2 3'", "3"}));
    EXPECT_EQ(content(t), (Content{7, 4, 2}));
    EXPECT_EQ(row_word(t).size(), 13u);
    EXPECT_TRUE(is_amenable(row_word(t)));
    EXPECT_TRUE(is_valid_gsyt(t));
}

TEST(Filling, Empty)
{
    const Tableau t = canonical_filling(SkewShape());
    EXPECT_TRUE(t.entries().empty());
}

TEST(Filling, IsOneOfTheAmenableFillings)
{
    for (const SkewShape& s : skew_classes(7, 7)) {
        const Tableau t = canonical_filling(s);
        const auto all = amenable_fillings(s);
        EXPECT_NE(std::find(all.begin(), all.end(), t), all.end()) << s.to_string();
    }
}

TEST(Disconnection, Examples)
{
    EXPECT_TRUE(layer_has_disconnection(make_skew({3, 1}, {2})));
    EXPECT_FALSE(layer_has_disconnection(make_skew({2, 1}, {1})));
    for (const StrictPartition& p : strict_partitions_up_to(12))
        EXPECT_FALSE(layer_has_disconnection(make_straight(p))) << p.to_string();
}

TEST(Components, DiagonalContactIsNotAdjacency)
{
    EXPECT_EQ(connected_components(cells({{1, 1}, {2, 2}})).size(), 2u);
    EXPECT_EQ(connected_components(cells({{1, 1}, {1, 2}, {2, 2}})).size(), 1u);
    EXPECT_TRUE(connected_components({}).empty());
}

TEST(Paths, FigureExample)
{
    const auto path = cells({{1, 4}, {1, 5}, {1, 6}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {3, 4}});
    const PathEndpoints e = path_endpoints(path);
    EXPECT_EQ(e.first, (Cell{1, 6}));
    EXPECT_EQ(e.last, (Cell{3, 1}));
}

TEST(Paths, SmallCases)
{
    const auto single = cells({{2, 3}});
    EXPECT_EQ(path_endpoints(single), (PathEndpoints{{2, 3}, {2, 3}}));
    const auto column = cells({{1, 2}, {2, 2}, {3, 2}});
    EXPECT_EQ(path_endpoints(column), (PathEndpoints{{1, 2}, {3, 2}}));
}

TEST(Paths, Errors)
{
    auto code_of = [](std::vector<Cell> c) {
        try {
            path_endpoints(c);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::MalformedToken;
    };
    EXPECT_EQ(code_of({}), ErrorCode::NotAPath);
    EXPECT_EQ(code_of(cells({{1, 1}, {3, 3}})), ErrorCode::NotAPath);
    EXPECT_EQ(code_of(cells({{1, 1}, {1, 2}, {1, 3}, {2, 2}})), ErrorCode::NotAPath);
}

TEST(Paths, EveryLayerComponentIsAPath)
{
    for (const SkewShape& s : skew_classes(10, 10)) {
        for (const Layer& l : compute_layers(s)) {
            for (const auto& comp : l.components)
                EXPECT_NO_THROW(path_endpoints(comp)) << s.to_string();
        }
    }
}
