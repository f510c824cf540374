#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qshift {

// Strictly decreasing sequence of positive integers. May be empty.
class StrictPartition {
public:
    StrictPartition() = default;
    // Throws Error(NotStrictlyDecreasing | NonPositivePart).
    explicit StrictPartition(std::vector<int> parts);
    StrictPartition(std::initializer_list<int> parts);

    // Non-throwing validity check for candidate part lists.
    static bool is_strict(std::span<const int> parts);

    std::span<const int> parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int size() const { return size_; }

    // Part i (0-based); 0 past the end.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    bool contains(const StrictPartition& inner) const;

    // "7,4,2,1"; empty partition gives "".
    std::string to_string() const;

    bool operator==(const StrictPartition& o) const { return parts_ == o.parts_; }
    std::strong_ordering operator<=>(const StrictPartition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Comma- or whitespace-separated list of positive integers.
StrictPartition parse_partition(std::string_view text);

// A box of a shifted diagram. Rows are numbered from the top, columns from
// the left, both starting at 1. The Cartesian box B_{x,y} has x = col and
// y = -row, so B_{x-1,y+1} is the up-left neighbour (row-1, col-1) and
// B_{x,y-1} is the box below, (row+1, col).
struct Cell {
    int row = 1;
    int col = 1;

    Cell above() const { return {row - 1, col}; }
    Cell below() const { return {row + 1, col}; }
    Cell left() const { return {row, col - 1}; }
    Cell right() const { return {row, col + 1}; }
    Cell up_left() const { return {row - 1, col - 1}; }

    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;
};

// D_{outer/inner}: row i holds columns i+inner_i .. i+outer_i-1.
class SkewShape {
public:
    SkewShape() = default;
    // Throws Error(NotContained).
    SkewShape(StrictPartition outer, StrictPartition inner);

    const StrictPartition& outer() const { return outer_; }
    const StrictPartition& inner() const { return inner_; }

    // Number of diagram rows, including empty ones: length of outer.
    int num_rows() const { return static_cast<int>(outer_.length()); }
    // Half-open column range [row_begin, row_end) of a row; empty when equal.
    int row_begin(int row) const;
    int row_end(int row) const;
    int row_length(int row) const { return row_end(row) - row_begin(row); }

    bool contains(Cell c) const;
    // Position of c in cells(), if c is a box of the shape.
    std::optional<std::size_t> index_of(Cell c) const;
    // Sorted by (row, col).
    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    // "7,4,2,1/4,2"
    std::string to_string() const;

    bool operator==(const SkewShape& o) const { return outer_ == o.outer_ && inner_ == o.inner_; }
    auto operator<=>(const SkewShape& o) const
    {
        if (auto c = outer_ <=> o.outer_; c != 0)
            return c;
        return inner_ <=> o.inner_;
    }

private:
    StrictPartition outer_;
    StrictPartition inner_;
    std::vector<Cell> cells_;
    std::vector<std::size_t> row_offset_;
};

SkewShape make_skew(const StrictPartition& outer, const StrictPartition& inner);
inline SkewShape make_straight(const StrictPartition& outer) { return make_skew(outer, {}); }

// Bottom row first, each row left to right: the order of the row word.
std::vector<Cell> cells_reading_order(const SkewShape& shape);

// Cell set translated so the minimal row and minimal column are 1; sorted.
std::vector<Cell> normalized_cells(std::span<const Cell> cells);
std::vector<Cell> normalized_cells(const SkewShape& shape);

// Representative of the translation class of the cell set. Two shapes have
// equal canonical forms iff their cell sets are plane translates.
SkewShape canonicalize(const SkewShape& shape);

bool is_translate(const SkewShape& a, const SkewShape& b);

// Maximal run {B_{x,y}, B_{x+1,y-1}, ...} of the shape on which x+y, i.e.
// col-row, is constant. offset is that constant; cells run top-left to
// bottom-right.
struct Diagonal {
    int offset = 0;
    std::vector<Cell> cells;

    // l_s: number of cells minus one.
    int extent() const { return static_cast<int>(cells.size()) - 1; }
};

// Nonempty diagonals ordered by offset.
std::vector<Diagonal> diagonals(const SkewShape& shape);

// Path with p boxes down the first column and q boxes along the first row,
// sharing the corner box `anchor`.
struct Hook {
    int p = 1;
    int q = 1;
    Cell anchor;

    std::vector<Cell> cells() const;
    bool operator==(const Hook&) const = default;
};

// The hook whose cell set is exactly `cells`, if there is one.
std::optional<Hook> as_hook(std::span<const Cell> cells);

// One line per diagram row: " ." for an absent leading position, "[]" per
// box. Empty rows give empty lines; the empty shape renders as "".
std::string render_ascii(const SkewShape& shape);

// --- generators used by sweeps and tests ---

// Strict partitions of n, in decreasing lexicographic order.
std::vector<StrictPartition> strict_partitions_of(int n);
// All strict partitions of size 0..max_size, by size then decreasing lex.
std::vector<StrictPartition> strict_partitions_up_to(int max_size);
// All strict partitions contained in outer (including {} and outer itself).
std::vector<StrictPartition> contained_partitions(const StrictPartition& outer);

// Canonical classes of nonempty skew shapes with at most max_cells boxes that
// have a realization with outer_1 <= max_first_part. Every connected shape
// with n boxes has such a realization with max_first_part = n. Sorted.
std::vector<SkewShape> skew_classes(int max_cells, int max_first_part);
// Same classes, streamed in generation order (each canonical form once).
void for_each_skew_class(int max_cells, int max_first_part, const std::function<void(const SkewShape&)>& visit);

} // namespace qshift
