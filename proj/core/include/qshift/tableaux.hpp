#pragma once

#include "qshift/shapes.hpp"
#include "qshift/words.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qshift {

// A filling of a skew shape: one letter per box, stored in shape.cells()
// order. Validity as a GSYT is a separate question (is_valid_gsyt).
class Tableau {
public:
    Tableau() = default;
    // Throws Error(ShapeMismatch) if entries.size() != shape.size().
    Tableau(SkewShape shape, std::vector<Letter> entries);
    // Throws Error(ShapeMismatch) unless the cells are exactly the shape's.
    static Tableau from_cells(SkewShape shape, std::span<const std::pair<Cell, Letter>> entries);

    const SkewShape& shape() const { return shape_; }
    std::span<const Letter> entries() const { return entries_; }
    // Throws Error(IndexOutOfRange) for a cell outside the shape.
    Letter at(Cell c) const;

    bool operator==(const Tableau&) const = default;

private:
    SkewShape shape_;
    std::vector<Letter> entries_;
};

// a_s = number of boxes holding s or s'; trailing zeros trimmed.
using Content = std::vector<int>;

// Rows and columns weakly increasing, no marked letter twice in a row, no
// unmarked letter twice in a column.
bool is_valid_gsyt(const Tableau& t);
// Same check on a raw cell-to-letter assignment; throws Error(ShapeMismatch)
// when the cells are not exactly the shape's boxes.
bool is_valid_gsyt(const SkewShape& shape, std::span<const std::pair<Cell, Letter>> entries);

// Letters read row by row from the bottom, each row left to right.
Word row_word(const Tableau& t);

Content content(const Tableau& t);

bool is_strict_content(std::span<const int> c);

// Largest m with m(m+1)/2 <= cells: the highest letter value an amenable
// filling can use.
int staircase_cap(std::size_t cells);

// Visitor for tableau streams; return false to stop the enumeration.
using TableauVisitor = std::function<bool(const Tableau&)>;

// Every GSYT of the shape with letter values <= max_letter, exactly once,
// in lexicographic order of the reading-order letter sequence.
void enumerate_gsyt(const SkewShape& shape, int max_letter, const TableauVisitor& visit);
std::vector<Tableau> all_gsyt(const SkewShape& shape, int max_letter);

struct AmenableSearchOptions {
    // Highest letter value; 0 selects staircase_cap(cells).
    int max_letter = 0;
    // Discard partial fillings whose running content cannot be completed to
    // a strictly decreasing one.
    bool prune_content = true;
    // Only fillings of exactly this content.
    std::optional<Content> content;
    // Stop after this many fillings; 0 means no limit.
    std::size_t limit = 0;
};

// Number of amenable fillings (capped by options.limit when set).
std::size_t count_amenable(const SkewShape& shape, const AmenableSearchOptions& options = {});

// Amenable tableaux of the shape, ordered like enumerate_gsyt. With a limit
// the first `limit` fillings found are returned, still sorted.
std::vector<Tableau> amenable_fillings(const SkewShape& shape, const AmenableSearchOptions& options = {});
void enumerate_amenable(const SkewShape& shape, const TableauVisitor& visit,
                        const AmenableSearchOptions& options = {});

// f^{outer}_{inner, nu}: amenable tableaux of shape outer/inner with content nu.
// Throws Error(NotContained).
std::size_t lr_coeff(const StrictPartition& outer, const StrictPartition& inner, const StrictPartition& nu);

struct DecompositionTerm {
    StrictPartition nu;
    std::size_t multiplicity = 0;

    bool operator==(const DecompositionTerm&) const = default;
};

// All nu with nonzero coefficient, sorted by nu. Throws
// Error(InternalNonStrictContent) if an amenable filling with non-strict
// content is ever produced.
std::vector<DecompositionTerm> decompose(const SkewShape& shape);

} // namespace qshift
