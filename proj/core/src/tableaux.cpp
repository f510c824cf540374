#include "qshift/tableaux.hpp"

#include "qshift/error.hpp"

#include <algorithm>
#include <map>

namespace qshift {

// --- Tableau ---

Tableau::Tableau(SkewShape shape, std::vector<Letter> entries)
    : shape_(std::move(shape))
    , entries_(std::move(entries))
{
    if (entries_.size() != shape_.size())
        throw Error(ErrorCode::ShapeMismatch, std::to_string(entries_.size()) + " entries for "
                                                  + std::to_string(shape_.size()) + " boxes");
}

Tableau Tableau::from_cells(SkewShape shape, std::span<const std::pair<Cell, Letter>> entries)
{
    std::vector<std::optional<Letter>> slots(shape.size());
    for (const auto& [cell, letter] : entries) {
        auto idx = shape.index_of(cell);
        if (!idx || slots[*idx])
            throw Error(ErrorCode::ShapeMismatch, "cell (" + std::to_string(cell.row) + ","
                                                      + std::to_string(cell.col) + ") is not a free box of "
                                                      + shape.to_string());
        slots[*idx] = letter;
    }
    std::vector<Letter> out;
    out.reserve(slots.size());
    for (const auto& s : slots) {
        if (!s)
            throw Error(ErrorCode::ShapeMismatch, "missing entries for " + shape.to_string());
        out.push_back(*s);
    }
    return Tableau(std::move(shape), std::move(out));
}

Letter Tableau::at(Cell c) const
{
    auto idx = shape_.index_of(c);
    if (!idx)
        throw Error(ErrorCode::IndexOutOfRange,
                    "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ") not in " + shape_.to_string());
    return entries_[*idx];
}

bool is_valid_gsyt(const Tableau& t)
{
    const SkewShape& shape = t.shape();
    for (const Cell& c : shape.cells()) {
        const Letter here = t.at(c);
        if (shape.contains(c.right())) {
            const Letter r = t.at(c.right());
            if (here > r || (here == r && here.is_marked()))
                return false;
        }
        if (shape.contains(c.below())) {
            const Letter b = t.at(c.below());
            if (here > b || (here == b && !here.is_marked()))
                return false;
        }
    }
    return true;
}

bool is_valid_gsyt(const SkewShape& shape, std::span<const std::pair<Cell, Letter>> entries)
{
    return is_valid_gsyt(Tableau::from_cells(shape, entries));
}

Word row_word(const Tableau& t)
{
    Word w;
    w.reserve(t.entries().size());
    for (const Cell& c : cells_reading_order(t.shape()))
        w.push_back(t.at(c));
    return w;
}

Content content(const Tableau& t)
{
    Content out;
    for (Letter l : t.entries()) {
        auto v = static_cast<std::size_t>(l.value());
        if (out.size() < v)
            out.resize(v, 0);
        ++out[v - 1];
    }
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

bool is_strict_content(std::span<const int> c)
{
    return StrictPartition::is_strict(c);
}

int staircase_cap(std::size_t cells)
{
    int m = 0;
    while (static_cast<std::size_t>((m + 1) * (m + 2) / 2) <= cells)
        ++m;
    return m;
}

namespace {

constexpr int kNone = -1;

// Neighbour indices of each box, addressed by position in a traversal order.
struct Traversal {
    std::vector<std::size_t> cell_index; // traversal position -> index in shape.cells()
    std::vector<int> before_a;           // earlier neighbour in the same row, or kNone
    std::vector<int> before_b;           // earlier neighbour in the same column, or kNone
};

// order: the cells in traversal order; row_step/col_step locate the
// neighbours that precede each cell in that order.
Traversal make_traversal(const SkewShape& shape, const std::vector<Cell>& order, Cell row_step, Cell col_step)
{
    Traversal t;
    const std::size_t n = order.size();
    std::vector<int> position(shape.size(), kNone);
    t.cell_index.resize(n);
    t.before_a.assign(n, kNone);
    t.before_b.assign(n, kNone);
    for (std::size_t p = 0; p < n; ++p) {
        auto idx = *shape.index_of(order[p]);
        t.cell_index[p] = idx;
        position[idx] = static_cast<int>(p);
    }
    for (std::size_t p = 0; p < n; ++p) {
        const Cell c = order[p];
        if (auto a = shape.index_of({c.row + row_step.row, c.col + row_step.col}))
            t.before_a[p] = position[*a];
        if (auto b = shape.index_of({c.row + col_step.row, c.col + col_step.col}))
            t.before_b[p] = position[*b];
    }
    return t;
}

class GsytEnumerator {
public:
    GsytEnumerator(const SkewShape& shape, int max_letter, const TableauVisitor& visit)
        : shape_(shape)
        , visit_(visit)
        , max_rank_(2 * max_letter)
        // Reading order: the left neighbour and the box below come earlier.
        , trav_(make_traversal(shape, cells_reading_order(shape), {0, -1}, {1, 0}))
        , ranks_(shape.size(), 0)
    {
    }

    void run()
    {
        if (shape_.empty()) {
            visit_(Tableau(shape_, {}));
            return;
        }
        if (max_rank_ <= 0)
            return;
        descend(0);
    }

private:
    bool descend(std::size_t p)
    {
        if (p == ranks_.size())
            return emit();
        int lo = 1;
        int hi = max_rank_;
        if (int a = trav_.before_a[p]; a != kNone) {
            const Letter left = Letter::from_rank(ranks_[static_cast<std::size_t>(a)]);
            lo = std::max(lo, left.rank() + (left.is_marked() ? 1 : 0));
        }
        if (int b = trav_.before_b[p]; b != kNone) {
            const Letter below = Letter::from_rank(ranks_[static_cast<std::size_t>(b)]);
            hi = std::min(hi, below.rank() - (below.is_marked() ? 0 : 1));
        }
        for (int r = lo; r <= hi; ++r) {
            ranks_[p] = r;
            if (!descend(p + 1))
                return false;
        }
        return true;
    }

    bool emit()
    {
        std::vector<Letter> entries(ranks_.size());
        for (std::size_t p = 0; p < ranks_.size(); ++p)
            entries[trav_.cell_index[p]] = Letter::from_rank(ranks_[p]);
        return visit_(Tableau(shape_, std::move(entries)));
    }

    const SkewShape& shape_;
    const TableauVisitor& visit_;
    int max_rank_;
    Traversal trav_;
    std::vector<int> ranks_;
};

// Depth-first search over fillings in reverse reading order (the row word
// read from its last letter). In that order the first amenability clause is
// a condition on the suffix already placed: a letter of value v >= 2 may only
// be added while the unmarked counts of v-1 and v differ. The remaining
// clauses are checked on the complete word.
class AmenableSearch {
public:
    AmenableSearch(const SkewShape& shape, const AmenableSearchOptions& options)
        : shape_(shape)
        , options_(options)
        // Reverse reading order: the right neighbour and the box above come earlier.
        , trav_(make_traversal(shape, reversed(cells_reading_order(shape)), {0, 1}, {-1, 0}))
        , ranks_(shape.size(), 0)
    {
        max_value_ = options.max_letter > 0 ? options.max_letter : staircase_cap(shape.size());
        if (options.content) {
            target_ = *options.content;
            while (!target_.empty() && target_.back() == 0)
                target_.pop_back();
            max_value_ = std::min<int>(max_value_, static_cast<int>(target_.size()));
        }
        unmarked_.assign(static_cast<std::size_t>(max_value_ + 2), 0);
        counts_.assign(static_cast<std::size_t>(max_value_ + 2), 0);
    }

    // on_found receives letters in reading order; returns false to stop.
    template <typename F>
    void run(F&& on_found)
    {
        if (options_.content) {
            int total = 0;
            for (int a : target_)
                total += a;
            if (static_cast<std::size_t>(total) != shape_.size())
                return;
        }
        descend(0, on_found);
    }

private:
    static std::vector<Cell> reversed(std::vector<Cell> v)
    {
        std::reverse(v.begin(), v.end());
        return v;
    }

    // Cells still needed to make the running content strictly decreasing.
    int strict_deficit(int top) const
    {
        int need = 0;
        int floor = 0;
        for (int v = top; v >= 1; --v) {
            const int c = counts_[static_cast<std::size_t>(v)];
            const int want = std::max(c, floor + 1);
            need += want - c;
            floor = want;
        }
        return need;
    }

    template <typename F>
    bool descend(std::size_t p, F& on_found)
    {
        const std::size_t n = ranks_.size();
        if (p == n)
            return complete(on_found);
        int lo = 1;
        int hi = 2 * max_value_;
        if (int a = trav_.before_a[p]; a != kNone) {
            const Letter right = Letter::from_rank(ranks_[static_cast<std::size_t>(a)]);
            hi = std::min(hi, right.rank() - (right.is_marked() ? 1 : 0));
        }
        if (int b = trav_.before_b[p]; b != kNone) {
            const Letter above = Letter::from_rank(ranks_[static_cast<std::size_t>(b)]);
            lo = std::max(lo, above.rank() + (above.is_marked() ? 0 : 1));
        }
        const int remaining = static_cast<int>(n - p - 1);
        for (int r = lo; r <= hi; ++r) {
            const Letter l = Letter::from_rank(r);
            const auto v = static_cast<std::size_t>(l.value());
            if (v >= 2 && unmarked_[v - 1] == unmarked_[v])
                continue;
            if (!target_.empty() && counts_[v] >= target_[v - 1])
                continue;
            ranks_[p] = r;
            ++counts_[v];
            if (!l.is_marked())
                ++unmarked_[v];
            if (l.value() > top_) {
                const int saved = top_;
                top_ = l.value();
                const bool go = !options_.prune_content || strict_deficit(top_) <= remaining;
                const bool more = !go || descend(p + 1, on_found);
                top_ = saved;
                undo(l);
                if (!more)
                    return false;
                continue;
            }
            const bool go = !options_.prune_content || strict_deficit(top_) <= remaining;
            const bool more = !go || descend(p + 1, on_found);
            undo(l);
            if (!more)
                return false;
        }
        return true;
    }

    void undo(Letter l)
    {
        const auto v = static_cast<std::size_t>(l.value());
        --counts_[v];
        if (!l.is_marked())
            --unmarked_[v];
    }

    template <typename F>
    bool complete(F& on_found)
    {
        const std::size_t n = ranks_.size();
        Word word(n);
        for (std::size_t p = 0; p < n; ++p)
            word[n - 1 - p] = Letter::from_rank(ranks_[p]);
        if (!is_amenable(word))
            return true;
        if (!target_.empty()) {
            for (std::size_t v = 1; v <= target_.size(); ++v) {
                if (counts_[v] != target_[v - 1])
                    return true;
            }
        }
        ++found_;
        if (!on_found(word, *this))
            return false;
        return options_.limit == 0 || found_ < options_.limit;
    }

public:
    // Entries in shape.cells() order for the current complete filling.
    std::vector<Letter> entries() const
    {
        std::vector<Letter> out(ranks_.size());
        for (std::size_t p = 0; p < ranks_.size(); ++p)
            out[trav_.cell_index[p]] = Letter::from_rank(ranks_[p]);
        return out;
    }

    std::size_t found() const { return found_; }

private:
    const SkewShape& shape_;
    const AmenableSearchOptions& options_;
    Traversal trav_;
    std::vector<int> ranks_;
    Content target_;
    int max_value_ = 0;
    int top_ = 0;
    std::vector<int> unmarked_;
    std::vector<int> counts_;
    std::size_t found_ = 0;
};

} // namespace

void enumerate_gsyt(const SkewShape& shape, int max_letter, const TableauVisitor& visit)
{
    GsytEnumerator(shape, max_letter, visit).run();
}

std::vector<Tableau> all_gsyt(const SkewShape& shape, int max_letter)
{
    std::vector<Tableau> out;
    enumerate_gsyt(shape, max_letter, [&](const Tableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

std::size_t count_amenable(const SkewShape& shape, const AmenableSearchOptions& options)
{
    if (shape.empty())
        return options.content && !options.content->empty() ? 0 : 1;
    AmenableSearch search(shape, options);
    search.run([](const Word&, const AmenableSearch&) { return true; });
    return search.found();
}

std::vector<Tableau> amenable_fillings(const SkewShape& shape, const AmenableSearchOptions& options)
{
    std::vector<Tableau> out;
    if (shape.empty()) {
        if (!options.content || options.content->empty())
            out.emplace_back(shape, std::vector<Letter>{});
        return out;
    }
    std::vector<std::pair<Word, std::vector<Letter>>> found;
    AmenableSearch search(shape, options);
    search.run([&](const Word& word, const AmenableSearch& s) {
        found.emplace_back(word, s.entries());
        return true;
    });
    // Reading-order letter sequence is the row word.
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.reserve(found.size());
    for (auto& [word, entries] : found)
        out.emplace_back(shape, std::move(entries));
    return out;
}

void enumerate_amenable(const SkewShape& shape, const TableauVisitor& visit, const AmenableSearchOptions& options)
{
    for (const Tableau& t : amenable_fillings(shape, options)) {
        if (!visit(t))
            return;
    }
}

std::size_t lr_coeff(const StrictPartition& outer, const StrictPartition& inner, const StrictPartition& nu)
{
    SkewShape shape = make_skew(outer, inner);
    if (nu.size() != outer.size() - inner.size())
        return 0;
    AmenableSearchOptions options;
    options.content = Content(nu.parts().begin(), nu.parts().end());
    return count_amenable(shape, options);
}

std::vector<DecompositionTerm> decompose(const SkewShape& shape)
{
    std::map<StrictPartition, std::size_t> terms;
    for (const Tableau& t : amenable_fillings(shape)) {
        Content c = content(t);
        if (!is_strict_content(c))
            throw Error(ErrorCode::InternalNonStrictContent,
                        "amenable filling of " + shape.to_string() + " with row word " + to_string(row_word(t)));
        ++terms[StrictPartition(std::move(c))];
    }
    std::vector<DecompositionTerm> out;
    out.reserve(terms.size());
    for (auto& [nu, mult] : terms)
        out.push_back({nu, mult});
    return out;
}

} // namespace qshift
