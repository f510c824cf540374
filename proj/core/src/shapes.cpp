#include "qshift/shapes.hpp"

#include "qshift/error.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qshift {

// --- StrictPartition ---

StrictPartition::StrictPartition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw Error(ErrorCode::NonPositivePart,
                        "part " + std::to_string(parts_[i]) + " at position " + std::to_string(i + 1));
        if (i > 0 && parts_[i] >= parts_[i - 1])
            throw Error(ErrorCode::NotStrictlyDecreasing,
                        std::to_string(parts_[i - 1]) + " then " + std::to_string(parts_[i]));
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

StrictPartition::StrictPartition(std::initializer_list<int> parts)
    : StrictPartition(std::vector<int>(parts))
{
}

bool StrictPartition::is_strict(std::span<const int> parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0 || (i > 0 && parts[i] >= parts[i - 1]))
            return false;
    }
    return true;
}

bool StrictPartition::contains(const StrictPartition& inner) const
{
    if (inner.length() > length())
        return false;
    for (std::size_t i = 0; i < inner.length(); ++i) {
        if (inner.parts_[i] > parts_[i])
            return false;
    }
    return true;
}

std::string StrictPartition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

StrictPartition parse_partition(std::string_view text)
{
    std::vector<int> parts;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    bool need_token = false; // a comma was read since the last token
    std::size_t i = 0;
    while (i < text.size()) {
        if (is_space(text[i])) {
            ++i;
            continue;
        }
        if (text[i] == ',') {
            if (parts.empty() || need_token)
                throw Error(ErrorCode::MalformedToken, "empty field before ','");
            need_token = true;
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !is_space(text[j]) && text[j] != ',')
            ++j;
        std::string_view token = text.substr(i, j - i);
        long long value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()
            || value > std::numeric_limits<int>::max() || value < std::numeric_limits<int>::min())
            throw Error(ErrorCode::MalformedToken, "'" + std::string(token) + "'");
        parts.push_back(static_cast<int>(value));
        need_token = false;
        i = j;
    }
    if (need_token)
        throw Error(ErrorCode::MalformedToken, "trailing ','");
    return StrictPartition(std::move(parts));
}

// --- SkewShape ---

SkewShape::SkewShape(StrictPartition outer, StrictPartition inner)
    : outer_(std::move(outer))
    , inner_(std::move(inner))
{
    if (!outer_.contains(inner_))
        throw Error(ErrorCode::NotContained,
                    "{" + inner_.to_string() + "} is not contained in {" + outer_.to_string() + "}");
    cells_.reserve(static_cast<std::size_t>(outer_.size() - inner_.size()));
    row_offset_.reserve(outer_.length() + 1);
    for (int r = 1; r <= num_rows(); ++r) {
        row_offset_.push_back(cells_.size());
        for (int c = row_begin(r); c < row_end(r); ++c)
            cells_.push_back({r, c});
    }
    row_offset_.push_back(cells_.size());
}

std::optional<std::size_t> SkewShape::index_of(Cell c) const
{
    if (!contains(c))
        return std::nullopt;
    return row_offset_[static_cast<std::size_t>(c.row - 1)] + static_cast<std::size_t>(c.col - row_begin(c.row));
}

int SkewShape::row_begin(int row) const
{
    return row + inner_[static_cast<std::size_t>(row - 1)];
}

int SkewShape::row_end(int row) const
{
    return row + outer_[static_cast<std::size_t>(row - 1)];
}

bool SkewShape::contains(Cell c) const
{
    if (c.row < 1 || c.row > num_rows())
        return false;
    return c.col >= row_begin(c.row) && c.col < row_end(c.row);
}

std::string SkewShape::to_string() const
{
    return outer_.to_string() + "/" + inner_.to_string();
}

SkewShape make_skew(const StrictPartition& outer, const StrictPartition& inner)
{
    return SkewShape(outer, inner);
}

std::vector<Cell> cells_reading_order(const SkewShape& shape)
{
    std::vector<Cell> out;
    out.reserve(shape.size());
    for (int r = shape.num_rows(); r >= 1; --r) {
        for (int c = shape.row_begin(r); c < shape.row_end(r); ++c)
            out.push_back({r, c});
    }
    return out;
}

// --- translation classes ---

std::vector<Cell> normalized_cells(std::span<const Cell> cells)
{
    if (cells.empty())
        return {};
    int min_row = cells[0].row;
    int min_col = cells[0].col;
    for (const Cell& c : cells) {
        min_row = std::min(min_row, c.row);
        min_col = std::min(min_col, c.col);
    }
    std::vector<Cell> out;
    out.reserve(cells.size());
    for (const Cell& c : cells)
        out.push_back({c.row - min_row + 1, c.col - min_col + 1});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cell> normalized_cells(const SkewShape& shape)
{
    return normalized_cells(shape.cells());
}

namespace {

// Realize a normalized cell set (rows 1..R, each row a column interval,
// first and last rows nonempty) as D_{outer/inner} with the boxes shifted
// right by `shift` columns. Empty middle rows get the smallest admissible
// equal parts. Returns nullopt when the shift admits no realization.
std::optional<SkewShape> realize(const std::vector<Cell>& cells, int shift)
{
    const int rows = cells.back().row;
    std::vector<int> first(static_cast<std::size_t>(rows + 1), 0);
    std::vector<int> last(static_cast<std::size_t>(rows + 1), -1);
    for (const Cell& c : cells) {
        auto r = static_cast<std::size_t>(c.row);
        if (last[r] < first[r]) {
            first[r] = c.col;
            last[r] = c.col;
        } else {
            first[r] = std::min(first[r], c.col);
            last[r] = std::max(last[r], c.col);
        }
    }
    std::vector<int> outer(static_cast<std::size_t>(rows), 0);
    std::vector<int> inner(static_cast<std::size_t>(rows), 0);
    for (int r = rows; r >= 1; --r) {
        auto i = static_cast<std::size_t>(r - 1);
        auto ri = static_cast<std::size_t>(r);
        if (last[ri] >= first[ri]) {
            inner[i] = first[ri] + shift - r;
            outer[i] = last[ri] + shift - r + 1;
            if (inner[i] < 0)
                return std::nullopt;
        } else {
            // r < rows here: the last row is nonempty.
            inner[i] = outer[i] = outer[i + 1] + 1;
        }
    }
    while (!inner.empty() && inner.back() == 0)
        inner.pop_back();
    if (!StrictPartition::is_strict(outer) || !StrictPartition::is_strict(inner))
        return std::nullopt;
    SkewShape shape{StrictPartition(outer), StrictPartition(inner)};
    if (shape.size() != cells.size())
        return std::nullopt;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const Cell& got = shape.cells()[k];
        if (got.row != cells[k].row || got.col != cells[k].col + shift)
            return std::nullopt;
    }
    return shape;
}

} // namespace

SkewShape canonicalize(const SkewShape& shape)
{
    if (shape.empty())
        return {};
    std::vector<Cell> cells = normalized_cells(shape);
    int min_shift = 0;
    int max_col = 0;
    for (const Cell& c : cells) {
        min_shift = std::max(min_shift, c.row - c.col);
        max_col = std::max(max_col, c.col);
    }
    const int rows = cells.back().row;
    // The input itself is a realization of this cell set at some shift no
    // larger than its own outer_1, so the search terminates.
    const int limit = min_shift + shape.outer()[0] + rows + max_col;
    for (int shift = min_shift; shift <= limit; ++shift) {
        if (auto out = realize(cells, shift))
            return *std::move(out);
    }
    throw std::logic_error("canonicalize: no realization found for " + shape.to_string());
}

bool is_translate(const SkewShape& a, const SkewShape& b)
{
    return normalized_cells(a) == normalized_cells(b);
}

// --- diagonals and hooks ---

std::vector<Diagonal> diagonals(const SkewShape& shape)
{
    std::vector<Diagonal> out;
    if (shape.empty())
        return out;
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (const Cell& c : shape.cells()) {
        lo = std::min(lo, c.col - c.row);
        hi = std::max(hi, c.col - c.row);
    }
    for (int d = lo; d <= hi; ++d) {
        Diagonal diag{d, {}};
        for (int r = 1; r <= shape.num_rows(); ++r) {
            if (shape.contains({r, r + d}))
                diag.cells.push_back({r, r + d});
        }
        if (!diag.cells.empty())
            out.push_back(std::move(diag));
    }
    return out;
}

std::vector<Cell> Hook::cells() const
{
    std::vector<Cell> out;
    for (int i = 0; i < q; ++i)
        out.push_back({anchor.row, anchor.col + i});
    for (int i = 1; i < p; ++i)
        out.push_back({anchor.row + i, anchor.col});
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Hook> as_hook(std::span<const Cell> cells)
{
    if (cells.empty())
        return std::nullopt;
    std::vector<Cell> sorted(cells.begin(), cells.end());
    std::sort(sorted.begin(), sorted.end());
    const Cell anchor = sorted.front();
    int q = 0;
    while (std::binary_search(sorted.begin(), sorted.end(), Cell{anchor.row, anchor.col + q}))
        ++q;
    int p = 0;
    while (std::binary_search(sorted.begin(), sorted.end(), Cell{anchor.row + p, anchor.col}))
        ++p;
    Hook hook{p, q, anchor};
    if (hook.cells() != sorted)
        return std::nullopt;
    return hook;
}

std::string render_ascii(const SkewShape& shape)
{
    std::string out;
    for (int r = 1; r <= shape.num_rows(); ++r) {
        if (shape.row_length(r) > 0) {
            for (int c = 1; c < shape.row_begin(r); ++c)
                out += " .";
            for (int c = shape.row_begin(r); c < shape.row_end(r); ++c)
                out += "[]";
        }
        out += '\n';
    }
    return out;
}

// --- generators ---

std::vector<StrictPartition> strict_partitions_of(int n)
{
    std::vector<StrictPartition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            // p + (p-1) + ... + 1 must be able to cover what remains.
            if (p * (p + 1) / 2 < remaining)
                break;
            current.push_back(p);
            rec(remaining - p, p - 1);
            current.pop_back();
        }
    };
    if (n >= 0)
        rec(n, n);
    return out;
}

std::vector<StrictPartition> strict_partitions_up_to(int max_size)
{
    std::vector<StrictPartition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto level = strict_partitions_of(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<StrictPartition> contained_partitions(const StrictPartition& outer)
{
    std::vector<StrictPartition> out;
    std::vector<int> current;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        out.emplace_back(current);
        if (i >= outer.length())
            return;
        int cap = outer[i];
        if (i > 0)
            cap = std::min(cap, current.back() - 1);
        for (int p = 1; p <= cap; ++p) {
            current.push_back(p);
            rec(i + 1);
            current.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_skew_class(int max_cells, int max_first_part, const std::function<void(const SkewShape&)>& visit)
{
    std::vector<int> outer;
    std::vector<int> inner;

    // Choose inner row by row, keeping the box count within budget.
    std::function<void(std::size_t, int)> fill_inner = [&](std::size_t i, int cells) {
        if (i == outer.size()) {
            if (cells == 0 || cells > max_cells)
                return;
            std::vector<int> mu(inner);
            while (!mu.empty() && mu.back() == 0)
                mu.pop_back();
            SkewShape shape{StrictPartition(outer), StrictPartition(std::move(mu))};
            if (canonicalize(shape) == shape)
                visit(shape);
            return;
        }
        const int prev = i == 0 ? std::numeric_limits<int>::max() : inner[i - 1];
        int hi = outer[i];
        if (i == 0)
            hi = outer[0] - 1; // a canonical shape starts with a nonempty row
        else
            hi = std::min(hi, prev == 0 ? 0 : prev - 1);
        for (int p = hi; p >= 0; --p) {
            int row_cells = outer[i] - p;
            if (cells + row_cells > max_cells)
                break;
            // Rows below can remove at most p-1, p-2, ... boxes.
            int below = 0;
            for (std::size_t j = i + 1; j < outer.size(); ++j)
                below += std::max(0, outer[j] - std::max(0, p - static_cast<int>(j - i)));
            if (cells + row_cells + below > max_cells)
                continue;
            inner.push_back(p);
            fill_inner(i + 1, cells + row_cells);
            inner.pop_back();
        }
    };

    // outer ranges over all subsets of {1..max_first_part}.
    std::function<void(int)> choose_outer = [&](int next_max) {
        if (!outer.empty())
            fill_inner(0, 0);
        for (int p = next_max; p >= 1; --p) {
            outer.push_back(p);
            choose_outer(p - 1);
            outer.pop_back();
        }
    };
    choose_outer(max_first_part);
}

std::vector<SkewShape> skew_classes(int max_cells, int max_first_part)
{
    std::vector<SkewShape> out;
    for_each_skew_class(max_cells, max_first_part, [&](const SkewShape& s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qshift
