#include "qshift/classify.hpp"

#include "qshift/parallel.hpp"
#include "qshift/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qshift {

namespace {

StrictPartition descending_run(int top, int bottom)
{
    std::vector<int> parts;
    for (int v = top; v >= bottom && v >= 1; --v)
        parts.push_back(v);
    return StrictPartition(std::move(parts));
}

} // namespace

SkewShape family_shape(const family::StaircaseSkew& f)
{
    return make_skew(descending_run(f.m, 1), f.inner);
}

SkewShape family_shape(const family::StaircaseInner& f)
{
    return make_skew(descending_run(f.p + f.q + f.r, f.p), descending_run(f.q, 1));
}

SkewShape family_shape(const family::ParallelStrip& f)
{
    return make_skew(descending_run(f.p + f.q, f.p + f.q - f.r), descending_run(f.q, f.q - f.r));
}

std::string to_string(const StrangeFamily& f)
{
    struct Printer {
        std::string operator()(const family::Straight&) const { return "Straight"; }
        std::string operator()(const family::StaircaseSkew& s) const
        {
            return "StaircaseSkew{m=" + std::to_string(s.m) + ", mu=" + s.inner.to_string() + "}";
        }
        std::string operator()(const family::StaircaseInner& s) const
        {
            return "StaircaseInner{p=" + std::to_string(s.p) + ", q=" + std::to_string(s.q)
                   + ", r=" + std::to_string(s.r) + "}";
        }
        std::string operator()(const family::ParallelStrip& s) const
        {
            return "ParallelStrip{p=" + std::to_string(s.p) + ", q=" + std::to_string(s.q)
                   + ", r=" + std::to_string(s.r) + "}";
        }
    };
    return std::visit(Printer{}, f);
}

std::optional<StrangeFamily> match_family(const SkewShape& shape)
{
    const SkewShape target = canonicalize(shape);
    if (target.inner().empty())
        return family::Straight{};

    const int cells = static_cast<int>(target.size());
    const int rows = target.num_rows();
    int width = 0;
    for (int r = 1; r <= rows; ++r)
        width = std::max(width, target.row_length(r));
    auto matches = [&](const SkewShape& candidate) { return canonicalize(candidate) == target; };

    // A member with inner_1 = m has an empty first row and is a translate of
    // the member for m-1 (or of a straight staircase), so inner_1 < m and all
    // m rows are occupied.
    for (int m = 3; m <= rows; ++m) {
        const int removed = m * (m + 1) / 2 - cells;
        if (removed <= 0)
            continue;
        for (const StrictPartition& mu : strict_partitions_of(removed)) {
            const auto l = static_cast<int>(mu.length());
            if (mu[0] >= m || l < 1 || l >= m - 1)
                continue;
            family::StaircaseSkew f{m, mu};
            if (matches(family_shape(f)))
                return f;
        }
    }

    // Every row of a StaircaseInner member is nonempty, so it has q+r+1 rows;
    // the first row holds p+r boxes.
    for (int q = 1; q < rows; ++q) {
        const int r = rows - 1 - q;
        for (int p = 1; p + r <= width; ++p) {
            const int outer_size = (q + r + 1) * (2 * p + q + r) / 2;
            if (outer_size - q * (q + 1) / 2 != cells)
                continue;
            family::StaircaseInner f{p, q, r};
            if (matches(family_shape(f)))
                return f;
        }
    }

    // Every row of a ParallelStrip member covers columns q+1..q+p, so the
    // member is a p x (r+1) rectangle and q only translates it.
    for (int r = 0; r + 1 <= rows; ++r) {
        for (int p = 1; p <= width; ++p) {
            if (p * (r + 1) != cells)
                continue;
            family::ParallelStrip f{p, r + 1, r};
            if (matches(family_shape(f)))
                return f;
        }
    }
    return std::nullopt;
}

bool is_strange_theorem(const SkewShape& shape)
{
    return match_family(shape).has_value();
}

OracleVerdict is_strange_oracle(const SkewShape& shape, std::size_t limit)
{
    AmenableSearchOptions options;
    options.limit = limit;
    const std::size_t count = count_amenable(shape, options);
    return {count == 1, count};
}

SweepReport sweep(int max_outer_size, unsigned parallelism)
{
    const auto started = std::chrono::steady_clock::now();
    SweepReport report;
    report.max_outer_size = max_outer_size;

    std::set<SkewShape> classes;
    for (const StrictPartition& outer : strict_partitions_up_to(max_outer_size)) {
        if (outer.empty())
            continue;
        for (const StrictPartition& inner : contained_partitions(outer)) {
            if (inner == outer)
                continue;
            ++report.raw_pairs;
            classes.insert(canonicalize(make_skew(outer, inner)));
        }
    }
    const std::vector<SkewShape> shapes(classes.begin(), classes.end());
    report.shapes_tested = shapes.size();

    struct Outcome {
        bool theorem = false;
        OracleVerdict oracle;
    };
    std::vector<Outcome> outcomes(shapes.size());
    parallel_for(shapes.size(), parallelism, [&](std::size_t i) {
        outcomes[i] = {is_strange_theorem(shapes[i]), is_strange_oracle(shapes[i], 2)};
    });

    for (std::size_t i = 0; i < shapes.size(); ++i) {
        const Outcome& o = outcomes[i];
        report.strange_by_theorem += o.theorem ? 1 : 0;
        report.strange_by_oracle += o.oracle.strange ? 1 : 0;
        if (o.theorem != o.oracle.strange)
            report.mismatches.push_back({shapes[i], o.theorem, o.oracle.count});
    }
    report.elapsed = std::chrono::steady_clock::now() - started;
    return report;
}

} // namespace qshift
