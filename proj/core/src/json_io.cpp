#include "qshift/json_io.hpp"

#include <algorithm>

namespace qshift {

json to_json(const StrictPartition& p)
{
    return json(p.parts());
}

json to_json(const Cell& c)
{
    return json::array({c.row, c.col});
}

json to_json(const SkewShape& shape)
{
    return {{"outer", to_json(shape.outer())}, {"inner", to_json(shape.inner())}};
}

json to_json(const Tableau& t)
{
    const SkewShape& shape = t.shape();
    json rows = json::array();
    json skip = json::array();
    for (int r = 1; r <= shape.num_rows(); ++r) {
        json row = json::array();
        for (int c = shape.row_begin(r); c < shape.row_end(r); ++c)
            row.push_back(t.at({r, c}).to_string());
        rows.push_back(std::move(row));
        skip.push_back(shape.row_begin(r) - 1);
    }
    return {{"outer", to_json(shape.outer())}, {"inner", to_json(shape.inner())},
            {"rows", std::move(rows)}, {"skip", std::move(skip)}};
}

json to_json(const AmenabilityCheck& check)
{
    json out = {{"amenable", check.ok}};
    if (!check.ok) {
        out["k"] = check.k;
        out["clause"] = check.clause;
        out["index"] = check.index;
    }
    return out;
}

json to_json(const QPolynomial& p)
{
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"exp", e}, {"coef", c.str()}});
    return {{"nvars", p.nvars()}, {"degree", p.degree()}, {"terms", std::move(terms)}};
}

json to_json(std::span<const Layer> layers)
{
    json out = json::object();
    for (const Layer& layer : layers) {
        json cells = json::array();
        for (const Cell& c : layer.cells)
            cells.push_back(to_json(c));
        out[std::to_string(layer.k)] = std::move(cells);
    }
    return out;
}

json to_json(const DecompositionTerm& term)
{
    return {{"nu", to_json(term.nu)}, {"coefficient", term.multiplicity}};
}

json to_json(const StrangeFamily& f)
{
    struct Visitor {
        json operator()(const family::Straight&) const { return {{"family", "Straight"}}; }
        json operator()(const family::StaircaseSkew& s) const
        {
            return {{"family", "StaircaseSkew"}, {"m", s.m}, {"mu", to_json(s.inner)}};
        }
        json operator()(const family::StaircaseInner& s) const
        {
            return {{"family", "StaircaseInner"}, {"p", s.p}, {"q", s.q}, {"r", s.r}};
        }
        json operator()(const family::ParallelStrip& s) const
        {
            return {{"family", "ParallelStrip"}, {"p", s.p}, {"q", s.q}, {"r", s.r}};
        }
    };
    return std::visit(Visitor{}, f);
}

json to_json(const SweepReport& report, bool include_elapsed)
{
    json mismatches = json::array();
    for (const SweepMismatch& m : report.mismatches) {
        json entry = to_json(m.shape);
        entry["theorem"] = m.theorem;
        entry["oracle_count"] = m.oracle_count;
        mismatches.push_back(std::move(entry));
    }
    json out = {{"max_outer_size", report.max_outer_size},
                {"raw_pairs", report.raw_pairs},
                {"shapes_tested", report.shapes_tested},
                {"strange_by_theorem", report.strange_by_theorem},
                {"strange_by_oracle", report.strange_by_oracle},
                {"mismatches", std::move(mismatches)}};
    if (include_elapsed)
        out["elapsed_seconds"] = report.elapsed.count();
    return out;
}

std::string render_tableau(const Tableau& t)
{
    std::size_t width = 2;
    for (const Letter& l : t.entries())
        width = std::max(width, l.to_string().size());
    const SkewShape& shape = t.shape();
    std::string out;
    for (int r = 1; r <= shape.num_rows(); ++r) {
        std::string line;
        if (shape.row_length(r) > 0) {
            for (int c = 1; c < shape.row_end(r); ++c) {
                const std::string s = c < shape.row_begin(r) ? "." : t.at({r, c}).to_string();
                if (c > 1)
                    line += ' ';
                line += std::string(width - s.size(), ' ') + s;
            }
        }
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace qshift
