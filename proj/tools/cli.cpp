#include "cli.hpp"

#include "qshift/canonical_fill.hpp"
#include "qshift/classify.hpp"
#include "qshift/error.hpp"
#include "qshift/json_io.hpp"
#include "qshift/qpoly.hpp"
#include "qshift/shapes.hpp"
#include "qshift/tableaux.hpp"
#include "qshift/words.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <thread>

namespace qshift::cli {

namespace {

struct Options {
    bool as_json = false;
    std::string outer;
    std::string inner;
    std::string nu;
    std::string word;
    int max_letter = 0;
    int vars = 0;
    bool amenable_only = false;
    bool verify = false;
    std::string method = "both";
    int max_size = 6;
    unsigned jobs = 0;
    bool verbose = false;
};

SkewShape shape_of(const Options& o)
{
    return make_skew(parse_partition(o.outer), parse_partition(o.inner));
}

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string cell_string(const Cell& c)
{
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

void emit(std::ostream& out, const json& j)
{
    out << j.dump(2) << '\n';
}

int do_render(const Options& o, std::ostream& out)
{
    const SkewShape shape = shape_of(o);
    if (!o.as_json) {
        out << render_ascii(shape);
        return Ok;
    }
    json j = to_json(shape);
    j["size"] = shape.size();
    json cells = json::array();
    for (const Cell& c : shape.cells())
        cells.push_back(to_json(c));
    j["cells"] = std::move(cells);
    json diags = json::array();
    for (const Diagonal& d : diagonals(shape)) {
        json dc = json::array();
        for (const Cell& c : d.cells)
            dc.push_back(to_json(c));
        diags.push_back({{"offset", d.offset}, {"cells", std::move(dc)}});
    }
    j["diagonals"] = std::move(diags);
    if (auto hook = as_hook(shape.cells()))
        j["hook"] = {{"p", hook->p}, {"q", hook->q}, {"anchor", to_json(hook->anchor)}};
    else
        j["hook"] = nullptr;
    j["canonical"] = to_json(canonicalize(shape));
    std::istringstream lines(render_ascii(shape));
    json rows = json::array();
    for (std::string line; std::getline(lines, line);)
        rows.push_back(line);
    j["ascii"] = std::move(rows);
    emit(out, j);
    return Ok;
}

int do_fill(const Options& o, std::ostream& out)
{
    const SkewShape shape = shape_of(o);
    const auto layers = compute_layers(shape);
    const Tableau t = canonical_filling(shape, layers);
    const Word word = row_word(t);
    if (o.as_json) {
        json j = to_json(t);
        j["content"] = content(t);
        j["word"] = to_string(word);
        j["amenable"] = is_amenable(word);
        j["layers"] = to_json(std::span<const Layer>(layers));
        json paths = json::array();
        for (const Layer& layer : layers) {
            for (const auto& comp : layer.components) {
                json entry = {{"k", layer.k}, {"size", comp.size()}};
                try {
                    const PathEndpoints ends = path_endpoints(comp);
                    entry["first"] = to_json(ends.first);
                    entry["last"] = to_json(ends.last);
                } catch (const Error&) {
                    entry["first"] = nullptr;
                    entry["last"] = nullptr;
                }
                paths.push_back(std::move(entry));
            }
        }
        j["components"] = std::move(paths);
        emit(out, j);
        return Ok;
    }
    out << render_tableau(t);
    out << "content: " << join(content(t)) << '\n';
    out << "word: " << to_string(word) << '\n';
    out << "amenable: " << (is_amenable(word) ? "yes" : "no") << '\n';
    for (const Layer& layer : layers) {
        out << "P" << layer.k << ":";
        for (const Cell& c : layer.cells)
            out << ' ' << cell_string(c);
        if (layer.components.size() > 1)
            out << "  [" << layer.components.size() << " components]";
        out << '\n';
    }
    return Ok;
}

int do_word_check(const Options& o, std::ostream& out)
{
    const Word word = parse_word(o.word);
    const AmenabilityCheck check = check_amenable(word);
    if (o.as_json) {
        json j = to_json(check);
        j["word"] = to_string(word);
        emit(out, j);
        return Ok;
    }
    if (check.ok)
        out << "amenable\n";
    else
        out << "not amenable (k=" << check.k << ", clause " << check.clause << ")\n";
    return Ok;
}

int do_enumerate(const Options& o, std::ostream& out)
{
    const SkewShape shape = shape_of(o);
    std::vector<Tableau> tableaux;
    if (o.amenable_only) {
        AmenableSearchOptions options;
        options.max_letter = o.max_letter;
        tableaux = amenable_fillings(shape, options);
    } else {
        const int max_letter = o.max_letter > 0 ? o.max_letter : static_cast<int>(shape.size());
        tableaux = all_gsyt(shape, max_letter);
    }
    if (o.as_json) {
        json list = json::array();
        for (const Tableau& t : tableaux)
            list.push_back(to_json(t));
        emit(out, {{"count", tableaux.size()}, {"tableaux", std::move(list)}});
        return Ok;
    }
    out << "count: " << tableaux.size() << '\n';
    for (const Tableau& t : tableaux)
        out << '\n' << render_tableau(t);
    return Ok;
}

int do_coeff(const Options& o, std::ostream& out)
{
    const std::size_t f = lr_coeff(parse_partition(o.outer), parse_partition(o.inner), parse_partition(o.nu));
    if (o.as_json)
        emit(out, {{"outer", to_json(parse_partition(o.outer))},
                   {"inner", to_json(parse_partition(o.inner))},
                   {"nu", to_json(parse_partition(o.nu))},
                   {"coefficient", f}});
    else
        out << f << '\n';
    return Ok;
}

int do_decompose(const Options& o, std::ostream& out, std::ostream& err)
{
    const SkewShape shape = shape_of(o);
    const auto terms = decompose(shape);
    bool verified = true;
    if (o.verify)
        verified = verify_decomposition(shape);
    if (o.as_json) {
        json j = to_json(shape);
        json list = json::array();
        for (const auto& term : terms)
            list.push_back(to_json(term));
        j["terms"] = std::move(list);
        if (o.verify)
            j["verified"] = verified;
        emit(out, j);
    } else {
        for (const auto& term : terms)
            out << term.multiplicity << " * Q[" << term.nu.to_string() << "]\n";
        if (terms.empty())
            out << "0\n";
        if (o.verify)
            out << "verified: " << (verified ? "yes" : "no") << '\n';
    }
    if (!verified) {
        err << "error: decomposition does not match the expansion\n";
        return DomainError;
    }
    return Ok;
}

int do_expand(const Options& o, std::ostream& out)
{
    const SkewShape shape = shape_of(o);
    const int vars = o.vars > 0 ? o.vars : static_cast<int>(shape.size());
    const QPolynomial p = expand_q(shape, vars);
    const bool symmetric = is_symmetric(p);
    if (o.as_json) {
        json j = to_json(p);
        j["symmetric"] = symmetric;
        emit(out, j);
        return Ok;
    }
    out << to_string(p) << '\n';
    out << "symmetric: " << (symmetric ? "yes" : "no") << '\n';
    return Ok;
}

int do_is_strange(const Options& o, std::ostream& out, std::ostream& err)
{
    const SkewShape shape = shape_of(o);
    const bool want_theorem = o.method != "oracle";
    const bool want_oracle = o.method != "theorem";
    std::optional<StrangeFamily> fam;
    OracleVerdict verdict;
    if (want_theorem)
        fam = match_family(shape);
    if (want_oracle)
        verdict = is_strange_oracle(shape);
    const bool disagree = want_theorem && want_oracle && fam.has_value() != verdict.strange;

    if (o.as_json) {
        json j = to_json(shape);
        j["canonical"] = to_json(canonicalize(shape));
        if (want_theorem) {
            j["theorem"] = fam.has_value();
            j["family"] = fam ? to_json(*fam) : json(nullptr);
        }
        if (want_oracle) {
            j["oracle"] = verdict.strange;
            j["amenable_fillings"] = verdict.count;
        }
        if (want_theorem && want_oracle)
            j["agree"] = !disagree;
        emit(out, j);
    } else {
        if (want_theorem) {
            out << "theorem: ";
            if (fam)
                out << "strange (" << to_string(*fam) << ")\n";
            else
                out << "not strange\n";
        }
        if (want_oracle)
            out << "oracle: " << (verdict.strange ? "strange" : "not strange") << " (" << verdict.count
                << " amenable filling" << (verdict.count == 1 ? "" : "s") << ")\n";
    }
    if (disagree) {
        err << "error: MISMATCH: theorem and oracle disagree on " << shape.to_string() << '\n';
        return Mismatch;
    }
    return Ok;
}

int do_sweep(const Options& o, std::ostream& out, std::ostream& err)
{
    const unsigned jobs = o.jobs > 0 ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
    const SweepReport report = sweep(o.max_size, jobs);
    if (o.as_json) {
        emit(out, to_json(report, o.verbose));
    } else {
        out << "max outer size: " << report.max_outer_size << '\n';
        out << "(outer, inner) pairs: " << report.raw_pairs << '\n';
        out << "classes tested: " << report.shapes_tested << '\n';
        out << "strange by theorem: " << report.strange_by_theorem << '\n';
        out << "strange by oracle: " << report.strange_by_oracle << '\n';
        out << "mismatches: " << report.mismatches.size() << '\n';
        for (const SweepMismatch& m : report.mismatches)
            out << "  " << m.shape.to_string() << " theorem=" << (m.theorem ? "strange" : "not strange")
                << " oracle_count=" << m.oracle_count << '\n';
        if (o.verbose)
            out << "elapsed: " << report.elapsed.count() << " s\n";
    }
    if (!report.mismatches.empty()) {
        err << "error: " << report.mismatches.size() << " mismatches\n";
        return Mismatch;
    }
    return Ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Schur Q-functions on shifted skew diagrams", "qshift"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_shape = [&](CLI::App* sub) {
        sub->add_option("--outer", o.outer, "outer strict partition, e.g. 4,2,1")->required();
        sub->add_option("--inner", o.inner, "inner strict partition (default empty)");
    };
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.as_json, "JSON output"); };

    auto* render = app.add_subcommand("render", "draw a shifted skew diagram");
    add_shape(render);
    add_json(render);

    auto* fill = app.add_subcommand("fill", "canonical amenable filling and its layers");
    add_shape(fill);
    add_json(fill);

    auto* word_check = app.add_subcommand("word-check", "test a word for amenability");
    word_check->add_option("word", o.word, "space separated letters, 3' is marked")->required();
    add_json(word_check);

    auto* enumerate = app.add_subcommand("enumerate", "list the tableaux of a shape");
    add_shape(enumerate);
    enumerate->add_option("--max-letter", o.max_letter, "largest letter value (default: cell count)")
        ->check(CLI::NonNegativeNumber);
    enumerate->add_flag("--amenable", o.amenable_only, "only amenable fillings");
    add_json(enumerate);

    auto* coeff = app.add_subcommand("coeff", "shifted Littlewood-Richardson coefficient");
    add_shape(coeff);
    coeff->add_option("--nu", o.nu, "content partition")->required();
    add_json(coeff);

    auto* decompose_cmd = app.add_subcommand("decompose", "expand Q of a skew shape in straight Q's");
    add_shape(decompose_cmd);
    decompose_cmd->add_flag("--verify", o.verify, "check against the polynomial expansion");
    add_json(decompose_cmd);

    auto* expand = app.add_subcommand("expand", "Q polynomial in finitely many variables");
    add_shape(expand);
    expand->add_option("--vars", o.vars, "number of variables (default: cell count)")
        ->check(CLI::NonNegativeNumber);
    add_json(expand);

    auto* strange = app.add_subcommand("is-strange", "classify a shape");
    add_shape(strange);
    strange->add_option("--method", o.method, "theorem, oracle or both")
        ->check(CLI::IsMember({"theorem", "oracle", "both"}));
    add_json(strange);

    auto* sweep_cmd = app.add_subcommand("sweep", "compare theorem and oracle on all small shapes");
    sweep_cmd->add_option("--max-size", o.max_size, "largest |outer|")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--jobs", o.jobs, "worker threads (default: hardware)");
    sweep_cmd->add_flag("--verbose", o.verbose, "report elapsed time");
    add_json(sweep_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        err << "run 'qshift --help' for the grammar\n";
        return UsageError;
    }

    try {
        if (render->parsed())
            return do_render(o, out);
        if (fill->parsed())
            return do_fill(o, out);
        if (word_check->parsed())
            return do_word_check(o, out);
        if (enumerate->parsed())
            return do_enumerate(o, out);
        if (coeff->parsed())
            return do_coeff(o, out);
        if (decompose_cmd->parsed())
            return do_decompose(o, out, err);
        if (expand->parsed())
            return do_expand(o, out);
        if (strange->parsed())
            return do_is_strange(o, out, err);
        return do_sweep(o, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return DomainError;
    }
}

} // namespace qshift::cli
