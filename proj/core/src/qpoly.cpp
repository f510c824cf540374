#include "qshift/qpoly.hpp"

#include "qshift/error.hpp"
#include "qshift/tableaux.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <unordered_map>

namespace qshift {

QPolynomial::QPolynomial(int nvars, int degree)
    : nvars_(nvars)
    , degree_(degree)
{
}

QPolynomial QPolynomial::one(int nvars)
{
    QPolynomial p(nvars, 0);
    p.terms_.emplace(Exponent(static_cast<std::size_t>(nvars), 0u), 1);
    return p;
}

Coefficient QPolynomial::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Coefficient(0) : it->second;
}

void QPolynomial::add_term(const Exponent& e, const Coefficient& c)
{
    if (e.size() != static_cast<std::size_t>(nvars_))
        throw Error(ErrorCode::VarCountMismatch,
                    "exponent of length " + std::to_string(e.size()) + " in " + std::to_string(nvars_) + " variables");
    const auto d = std::accumulate(e.begin(), e.end(), 0u);
    if (d != static_cast<unsigned>(degree_))
        throw Error(ErrorCode::DegreeMismatch,
                    "term of degree " + std::to_string(d) + " in polynomial of degree " + std::to_string(degree_));
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void QPolynomial::add_sorted_terms(std::vector<std::pair<Exponent, Coefficient>> terms)
{
    if (!terms_.empty()) {
        for (auto& [e, c] : terms)
            add_term(e, c);
        return;
    }
    for (auto& [e, c] : terms) {
        if (e.size() != static_cast<std::size_t>(nvars_))
            throw Error(ErrorCode::VarCountMismatch,
                        "exponent of length " + std::to_string(e.size()) + " in " + std::to_string(nvars_) + " variables");
        const auto d = std::accumulate(e.begin(), e.end(), 0u);
        if (d != static_cast<unsigned>(degree_))
            throw Error(ErrorCode::DegreeMismatch,
                        "term of degree " + std::to_string(d) + " in polynomial of degree " + std::to_string(degree_));
        if (c != 0)
            terms_.emplace_hint(terms_.end(), std::move(e), std::move(c));
    }
}

namespace {

void check_compatible(const QPolynomial& a, const QPolynomial& b)
{
    if (a.nvars() != b.nvars())
        throw Error(ErrorCode::VarCountMismatch,
                    std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) + " variables");
    if (a.degree() != b.degree() && !a.is_zero() && !b.is_zero())
        throw Error(ErrorCode::DegreeMismatch,
                    "degree " + std::to_string(a.degree()) + " vs " + std::to_string(b.degree()));
}

} // namespace

QPolynomial add(const QPolynomial& a, const QPolynomial& b)
{
    check_compatible(a, b);
    if (a.is_zero())
        return b;
    QPolynomial out = a;
    for (const auto& [e, c] : b.terms())
        out.add_term(e, c);
    return out;
}

QPolynomial scale(const QPolynomial& a, const Coefficient& c)
{
    QPolynomial out(a.nvars(), a.degree());
    if (c == 0)
        return out;
    for (const auto& [e, k] : a.terms())
        out.add_term(e, k * c);
    return out;
}

bool equals(const QPolynomial& a, const QPolynomial& b)
{
    check_compatible(a, b);
    return a.terms() == b.terms();
}

QPolynomial drop_last_variable(const QPolynomial& p)
{
    if (p.nvars() == 0)
        return p;
    QPolynomial out(p.nvars() - 1, p.degree());
    for (const auto& [e, c] : p.terms()) {
        if (e.back() == 0)
            out.add_term(Exponent(e.begin(), e.end() - 1), c);
    }
    return out;
}

bool is_symmetric(const QPolynomial& p)
{
    for (int i = 0; i + 1 < p.nvars(); ++i) {
        for (const auto& [e, c] : p.terms()) {
            Exponent swapped = e;
            std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(i) + 1]);
            if (p.coefficient(swapped) != c)
                return false;
        }
    }
    return true;
}

namespace {

// Order ideals of the shape, i.e. the boxes holding letters <= s for some s.
// Row i of an ideal is filled from its first box up to column i+rho_i-1 with
// inner_i <= rho_i <= outer_i.
std::vector<std::vector<int>> shape_ideals(const SkewShape& shape)
{
    const auto rows = static_cast<std::size_t>(shape.num_rows());
    std::vector<std::vector<int>> out;
    std::vector<int> rho(rows, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == rows) {
            out.push_back(rho);
            return;
        }
        const int row = static_cast<int>(i) + 1;
        for (int part = shape.inner()[i]; part <= shape.outer()[i]; ++part) {
            if (part > shape.inner()[i] && i > 0) {
                // The box above the last filled box must be filled whenever
                // it belongs to the shape.
                const Cell top{row - 1, row + part - 1};
                if (shape.contains(top) && top.col > (row - 1) + rho[i - 1] - 1)
                    continue;
            }
            rho[i] = part;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

// Number of ways to mark the boxes of a strip that all carry the same value:
// a box with a strip box to its left must be unmarked, a box with a strip
// box below it must be marked, and every other box is free.
unsigned long long strip_weight(const SkewShape& shape, const std::vector<int>& from, const std::vector<int>& to)
{
    auto in_strip = [&](Cell c) {
        if (!shape.contains(c))
            return false;
        const auto i = static_cast<std::size_t>(c.row - 1);
        return c.col >= c.row + from[i] && c.col < c.row + to[i];
    };
    unsigned long long weight = 1;
    for (std::size_t i = 0; i < from.size(); ++i) {
        const int row = static_cast<int>(i) + 1;
        for (int col = row + from[i]; col < row + to[i]; ++col) {
            const Cell c{row, col};
            const bool must_unmark = in_strip(c.left());
            const bool must_mark = in_strip(c.below());
            if (must_unmark && must_mark)
                return 0;
            if (!must_unmark && !must_mark)
                weight *= 2;
        }
    }
    return weight;
}

} // namespace

namespace {

struct Step {
    std::size_t from;
    unsigned exponent;
    unsigned long long weight;
};

// Exponent vectors packed `bits` bits per variable into one word.
struct PackedKeys {
    unsigned bits;

    using Key = std::uint64_t;
    Key initial() const { return 0; }
    Key with(Key k, int var, unsigned e) const { return k | (Key{e} << (static_cast<unsigned>(var) * bits)); }
    Exponent unpack(Key k, int nvars) const
    {
        Exponent e(static_cast<std::size_t>(nvars));
        const Key mask = (Key{1} << bits) - 1;
        for (int i = 0; i < nvars; ++i)
            e[static_cast<std::size_t>(i)] = static_cast<unsigned>((k >> (static_cast<unsigned>(i) * bits)) & mask);
        return e;
    }
};

struct VectorKeys {
    int nvars;

    using Key = Exponent;
    Key initial() const { return Exponent(static_cast<std::size_t>(nvars), 0u); }
    Key with(Key k, int var, unsigned e) const
    {
        k[static_cast<std::size_t>(var)] = e;
        return k;
    }
    Exponent unpack(const Key& k, int) const { return k; }
};

struct VectorHash {
    std::size_t operator()(const Exponent& e) const
    {
        std::size_t h = 0;
        for (unsigned x : e)
            h = h * 1000003u + x;
        return h;
    }
};

template <class Keys, class Coef, class Hash = std::hash<typename Keys::Key>>
void run_transfer(const Keys& keys, const std::vector<std::vector<Step>>& incoming, std::size_t finish, int nvars,
                  QPolynomial& result)
{
    using Terms = std::unordered_map<typename Keys::Key, Coef, Hash>;
    const std::size_t count = incoming.size();
    std::vector<Terms> current(count);
    current[0].emplace(keys.initial(), Coef(1)); // the ideal equal to inner comes first
    for (int s = 0; s < nvars; ++s) {
        std::vector<Terms> next(count);
        const bool last = s + 1 == nvars;
        for (std::size_t b = 0; b < count; ++b) {
            if (last && b != finish)
                continue;
            Terms& target = next[b];
            for (const Step& step : incoming[b]) {
                for (const auto& [k, c] : current[step.from])
                    target[keys.with(k, s, step.exponent)] += c * Coef(step.weight);
            }
        }
        current = std::move(next);
    }
    std::vector<std::pair<Exponent, Coefficient>> terms;
    terms.reserve(current[finish].size());
    for (const auto& [k, c] : current[finish])
        terms.emplace_back(keys.unpack(k, nvars), Coefficient(c));
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    result.add_sorted_terms(std::move(terms));
}

// Packed variant on sorted term lists. After step s only slots 0..s are in
// use, so adding exponent e in slot s maps a sorted list onto a sorted list
// inside the key range of e; lists for different e never interleave.
template <class Coef>
std::vector<std::pair<std::uint64_t, Coef>> run_transfer_sorted(const PackedKeys& keys,
                                                               const std::vector<std::vector<Step>>& incoming,
                                                               std::size_t finish, int nvars)
{
    using Term = std::pair<std::uint64_t, Coef>;
    using Terms = std::vector<Term>;
    const std::size_t count = incoming.size();

    // incoming steps of each target grouped by exponent, ascending.
    std::vector<std::vector<Step>> grouped(incoming);
    for (auto& steps : grouped)
        std::stable_sort(steps.begin(), steps.end(), [](const Step& x, const Step& y) { return x.exponent < y.exponent; });

    std::vector<Terms> current(count);
    current[0].emplace_back(keys.initial(), Coef(1));
    Terms block;
    Terms merged;
    for (int s = 0; s < nvars; ++s) {
        std::vector<Terms> next(count);
        const bool last = s + 1 == nvars;
        for (std::size_t b = 0; b < count; ++b) {
            if (last && b != finish)
                continue;
            Terms& target = next[b];
            const auto& steps = grouped[b];
            for (std::size_t i = 0; i < steps.size();) {
                const unsigned e = steps[i].exponent;
                block.clear();
                for (; i < steps.size() && steps[i].exponent == e; ++i) {
                    const Step& step = steps[i];
                    const Terms& source = current[step.from];
                    if (source.empty())
                        continue;
                    merged.clear();
                    merged.reserve(block.size() + source.size());
                    auto x = block.begin();
                    auto y = source.begin();
                    const Coef w(step.weight);
                    while (x != block.end() || y != source.end()) {
                        if (y == source.end() || (x != block.end() && x->first < keys.with(y->first, s, e))) {
                            merged.push_back(std::move(*x++));
                        } else {
                            const std::uint64_t k = keys.with(y->first, s, e);
                            Coef c = y->second * w;
                            ++y;
                            if (x != block.end() && x->first == k)
                                c += (x++)->second;
                            merged.emplace_back(k, std::move(c));
                        }
                    }
                    std::swap(block, merged);
                }
                target.insert(target.end(), std::make_move_iterator(block.begin()), std::make_move_iterator(block.end()));
            }
        }
        current = std::move(next);
    }
    return std::move(current[finish]);
}

template <class Coef>
void add_packed(const PackedKeys& keys, const std::vector<std::pair<std::uint64_t, Coef>>& packed, int nvars,
                QPolynomial& result)
{
    std::vector<std::pair<Exponent, Coefficient>> terms;
    terms.reserve(packed.size());
    for (const auto& [k, c] : packed)
        terms.emplace_back(keys.unpack(k, nvars), Coefficient(c));
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    result.add_sorted_terms(std::move(terms));
}

// Chains of order ideals from inner (index 0) to outer (index finish).
struct Transfer {
    std::vector<std::vector<Step>> incoming;
    std::size_t finish = 0;
};

Transfer build_transfer(const SkewShape& shape)
{
    const auto ideals = shape_ideals(shape);
    const std::size_t count = ideals.size();
    std::vector<int> filled(count, 0);
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t i = 0; i < ideals[a].size(); ++i)
            filled[a] += ideals[a][i] - shape.inner()[i];
    }

    // incoming[b]: transitions a -> b adding the strip ideals[b] / ideals[a].
    Transfer t;
    t.incoming.resize(count);
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            bool contained = true;
            for (std::size_t i = 0; i < ideals[a].size() && contained; ++i)
                contained = ideals[a][i] <= ideals[b][i];
            if (!contained)
                continue;
            if (auto w = strip_weight(shape, ideals[a], ideals[b]); w > 0)
                t.incoming[b].push_back({a, static_cast<unsigned>(filled[b] - filled[a]), w});
        }
    }
    t.finish = count - 1;
    return t;
}

struct Packing {
    unsigned bits = 0;
    bool packable = false;
    bool small_coefficients = false;
};

Packing packing_for(int degree, int nvars)
{
    Packing p;
    p.bits = static_cast<unsigned>(std::bit_width(static_cast<unsigned>(degree)));
    p.packable = static_cast<unsigned>(nvars) * p.bits <= 64;
    // Every coefficient is at most the number of fillings, (2 nvars)^degree.
    p.small_coefficients = degree * std::log2(2.0 * nvars) < 63.0;
    return p;
}

using PackedTerms = StraightExpansionCache::PackedTerms;

// expand_q as sorted packed terms with machine-word coefficients, when the
// shape is nonempty and both fit.
std::optional<PackedTerms> expand_q_packed(const SkewShape& shape, int nvars)
{
    if (shape.empty() || nvars <= 0)
        return std::nullopt;
    const Packing packing = packing_for(static_cast<int>(shape.size()), nvars);
    if (!packing.packable || !packing.small_coefficients)
        return std::nullopt;
    const Transfer t = build_transfer(shape);
    return run_transfer_sorted<std::uint64_t>(PackedKeys{packing.bits}, t.incoming, t.finish, nvars);
}

} // namespace

QPolynomial expand_q(const SkewShape& shape, int nvars)
{
    const int degree = static_cast<int>(shape.size());
    if (shape.empty())
        return QPolynomial::one(nvars);
    QPolynomial result(nvars, degree);
    if (nvars <= 0)
        return result;

    const Transfer t = build_transfer(shape);
    const Packing packing = packing_for(degree, nvars);
    const PackedKeys keys{packing.bits};
    if (packing.packable && packing.small_coefficients)
        add_packed(keys, run_transfer_sorted<std::uint64_t>(keys, t.incoming, t.finish, nvars), nvars, result);
    else if (packing.packable)
        add_packed(keys, run_transfer_sorted<Coefficient>(keys, t.incoming, t.finish, nvars), nvars, result);
    else
        run_transfer<VectorKeys, Coefficient, VectorHash>(VectorKeys{nvars}, t.incoming, t.finish, nvars, result);
    return result;
}

const QPolynomial& StraightExpansionCache::get(const StrictPartition& nu, int nvars)
{
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(nu, nvars);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, expand_q(make_straight(nu), nvars)).first;
    return it->second;
}

const StraightExpansionCache::PackedTerms* StraightExpansionCache::get_packed(const StrictPartition& nu, int nvars)
{
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(nu, nvars);
    auto it = packed_.find(key);
    if (it == packed_.end())
        it = packed_.emplace(key, expand_q_packed(make_straight(nu), nvars)).first;
    return it->second ? &*it->second : nullptr;
}

namespace {

// Both sides on packed terms; nullopt when something does not fit a word.
std::optional<bool> verify_packed(const SkewShape& shape, std::span<const DecompositionTerm> terms,
                                  StraightExpansionCache* cache)
{
    const int n = static_cast<int>(shape.size());
    const auto lhs = expand_q_packed(shape, n);
    if (!lhs)
        return std::nullopt;
    PackedTerms rhs;
    PackedTerms merged;
    for (const DecompositionTerm& term : terms) {
        std::optional<PackedTerms> local;
        const PackedTerms* straight = nullptr;
        if (cache) {
            straight = cache->get_packed(term.nu, n);
        } else {
            local = expand_q_packed(make_straight(term.nu), n);
            straight = local ? &*local : nullptr;
        }
        if (!straight)
            return std::nullopt;
        const std::uint64_t f = term.multiplicity;
        merged.clear();
        merged.reserve(rhs.size() + straight->size());
        auto x = rhs.begin();
        auto y = straight->begin();
        while (x != rhs.end() || y != straight->end()) {
            if (y == straight->end() || (x != rhs.end() && x->first < y->first)) {
                merged.push_back(*x++);
                continue;
            }
            std::uint64_t c = 0;
            if (__builtin_mul_overflow(y->second, f, &c))
                return std::nullopt;
            const std::uint64_t k = y->first;
            ++y;
            if (x != rhs.end() && x->first == k && __builtin_add_overflow(c, (x++)->second, &c))
                return std::nullopt;
            merged.emplace_back(k, c);
        }
        std::swap(rhs, merged);
    }
    return *lhs == rhs;
}

} // namespace

bool verify_decomposition(const SkewShape& shape, StraightExpansionCache* cache)
{
    const int n = static_cast<int>(shape.size());
    const auto terms = decompose(shape);
    if (auto fast = verify_packed(shape, terms, cache))
        return *fast;
    const QPolynomial lhs = expand_q(shape, n);
    QPolynomial rhs(n, n);
    for (const DecompositionTerm& term : terms) {
        QPolynomial local;
        const QPolynomial& straight = cache ? cache->get(term.nu, n) : (local = expand_q(make_straight(term.nu), n));
        if (straight.degree() != n)
            return false;
        const Coefficient f = term.multiplicity;
        for (const auto& [e, c] : straight.terms())
            rhs.add_term(e, c * f);
    }
    return equals(lhs, rhs);
}

std::string to_string(const QPolynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        if (!out.empty())
            out += " + ";
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += c.str();
        else if (c == 1)
            out += mono;
        else
            out += c.str() + "*" + mono;
    }
    return out;
}

} // namespace qshift
