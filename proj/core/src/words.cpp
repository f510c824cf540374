#include "qshift/words.hpp"

#include "qshift/error.hpp"

#include <algorithm>
#include <charconv>

namespace qshift {

std::string Letter::to_string() const
{
    std::string out = std::to_string(value());
    if (is_marked())
        out += '\'';
    return out;
}

Letter parse_letter(std::string_view token)
{
    bool marked = false;
    std::string_view digits = token;
    if (!digits.empty() && digits.back() == '\'') {
        marked = true;
        digits.remove_suffix(1);
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
        throw Error(ErrorCode::MalformedToken, "'" + std::string(token) + "'");
    if (value <= 0)
        throw Error(ErrorCode::NonPositivePart, "letter '" + std::string(token) + "'");
    return {value, marked};
}

Word parse_word(std::string_view text)
{
    Word out;
    std::size_t i = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (i < text.size()) {
        if (is_space(text[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !is_space(text[j]))
            ++j;
        out.push_back(parse_letter(text.substr(i, j - i)));
        i = j;
    }
    return out;
}

std::string to_string(std::span<const Letter> word)
{
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i)
            out += ' ';
        out += word[i].to_string();
    }
    return out;
}

int max_value(std::span<const Letter> word)
{
    int m = 0;
    for (Letter l : word)
        m = std::max(m, l.value());
    return m;
}

CountProfile::CountProfile(std::span<const Letter> word, int i)
    : letter_(i)
{
    const std::size_t n = word.size();
    table_.assign(2 * n + 1, 0);
    for (std::size_t j = 1; j <= n; ++j) {
        Letter l = word[n - j];
        table_[j] = table_[j - 1] + (l == Letter::unmarked(i) ? 1 : 0);
    }
    for (std::size_t j = n + 1; j <= 2 * n; ++j) {
        Letter l = word[j - n - 1];
        table_[j] = table_[j - 1] + (l == Letter::marked(i) ? 1 : 0);
    }
}

int CountProfile::operator()(int j) const
{
    if (j < 0 || static_cast<std::size_t>(j) >= table_.size())
        throw Error(ErrorCode::IndexOutOfRange,
                    "j=" + std::to_string(j) + " outside 0.." + std::to_string(table_.size() - 1));
    return table_[static_cast<std::size_t>(j)];
}

int m_count(std::span<const Letter> word, int i, int j)
{
    const int n = static_cast<int>(word.size());
    if (j < 0 || j > 2 * n)
        throw Error(ErrorCode::IndexOutOfRange,
                    "j=" + std::to_string(j) + " outside 0.." + std::to_string(2 * n));
    int count = 0;
    for (int s = std::max(1, n - std::min(j, n) + 1); s <= n && j > 0; ++s)
        count += word[static_cast<std::size_t>(s - 1)] == Letter::unmarked(i) ? 1 : 0;
    for (int s = 1; s <= j - n; ++s)
        count += word[static_cast<std::size_t>(s - 1)] == Letter::marked(i) ? 1 : 0;
    return count;
}

Word restrict(std::span<const Letter> word, int k)
{
    Word out;
    for (Letter l : word) {
        if (l.value() == k || l.value() == k - 1)
            out.push_back(l);
    }
    return out;
}

AmenabilityCheck check_k_amenable(std::span<const Letter> word, int k)
{
    const int n = static_cast<int>(word.size());
    auto at = [&](int pos) { return word[static_cast<std::size_t>(pos - 1)]; };
    const Letter k_plain = Letter::unmarked(k);
    const Letter k_marked = Letter::marked(k);
    const Letter km1_plain = Letter::unmarked(k - 1);
    const Letter km1_marked = Letter::marked(k - 1);

    // Clause 1: j = 0..n-1; m_k(j), m_{k-1}(j) count unmarked letters in the
    // suffix of length j.
    int mk = 0;
    int mk1 = 0;
    for (int j = 0; j < n; ++j) {
        const Letter next = at(n - j);
        if (mk == mk1 && (next == k_plain || next == k_marked))
            return {false, k, 1, j};
        mk += next == k_plain ? 1 : 0;
        mk1 += next == km1_plain ? 1 : 0;
    }
    // Clause 2: j = n..2n-1; counts now add marked letters of the prefix.
    for (int j = n; j < 2 * n; ++j) {
        const Letter next = at(j - n + 1);
        if (mk == mk1 && (next == k_marked || next == km1_plain))
            return {false, k, 2, j};
        mk += next == k_marked ? 1 : 0;
        mk1 += next == km1_marked ? 1 : 0;
    }
    // Clauses 3 and 4: first occurrence of each value is unmarked.
    for (int pos = 1; pos <= n; ++pos) {
        if (at(pos).value() == k) {
            if (at(pos).is_marked())
                return {false, k, 3, pos};
            break;
        }
    }
    for (int pos = 1; pos <= n; ++pos) {
        if (at(pos).value() == k - 1) {
            if (at(pos).is_marked())
                return {false, k, 4, pos};
            break;
        }
    }
    return {};
}

bool is_k_amenable(std::span<const Letter> word, int k)
{
    return check_k_amenable(word, k).ok;
}

AmenabilityCheck check_amenable(std::span<const Letter> word)
{
    const int top = max_value(word) + 1;
    for (int k = 2; k <= top; ++k) {
        if (auto r = check_k_amenable(word, k); !r.ok)
            return r;
    }
    return {};
}

bool is_amenable(std::span<const Letter> word)
{
    return check_amenable(word).ok;
}

bool is_amenable_via_restriction(std::span<const Letter> word)
{
    const int top = max_value(word) + 1;
    for (int k = 2; k <= top; ++k) {
        Word sub = restrict(word, k);
        if (!sub.empty() && !is_k_amenable(sub, k))
            return false;
    }
    return true;
}

} // namespace qshift
