#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qshift {

// Letter of the ordered alphabet 1' < 1 < 2' < 2 < ..., where a prime marks
// the letter. Values are positive.
class Letter {
public:
    constexpr Letter() = default;
    constexpr Letter(int value, bool marked)
        : rank_(2 * value - (marked ? 1 : 0))
    {
    }
    static constexpr Letter unmarked(int value) { return {value, false}; }
    static constexpr Letter marked(int value) { return {value, true}; }
    // Inverse of rank(): 1' = 1, 1 = 2, 2' = 3, ...
    static constexpr Letter from_rank(int rank)
    {
        Letter l;
        l.rank_ = rank;
        return l;
    }

    constexpr int value() const { return (rank_ + 1) / 2; }
    constexpr bool is_marked() const { return rank_ % 2 == 1; }
    constexpr int rank() const { return rank_; }

    // "3" or "3'".
    std::string to_string() const;

    constexpr bool operator==(const Letter&) const = default;
    constexpr auto operator<=>(const Letter&) const = default;

private:
    int rank_ = 2;
};

using Word = std::vector<Letter>;

// Token syntax: decimal value, optionally followed by an apostrophe.
// Throws Error(MalformedToken | NonPositivePart).
Letter parse_letter(std::string_view token);
// Space-separated tokens; the empty string is the empty word.
Word parse_word(std::string_view text);
std::string to_string(std::span<const Letter> word);

int max_value(std::span<const Letter> word);

// m_i(j) for a word w_1..w_n:
//   j = 0          -> 0
//   1 <= j <= n    -> unmarked i among w_{n-j+1} .. w_n
//   n < j <= 2n    -> m_i(n) + marked i' among w_1 .. w_{j-n}
// Throws Error(IndexOutOfRange) unless 0 <= j <= 2n.
int m_count(std::span<const Letter> word, int i, int j);

// Full table m_i(0..2n) for one letter value; O(1) lookups afterwards.
class CountProfile {
public:
    CountProfile(std::span<const Letter> word, int i);

    int letter() const { return letter_; }
    int operator()(int j) const;
    std::span<const int> table() const { return table_; }

private:
    int letter_;
    std::vector<int> table_;
};

// w^{(k)}: the subword of letters with value k or k-1.
Word restrict(std::span<const Letter> word, int k);

// Outcome of an amenability test. When ok is false, `k` and `clause`
// (1..4) name the first failing condition and `index` is the j of clauses
// 1-2 or the 1-based word position of clauses 3-4.
struct AmenabilityCheck {
    bool ok = true;
    int k = 0;
    int clause = 0;
    int index = 0;

    explicit operator bool() const { return ok; }
};

// The four k-amenability clauses, evaluated in order with short-circuit.
AmenabilityCheck check_k_amenable(std::span<const Letter> word, int k);
bool is_k_amenable(std::span<const Letter> word, int k);

// k-amenable for every k = 2 .. max value + 1 (larger k are vacuous).
AmenabilityCheck check_amenable(std::span<const Letter> word);
bool is_amenable(std::span<const Letter> word);

// Same verdict through restrictions: every nonempty w^{(k)} is k-amenable.
bool is_amenable_via_restriction(std::span<const Letter> word);

} // namespace qshift
