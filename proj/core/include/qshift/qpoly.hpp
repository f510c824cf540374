#pragma once

#include "qshift/shapes.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qshift {

using Coefficient = boost::multiprecision::cpp_int;
using Exponent = std::vector<unsigned>;

// Homogeneous polynomial in x1..x_nvars with positive integer coefficients.
// The zero polynomial keeps its nominal degree. Terms are kept in graded
// lexicographic order, largest first; all terms share one degree, so this is
// plain lexicographic order on exponents.
class QPolynomial {
public:
    using TermMap = std::map<Exponent, Coefficient, std::greater<Exponent>>;

    QPolynomial() = default;
    QPolynomial(int nvars, int degree);

    static QPolynomial one(int nvars);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Coefficient coefficient(const Exponent& e) const;

    // Adds c * x^e. Throws Error(VarCountMismatch) for a wrong exponent
    // length and Error(DegreeMismatch) for a wrong total degree. Adding 0 is
    // a no-op.
    void add_term(const Exponent& e, const Coefficient& c);
    // Bulk add_term for terms already in order and free of duplicates.
    void add_sorted_terms(std::vector<std::pair<Exponent, Coefficient>> terms);

    bool operator==(const QPolynomial& o) const
    {
        return nvars_ == o.nvars_ && degree_ == o.degree_ && terms_ == o.terms_;
    }

private:
    int nvars_ = 0;
    int degree_ = 0;
    TermMap terms_;
};

// Operands must agree in nvars (Error(VarCountMismatch)) and in degree
// (Error(DegreeMismatch)) unless one of them is zero.
QPolynomial add(const QPolynomial& a, const QPolynomial& b);
QPolynomial scale(const QPolynomial& a, const Coefficient& c);
bool equals(const QPolynomial& a, const QPolynomial& b);

// Sets the last variable to zero.
QPolynomial drop_last_variable(const QPolynomial& p);

// Invariant under every adjacent transposition of variables.
bool is_symmetric(const QPolynomial& p);

// Sum of x^T over all GSYT of the shape with letter values <= nvars.
QPolynomial expand_q(const SkewShape& shape, int nvars);

// Thread-safe memo of expand_q on straight shapes.
class StraightExpansionCache {
public:
    // (packed exponent, coefficient), ascending by key.
    using PackedTerms = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

    const QPolynomial& get(const StrictPartition& nu, int nvars);
    // Same expansion packed into words; nullptr when it does not fit.
    const PackedTerms* get_packed(const StrictPartition& nu, int nvars);

private:
    std::mutex mutex_;
    std::map<std::pair<StrictPartition, int>, QPolynomial> cache_;
    std::map<std::pair<StrictPartition, int>, std::optional<PackedTerms>> packed_;
};

// Checks Q_{shape} = sum_nu f * Q_nu (from decompose) in as many variables
// as the shape has boxes.
bool verify_decomposition(const SkewShape& shape, StraightExpansionCache* cache = nullptr);

// "2*x1^2 + 2*x1*x2"; "0" for the zero polynomial.
std::string to_string(const QPolynomial& p);

} // namespace qshift
