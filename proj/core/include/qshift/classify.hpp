#pragma once

#include "qshift/shapes.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qshift {

// The four families of skew shapes with exactly one amenable filling, up to
// translation of the box set.
namespace family {

// outer arbitrary, inner empty.
struct Straight {
    bool operator==(const Straight&) const = default;
};

// outer = {m, m-1, ..., 1}, inner any strict partition with l parts,
// 0 < l < m-1, contained in outer.
struct StaircaseSkew {
    int m = 0;
    StrictPartition inner;
    bool operator==(const StaircaseSkew&) const = default;
};

// outer = {p+q+r, ..., p}, inner = {q, ..., 1}; p, q >= 1, r >= 0.
struct StaircaseInner {
    int p = 1;
    int q = 1;
    int r = 0;
    bool operator==(const StaircaseInner&) const = default;
};

// outer = {p+q, ..., p+q-r}, inner = {q, ..., q-r}; p > 0, q > r >= 0.
struct ParallelStrip {
    int p = 1;
    int q = 1;
    int r = 0;
    bool operator==(const ParallelStrip&) const = default;
};

} // namespace family

using StrangeFamily = std::variant<family::Straight, family::StaircaseSkew, family::StaircaseInner, family::ParallelStrip>;

// The (outer, inner) pair a family member stands for. Straight needs the
// outer partition, so it is only accepted together with one.
SkewShape family_shape(const family::StaircaseSkew& f);
SkewShape family_shape(const family::StaircaseInner& f);
SkewShape family_shape(const family::ParallelStrip& f);

std::string to_string(const StrangeFamily& f);

// First family, in the order Straight, StaircaseSkew, StaircaseInner,
// ParallelStrip, one of whose members is a translate of the shape. The
// empty shape matches Straight.
std::optional<StrangeFamily> match_family(const SkewShape& shape);

bool is_strange_theorem(const SkewShape& shape);

struct OracleVerdict {
    bool strange = false;
    // Amenable fillings found; stops at `limit` when one was given.
    std::size_t count = 0;
};

// Strange iff the shape has exactly one amenable filling. limit = 0 counts
// all fillings; limit = 2 is enough for the verdict.
OracleVerdict is_strange_oracle(const SkewShape& shape, std::size_t limit = 0);

struct SweepMismatch {
    SkewShape shape;
    bool theorem = false;
    std::size_t oracle_count = 0;

    bool operator==(const SweepMismatch&) const = default;
};

struct SweepReport {
    int max_outer_size = 0;
    std::size_t raw_pairs = 0;
    std::size_t shapes_tested = 0;
    std::size_t strange_by_theorem = 0;
    std::size_t strange_by_oracle = 0;
    std::vector<SweepMismatch> mismatches;
    std::chrono::duration<double> elapsed{0};
};

// Every (outer, inner) with |outer| <= max_outer_size and a nonempty skew
// shape, deduplicated by translation class; theorem vs oracle on each class.
// The report content (apart from elapsed) does not depend on parallelism.
SweepReport sweep(int max_outer_size, unsigned parallelism = 1);

} // namespace qshift
