#pragma once

#include "qshift/canonical_fill.hpp"
#include "qshift/classify.hpp"
#include "qshift/qpoly.hpp"
#include "qshift/shapes.hpp"
#include "qshift/tableaux.hpp"
#include "qshift/words.hpp"

#include <nlohmann/json.hpp>

#include <span>
#include <string>

namespace qshift {

using json = nlohmann::ordered_json;

json to_json(const StrictPartition& p);
json to_json(const Cell& c);
json to_json(const SkewShape& shape);

// {"outer", "inner", "rows", "skip"}: rows top to bottom as letter strings,
// skip[i] = absent positions before the first box of row i.
json to_json(const Tableau& t);

json to_json(const AmenabilityCheck& check);

// {"nvars", "degree", "terms": [{"exp", "coef"}]}, coef as a decimal string,
// terms in graded-lex order.
json to_json(const QPolynomial& p);

json to_json(std::span<const Layer> layers);
json to_json(const DecompositionTerm& term);
json to_json(const StrangeFamily& f);

// elapsed is written only when include_elapsed is set.
json to_json(const SweepReport& report, bool include_elapsed = false);

// Like render_ascii with each box showing its letter, right-aligned to the
// widest letter (at least two characters).
std::string render_tableau(const Tableau& t);

} // namespace qshift
