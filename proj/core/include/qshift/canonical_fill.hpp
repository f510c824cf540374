#pragma once

#include "qshift/shapes.hpp"
#include "qshift/tableaux.hpp"

#include <span>
#include <vector>

namespace qshift {

// One peel of the layering: the boxes of the residual diagram whose up-left
// neighbour is not in the residual diagram, split into edge-connected
// components (diagonal contact does not connect).
struct Layer {
    int k = 1;
    std::vector<Cell> cells;                   // sorted
    std::vector<std::vector<Cell>> components; // each sorted; ordered by first cell
};

// First and last box of a path component: `first` has no component box above
// it or to its right, `last` none below it or to its left.
struct PathEndpoints {
    Cell first;
    Cell last;

    bool operator==(const PathEndpoints&) const = default;
};

// Layers P_1 .. P_m; disjoint, covering the shape, P_m nonempty.
std::vector<Layer> compute_layers(const SkewShape& shape);

// Each box of P_k receives k' when the box directly below it is also in P_k,
// and k otherwise.
Tableau canonical_filling(const SkewShape& shape);
Tableau canonical_filling(const SkewShape& shape, std::span<const Layer> layers);

bool layer_has_disconnection(const SkewShape& shape);

// Throws Error(NotAPath) when the component is empty, disconnected or does
// not have exactly one first and one last box.
PathEndpoints path_endpoints(std::span<const Cell> component);

// Edge-connected components of a cell set, via union-find.
std::vector<std::vector<Cell>> connected_components(std::span<const Cell> cells);

} // namespace qshift
