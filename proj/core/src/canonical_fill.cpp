#include "qshift/canonical_fill.hpp"

#include "qshift/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qshift {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n)
        : parent_(n)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

std::vector<std::vector<Cell>> connected_components(std::span<const Cell> cells)
{
    std::vector<Cell> sorted(cells.begin(), cells.end());
    std::sort(sorted.begin(), sorted.end());
    DisjointSets sets(sorted.size());
    auto index = [&](Cell c) -> std::ptrdiff_t {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
        if (it == sorted.end() || *it != c)
            return -1;
        return it - sorted.begin();
    };
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (Cell n : {sorted[i].right(), sorted[i].below()}) {
            if (auto j = index(n); j >= 0)
                sets.unite(i, static_cast<std::size_t>(j));
        }
    }
    // Roots are the smallest index of each set, so components come out
    // ordered by their first cell.
    std::vector<std::vector<Cell>> out;
    std::vector<std::ptrdiff_t> slot(sorted.size(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        std::size_t root = sets.find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<std::ptrdiff_t>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(slot[root])].push_back(sorted[i]);
    }
    return out;
}

std::vector<Layer> compute_layers(const SkewShape& shape)
{
    std::vector<Layer> layers;
    std::set<Cell> residual(shape.cells().begin(), shape.cells().end());
    for (int k = 1; !residual.empty(); ++k) {
        Layer layer;
        layer.k = k;
        for (const Cell& c : residual) {
            if (!residual.contains(c.up_left()))
                layer.cells.push_back(c);
        }
        for (const Cell& c : layer.cells)
            residual.erase(c);
        layer.components = connected_components(layer.cells);
        layers.push_back(std::move(layer));
    }
    return layers;
}

Tableau canonical_filling(const SkewShape& shape, std::span<const Layer> layers)
{
    std::vector<std::pair<Cell, Letter>> entries;
    entries.reserve(shape.size());
    for (const Layer& layer : layers) {
        for (const Cell& c : layer.cells) {
            const bool below_in_layer = std::binary_search(layer.cells.begin(), layer.cells.end(), c.below());
            entries.emplace_back(c, Letter(layer.k, below_in_layer));
        }
    }
    return Tableau::from_cells(shape, entries);
}

Tableau canonical_filling(const SkewShape& shape)
{
    return canonical_filling(shape, compute_layers(shape));
}

bool layer_has_disconnection(const SkewShape& shape)
{
    for (const Layer& layer : compute_layers(shape)) {
        if (layer.components.size() >= 2)
            return true;
    }
    return false;
}

PathEndpoints path_endpoints(std::span<const Cell> component)
{
    if (component.empty())
        throw Error(ErrorCode::NotAPath, "empty component");
    if (connected_components(component).size() != 1)
        throw Error(ErrorCode::NotAPath, "component is not connected");
    std::vector<Cell> sorted(component.begin(), component.end());
    std::sort(sorted.begin(), sorted.end());
    auto has = [&](Cell c) { return std::binary_search(sorted.begin(), sorted.end(), c); };
    std::vector<Cell> firsts;
    std::vector<Cell> lasts;
    for (const Cell& c : sorted) {
        if (!has(c.above()) && !has(c.right()))
            firsts.push_back(c);
        if (!has(c.below()) && !has(c.left()))
            lasts.push_back(c);
    }
    if (firsts.size() != 1 || lasts.size() != 1)
        throw Error(ErrorCode::NotAPath, std::to_string(firsts.size()) + " first and "
                                             + std::to_string(lasts.size()) + " last boxes");
    return {firsts.front(), lasts.front()};
}

} // namespace qshift
