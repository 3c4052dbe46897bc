#pragma once

#include <array>
#include <optional>

#include "knc/tableau.hpp"
#include "knc/word_crystal.hpp"

namespace knc {

// Crystal operators on straight KN tableaux: act on the reading word and
// re-parse into the same shape (the result is again a KN tableau).
std::optional<Tableau> f_tab(const Tableau& t, int n, int i);
std::optional<Tableau> e_tab(const Tableau& t, int n, int i);

// The full crystal of KN(lambda, n) with lowering edges, built as the closure
// of the key tableau of lambda.  Vertices are canonically ordered (by reading
// word) and edges are stored as (source index, label, target index).
struct CrystalGraph {
    int rank = 0;
    Partition shape;
    std::vector<Tableau> vertices;
    std::vector<std::array<int, 3>> edges;

    int index_of(const Tableau& t) const;  // -1 when absent
};

CrystalGraph build_crystal(const Partition& shape, int n);

std::string crystal_to_dot(const CrystalGraph& g);
std::string crystal_to_json(const CrystalGraph& g);

}  // namespace knc
