#include "knc/tableau_crystal.hpp"

#include <map>
#include <queue>

#include <json.hpp>

#include "knc/keys.hpp"
#include "knc/kn_tableaux.hpp"

namespace knc {

namespace {

std::optional<Tableau> apply_tab(const Tableau& t, int n, int i, bool lower) {
    Word w = reading_word(t);
    auto next = lower ? f_word(w, n, i) : e_word(w, n, i);
    if (!next) return std::nullopt;
    Tableau out = tableau_from_reading_word(*next, t.shape);
    if (!is_kn(out, n))
        throw invariant_error("crystal operator left the set of KN tableaux");
    return out;
}

}  // namespace

std::optional<Tableau> f_tab(const Tableau& t, int n, int i) { return apply_tab(t, n, i, true); }
std::optional<Tableau> e_tab(const Tableau& t, int n, int i) { return apply_tab(t, n, i, false); }

int CrystalGraph::index_of(const Tableau& t) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), t, tableau_less);
    if (it == vertices.end() || !(*it == t)) return -1;
    return static_cast<int>(it - vertices.begin());
}

CrystalGraph build_crystal(const Partition& shape, int n) {
    check_partition(shape);
    if (static_cast<int>(trimmed(shape).size()) > n)
        throw input_error("shape has more than rank-many parts");

    CrystalGraph g;
    g.rank = n;
    g.shape = trimmed(shape);

    Tableau source = key_of(WeightVector(g.shape.begin(), g.shape.end()), n);
    std::map<Word, int> seen;  // reading word -> discovery index
    std::vector<Tableau> order{source};
    seen.emplace(reading_word(source), 0);
    std::vector<std::array<int, 3>> raw_edges;
    std::queue<int> frontier;
    frontier.push(0);
    while (!frontier.empty()) {
        int src = frontier.front();
        frontier.pop();
        Tableau t = order[static_cast<size_t>(src)];
        for (int i = 1; i <= n; ++i) {
            auto next = f_tab(t, n, i);
            if (!next) continue;
            Word key = reading_word(*next);
            auto [it, fresh] = seen.emplace(std::move(key), static_cast<int>(order.size()));
            if (fresh) {
                order.push_back(*next);
                frontier.push(it->second);
            }
            raw_edges.push_back({src, i, it->second});
        }
    }

    // Canonical vertex order, then remap edges.
    std::vector<int> perm(order.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        return tableau_less(order[static_cast<size_t>(a)], order[static_cast<size_t>(b)]);
    });
    std::vector<int> rank_of(order.size());
    for (size_t i = 0; i < perm.size(); ++i) rank_of[static_cast<size_t>(perm[i])] = static_cast<int>(i);
    g.vertices.reserve(order.size());
    for (int old : perm) g.vertices.push_back(std::move(order[static_cast<size_t>(old)]));
    g.edges.reserve(raw_edges.size());
    for (auto [s, i, d] : raw_edges)
        g.edges.push_back({rank_of[static_cast<size_t>(s)], i, rank_of[static_cast<size_t>(d)]});
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

namespace {

std::string vertex_label(const Tableau& t) {
    std::string label;
    auto rows = t.rows();
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r) label += '/';
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (c) label += ' ';
            label += std::to_string(rows[r][c]);
        }
    }
    return label.empty() ? "empty" : label;
}

}  // namespace

std::string crystal_to_dot(const CrystalGraph& g) {
    std::string out = "digraph crystal {\n";
    for (size_t v = 0; v < g.vertices.size(); ++v)
        out += "  v" + std::to_string(v) + " [label=\"" + vertex_label(g.vertices[v]) + "\"];\n";
    for (const auto& e : g.edges)
        out += "  v" + std::to_string(e[0]) + " -> v" + std::to_string(e[2]) + " [label=\"" +
               std::to_string(e[1]) + "\"];\n";
    out += "}\n";
    return out;
}

std::string crystal_to_json(const CrystalGraph& g) {
    nlohmann::json j;
    j["rank"] = g.rank;
    j["shape"] = g.shape;
    j["vertices"] = nlohmann::json::array();
    for (const auto& t : g.vertices) j["vertices"].push_back(t.rows());
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges) j["edges"].push_back({e[0], e[1], e[2]});
    return j.dump(2) + "\n";
}

}  // namespace knc
