#include "mayer/involution.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <string>
#include <vector>

namespace mayer {

namespace {

// Per-vertex-count tables: edge slots sorted by lexicographic order, and for
// each slot the mask of strictly lex-greater slots. Built once, then shared.
struct LexTables {
    std::vector<int> slots_by_lex;          // lex rank -> slot
    std::vector<EdgeBits> greater_mask;     // slot -> mask of lex-greater slots
};

const LexTables& lex_tables(int n_vertices) {
    static std::array<LexTables, kMaxVertices + 1> tables;
    static std::array<std::once_flag, kMaxVertices + 1> flags;
    std::call_once(flags[n_vertices], [n_vertices] {
        LexTables& t = tables[n_vertices];
        const int slots = n_vertices * (n_vertices - 1) / 2;
        t.slots_by_lex.resize(slots);
        for (int s = 0; s < slots; ++s) t.slots_by_lex[s] = s;
        std::sort(t.slots_by_lex.begin(), t.slots_by_lex.end(), [](int a, int b) {
            return lex_edge_less(edge_at(a), edge_at(b));
        });
        t.greater_mask.assign(slots, 0);
        EdgeBits suffix = 0;
        for (int r = slots - 1; r >= 0; --r) {
            t.greater_mask[t.slots_by_lex[r]] = suffix;
            suffix |= EdgeBits{1} << t.slots_by_lex[r];
        }
    });
    return tables[n_vertices];
}

void require_connected(const LabeledGraph& g, const char* who) {
    if (!is_connected(g))
        throw std::invalid_argument(std::string(who) + " requires a connected graph");
}

} // namespace

bool is_active(const LabeledGraph& g, Edge e) {
    if (e.j >= g.n_vertices())
        throw std::invalid_argument("candidate edge label out of range");
    const auto& t = lex_tables(g.n_vertices());
    return connects(g, e.i, e.j, t.greater_mask[edge_index(e)]);
}

std::optional<Edge> least_active_edge(const LabeledGraph& g) {
    const auto& t = lex_tables(g.n_vertices());
    for (int slot : t.slots_by_lex) {
        const Edge e = edge_at(slot);
        if (connects(g, e.i, e.j, t.greater_mask[slot])) return e;
    }
    return std::nullopt;
}

LabeledGraph psi(const LabeledGraph& g) {
    require_connected(g, "psi");
    const auto e = least_active_edge(g);
    return e ? toggle_edge(g, *e) : g;
}

namespace {

// G_h edge slots sorted by the h-induced order, with per-slot greater masks.
struct HOrder {
    std::vector<int> slots_by_order;
    std::vector<EdgeBits> greater_mask; // indexed by slot
};

HOrder h_order(const HeightVector& h, const LabeledGraph& gh) {
    HOrder o;
    o.slots_by_order.reserve(gh.edge_count());
    for (Edge e : gh.edges()) o.slots_by_order.push_back(edge_index(e));
    std::sort(o.slots_by_order.begin(), o.slots_by_order.end(), [&h](int a, int b) {
        return lex_edge_less_h(h, edge_at(a), edge_at(b));
    });
    o.greater_mask.assign(gh.edge_slots(), 0);
    EdgeBits suffix = 0;
    for (int r = static_cast<int>(o.slots_by_order.size()) - 1; r >= 0; --r) {
        o.greater_mask[o.slots_by_order[r]] = suffix;
        suffix |= EdgeBits{1} << o.slots_by_order[r];
    }
    return o;
}

} // namespace

bool is_active_h(const LabeledGraph& g, const HeightVector& h, Edge e) {
    const LabeledGraph gh = build_gh(h);
    if (!gh.has_edge(e))
        throw std::invalid_argument("candidate edge does not belong to G_h");
    const HOrder o = h_order(h, gh);
    return connects(g, e.i, e.j, o.greater_mask[edge_index(e)]);
}

std::optional<Edge> least_active_edge_h(const LabeledGraph& g, const HeightVector& h) {
    const LabeledGraph gh = build_gh(h);
    const HOrder o = h_order(h, gh);
    for (int slot : o.slots_by_order) {
        const Edge e = edge_at(slot);
        if (connects(g, e.i, e.j, o.greater_mask[slot])) return e;
    }
    return std::nullopt;
}

LabeledGraph psi_h(const LabeledGraph& g, const HeightVector& h) {
    if (g.n_vertices() != h.n_vertices())
        throw std::invalid_argument("psi_h: graph and height vector sizes differ");
    const LabeledGraph gh = build_gh(h);
    if ((g.bits() & ~gh.bits()) != 0)
        throw std::invalid_argument("psi_h requires a subgraph of G_h");
    require_connected(g, "psi_h");
    const auto e = least_active_edge_h(g, h);
    return e ? toggle_edge(g, *e) : g;
}

} // namespace mayer
