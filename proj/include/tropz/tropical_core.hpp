#pragma once

#include <array>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "factorization.hpp"
#include "partitions.hpp"

namespace tropz {

constexpr int kLeaf = -1;  // endpoint of an end: -inf as tail, +inf as head

enum class Sign : std::uint8_t { Plus, Minus };

inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

enum class EventKind : std::uint8_t { Pair, Point };

struct Event {
    EventKind kind;
    std::optional<Sign> sign;
};

// Ordered events; a pair occupies two consecutive slots, a point one.
struct Distribution {
    std::vector<Event> events;

    int s() const {
        return static_cast<int>(std::count_if(events.begin(), events.end(),
                                              [](const Event& e) { return e.kind == EventKind::Pair; }));
    }
    int t() const { return static_cast<int>(events.size()) - s(); }
    int slots() const { return 2 * s() + t(); }

    // first slot of each event
    std::vector<int> event_slots() const {
        std::vector<int> out;
        int slot = 0;
        for (const auto& e : events) {
            out.push_back(slot);
            slot += e.kind == EventKind::Pair ? 2 : 1;
        }
        return out;
    }

    std::vector<std::pair<int, int>> pair_slots() const {
        std::vector<std::pair<int, int>> out;
        auto starts = event_slots();
        for (std::size_t i = 0; i < events.size(); ++i)
            if (events[i].kind == EventKind::Pair) out.emplace_back(starts[i], starts[i] + 1);
        return out;
    }

    std::string str() const {
        std::string out;
        for (const auto& e : events) {
            out += e.kind == EventKind::Pair ? 'P' : 'p';
            if (e.sign) out += sign_char(*e.sign);
        }
        return out;
    }
};

struct Edge {
    int tail;  // vertex slot or kLeaf
    int head;  // vertex slot or kLeaf
    int weight;

    bool is_end() const { return tail == kLeaf || head == kLeaf; }
    bool inner() const { return !is_end(); }
    bool even() const { return weight % 2 == 0; }
    auto operator<=>(const Edge&) const = default;
};

// Inner vertices are identified with their slots 0..nv-1 in base order.
struct TropicalCover {
    int nv = 0;
    std::vector<Edge> edges;
    Distribution dist;
    int g = 0;
    Partition lambda, mu;
    std::string label;  // construction metadata, e.g. a proof case

    // edges between the two vertices of a pair
    std::vector<int> contractible_edges() const {
        std::vector<int> out;
        for (auto [a, b] : dist.pair_slots())
            for (std::size_t i = 0; i < edges.size(); ++i)
                if (edges[i].tail == a && edges[i].head == b) out.push_back(static_cast<int>(i));
        std::sort(out.begin(), out.end());
        return out;
    }

    // pair index of an edge, or -1
    std::vector<int> contractible_annotation() const {
        std::vector<int> ann(edges.size(), -1);
        auto ps = dist.pair_slots();
        for (std::size_t p = 0; p < ps.size(); ++p)
            for (std::size_t i = 0; i < edges.size(); ++i)
                if (edges[i].tail == ps[p].first && edges[i].head == ps[p].second)
                    ann[i] = static_cast<int>(p);
        return ann;
    }

    std::vector<std::vector<int>> incidence() const {
        std::vector<std::vector<int>> inc(static_cast<std::size_t>(nv));
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (edges[i].tail != kLeaf) inc[edges[i].tail].push_back(static_cast<int>(i));
            if (edges[i].head != kLeaf) inc[edges[i].head].push_back(static_cast<int>(i));
        }
        return inc;
    }

    std::vector<int> in_edges(int v) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].head == v) out.push_back(static_cast<int>(i));
        return out;
    }
    std::vector<int> out_edges(int v) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].tail == v) out.push_back(static_cast<int>(i));
        return out;
    }

    Partition inward_ends() const {
        std::vector<int> w;
        for (const auto& e : edges)
            if (e.tail == kLeaf) w.push_back(e.weight);
        return Partition(w);
    }
    Partition outward_ends() const {
        std::vector<int> w;
        for (const auto& e : edges)
            if (e.head == kLeaf) w.push_back(e.weight);
        return Partition(w);
    }
    int inner_edge_count() const {
        return static_cast<int>(std::count_if(edges.begin(), edges.end(), [](const Edge& e) { return e.inner(); }));
    }
};

inline bool check_balancing(const TropicalCover& c) {
    std::vector<long> in(static_cast<std::size_t>(c.nv), 0), out(static_cast<std::size_t>(c.nv), 0);
    for (const auto& e : c.edges) {
        if (e.head != kLeaf) in[e.head] += e.weight;
        if (e.tail != kLeaf) out[e.tail] += e.weight;
    }
    return in == out;
}

inline bool is_trivalent(const TropicalCover& c) {
    auto inc = c.incidence();
    for (const auto& v : inc)
        if (v.size() != 3) return false;
    return true;
}

// Every inner edge goes forward in the base order, so the order extends the orientation.
inline bool order_extends_orientation(const TropicalCover& c) {
    for (const auto& e : c.edges)
        if (e.inner() && !(e.tail < e.head)) return false;
    return true;
}

inline bool is_connected(const TropicalCover& c) {
    if (c.nv == 0) return c.edges.size() == 1;
    std::vector<int> parent(static_cast<std::size_t>(c.nv));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = c.nv;
    for (const auto& e : c.edges)
        if (e.inner()) {
            int a = find(e.tail), b = find(e.head);
            if (a != b) parent[a] = b, --comps;
        }
    return comps == 1;
}

inline int genus(const TropicalCover& c) {
    if (!is_connected(c)) throw DomainError("genus of a disconnected graph");
    if (c.nv == 0) return 0;
    return c.inner_edge_count() - c.nv + 1;
}

// Weight over each gap between consecutive events; all must agree.
inline int degree(const TropicalCover& c) {
    int result = -1;
    for (int gap = 0; gap <= c.nv; ++gap) {
        int sum = 0;
        for (const auto& e : c.edges) {
            int lo = e.tail == kLeaf ? -1 : e.tail;
            int hi = e.head == kLeaf ? c.nv : e.head;
            if (lo < gap && gap <= hi) sum += e.weight;
        }
        if (result >= 0 && sum != result) throw InvariantError("inconsistent cross-section weights");
        result = sum;
    }
    return result;
}

// Full validity stack for a finished cover.
inline std::string validation_error(const TropicalCover& c) {
    for (const auto& e : c.edges)
        if (e.weight < 1) return "non-positive weight";
    if (c.nv != c.dist.slots()) return "vertex count does not match distribution";
    if (!is_trivalent(c)) return "inner vertex not trivalent";
    if (!order_extends_orientation(c)) return "order does not extend orientation";
    if (!check_balancing(c)) return "unbalanced";
    if (!is_connected(c)) return "disconnected";
    if (genus(c) != c.g) return "genus mismatch";
    if (c.inward_ends() != c.lambda) return "inward ends do not form lambda";
    if (c.outward_ends() != c.mu) return "outward ends do not form mu";
    try {
        if (degree(c) != c.lambda.size()) return "degree mismatch";
    } catch (const InvariantError& e) {
        return e.what();
    }
    return {};
}

enum class SymKind : std::uint8_t { Cycle, ForkIn, ForkOut };

struct SymStruct {
    SymKind kind;
    int e1, e2;  // edge indices, e1 < e2
    int weight;
    int u, v;  // cycle: tail and head vertex; fork: both the fork vertex

    bool is_cycle() const { return kind == SymKind::Cycle; }
    auto operator<=>(const SymStruct&) const = default;
};

struct SymmetryReport {
    std::vector<SymStruct> sym;
    std::vector<int> symc;    // indices into sym
    std::vector<int> sym2;    // non-contractible, not adjacent to a contractible edge
    std::vector<int> sym3;    // non-contractible, adjacent to a contractible edge
    std::vector<int> symc_c;  // contractible symmetric cycles
    std::vector<std::pair<int, int>> nsym_c;  // non-symmetric cycles of two even contractible edges
    std::vector<int> e_c_set;                 // even contractible edges
    std::vector<int> contractible;            // edge indices
    std::vector<int> contractible_pair;       // pair index per entry of `contractible`

    bool in(const std::vector<int>& set, int i) const {
        return std::find(set.begin(), set.end(), i) != set.end();
    }
};

inline SymmetryReport classify_symmetric(const TropicalCover& c) {
    SymmetryReport r;
    auto ann = c.contractible_annotation();
    for (std::size_t i = 0; i < ann.size(); ++i)
        if (ann[i] >= 0) {
            r.contractible.push_back(static_cast<int>(i));
            r.contractible_pair.push_back(ann[i]);
            if (c.edges[i].even()) r.e_c_set.push_back(static_cast<int>(i));
        }
    std::vector<bool> touches_contractible(static_cast<std::size_t>(c.nv), false);
    for (int i : r.contractible) {
        touches_contractible[c.edges[i].tail] = true;
        touches_contractible[c.edges[i].head] = true;
    }
    const auto& E = c.edges;
    for (std::size_t i = 0; i < E.size(); ++i)
        for (std::size_t j = i + 1; j < E.size(); ++j) {
            const Edge &a = E[i], &b = E[j];
            int ii = static_cast<int>(i), jj = static_cast<int>(j);
            if (a.inner() && b.inner() && a.tail == b.tail && a.head == b.head) {
                bool contr = ann[i] >= 0 && ann[j] >= 0;
                if (a.weight == b.weight) {
                    r.sym.push_back({SymKind::Cycle, ii, jj, a.weight, a.tail, a.head});
                } else if (contr && a.even() && b.even()) {
                    r.nsym_c.emplace_back(ii, jj);
                }
            } else if (a.tail == kLeaf && b.tail == kLeaf && a.head == b.head && a.weight == b.weight) {
                r.sym.push_back({SymKind::ForkIn, ii, jj, a.weight, a.head, a.head});
            } else if (a.head == kLeaf && b.head == kLeaf && a.tail == b.tail && a.weight == b.weight) {
                r.sym.push_back({SymKind::ForkOut, ii, jj, a.weight, a.tail, a.tail});
            }
        }
    std::sort(r.sym.begin(), r.sym.end());
    for (std::size_t k = 0; k < r.sym.size(); ++k) {
        const auto& s = r.sym[k];
        int kk = static_cast<int>(k);
        if (s.is_cycle()) r.symc.push_back(kk);
        bool contr = ann[s.e1] >= 0 || ann[s.e2] >= 0;
        if (contr) {
            r.symc_c.push_back(kk);
        } else if (touches_contractible[s.u] || touches_contractible[s.v]) {
            r.sym3.push_back(kk);
        } else {
            r.sym2.push_back(kk);
        }
    }
    return r;
}

// Ends at a common vertex are anonymous, so the sorted edge list is a complete invariant
// of a cover up to position-preserving isomorphism.
using CanonicalKey = std::string;

inline CanonicalKey canonical_key(const TropicalCover& c) {
    std::vector<Edge> e = c.edges;
    std::sort(e.begin(), e.end());
    std::ostringstream os;
    os << c.nv << '|';
    for (const auto& ev : c.dist.events) os << (ev.kind == EventKind::Pair ? 'P' : 'p');
    os << '|';
    for (const auto& x : e) os << x.tail << ',' << x.head << ',' << x.weight << ';';
    return os.str();
}

// Relabels edges into canonical order; keeps everything else.
inline TropicalCover canonicalized(TropicalCover c) {
    std::sort(c.edges.begin(), c.edges.end());
    return c;
}

}  // namespace tropz
