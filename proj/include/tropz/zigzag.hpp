#pragma once

#include "real_count.hpp"

namespace tropz {

enum class TailType : std::uint8_t {
    OddFork = 1,   // (o,o) fork, then o-cycles
    OddEnd = 2,    // 2o end, then o-cycles
    EvenFork = 3,  // (e,e) fork
    EvenEnd = 4,   // single 2e end
};

struct Tail {
    TailType type;
    bool inward;
    int cycles = 0;
    int attach_vertex = -1;
    std::vector<int> edges;
    std::vector<int> vertices;  // interior vertices, not in S
};

struct ZigzagWitness {
    std::vector<int> s_edges;
    std::vector<int> s_vertices;
    std::vector<Tail> tails;
    bool odd = true;  // parity of the real multiplicity (m = 0 when odd)
};

namespace detail {

// Walk from even edge f into vertex v, absorbing symmetric cycles of weight w(f)/2 that
// belong to sym2. Returns false if the walk hits something no tail can contain.
inline bool walk_tail(const TropicalCover& c, const SymmetryReport& r, const std::vector<int>& sym2_of_edge,
                      int f, bool inward, Tail& tail) {
    const auto& E = c.edges;
    while (true) {
        int v = inward ? E[f].head : E[f].tail;
        if (v == kLeaf) return false;
        auto next = inward ? c.out_edges(v) : c.in_edges(v);
        if (next.size() != 2) {
            tail.attach_vertex = v;
            return true;
        }
        int k = sym2_of_edge[next[0]];
        if (k < 0 || k != sym2_of_edge[next[1]] || !r.sym[k].is_cycle()) {
            tail.attach_vertex = v;
            return true;
        }
        if (r.sym[k].weight % 2 == 0) return false;  // even sym2 cycle: neither S nor a tail
        int w = inward ? r.sym[k].v : r.sym[k].u;
        auto exits = inward ? c.out_edges(w) : c.in_edges(w);
        if (exits.size() != 1) return false;
        tail.vertices.push_back(v);
        tail.vertices.push_back(w);
        tail.edges.push_back(next[0]);
        tail.edges.push_back(next[1]);
        tail.edges.push_back(exits[0]);
        ++tail.cycles;
        f = exits[0];
    }
}

}  // namespace detail

inline std::optional<ZigzagWitness> is_generalized_zigzag(const TropicalCover& c, const SymmetryReport& r) {
    const auto& E = c.edges;
    std::vector<int> sym2_of_edge(E.size(), -1);
    for (int k : r.sym2) sym2_of_edge[r.sym[k].e1] = sym2_of_edge[r.sym[k].e2] = k;
    std::vector<bool> in_tail(E.size(), false), v_tail(static_cast<std::size_t>(c.nv), false);
    ZigzagWitness wit;

    auto commit = [&](Tail&& t) -> bool {
        for (int e : t.edges) {
            if (in_tail[e]) return false;
            in_tail[e] = true;
        }
        for (int v : t.vertices) {
            if (v_tail[v]) return false;
            v_tail[v] = true;
        }
        wit.tails.push_back(std::move(t));
        return true;
    };

    // forks in sym2 start tails with their stem
    for (int k : r.sym2) {
        const auto& s = r.sym[k];
        if (s.is_cycle()) continue;
        bool inward = s.kind == SymKind::ForkIn;
        auto stem = inward ? c.out_edges(s.u) : c.in_edges(s.u);
        if (stem.size() != 1) return std::nullopt;
        Tail t{s.weight % 2 ? TailType::OddFork : TailType::EvenFork, inward};
        t.edges = {s.e1, s.e2, stem[0]};
        t.vertices = {s.u};
        if (!detail::walk_tail(c, r, sym2_of_edge, stem[0], inward, t)) return std::nullopt;
        if (!commit(std::move(t))) return std::nullopt;
    }
    // remaining even ends
    for (std::size_t e = 0; e < E.size(); ++e) {
        if (!E[e].is_end() || !E[e].even() || in_tail[e]) continue;
        bool inward = E[e].tail == kLeaf;
        Tail t{E[e].weight % 4 == 2 ? TailType::OddEnd : TailType::EvenEnd, inward};
        t.edges = {static_cast<int>(e)};
        if (!detail::walk_tail(c, r, sym2_of_edge, static_cast<int>(e), inward, t)) return std::nullopt;
        if (!commit(std::move(t))) return std::nullopt;
    }

    auto ann = c.contractible_annotation();
    for (std::size_t e = 0; e < E.size(); ++e) {
        if (in_tail[e]) continue;
        if (E[e].even() && ann[e] < 0) return std::nullopt;  // even edge left in S
        if (sym2_of_edge[e] >= 0) return std::nullopt;        // S avoids sym2
        wit.s_edges.push_back(static_cast<int>(e));
    }
    for (int v = 0; v < c.nv; ++v)
        if (!v_tail[v]) wit.s_vertices.push_back(v);
    if (wit.s_vertices.empty()) return std::nullopt;

    // S connected through its inner edges
    std::vector<int> parent(static_cast<std::size_t>(c.nv));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e : wit.s_edges)
        if (E[e].inner()) {
            if (v_tail[E[e].tail] || v_tail[E[e].head]) return std::nullopt;
            parent[find(E[e].tail)] = find(E[e].head);
        }
    int root = find(wit.s_vertices[0]);
    for (int v : wit.s_vertices)
        if (find(v) != root) return std::nullopt;

    for (int k : r.sym3)
        if (r.sym[k].is_cycle()) wit.odd = false;
    return wit;
}

inline std::optional<ZigzagWitness> is_generalized_zigzag(const TropicalCover& c) {
    return is_generalized_zigzag(c, classify_symmetric(c));
}

inline void check_standing_assumptions(const Partition& lam, const Partition& mu, int s, int t) {
    if (2 * s + t == 0) throw DomainError("standing assumption 2s+t>0 fails");
    if (is_excluded_pair(lam, mu)) throw DomainError("standing assumption: excluded pair");
}

inline bool has_even_fork_tail(const ZigzagWitness& w) {
    return std::any_of(w.tails.begin(), w.tails.end(), [](const Tail& t) { return t.type == TailType::EvenFork; });
}

// With admit_even_fork_tails = false, covers carrying an (e,e) fork tail are left out; this is
// the narrower tail set under which each zigzag cover has exactly one compatible colouring.
inline BigInt zigzag_number_of(const std::vector<TropicalCover>& covers, bool admit_even_fork_tails = true) {
    BigInt z = 0;
    for (const auto& c : covers)
        if (auto w = is_generalized_zigzag(c); w && (admit_even_fork_tails || !has_even_fork_tail(*w)))
            z += w->odd ? 1 : 2;
    return z;
}

inline BigInt zigzag_number(int g, const Partition& lam, const Partition& mu, const std::vector<Ram>& order,
                            const EnumOptions& opt = {}) {
    Distribution d = distribution_from_order(order);
    check_standing_assumptions(lam, mu, d.s(), d.t());
    return zigzag_number_of(enumerate_covers(g, lam, mu, d, opt));
}

struct ProperMixWitness {
    int characteristic_edge;
    int v1, v1_prime, v2;
};

// Properly mixed: trivial distribution, an odd edge of S separating pair vertices from point
// vertices, leaving the second vertex of the first pair and entering the last point.
inline std::optional<ProperMixWitness> is_properly_mixed(const TropicalCover& c) {
    int s = c.dist.s(), t = c.dist.t();
    if (s == 0 || t == 0) return std::nullopt;
    for (int i = 0; i < s; ++i)
        if (c.dist.events[i].kind != EventKind::Pair) return std::nullopt;
    auto r = classify_symmetric(c);
    auto wit = is_generalized_zigzag(c, r);
    if (!wit) return std::nullopt;
    const auto& E = c.edges;
    int v1p = 0, v1 = 1, v2 = c.nv - 1;
    int pair_side = 2 * s;
    // (3): picture (xii) at (v1', v1) with two equal odd incoming ends
    PairMatch m = match_pair(c, v1p, v1);
    if (m.picture != 12) return std::nullopt;
    auto in1p = c.in_edges(v1p), in1 = c.in_edges(v1);
    int l1 = in1p[0];
    int l2 = in1[0] == m.contractible ? in1[1] : in1[0];
    if (E[l1].tail != kLeaf || E[l2].tail != kLeaf || E[l1].weight != E[l2].weight || E[l1].weight % 2 == 0)
        return std::nullopt;
    // (2)+(1): the edge leaving v1 ends at v2 and separates the sides
    auto out1 = c.out_edges(v1);
    if (out1.size() != 1) return std::nullopt;
    int ec = out1[0];
    if (E[ec].head != v2 || E[ec].weight % 2 == 0) return std::nullopt;
    if (std::find(wit->s_edges.begin(), wit->s_edges.end(), ec) == wit->s_edges.end()) return std::nullopt;
    for (std::size_t e = 0; e < E.size(); ++e) {
        if (static_cast<int>(e) == ec || !E[e].inner()) continue;
        if ((E[e].tail < pair_side) != (E[e].head < pair_side)) return std::nullopt;
    }
    // both sides connected once ec is removed
    std::vector<int> parent(static_cast<std::size_t>(c.nv));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t e = 0; e < E.size(); ++e)
        if (static_cast<int>(e) != ec && E[e].inner()) parent[find(E[e].tail)] = find(E[e].head);
    for (int v = 0; v < c.nv; ++v)
        if (find(v) != find(v < pair_side ? 0 : v2)) return std::nullopt;
    // (4): v2 has two odd incoming edges
    auto in2 = c.in_edges(v2);
    if (in2.size() != 2 || E[in2[0]].weight % 2 == 0 || E[in2[1]].weight % 2 == 0) return std::nullopt;
    return ProperMixWitness{ec, v1, v1p, v2};
}

inline std::vector<TropicalCover> properly_mixed_covers(int g, const Partition& lam, const Partition& mu, int s, int t,
                                                        const EnumOptions& opt = {}) {
    check_standing_assumptions(lam, mu, s, t);
    std::vector<TropicalCover> out;
    if (s == 0 || t == 0) return out;
    for (auto& c : enumerate_covers(g, lam, mu, trivial_distribution(s, t), opt))
        if (is_properly_mixed(c)) out.push_back(std::move(c));
    return out;
}

inline BigInt proper_zigzag_number(int g, const Partition& lam, const Partition& mu, int s, int t,
                                   const EnumOptions& opt = {}) {
    return BigInt(properly_mixed_covers(g, lam, mu, s, t, opt).size());
}

}  // namespace tropz
