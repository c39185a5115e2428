#pragma once

#include "zigzag.hpp"

namespace tropz {

namespace build {

// Graph under construction: vertices are ids, events list ids in base order.
struct Graph {
    int nv = 0;
    std::vector<Edge> edges;
    std::vector<bool> dead;
    std::vector<std::vector<int>> events;  // one id for a point, two for a pair

    int vertex() { return nv++; }
    int edge(int tail, int head, int weight) {
        edges.push_back({tail, head, weight});
        dead.push_back(false);
        return static_cast<int>(edges.size()) - 1;
    }
    void point(int v) { events.push_back({v}); }
    void pair(int a, int b) { events.push_back({a, b}); }

    // Joins an outward end into an inward end of the same weight; returns the new inner edge.
    int join(int out_end, int in_end) {
        Edge& a = edges[out_end];
        Edge& b = edges[in_end];
        if (a.head != kLeaf || b.tail != kLeaf) throw InvariantError("join needs an outward and an inward end");
        if (a.weight != b.weight) throw InvariantError("join of ends with different weights");
        a.head = b.head;
        dead[in_end] = true;
        return out_end;
    }

    struct Offsets {
        int vertex, edge;
    };

    // Copies a realized cover in, events appended after the current ones.
    Offsets append(const TropicalCover& c) {
        Offsets off{nv, static_cast<int>(edges.size())};
        nv += c.nv;
        for (const auto& e : c.edges)
            edge(e.tail == kLeaf ? kLeaf : e.tail + off.vertex, e.head == kLeaf ? kLeaf : e.head + off.vertex,
                 e.weight);
        int slot = 0;
        for (const auto& ev : c.dist.events) {
            if (ev.kind == EventKind::Pair) {
                pair(slot + off.vertex, slot + 1 + off.vertex);
                slot += 2;
            } else {
                point(slot + off.vertex);
                slot += 1;
            }
        }
        return off;
    }
};

// Maps ids to slots in event order; edge i of the graph becomes edge edge_map[i] (or -1 if dead).
inline TropicalCover realize(const Graph& gr, std::string label, std::vector<int>* edge_map = nullptr) {
    std::vector<int> slot(static_cast<std::size_t>(gr.nv), -1);
    TropicalCover c;
    int next = 0;
    for (const auto& ev : gr.events) {
        for (int v : ev) {
            if (v < 0 || v >= gr.nv || slot[v] >= 0) throw InvariantError("vertex placed twice or out of range");
            slot[v] = next++;
        }
        c.dist.events.push_back({ev.size() == 2 ? EventKind::Pair : EventKind::Point, std::nullopt});
    }
    c.nv = next;
    std::vector<int> map(gr.edges.size(), -1);
    std::vector<int> lam, mu;
    for (std::size_t i = 0; i < gr.edges.size(); ++i) {
        if (gr.dead[i]) continue;
        Edge e = gr.edges[i];
        auto place = [&](int v) {
            if (v == kLeaf) return kLeaf;
            if (slot[v] < 0) throw InvariantError("edge incident to an unplaced vertex");
            return slot[v];
        };
        e.tail = place(e.tail), e.head = place(e.head);
        if (e.tail == kLeaf) lam.push_back(e.weight);
        if (e.head == kLeaf) mu.push_back(e.weight);
        map[i] = static_cast<int>(c.edges.size());
        c.edges.push_back(e);
    }
    c.lambda = Partition(lam), c.mu = Partition(mu);
    if (!is_connected(c)) throw InvariantError("construction produced a disconnected graph");
    c.g = genus(c);
    c.label = std::move(label);
    if (auto err = validation_error(c); !err.empty()) throw InvariantError("construction invalid: " + err);
    if (!is_resolving(c)) throw InvariantError("construction has a pair outside the catalog");
    if (edge_map) *edge_map = std::move(map);
    return c;
}

inline Partition without(const Partition& p, const Partition& q) {
    std::vector<int> v(p.begin(), p.end());
    for (int x : q) {
        auto it = std::find(v.begin(), v.end(), x);
        if (it == v.end()) throw DomainError("partition does not contain " + std::to_string(x));
        v.erase(it);
    }
    return Partition(std::move(v));
}

inline Partition filter(const Partition& p, bool odd) {
    std::vector<int> v;
    for (int x : p)
        if ((x % 2 != 0) == odd) v.push_back(x);
    return Partition(std::move(v));
}

}  // namespace build

// Reverses the orientation and the base order; inward and outward ends trade places.
inline TropicalCover reversed(const TropicalCover& c) {
    TropicalCover r;
    r.nv = c.nv;
    auto flip = [&](int v) { return v == kLeaf ? kLeaf : c.nv - 1 - v; };
    for (const auto& e : c.edges) r.edges.push_back({flip(e.head), flip(e.tail), e.weight});
    r.dist.events.assign(c.dist.events.rbegin(), c.dist.events.rend());
    r.g = c.g, r.lambda = c.mu, r.mu = c.lambda, r.label = c.label;
    return r;
}

// Ends that qualify for gluing: in S, not in a symmetric fork.
inline std::vector<int> gluable_ends(const TropicalCover& c, bool inward, int weight) {
    auto r = classify_symmetric(c);
    auto wit = is_generalized_zigzag(c, r);
    std::vector<int> out;
    if (!wit) return out;
    std::vector<bool> in_fork(c.edges.size(), false);
    for (const auto& s : r.sym)
        if (!s.is_cycle()) in_fork[s.e1] = in_fork[s.e2] = true;
    for (int e : wit->s_edges) {
        const Edge& x = c.edges[e];
        if (x.weight != weight || in_fork[e]) continue;
        if (inward ? x.tail == kLeaf : x.head == kLeaf) out.push_back(e);
    }
    return out;
}

struct GlueSpec {
    TropicalCover left;
    int left_end;  // outward end of odd weight
    TropicalCover right;
    int right_end;  // inward end of the same weight
};

inline TropicalCover glue(const GlueSpec& spec) {
    const auto& L = spec.left;
    const auto& R = spec.right;
    if (spec.left_end < 0 || spec.left_end >= static_cast<int>(L.edges.size()) || spec.right_end < 0 ||
        spec.right_end >= static_cast<int>(R.edges.size()))
        throw DomainError("glue: end index out of range");
    const Edge& a = L.edges[spec.left_end];
    const Edge& b = R.edges[spec.right_end];
    if (a.head != kLeaf) throw DomainError("glue: left end is not an outward end");
    if (b.tail != kLeaf) throw DomainError("glue: right end is not an inward end");
    if (a.weight != b.weight) throw DomainError("glue: end weights differ");
    if (a.weight % 2 == 0) throw DomainError("glue: end weight is even");
    if (!is_generalized_zigzag(L) || !is_generalized_zigzag(R)) throw DomainError("glue: input is not a zigzag cover");
    auto ok = [](const std::vector<int>& v, int e) { return std::find(v.begin(), v.end(), e) != v.end(); };
    if (!ok(gluable_ends(L, false, a.weight), spec.left_end))
        throw DomainError("glue: left end lies in a symmetric fork or outside S");
    if (!ok(gluable_ends(R, true, b.weight), spec.right_end))
        throw DomainError("glue: right end lies in a symmetric fork or outside S");
    build::Graph gr;
    auto lo = gr.append(L);
    auto ro = gr.append(R);
    gr.join(lo.edge + spec.left_end, ro.edge + spec.right_end);
    std::string label = L.label.empty() && R.label.empty() ? "" : "glue(" + L.label + "," + R.label + ")";
    TropicalCover out = build::realize(gr, label);
    if (!is_generalized_zigzag(out)) throw InvariantError("glued cover is not a zigzag cover");
    return out;
}

// Glue along the first qualifying ends of the given weight.
inline TropicalCover glue_first(const TropicalCover& left, const TropicalCover& right, int weight) {
    auto lo = gluable_ends(left, false, weight);
    auto ri = gluable_ends(right, true, weight);
    if (lo.empty() || ri.empty()) throw DomainError("glue: no qualifying end of weight " + std::to_string(weight));
    return glue({left, lo.front(), right, ri.front()});
}

// ---------------------------------------------------------------------------------------------
// Non-vanishing cover

struct NonvanishingCheck {
    bool ok;
    std::string failed;  // name of the first failed hypothesis
};

inline NonvanishingCheck nonvanishing_hypotheses(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) return {false, "|lambda| = |mu|"};
    auto tl = tail_decompose(lam), tm = tail_decompose(mu);
    if ((lam.length() - mu.length()) % 2 != 0) return {false, "l(lambda) = l(mu) mod 2"};
    if (tl.e.length() != 0 || tm.e.length() != 0) return {false, "l(lambda_e) = l(mu_e) = 0"};
    if (std::min(tl.o.length(), tm.o.length()) <= 0) return {false, "min(l(lambda_o), l(mu_o)) > 0"};
    if (std::abs(tl.o.length() - tm.o.length()) >= 2 * std::min(tl.oo.length(), tm.oo.length()))
        return {false, "|l(lambda_o) - l(mu_o)| < 2 min(l(lambda_oo), l(mu_oo))"};
    return {true, {}};
}

namespace detail {

// Case a >= 0: k = l(lambda_o) strings, a pairs of mu_oo moved into mu_o.
inline TropicalCover nonvanishing_forward(int g, const Partition& lam, const Partition& mu, const std::string& label) {
    auto tl = tail_decompose(lam), tm = tail_decompose(mu);
    int a = (tl.o.length() - tm.o.length()) / 2;
    std::vector<int> mu_oo(tm.oo.begin(), tm.oo.end());  // non-increasing
    std::vector<int> mu_o(tm.o.begin(), tm.o.end());
    for (int i = 0; i < a; ++i) mu_o.push_back(mu_oo[i]), mu_o.push_back(mu_oo[i]);
    mu_oo.erase(mu_oo.begin(), mu_oo.begin() + a);
    std::vector<int> lam_o(tl.o.begin(), tl.o.end());
    std::sort(lam_o.begin(), lam_o.end());  // strictly increasing
    std::sort(mu_o.begin(), mu_o.end());    // non-decreasing
    int k = static_cast<int>(lam_o.size());
    if (static_cast<int>(mu_o.size()) != k) throw InvariantError("string count mismatch");

    build::Graph gr;
    int cur_tail = kLeaf, cur_w = lam_o[k - 1];
    auto open = [&](int head) { return gr.edge(cur_tail, head, cur_w); };

    // S_1: inward fork tails, contractible stems
    std::vector<int> in_forks(tl.oo.begin(), tl.oo.end());
    in_forks.insert(in_forks.end(), tl.ee.begin(), tl.ee.end());
    for (int w : in_forks) {
        int u = gr.vertex(), x = gr.vertex();
        gr.edge(kLeaf, u, w), gr.edge(kLeaf, u, w);
        gr.edge(u, x, 2 * w);
        open(x);
        cur_tail = x, cur_w += 2 * w;
        gr.pair(u, x);
    }
    // g contractible circles on an odd string edge
    for (int i = 0; i < g; ++i) {
        if (cur_w < 3) throw InvariantError("circle needs an odd string edge of weight at least 3");
        int p = gr.vertex(), q = gr.vertex();
        open(p);
        gr.edge(p, q, 1), gr.edge(p, q, cur_w - 1);
        cur_tail = q;
        gr.pair(p, q);
    }
    // connecting contractible edges E_i
    int lam_prefix = 2 * (tl.oo.size() + tl.ee.size()) + lam_o[k - 1], mu_prefix = 0;
    for (int i = 1; i < k; ++i) {
        int v = gr.vertex(), vp = gr.vertex();
        open(v);
        mu_prefix += mu_o[i - 1];
        int ei = lam_prefix - mu_prefix;
        if (ei <= 0 || ei != cur_w - mu_o[i - 1])
            throw InvariantError("connecting edge E_" + std::to_string(i) + " has non-positive weight");
        gr.edge(v, kLeaf, mu_o[i - 1]);
        gr.edge(v, vp, ei);
        gr.edge(kLeaf, vp, lam_o[k - 1 - i]);
        lam_prefix += lam_o[k - 1 - i];
        cur_tail = vp, cur_w = ei + lam_o[k - 1 - i];
        gr.pair(v, vp);
    }
    // S_k: outward fork tails
    std::vector<int> out_forks(mu_oo.begin(), mu_oo.end());
    out_forks.insert(out_forks.end(), tm.ee.begin(), tm.ee.end());
    for (int w : out_forks) {
        int x = gr.vertex(), u = gr.vertex();
        open(x);
        gr.edge(x, u, 2 * w);
        gr.edge(u, kLeaf, w), gr.edge(u, kLeaf, w);
        cur_tail = x, cur_w -= 2 * w;
        if (cur_w <= 0) throw InvariantError("outward fork exhausts the last string");
        gr.pair(x, u);
    }
    if (cur_w != mu_o[k - 1]) throw InvariantError("last string does not end with the largest odd part");
    gr.edge(cur_tail, kLeaf, cur_w);
    return build::realize(gr, label);
}

}  // namespace detail

inline TropicalCover build_nonvanishing_cover(int g, const Partition& lam, const Partition& mu) {
    if (g < 0) throw DomainError("genus must be non-negative");
    auto chk = nonvanishing_hypotheses(lam, mu);
    if (!chk.ok) throw DomainError("non-vanishing hypothesis fails: " + chk.failed);
    int a = (tail_decompose(lam).o.length() - tail_decompose(mu).o.length()) / 2;
    TropicalCover c;
    if (a > 0) {
        c = detail::nonvanishing_forward(g, lam, mu, "nonvanishing:a>0");
    } else if (a == 0) {
        c = detail::nonvanishing_forward(g, lam, mu, "nonvanishing:a=0");
    } else {
        c = reversed(detail::nonvanishing_forward(g, mu, lam, "nonvanishing:a<0"));
    }
    if (!is_generalized_zigzag(c)) throw InvariantError("non-vanishing construction is not a zigzag cover");
    return c;
}

// ---------------------------------------------------------------------------------------------
// Permutation family

namespace detail {

struct LadderEnds {
    int e, e_bar;          // inward weight-1 ends
    int e_out, e_bar_out;  // outward weight-1 ends
};

// Block for (1^{r+2}) -> (1^{r+2}) with r+1 pairs: in-fork, r strings joined by contractible
// weight-2 edges, out-fork.
inline LadderEnds add_ladder(build::Graph& gr, int r) {
    LadderEnds ends{};
    int u0 = gr.vertex(), s = gr.vertex();
    gr.edge(kLeaf, u0, 1), gr.edge(kLeaf, u0, 1);
    gr.edge(u0, s, 2);
    ends.e = gr.edge(kLeaf, s, 1);
    gr.pair(u0, s);
    for (int j = 1; j <= r; ++j) {
        int t = gr.vertex();
        gr.edge(s, t, 3);
        int out = gr.edge(t, kLeaf, 1);
        if (j == 1) ends.e_out = out;
        if (j == r) ends.e_bar_out = out;
        int nx = gr.vertex();
        gr.edge(t, nx, 2);
        gr.pair(t, nx);
        if (j < r) {
            int in = gr.edge(kLeaf, nx, 1);
            if (j + 1 == r) ends.e_bar = in;
            s = nx;
        } else {
            gr.edge(nx, kLeaf, 1), gr.edge(nx, kLeaf, 1);
        }
    }
    return ends;
}

}  // namespace detail

inline int family_block_count(int m) { return (m - 1) / 3; }

// The member for permutation sigma (sigma[p] = block at position p, blocks numbered 0..n-1).
inline TropicalCover build_family_member(int m, const std::vector<int>& sigma) {
    if (m <= 3) throw DomainError("permutation family needs m > 3");
    int n = family_block_count(m);
    if (static_cast<int>(sigma.size()) != n) throw DomainError("permutation has the wrong length");
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int p = 0; p < n; ++p) {
        if (sigma[p] < 0 || sigma[p] >= n || pos[sigma[p]] >= 0) throw DomainError("not a permutation");
        pos[sigma[p]] = p;
    }
    int first_r = 2 + (m - 1) % 3;  // (1^4), (1^5) or (1^6) as first block
    build::Graph gr;
    std::vector<detail::LadderEnds> ends(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        int b = sigma[p];
        ends[b] = detail::add_ladder(gr, b == 0 ? first_r : 2);
    }
    std::string label = "family:m=" + std::to_string(m) + ":sigma=";
    for (int p = 0; p < n; ++p) label += std::to_string(sigma[p] + 1);
    for (int i = 0; i + 1 < n; ++i) {
        if (pos[i + 1] > pos[i]) {
            gr.join(ends[i].e_bar_out, ends[i + 1].e);  // surgery (1)
        } else {
            gr.join(ends[i + 1].e_out, ends[i].e_bar);  // surgery (2)
        }
    }
    TropicalCover c = build::realize(gr, label);
    if (!is_generalized_zigzag(c)) throw InvariantError("family member is not a zigzag cover");
    return c;
}

inline std::vector<TropicalCover> build_permutation_family(int m, int jobs = 1) {
    if (m <= 3) throw DomainError("permutation family needs m > 3");
    int n = family_block_count(m);
    if (n > 8) throw ResourceError("permutation family too large: n=" + std::to_string(n));
    std::vector<std::vector<int>> sigmas;
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    do sigmas.push_back(sigma);
    while (std::next_permutation(sigma.begin(), sigma.end()));
    std::vector<TropicalCover> out(sigmas.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex mu_err;
    auto work = [&] {
        try {
            for (std::size_t k; (k = next.fetch_add(1)) < sigmas.size();) out[k] = build_family_member(m, sigmas[k]);
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu_err);
            if (!err) err = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < std::max(1, jobs); ++j) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    return out;
}

// ---------------------------------------------------------------------------------------------
// Unmixed covers with (1,1)-tails

// Orders within each vertex class; empty vectors mean the identity.
struct UnmixedOrder {
    std::vector<int> in_forks, lefts, rights, out_forks;
    std::vector<int> cycle_sequence;  // tail index per cycle vertex, 2*cycles(tail) occurrences
};

inline std::vector<int> default_cycle_assignment(int m, int g) {
    if (m < 1 || g < 0) throw DomainError("need m >= 1 and g >= 0");
    std::vector<int> a(static_cast<std::size_t>(m), g / m);
    for (int j = 0; j < g % m; ++j) ++a[j];
    return a;
}

namespace detail {

inline std::vector<int> resolve_perm(const std::vector<int>& p, int n, const char* what) {
    if (p.empty()) {
        std::vector<int> id(static_cast<std::size_t>(n));
        std::iota(id.begin(), id.end(), 0);
        return id;
    }
    std::vector<int> s = p;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(s.size()) != n || s[i] != i) throw DomainError(std::string("invalid order for ") + what);
    return p;
}

// String of weight 1 alternating between left bends L_j (fed by an inward tail) and right bends
// R_j (feeding an outward tail). With two_out, both ends of the string are outward.
inline TropicalCover unmixed_cover(int m, int g, const std::vector<int>& assignment, const UnmixedOrder& ord,
                                   bool two_out, const std::string& label) {
    if (m < 1 || g < 0) throw DomainError("need m >= 1 and g >= 0");
    if (two_out && m < 2) throw DomainError("two outward ends need m >= 2");
    if (static_cast<int>(assignment.size()) != m) throw DomainError("cycle assignment has the wrong length");
    int q = g / m, r = g % m, high = 0, sum = 0;
    for (int c : assignment) {
        if (c != q && c != q + 1) throw DomainError("cycle assignment is not balanced");
        high += c == q + 1;
        sum += c;
    }
    if (sum != g || (r > 0 && high != r) || (r == 0 && high != 0)) throw DomainError("cycle assignment is not balanced");
    int nr = two_out ? m - 1 : m;
    auto pf = resolve_perm(ord.in_forks, m, "in-forks");
    auto pl = resolve_perm(ord.lefts, m, "left bends");
    auto pr = resolve_perm(ord.rights, nr, "right bends");
    auto po = resolve_perm(ord.out_forks, nr, "out-forks");
    std::vector<int> seq = ord.cycle_sequence;
    if (seq.empty())
        for (int j = 0; j < m; ++j) seq.insert(seq.end(), static_cast<std::size_t>(2 * assignment[j]), j);
    {
        std::vector<int> cnt(static_cast<std::size_t>(m), 0);
        for (int j : seq) {
            if (j < 0 || j >= m) throw DomainError("invalid cycle sequence");
            ++cnt[j];
        }
        for (int j = 0; j < m; ++j)
            if (cnt[j] != 2 * assignment[j]) throw DomainError("cycle sequence does not match the assignment");
    }

    build::Graph gr;
    std::vector<int> F(m), L(m), R(nr), O(nr);
    for (auto& v : F) v = gr.vertex();
    for (auto& v : L) v = gr.vertex();
    for (auto& v : R) v = gr.vertex();
    for (auto& v : O) v = gr.vertex();
    // tails: fork, cycles, bend
    std::vector<std::vector<int>> cyc(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < 2 * assignment[j]; ++i) cyc[j].push_back(gr.vertex());
    for (int j = 0; j < m; ++j) {
        gr.edge(kLeaf, F[j], 1), gr.edge(kLeaf, F[j], 1);
        int prev = F[j];
        for (std::size_t i = 0; i < cyc[j].size(); i += 2) {
            gr.edge(prev, cyc[j][i], 2);
            gr.edge(cyc[j][i], cyc[j][i + 1], 1), gr.edge(cyc[j][i], cyc[j][i + 1], 1);
            prev = cyc[j][i + 1];
        }
        gr.edge(prev, L[j], 2);
    }
    for (int j = 0; j < nr; ++j) {
        gr.edge(R[j], O[j], 2);
        gr.edge(O[j], kLeaf, 1), gr.edge(O[j], kLeaf, 1);
    }
    // string
    if (two_out) {
        gr.edge(L[0], kLeaf, 1);
        for (int j = 0; j < nr; ++j) gr.edge(L[j], R[j], 1), gr.edge(L[j + 1], R[j], 1);
        gr.edge(L[m - 1], kLeaf, 1);
    } else {
        gr.edge(kLeaf, R[0], 1);
        for (int j = 0; j < m; ++j) {
            gr.edge(L[j], R[j], 1);
            if (j + 1 < m)
                gr.edge(L[j], R[j + 1], 1);
            else
                gr.edge(L[j], kLeaf, 1);
        }
    }
    for (int j : pf) gr.point(F[j]);
    std::vector<std::size_t> next(static_cast<std::size_t>(m), 0);
    for (int j : seq) gr.point(cyc[j][next[j]++]);
    for (int j : pl) gr.point(L[j]);
    for (int j : pr) gr.point(R[j]);
    for (int j : po) gr.point(O[j]);
    TropicalCover c = build::realize(gr, label);
    if (!is_generalized_zigzag(c)) throw InvariantError("unmixed construction is not a zigzag cover");
    return c;
}

}  // namespace detail

// Zigzag cover of type (g, (1^{2m+1}), (1^{2m+1})) with 4m+2g points.
inline TropicalCover build_asymp2_cover(int m, int g, const std::vector<int>& cycle_assignment,
                                        const UnmixedOrder& order = {}) {
    return detail::unmixed_cover(m, g, cycle_assignment, order, false,
                                 "asymp2:m=" + std::to_string(m) + ":g=" + std::to_string(g));
}

// Zigzag cover of type (g, (1^{2m}), (1^{2m})) with 4m+2g-2 points whose string ends in two
// outward weight-1 ends.
inline TropicalCover build_two_out_cover(int m, int g, const UnmixedOrder& order = {}) {
    return detail::unmixed_cover(m, g, default_cycle_assignment(m, g), order, true,
                                 "twoout:m=" + std::to_string(m) + ":g=" + std::to_string(g));
}

namespace detail {

inline std::vector<std::vector<int>> all_perms(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Distinct sequences with the given multiplicities.
inline std::vector<std::vector<int>> all_shuffles(const std::vector<int>& mult) {
    std::vector<int> base;
    for (std::size_t j = 0; j < mult.size(); ++j) base.insert(base.end(), static_cast<std::size_t>(mult[j]), j);
    std::vector<std::vector<int>> out;
    do out.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
}

inline std::vector<UnmixedOrder> unmixed_orders(int m, int nr, const std::vector<int>& assignment, std::size_t limit) {
    std::vector<int> mult;
    for (int c : assignment) mult.push_back(2 * c);
    auto pm = all_perms(m), pn = all_perms(nr);
    auto sh = all_shuffles(mult);
    std::vector<UnmixedOrder> out;
    for (const auto& a : pm)
        for (const auto& b : pm)
            for (const auto& c : pn)
                for (const auto& d : pn)
                    for (const auto& s : sh) {
                        if (out.size() >= limit) return out;
                        out.push_back({a, b, c, d, s});
                    }
    return out;
}

}  // namespace detail

// All orders of the proof's vertex classes for the canonical cycle assignment, capped at limit.
inline std::vector<TropicalCover> build_asymp2_family(int m, int g, std::size_t limit = 100000) {
    auto assignment = default_cycle_assignment(m, g);
    std::vector<TropicalCover> out;
    for (const auto& o : detail::unmixed_orders(m, m, assignment, limit))
        out.push_back(build_asymp2_cover(m, g, assignment, o));
    return out;
}

inline std::vector<TropicalCover> build_two_out_family(int m, int g, std::size_t limit = 100000) {
    if (m < 2) throw DomainError("two outward ends need m >= 2");
    std::vector<TropicalCover> out;
    for (const auto& o : detail::unmixed_orders(m, m - 1, default_cycle_assignment(m, g), limit))
        out.push_back(build_two_out_cover(m, g, o));
    return out;
}

// ---------------------------------------------------------------------------------------------
// Wall-crossing map

inline std::vector<Ram> all_simple_first(int s, int t) {
    std::vector<Ram> v(static_cast<std::size_t>(t), Ram::Simple);
    v.insert(v.end(), static_cast<std::size_t>(s), Ram::Triple);
    return v;
}

inline TropicalCover wall_crossing_map(const TropicalCover& c, const std::vector<Ram>& lambda_order) {
    auto wit = is_properly_mixed(c);
    if (!wit) throw DomainError("wall-crossing map needs a properly mixed cover");
    int s = c.dist.s(), t = c.dist.t();
    int ns = static_cast<int>(std::count(lambda_order.begin(), lambda_order.end(), Ram::Triple));
    if (ns != s || static_cast<int>(lambda_order.size()) - ns != t)
        throw DomainError("arrangement does not match the cover's (s,t)");

    build::Graph gr;
    gr.append(c);
    std::vector<std::vector<int>> pairs, points;
    for (const auto& ev : gr.events) (ev.size() == 2 ? pairs : points).push_back(ev);
    gr.events.clear();

    if (lambda_order != all_simple_first(s, t)) {
        std::size_t ip = 0, it = 0;
        for (Ram r : lambda_order) gr.events.push_back(r == Ram::Triple ? pairs[ip++] : points[it++]);
        TropicalCover out = build::realize(gr, c.label.empty() ? "wallcross:reorder" : c.label + "|wallcross:reorder");
        if (!is_generalized_zigzag(out)) throw InvariantError("reordered cover is not a zigzag cover");
        return out;
    }

    // shrink (v1', v1, v2) and resolve with an inward tail at the front of the pairs
    const auto& E = c.edges;
    int v1p = wit->v1_prime, v1 = wit->v1, v2 = wit->v2, ec = wit->characteristic_edge;
    PairMatch pm = match_pair(c, v1p, v1);
    int e1 = pm.contractible;
    int l1 = c.in_edges(v1p)[0];
    auto in1 = c.in_edges(v1);
    int l2 = in1[0] == e1 ? in1[1] : in1[0];
    auto out1p = c.out_edges(v1p);
    int o1 = out1p[0] == e1 ? out1p[1] : out1p[0];
    auto in2 = c.in_edges(v2);
    int h = in2[0] == ec ? in2[1] : in2[0];
    int q = c.out_edges(v2)[0];
    int o = E[l1].weight;

    int T = gr.vertex(), A = gr.vertex(), B = gr.vertex();
    gr.edges[l1].head = T;
    gr.edges[l2].head = T;
    gr.edge(T, A, 2 * o);
    gr.edges[o1].tail = A;
    gr.edge(A, B, 2 * o - E[o1].weight);
    gr.edges[h].head = B;
    gr.edges[q].tail = B;
    gr.dead[e1] = gr.dead[ec] = true;

    for (const auto& p : points)
        if (p[0] != v2) gr.events.push_back(p);
    gr.point(T);
    gr.pair(A, B);
    for (std::size_t i = 1; i < pairs.size(); ++i) gr.events.push_back(pairs[i]);
    TropicalCover out = build::realize(gr, c.label.empty() ? "wallcross:resolve" : c.label + "|wallcross:resolve");
    if (out.g != c.g) throw InvariantError("wall-crossing changed the genus");
    if (match_pair(out, t, t + 1).picture != 7) throw InvariantError("resolved pair is not picture (vii)");
    if (!is_generalized_zigzag(out)) throw InvariantError("resolved cover is not a zigzag cover");
    return out;
}

// ---------------------------------------------------------------------------------------------
// Glued families for growing numbers of pairs

// (M) -> (1^M), all pairs: the string sheds (1,1)-forks through contractible stems.
inline TropicalCover build_splitting_chain(int M) {
    if (M < 1 || M % 2 == 0) throw DomainError("splitting chain needs an odd weight");
    if (M == 1) throw DomainError("splitting chain of weight 1 has no vertices");
    build::Graph gr;
    int tail = kLeaf, w = M;
    for (int j = 0; j < (M - 1) / 2; ++j) {
        int x = gr.vertex(), u = gr.vertex();
        gr.edge(tail, x, w);
        gr.edge(x, u, 2);
        gr.edge(u, kLeaf, 1), gr.edge(u, kLeaf, 1);
        gr.pair(x, u);
        tail = x, w -= 2;
    }
    gr.edge(tail, kLeaf, w);
    return build::realize(gr, "chain:M=" + std::to_string(M));
}

struct Asymp1Plan {
    int added_ones = 0;  // ones added to both sides before the non-vanishing cover
    int mu_max = 0;      // the odd end carried on to the splitting chain
    int n0 = 0;
};

inline Asymp1Plan asymp1_plan(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) throw DomainError("|lambda| != |mu|");
    if (!build::filter(lam, false).empty() || !build::filter(mu, false).empty())
        throw DomainError("growing-pairs family needs odd parts only");
    int limit = 2 * (lam.length() + mu.length()) + 8;
    for (int k = 0; k <= limit; ++k) {
        Partition L = extend_with_ones(lam, k), M = extend_with_ones(mu, k);
        if (!nonvanishing_hypotheses(L, M).ok) continue;
        TropicalCover c = build_nonvanishing_cover(0, L, M);
        int best = 0;
        for (const auto& e : c.edges)
            if (e.head == kLeaf && e.weight % 2 && e.weight > best && !gluable_ends(c, false, e.weight).empty())
                best = e.weight;
        if (best == 0) throw InvariantError("non-vanishing cover has no gluable outward end");
        return {k, best, k + best - 2};
    }
    throw DomainError("no number of added ones satisfies the non-vanishing hypotheses");
}

inline int n0_constant(const Partition& lam, const Partition& mu) { return asymp1_plan(lam, mu).n0; }

// Genus-g covers of type ((lam,1^h),(mu,1^h)) with pairs only, one per family permutation.
inline std::vector<TropicalCover> build_asymp1_family(int g, const Partition& lam, const Partition& mu, int h,
                                                      int jobs = 1) {
    Asymp1Plan plan = asymp1_plan(lam, mu);
    int m = h - plan.n0;
    if (m <= 3) throw DomainError("need h > n0 + 3 (n0 = " + std::to_string(plan.n0) + ")");
    TropicalCover phi1 = build_nonvanishing_cover(g, extend_with_ones(lam, plan.added_ones),
                                                  extend_with_ones(mu, plan.added_ones));
    TropicalCover head = phi1;
    std::optional<TropicalCover> phi4;
    if (plan.mu_max > 1) {
        TropicalCover phi2 = build_splitting_chain(plan.mu_max);
        head = glue_first(phi1, phi2, plan.mu_max);
        phi4 = reversed(phi2);
    }
    std::vector<TropicalCover> out;
    for (auto& phi3 : build_permutation_family(m, jobs)) {
        TropicalCover c = glue_first(head, phi3, 1);
        if (phi4) c = glue_first(c, *phi4, 1);
        c.label = "asymp1:n0=" + std::to_string(plan.n0) + ":" + phi3.label;
        out.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Properly mixed family

// N0 of the case with one odd part on each side; other cases are not realized.
inline std::optional<int> N0_constant(const Partition& lam, const Partition& mu) {
    auto tl = tail_decompose(lam), tm = tail_decompose(mu);
    if (tl.o.length() == 1 && tm.o.length() == 1) return (tm.o[0] + 1) / 2;
    return std::nullopt;
}

struct ProperChoice {
    int o = 0;  // odd part appearing at least twice in lambda, o != 1
    int e = 0;  // even part of mu with e >= 2o
    Partition lam_prime, mu_prime, lam_even, mu_even;
    int signed_2c = 0;  // |lam_e| + 2o - |mu_e|
    int c = 0;
    std::string sign_case;  // "positive", "zero", "negative"
};

inline ProperChoice proper_choice(const Partition& lam, const Partition& mu) {
    ProperChoice pc;
    int emax = 0;
    for (int x : mu)
        if (x % 2 == 0) emax = std::max(emax, x);
    for (int x : lam) {
        if (x % 2 == 0 || x == 1 || lam.multiplicity(x) < 2 || 2 * x > emax) continue;
        if (pc.o == 0 || x < pc.o) pc.o = x;
    }
    if (pc.o == 0) throw DomainError("needs an odd o != 1 twice in lambda and an even e >= 2o in mu");
    pc.e = emax;
    pc.lam_even = build::filter(lam, false);
    pc.mu_even = build::filter(mu, false);
    pc.lam_prime = build::without(build::filter(lam, true), Partition{pc.o, pc.o});
    pc.mu_prime = build::filter(mu, true);
    pc.signed_2c = pc.lam_even.size() + 2 * pc.o - pc.mu_even.size();
    pc.c = std::abs(pc.signed_2c) / 2;
    pc.sign_case = pc.signed_2c > 0 ? "positive" : pc.signed_2c == 0 ? "zero" : "negative";
    return pc;
}

inline int c_constant(const Partition& lam, const Partition& mu) { return proper_choice(lam, mu).c; }

// Inputs to the growing-pairs family used inside the properly mixed construction.
inline std::pair<Partition, Partition> proper_core_type(const ProperChoice& pc) {
    if (pc.signed_2c > 0) return {extend_with_ones(pc.lam_prime, 2 * pc.c), pc.mu_prime};
    return {pc.lam_prime, extend_with_ones(pc.mu_prime, 2 * pc.c)};
}

inline int c0_constant(const Partition& lam, const Partition& mu) {
    auto [l, m] = proper_core_type(proper_choice(lam, mu));
    return n0_constant(l, m) + 3;
}

namespace detail {

// (o,o) -> (2o-1, 1) as a single pair of picture (xii).
inline TropicalCover proper_head(int o) {
    build::Graph gr;
    int A = gr.vertex(), B = gr.vertex();
    gr.edge(kLeaf, A, o);
    gr.edge(A, kLeaf, 1);
    gr.edge(A, B, o - 1);
    gr.edge(kLeaf, B, o);
    gr.edge(B, kLeaf, 2 * o - 1);
    gr.pair(A, B);
    return build::realize(gr, "head:o=" + std::to_string(o));
}

// (lam_e, 2o-1, 1 [,1^{2c}]) -> (mu_e [,1^{2c}]) with points only; the last vertex merges the
// (2o-1)-end with the weight-1 string into e.
inline TropicalCover proper_tail(const ProperChoice& pc) {
    build::Graph gr;
    int tail = kLeaf, w = 1;
    auto step = [&](int v) { gr.edge(tail, v, w); tail = v; };
    for (int x : pc.lam_even) {
        int v = gr.vertex();
        step(v);
        gr.edge(kLeaf, v, x);
        w += x;
        gr.point(v);
    }
    if (pc.signed_2c < 0)
        for (int i = 0; i < pc.c; ++i) {
            int u = gr.vertex(), v = gr.vertex();
            gr.edge(kLeaf, u, 1), gr.edge(kLeaf, u, 1);
            gr.edge(u, v, 2);
            gr.point(u);
            step(v);
            w += 2;
            gr.point(v);
        }
    Partition rest = build::without(pc.mu_even, Partition{pc.e});
    for (int x : rest) {
        int v = gr.vertex();
        step(v);
        gr.edge(v, kLeaf, x);
        w -= x;
        gr.point(v);
    }
    if (pc.signed_2c > 0) {
        std::vector<int> forks;
        for (int i = 0; i < pc.c; ++i) {
            int v = gr.vertex(), u = gr.vertex();
            step(v);
            gr.edge(v, u, 2);
            gr.edge(u, kLeaf, 1), gr.edge(u, kLeaf, 1);
            w -= 2;
            gr.point(v);
            forks.push_back(u);
        }
        for (int u : forks) gr.point(u);
    }
    if (w < 1 || w % 2 == 0) throw InvariantError("weight-1 string lost positivity or parity");
    int v = gr.vertex();
    step(v);
    gr.edge(kLeaf, v, 2 * pc.o - 1);
    gr.edge(v, kLeaf, w + 2 * pc.o - 1);
    if (w + 2 * pc.o - 1 != pc.e) throw InvariantError("last vertex does not produce e");
    gr.point(v);
    return build::realize(gr, "tail:" + pc.sign_case);
}

}  // namespace detail

struct ProperFamily {
    ProperChoice choice;
    int n0 = 0;
    int h = 0, m = 0, g = 0;
    std::size_t core_count = 0, tail_count = 0;
    std::vector<TropicalCover> covers;
};

// Properly mixed covers of type (g, (lam,1^r), (mu,1^r)) built from a growing-pairs core, the
// (o,o) head and an unmixed (1^{2m}) tail, one per (core member, tail order).
inline ProperFamily build_proper_family(int g, const Partition& lam, const Partition& mu, int h, int m,
                                        std::size_t tail_limit = 64, int jobs = 1) {
    if (lam.size() != mu.size()) throw DomainError("|lambda| != |mu|");
    if (m <= 1) throw DomainError("needs m > 1");
    ProperFamily fam;
    fam.choice = proper_choice(lam, mu);
    fam.g = g, fam.h = h, fam.m = m;
    auto [cl, cm] = proper_core_type(fam.choice);
    fam.n0 = n0_constant(cl, cm);
    if (h <= fam.n0 + 3) throw DomainError("needs h > n0 + 3 (n0 = " + std::to_string(fam.n0) + ")");
    auto cores = build_asymp1_family(0, cl, cm, h, jobs);
    TropicalCover head = detail::proper_head(fam.choice.o);
    TropicalCover tail3 = detail::proper_tail(fam.choice);
    auto tails = build_two_out_family(m, g, tail_limit);
    fam.core_count = cores.size(), fam.tail_count = tails.size();
    int w = 2 * fam.choice.o - 1;
    std::vector<TropicalCover> left;
    for (const auto& core : cores) left.push_back(glue_first(head, core, 1));
    std::vector<TropicalCover> right;
    for (const auto& x : tails) right.push_back(glue_first(x, tail3, 1));
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j) {
            TropicalCover c = glue_first(left[i], right[j], w);
            c.label = "proper:" + fam.choice.sign_case + ":" + cores[i].label + ":" + tails[j].label;
            if (!is_properly_mixed(c)) throw InvariantError("glued cover is not properly mixed");
            fam.covers.push_back(std::move(c));
        }
    return fam;
}

}  // namespace tropz
