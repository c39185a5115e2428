#pragma once

#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "pair_catalog.hpp"
#include "tropical_core.hpp"

namespace tropz {

inline Distribution trivial_distribution(int s, int t) {
    Distribution d;
    for (int i = 0; i < s; ++i) d.events.push_back({EventKind::Pair, std::nullopt});
    for (int i = 0; i < t; ++i) d.events.push_back({EventKind::Point, std::nullopt});
    return d;
}

inline Distribution distribution_from_tuple(const std::vector<Ram>& neg, const std::vector<Ram>& pos) {
    Distribution d;
    auto add = [&](const std::vector<Ram>& v, Sign sg) {
        for (Ram r : v) d.events.push_back({r == Ram::Triple ? EventKind::Pair : EventKind::Point, sg});
    };
    add(neg, Sign::Minus);
    add(pos, Sign::Plus);
    return d;
}

inline Distribution distribution_from_order(const std::vector<Ram>& order) {
    Distribution d = distribution_from_tuple({}, order);
    for (auto& e : d.events) e.sign.reset();
    return d;
}

inline Distribution with_split(Distribution d, int split_index) {
    for (std::size_t i = 0; i < d.events.size(); ++i)
        d.events[i].sign = static_cast<int>(i) < split_index ? Sign::Minus : Sign::Plus;
    return d;
}

struct EnumOptions {
    int degree_max = 8;
    std::size_t max_covers = 20'000'000;
    int jobs = 1;
};

namespace sweep {

struct Active {
    int tail;    // origin slot or kLeaf
    int weight;
    int twin;    // >= 0: a k,k flag that must be consumed together with its twin

    auto operator<=>(const Active&) const = default;
};

struct State {
    std::vector<Edge> done;
    std::vector<Active> active;
    std::vector<int> comp;  // component id per active edge
    int comps = 0;

    void normalize() {
        std::vector<std::size_t> idx(active.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](auto i, auto j) {
            return std::tie(active[i], comp[i]) < std::tie(active[j], comp[j]);
        });
        std::vector<Active> a;
        std::vector<int> c;
        for (auto i : idx) a.push_back(active[i]), c.push_back(comp[i]);
        active = std::move(a), comp = std::move(c);
    }

    // remove active i (and j > i if given), returning their components
    void consume(int v, std::initializer_list<int> ids) {
        std::vector<int> sorted(ids);
        std::sort(sorted.rbegin(), sorted.rend());
        for (int i : sorted) {
            done.push_back({active[i].tail, v, active[i].weight});
            active.erase(active.begin() + i);
            comp.erase(comp.begin() + i);
        }
    }

    void merge_comps(int a, int b) {
        if (a == b) return;
        for (auto& c : comp)
            if (c == b) c = a;
        --comps;
    }

    void add(int tail, int weight, int cid, int twin = -1) {
        active.push_back({tail, weight, twin});
        comp.push_back(cid);
    }
};

// first index of each distinct active class
inline std::vector<int> class_reps(const State& s) {
    std::vector<int> reps;
    for (std::size_t i = 0; i < s.active.size(); ++i)
        if (i == 0 || !(s.active[i] == s.active[i - 1])) reps.push_back(static_cast<int>(i));
    return reps;
}

inline int class_count(const State& s, int rep) {
    int n = 0;
    for (std::size_t i = rep; i < s.active.size() && s.active[i] == s.active[rep]; ++i) ++n;
    return n;
}

struct Sweeper {
    const Distribution& dist;
    Partition mu;
    int nv;
    std::vector<int> starts;
    std::vector<int> remaining_cap;  // slots left from event i on
    std::vector<int> remaining_len;  // max change of active count from event i on
    std::size_t max_covers;
    std::function<void(std::vector<Edge>&&)> emit;
    std::atomic<std::size_t>* emitted;

    Sweeper(const Distribution& d, const Partition& m, std::size_t maxc,
            std::function<void(std::vector<Edge>&&)> e, std::atomic<std::size_t>* counter)
        : dist(d), mu(m), nv(d.slots()), starts(d.event_slots()), max_covers(maxc), emit(std::move(e)),
          emitted(counter) {
        std::size_t n = d.events.size();
        remaining_cap.assign(n + 1, 0);
        remaining_len.assign(n + 1, 0);
        for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
            bool pair = d.events[i].kind == EventKind::Pair;
            remaining_cap[i] = remaining_cap[i + 1] + (pair ? 2 : 1);
            remaining_len[i] = remaining_len[i + 1] + (pair ? 2 : 1);
        }
    }

    bool feasible(const State& s, std::size_t ev) const {
        if (s.comps - 1 > remaining_cap[ev]) return false;
        int diff = static_cast<int>(s.active.size()) - mu.length();
        return std::abs(diff) <= remaining_len[ev];
    }

    void finish(State& s) const {
        std::vector<int> w;
        for (const auto& a : s.active) w.push_back(a.weight);
        if (Partition(w) != mu || s.comps != 1) return;
        std::vector<Edge> edges = s.done;
        for (const auto& a : s.active) edges.push_back({a.tail, kLeaf, a.weight});
        if (emitted->fetch_add(1) >= max_covers)
            throw ResourceError("enumeration bound exceeded at frontier size " + std::to_string(s.active.size()));
        emit(std::move(edges));
    }

    void step(State s, std::size_t ev) const {
        s.normalize();
        if (!feasible(s, ev)) return;
        if (ev == dist.events.size()) {
            finish(s);
            return;
        }
        for_each_child(s, ev, [&](State&& child) { step(std::move(child), ev + 1); });
    }

    template <class F>
    void for_each_child(const State& s, std::size_t ev, F&& f) const {
        int v = starts[ev];
        auto reps = class_reps(s);
        const auto& A = s.active;
        if (dist.events[ev].kind == EventKind::Point) {
            // merges
            for (std::size_t p = 0; p < reps.size(); ++p)
                for (std::size_t q = p; q < reps.size(); ++q) {
                    int i = reps[p], j = reps[q];
                    if (p == q) {
                        if (class_count(s, i) < 2) continue;
                        j = i + 1;
                    }
                    if ((A[i].twin >= 0 || A[j].twin >= 0) && !(A[i] == A[j])) continue;
                    State c = s;
                    int w = A[i].weight + A[j].weight;
                    int ci = c.comp[i], cj = c.comp[j];
                    c.consume(v, {i, j});
                    c.merge_comps(ci, cj);
                    int cid = ci;
                    for (auto& x : c.comp)
                        if (x == cj) x = ci;
                    c.add(v, w, cid);
                    f(std::move(c));
                }
            // splits
            for (int i : reps) {
                if (A[i].twin >= 0) continue;
                for (int b = 1; 2 * b <= A[i].weight; ++b) {
                    State c = s;
                    int cid = c.comp[i], w = A[i].weight;
                    c.consume(v, {i});
                    c.add(v, b, cid);
                    c.add(v, w - b, cid);
                    f(std::move(c));
                }
            }
            return;
        }
        int va = v, vb = v + 1;
        // MergeMerge: k,k from one class, then with c
        for (int i : reps) {
            if (class_count(s, i) < 2) continue;
            int k = A[i].weight;
            for (int r : reps) {
                int cidx = r == i ? (class_count(s, i) >= 3 ? i + 2 : -1) : r;
                if (cidx < 0 || A[cidx].twin >= 0) continue;
                if (classify_pair_weights(PairShape::MergeMerge, {A[cidx].weight, 0, 0, 0}) == 0) continue;
                State c = s;
                int ci = c.comp[i], ci2 = c.comp[i + 1], cc = c.comp[cidx], wc = A[cidx].weight;
                c.merge_comps(ci, ci2);
                if (cc == ci2) cc = ci;
                c.consume(va, {i, i + 1});
                int cidx2 = cidx - 2;  // two entries before it were removed (i < cidx)
                if (cidx < i) cidx2 = cidx;
                c.done.push_back({c.active[cidx2].tail, vb, wc});
                c.active.erase(c.active.begin() + cidx2);
                c.comp.erase(c.comp.begin() + cidx2);
                c.done.push_back({va, vb, 2 * k});
                c.merge_comps(cc, ci);
                for (auto& x : c.comp)
                    if (x == ci) x = cc;
                c.add(vb, wc + 2 * k, cc);
                f(std::move(c));
            }
        }
        for (int i : reps) {
            if (A[i].twin >= 0) continue;
            int a = A[i].weight;
            // SplitSplit
            for (int cw = 1; cw + 2 <= a; ++cw) {
                if ((a - cw) % 2) continue;
                if (classify_pair_weights(PairShape::SplitSplit, {cw, 0, 0, 0}) == 0) continue;
                int k = (a - cw) / 2;
                State c = s;
                int cid = c.comp[i];
                c.consume(va, {i});
                c.add(va, cw, cid);
                c.done.push_back({va, vb, 2 * k});
                c.add(vb, k, cid, ev);
                c.add(vb, k, cid, ev);
                f(std::move(c));
            }
            // Cycle
            for (int p = 1; 2 * p <= a; ++p) {
                int q = a - p;
                if (classify_pair_weights(PairShape::Cycle, {a, p, q, 0}) == 0) continue;
                State c = s;
                int cid = c.comp[i];
                c.consume(va, {i});
                c.done.push_back({va, vb, p});
                c.done.push_back({va, vb, q});
                c.add(vb, a, cid);
                f(std::move(c));
            }
            // SplitMerge: x stays, y goes to B and meets b
            for (int x = 1; x < a; ++x) {
                int y = a - x;
                for (int r : reps) {
                    int bidx = r == i ? (class_count(s, i) >= 2 ? i + 1 : -1) : r;
                    if (bidx < 0 || A[bidx].twin >= 0) continue;
                    int wb = A[bidx].weight;
                    if (classify_pair_weights(PairShape::SplitMerge, {a, x, y, wb}) == 0) continue;
                    State c = s;
                    int ci = c.comp[i], cb = c.comp[bidx];
                    int tb = A[bidx].tail;
                    c.consume(va, {i});
                    int b2 = bidx > i ? bidx - 1 : bidx;
                    c.active.erase(c.active.begin() + b2);
                    c.comp.erase(c.comp.begin() + b2);
                    c.done.push_back({tb, vb, wb});
                    c.done.push_back({va, vb, y});
                    c.merge_comps(cb, ci);
                    for (auto& z : c.comp)
                        if (z == ci) z = cb;
                    c.add(va, x, cb);
                    c.add(vb, y + wb, cb);
                    f(std::move(c));
                }
            }
        }
    }
};

inline State initial_state(const Partition& lambda) {
    State s;
    int cid = 0;
    for (int w : lambda) s.add(kLeaf, w, cid++);
    s.comps = cid;
    return s;
}

}  // namespace sweep

inline TropicalCover make_cover(int g, const Partition& lam, const Partition& mu, const Distribution& dist,
                                std::vector<Edge> edges) {
    TropicalCover c;
    c.nv = dist.slots();
    c.edges = std::move(edges);
    std::sort(c.edges.begin(), c.edges.end());
    c.dist = dist;
    c.g = g, c.lambda = lam, c.mu = mu;
    return c;
}

// Isomorphism classes of resolving covers of the given type, sorted by canonical key.
inline std::vector<TropicalCover> enumerate_covers(int g, const Partition& lam, const Partition& mu,
                                                   const Distribution& dist, const EnumOptions& opt = {}) {
    if (!riemann_hurwitz_ok(g, lam, mu, dist.s(), dist.t()))
        throw DomainError("Riemann-Hurwitz condition fails for the requested type");
    if (lam.size() > opt.degree_max) throw ResourceError("degree bound exceeded: d=" + std::to_string(lam.size()));
    Distribution bare = dist;
    for (auto& e : bare.events) e.sign.reset();

    std::map<CanonicalKey, TropicalCover> found;
    std::mutex mu_found;
    std::atomic<std::size_t> emitted{0};
    auto emit = [&](std::vector<Edge>&& edges) {
        TropicalCover c = make_cover(g, lam, mu, bare, std::move(edges));
        auto key = canonical_key(c);
        std::lock_guard<std::mutex> lock(mu_found);
        found.emplace(std::move(key), std::move(c));
    };
    sweep::Sweeper sw(bare, mu, opt.max_covers, emit, &emitted);
    sweep::State init = sweep::initial_state(lam);
    init.normalize();

    if (opt.jobs <= 1 || bare.events.empty()) {
        sw.step(init, 0);
    } else {
        // Fan out over the first two events' choices.
        std::vector<std::pair<sweep::State, std::size_t>> work;
        if (sw.feasible(init, 0)) {
            sw.for_each_child(init, 0, [&](sweep::State&& c) {
                c.normalize();
                if (bare.events.size() >= 2 && sw.feasible(c, 1)) {
                    sw.for_each_child(c, 1, [&](sweep::State&& cc) { work.emplace_back(std::move(cc), 2); });
                } else {
                    work.emplace_back(std::move(c), 1);
                }
            });
        }
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::exception_ptr err;
        std::mutex mu_err;
        for (int j = 0; j < opt.jobs; ++j)
            pool.emplace_back([&] {
                try {
                    for (std::size_t k; (k = next.fetch_add(1)) < work.size();)
                        sw.step(work[k].first, work[k].second);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu_err);
                    if (!err) err = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        if (err) std::rethrow_exception(err);
    }

    std::vector<TropicalCover> out;
    for (auto& [k, c] : found) {
        if (!is_resolving(c)) throw InvariantError("sweep produced a non-resolving cover: " + k);
        auto err = validation_error(c);
        if (!err.empty()) throw InvariantError("sweep produced an invalid cover (" + err + "): " + k);
        out.push_back(std::move(c));
    }
    return out;
}

inline int symmetric_structure_count(const TropicalCover& c) {
    return static_cast<int>(classify_symmetric(c).sym.size());
}

inline Rational complex_multiplicity(const TropicalCover& c) {
    BigInt prod = 1;
    for (const auto& e : c.edges)
        if (e.inner()) prod *= e.weight;
    return Rational(prod, BigInt(1) << symmetric_structure_count(c));
}

inline Rational complex_tropical_value(int g, const Partition& lam, const Partition& mu, int t,
                                       const EnumOptions& opt = {}) {
    auto covers = enumerate_covers(g, lam, mu, trivial_distribution(0, t), opt);
    Rational sum = 0;
    for (const auto& c : covers) sum += complex_multiplicity(c);
    return sum;
}

}  // namespace tropz
