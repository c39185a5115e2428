#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

#include "partitions.hpp"

namespace tropz {

enum class Ram : std::uint8_t { Triple, Simple };

// Lambda in positional form plus the length of its negative prefix.
struct BranchSpec {
    std::vector<Ram> order;
    int split_index = 0;

    int s() const { return static_cast<int>(std::count(order.begin(), order.end(), Ram::Triple)); }
    int t() const { return static_cast<int>(std::count(order.begin(), order.end(), Ram::Simple)); }
    std::vector<Ram> neg() const { return {order.begin(), order.begin() + split_index}; }
    std::vector<Ram> pos() const { return {order.begin() + split_index, order.end()}; }
};

// "32" -> (Triple, Simple)
inline std::vector<Ram> parse_ram_string(const std::string& s) {
    std::vector<Ram> out;
    for (char c : s) {
        if (c == '3') out.push_back(Ram::Triple);
        else if (c == '2') out.push_back(Ram::Simple);
        else throw DomainError("ramification strings use only the digits 2 and 3");
    }
    return out;
}

inline std::string ram_string(const std::vector<Ram>& v) {
    std::string s;
    for (Ram r : v) s += (r == Ram::Triple) ? '3' : '2';
    return s;
}

// Every ordering of s Triple and t Simple entries, lexicographic in "2" < "3".
inline std::vector<std::vector<Ram>> all_arrangements(int s, int t) {
    std::vector<Ram> v;
    for (int i = 0; i < t; ++i) v.push_back(Ram::Simple);
    for (int i = 0; i < s; ++i) v.push_back(Ram::Triple);
    std::vector<std::vector<Ram>> out;
    auto key = [](Ram r) { return r == Ram::Triple ? 1 : 0; };
    std::sort(v.begin(), v.end(), [&](Ram a, Ram b) { return key(a) < key(b); });
    do out.push_back(v);
    while (std::next_permutation(v.begin(), v.end(), [&](Ram a, Ram b) { return key(a) < key(b); }));
    return out;
}

namespace oracle {

constexpr int kMaxDegree = 8;
using Perm = std::array<std::uint8_t, kMaxDegree>;

inline Perm identity_perm(int d) {
    Perm p{};
    for (int i = 0; i < d; ++i) p[i] = static_cast<std::uint8_t>(i);
    return p;
}

// (p*q)(x) = q(p(x)): apply p first.
inline Perm compose(const Perm& p, const Perm& q, int d) {
    Perm r{};
    for (int i = 0; i < d; ++i) r[i] = q[p[i]];
    return r;
}

inline Partition cycle_type(const Perm& p, int d) {
    std::vector<int> lens;
    std::array<bool, kMaxDegree> seen{};
    for (int i = 0; i < d; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p[j]) seen[j] = true, ++len;
        lens.push_back(len);
    }
    return Partition(lens);
}

inline int cycle_count(const Perm& p, int d) {
    std::array<bool, kMaxDegree> seen{};
    int c = 0;
    for (int i = 0; i < d; ++i) {
        if (seen[i]) continue;
        ++c;
        for (int j = i; !seen[j]; j = p[j]) seen[j] = true;
    }
    return c;
}

inline Perm from_cycle_type(const Partition& lam) {
    int d = lam.size();
    Perm p = identity_perm(d);
    int start = 0;
    for (int len : lam) {
        for (int i = 0; i < len; ++i) p[start + i] = static_cast<std::uint8_t>(start + (i + 1) % len);
        start += len;
    }
    return p;
}

inline std::vector<Perm> all_transpositions(int d) {
    std::vector<Perm> out;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            Perm p = identity_perm(d);
            std::swap(p[a], p[b]);
            out.push_back(p);
        }
    return out;
}

inline std::vector<Perm> all_three_cycles(int d) {
    std::vector<Perm> out;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            for (int c = b + 1; c < d; ++c) {
                Perm p = identity_perm(d), q = identity_perm(d);
                p[a] = b, p[b] = c, p[c] = a;
                q[a] = c, q[c] = b, q[b] = a;
                out.push_back(p);
                out.push_back(q);
            }
    return out;
}

inline std::vector<Perm> all_perms_of_type(const Partition& lam) {
    int d = lam.size();
    std::vector<Perm> out;
    std::array<std::uint8_t, kMaxDegree> v{};
    for (int i = 0; i < d; ++i) v[i] = static_cast<std::uint8_t>(i);
    do {
        Perm p{};
        for (int i = 0; i < d; ++i) p[i] = v[i];
        if (cycle_type(p, d) == lam) out.push_back(p);
    } while (std::next_permutation(v.begin(), v.begin() + d));
    return out;
}

struct Dsu {
    std::array<std::uint8_t, kMaxDegree> parent{};
    int comps = 0;
    explicit Dsu(int d = 0) : comps(d) {
        for (int i = 0; i < d; ++i) parent[i] = static_cast<std::uint8_t>(i);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a), b = find(b);
        if (a != b) parent[a] = static_cast<std::uint8_t>(b), --comps;
    }
    void absorb(const Perm& p, int d) {
        for (int i = 0; i < d; ++i)
            if (p[i] != i) unite(i, p[i]);
    }
};

struct Search {
    int d;
    Partition mu;
    std::vector<const std::vector<Perm>*> moves;
    std::vector<int> capacity;  // max change in cycle count / components from depth i on

    std::uint64_t run(const Perm& prod, Dsu dsu, std::size_t depth) const {
        int cap = capacity[depth];
        if (dsu.comps - 1 > cap) return 0;
        int cyc = cycle_count(prod, d);
        if (std::abs(cyc - mu.length()) > cap) return 0;
        if (depth == moves.size()) return (dsu.comps == 1 && cycle_type(prod, d) == mu) ? 1 : 0;
        std::uint64_t total = 0;
        for (const Perm& a : *moves[depth]) {
            Dsu next = dsu;
            next.absorb(a, d);
            total += run(compose(prod, a, d), next, depth + 1);
        }
        return total;
    }
};

}  // namespace oracle

struct OracleOptions {
    int degree_max = 7;
    int jobs = 1;
    bool class_representatives = true;
};

// #{(s0, a_1..a_n, s_inf) : types lam / order / mu, product identity, transitive}.
inline BigInt count_labeled_factorizations(const Partition& lam, const Partition& mu,
                                           const std::vector<Ram>& order,
                                           const OracleOptions& opt = {}) {
    using namespace oracle;
    if (lam.size() != mu.size()) throw DomainError("|lambda| != |mu|");
    int d = lam.size();
    if (d > opt.degree_max || d > kMaxDegree)
        throw ResourceError("oracle degree bound exceeded: d=" + std::to_string(d));
    if (d == 0) return order.empty() ? 1 : 0;

    auto trans = all_transpositions(d);
    auto threes = all_three_cycles(d);
    Search search{d, mu, {}, {}};
    for (Ram r : order) search.moves.push_back(r == Ram::Triple ? &threes : &trans);
    search.capacity.assign(order.size() + 1, 0);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i)
        search.capacity[i] = search.capacity[i + 1] + (order[i] == Ram::Triple ? 2 : 1);

    std::vector<Perm> starts;
    BigInt weight = 1;
    if (opt.class_representatives) {
        starts.push_back(from_cycle_type(lam));
        weight = factorial(d) / centralizer_order(lam);
    } else {
        starts = all_perms_of_type(lam);
    }

    // Work items: (start, first move) so that even a single class representative spreads over threads.
    struct Item {
        std::size_t start;
        std::size_t first;
    };
    std::vector<Item> items;
    for (std::size_t i = 0; i < starts.size(); ++i) {
        if (order.empty()) items.push_back({i, 0});
        else
            for (std::size_t j = 0; j < search.moves[0]->size(); ++j) items.push_back({i, j});
    }
    std::vector<std::uint64_t> partial(items.size(), 0);
    auto work = [&](std::size_t k) {
        const Item& it = items[k];
        Dsu dsu(d);
        dsu.absorb(starts[it.start], d);
        if (order.empty()) {
            partial[k] = search.run(starts[it.start], dsu, 0);
            return;
        }
        const Perm& a = (*search.moves[0])[it.first];
        dsu.absorb(a, d);
        partial[k] = search.run(compose(starts[it.start], a, d), dsu, 1);
    };
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        for (std::size_t k = 0; k < items.size(); ++k) work(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                for (std::size_t k; (k = next.fetch_add(1)) < items.size();) work(k);
            });
        for (auto& th : pool) th.join();
    }
    BigInt total = 0;
    for (auto v : partial) total += v;
    return total * weight;
}

inline int genus_from_rh(const Partition& lam, const Partition& mu, int s, int t) {
    int twice = 2 * s + t - lam.length() - mu.length() + 2;
    if (twice < 0 || twice % 2) throw DomainError("Riemann-Hurwitz condition has no integer genus");
    return twice / 2;
}

// Canonical order used by the oracle: all Triple first.
inline std::vector<Ram> triple_first(int s, int t) {
    std::vector<Ram> v(static_cast<std::size_t>(s), Ram::Triple);
    v.insert(v.end(), static_cast<std::size_t>(t), Ram::Simple);
    return v;
}

inline Rational hurwitz_complex(int g, const Partition& lam, const Partition& mu, int s, int t,
                                const OracleOptions& opt = {}) {
    if (!riemann_hurwitz_ok(g, lam, mu, s, t)) throw DomainError("Riemann-Hurwitz condition fails");
    BigInt n = count_labeled_factorizations(lam, mu, triple_first(s, t), opt);
    return Rational(n, factorial(lam.size()));
}

}  // namespace tropz
