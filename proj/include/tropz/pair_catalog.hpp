#pragma once

#include <array>
#include <string_view>

#include "tropical_core.hpp"

namespace tropz {

// The fourteen local pictures allowed for the two vertices (A, B) of a pair, A before B.
//
//   MergeMerge: A merges k,k into 2k; B merges 2k with c.          (i) c even, (ii) c odd
//   SplitSplit: A splits c+2k into c and 2k; B splits 2k into k,k. (iii) c even, (iv) c odd
//   SplitMerge: A splits a into x (free) and y (to B); B merges y with b.   (v)..(xii)
//   Cycle:      A splits a into p,q, both to B; B merges them back.  (xiii) a odd, (xiv) a even
//
// The k,k flags of the first two shapes must form a symmetric fork or lie in a symmetric cycle.
enum class PairShape : std::uint8_t { MergeMerge, SplitSplit, SplitMerge, Cycle };

enum class Par : std::uint8_t { Odd, Even, Any };

struct PairPicture {
    int id;
    std::string_view name;
    PairShape shape;
    // MergeMerge / SplitSplit: [c]; SplitMerge: [a, x, y, b]; Cycle: [a, p, q] with p <= q by parity
    std::array<Par, 4> parity;
};

inline constexpr std::array<PairPicture, 14> kPairCatalog{{
    {1, "i", PairShape::MergeMerge, {Par::Even, Par::Any, Par::Any, Par::Any}},
    {2, "ii", PairShape::MergeMerge, {Par::Odd, Par::Any, Par::Any, Par::Any}},
    {3, "iii", PairShape::SplitSplit, {Par::Even, Par::Any, Par::Any, Par::Any}},
    {4, "iv", PairShape::SplitSplit, {Par::Odd, Par::Any, Par::Any, Par::Any}},
    {5, "v", PairShape::SplitMerge, {Par::Even, Par::Even, Par::Even, Par::Even}},
    {6, "vi", PairShape::SplitMerge, {Par::Even, Par::Odd, Par::Odd, Par::Even}},
    {7, "vii", PairShape::SplitMerge, {Par::Even, Par::Odd, Par::Odd, Par::Odd}},
    {8, "viii", PairShape::SplitMerge, {Par::Even, Par::Even, Par::Even, Par::Odd}},
    {9, "ix", PairShape::SplitMerge, {Par::Odd, Par::Even, Par::Odd, Par::Even}},
    {10, "x", PairShape::SplitMerge, {Par::Odd, Par::Odd, Par::Even, Par::Even}},
    {11, "xi", PairShape::SplitMerge, {Par::Odd, Par::Even, Par::Odd, Par::Odd}},
    {12, "xii", PairShape::SplitMerge, {Par::Odd, Par::Odd, Par::Even, Par::Odd}},
    {13, "xiii", PairShape::Cycle, {Par::Odd, Par::Odd, Par::Even, Par::Any}},
    {14, "xiv", PairShape::Cycle, {Par::Even, Par::Even, Par::Even, Par::Any}},
}};

inline const PairPicture& pair_picture(int id) { return kPairCatalog.at(static_cast<std::size_t>(id - 1)); }

namespace detail {
inline bool par_ok(Par p, int w) { return p == Par::Any || (p == Par::Odd) == (w % 2 != 0); }
}  // namespace detail

// Picture id (1..14) for the weights of a shape, or 0 if none matches.
inline int classify_pair_weights(PairShape shape, std::array<int, 4> w) {
    if (shape == PairShape::Cycle && w[1] % 2 == 0 && w[2] % 2 != 0) std::swap(w[1], w[2]);
    int n = shape == PairShape::SplitMerge ? 4 : shape == PairShape::Cycle ? 3 : 1;
    for (const auto& pic : kPairCatalog) {
        if (pic.shape != shape) continue;
        bool ok = true;
        for (int i = 0; i < n; ++i) ok = ok && detail::par_ok(pic.parity[i], w[i]);
        if (ok) return pic.id;
    }
    return 0;
}

struct PairMatch {
    int picture = 0;  // 0: no match
    // edge indices; -1 where not applicable
    int flag1 = -1, flag2 = -1;  // the k,k flags of the first two shapes
    int contractible = -1;       // the single contractible edge (not for Cycle)
};

// Matches the local picture at pair vertices (a, b), a < b consecutive slots.
inline PairMatch match_pair(const TropicalCover& c, int a, int b) {
    PairMatch m;
    auto ina = c.in_edges(a), outa = c.out_edges(a), inb = c.in_edges(b), outb = c.out_edges(b);
    std::vector<int> between;
    for (int e : outa)
        if (c.edges[e].head == b) between.push_back(e);
    const auto& E = c.edges;
    auto w = [&](int e) { return E[e].weight; };
    if (between.size() == 2) {
        if (ina.size() != 1 || outb.size() != 1) return m;
        m.picture = classify_pair_weights(PairShape::Cycle, {w(ina[0]), w(between[0]), w(between[1]), 0});
        return m;
    }
    if (between.size() != 1) return m;
    int y = between[0];
    m.contractible = y;
    bool a_merge = ina.size() == 2, b_merge = inb.size() == 2;
    if (a_merge && b_merge) {
        int f1 = ina[0], f2 = ina[1];
        if (w(f1) != w(f2) || E[f1].tail != E[f2].tail) return m;  // fork (both from -inf) or cycle
        int cedge = inb[0] == y ? inb[1] : inb[0];
        m.flag1 = f1, m.flag2 = f2;
        m.picture = classify_pair_weights(PairShape::MergeMerge, {w(cedge), 0, 0, 0});
    } else if (!a_merge && !b_merge) {
        int f1 = outb[0], f2 = outb[1];
        if (w(f1) != w(f2) || E[f1].head != E[f2].head) return m;
        int cedge = outa[0] == y ? outa[1] : outa[0];
        m.flag1 = f1, m.flag2 = f2;
        m.picture = classify_pair_weights(PairShape::SplitSplit, {w(cedge), 0, 0, 0});
    } else if (!a_merge && b_merge) {
        int x = outa[0] == y ? outa[1] : outa[0];
        int bb = inb[0] == y ? inb[1] : inb[0];
        m.picture = classify_pair_weights(PairShape::SplitMerge, {w(ina[0]), w(x), w(y), w(bb)});
    }
    return m;
}

inline bool is_resolving(const TropicalCover& c) {
    for (auto [a, b] : c.dist.pair_slots())
        if (match_pair(c, a, b).picture == 0) return false;
    return true;
}

}  // namespace tropz
