#pragma once

#include <map>

#include "enumeration.hpp"

namespace tropz {

enum class Colour : std::uint8_t { Red, Blue };

struct Colouring {
    std::vector<int> i_rho;        // indices into SymmetryReport::sym, sorted
    std::vector<Colour> colours;   // one per even component (see EvenComponents)

    auto operator<=>(const Colouring&) const = default;
};

// Components of the even-weight subgraph once the interiors of I_rho are removed.
struct EvenComponents {
    std::vector<int> comp_of_edge;  // -1 for odd edges and edges inside I_rho
    int count = 0;
};

inline std::vector<bool> dotted_edges(const TropicalCover& c, const SymmetryReport& r,
                                      const std::vector<int>& i_rho) {
    std::vector<bool> dotted(c.edges.size(), false);
    for (int k : i_rho) dotted[r.sym[k].e1] = dotted[r.sym[k].e2] = true;
    return dotted;
}

inline EvenComponents even_components(const TropicalCover& c, const std::vector<bool>& dotted) {
    std::size_t n = c.edges.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto live = [&](int e) { return c.edges[e].even() && !dotted[e]; };
    auto inc = c.incidence();
    for (const auto& at : inc)
        for (std::size_t i = 0; i < at.size(); ++i)
            for (std::size_t j = i + 1; j < at.size(); ++j)
                if (live(at[i]) && live(at[j])) parent[find(at[i])] = find(at[j]);
    EvenComponents out;
    out.comp_of_edge.assign(n, -1);
    std::map<int, int> ids;
    for (std::size_t e = 0; e < n; ++e) {
        int ei = static_cast<int>(e);
        if (!live(ei)) continue;
        auto [it, fresh] = ids.emplace(find(ei), out.count);
        if (fresh) ++out.count;
        out.comp_of_edge[e] = it->second;
    }
    return out;
}

// The edge whose colour decides the sign of a vertex, and whether blue means positive.
struct SignRule {
    int key_edge;
    bool blue_is_plus;
};

// Point signs: split or merge with single-side edge a and pair side {b, c}.
//   {b,c} dotted             -> a decides, blue positive
//   b, c odd                 -> a decides, red positive
//   a odd (one of b,c even)  -> the even one decides, blue positive
//   all even                 -> blue positive
// Mirrored merges follow the same rule.
inline SignRule sign_rule(const TropicalCover& c, const std::vector<bool>& dotted, int v) {
    auto in = c.in_edges(v), out = c.out_edges(v);
    int a;
    std::vector<int> pair;
    if (in.size() == 1) a = in[0], pair = out;
    else a = out[0], pair = in;
    const auto& E = c.edges;
    if (dotted[pair[0]] && dotted[pair[1]]) return {a, true};
    bool b_odd = !E[pair[0]].even(), c_odd = !E[pair[1]].even();
    if (b_odd && c_odd) return {a, false};
    if (!E[a].even()) return {E[pair[0]].even() ? pair[0] : pair[1], true};
    return {a, true};
}

inline Sign vertex_sign(const TropicalCover& c, const SymmetryReport& r, const Colouring& col, int v) {
    auto dotted = dotted_edges(c, r, col.i_rho);
    auto comps = even_components(c, dotted);
    SignRule rule = sign_rule(c, dotted, v);
    Colour k = col.colours.at(static_cast<std::size_t>(comps.comp_of_edge.at(rule.key_edge)));
    return ((k == Colour::Blue) == rule.blue_is_plus) ? Sign::Plus : Sign::Minus;
}

// Sign of an event: a point's vertex sign, or the common sign of a pair's two vertices.
inline Sign event_sign(const TropicalCover& c, const SymmetryReport& r, const Colouring& col, std::size_t event) {
    int slot = c.dist.event_slots().at(event);
    Sign s = vertex_sign(c, r, col, slot);
    if (c.dist.events[event].kind == EventKind::Pair && vertex_sign(c, r, col, slot + 1) != s)
        throw DomainError("pair vertices carry different signs: colouring is not effective");
    return s;
}

inline bool i_rho_admissible(const SymmetryReport& r, const std::vector<int>& i_rho) {
    for (int k : r.sym3)
        if (!r.in(i_rho, k)) return false;
    for (int k : r.symc_c)
        if (r.in(i_rho, k)) return false;
    return true;
}

// Every admissible I_rho: sym3 forced in, symc_c forced out, sym2 free.
inline std::vector<std::vector<int>> admissible_i_rhos(const SymmetryReport& r) {
    std::vector<std::vector<int>> out;
    std::size_t n = r.sym2.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<int> s = r.sym3;
        for (std::size_t b = 0; b < n; ++b)
            if (mask >> b & 1) s.push_back(r.sym2[b]);
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
    }
    return out;
}

inline Rational mult_real(const TropicalCover& c, const SymmetryReport& r, const std::vector<int>& i_rho) {
    auto dotted = dotted_edges(c, r, i_rho);
    int even_free = 0;
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
        const auto& ed = c.edges[e];
        if (ed.inner() && ed.even() && !dotted[e] && !r.in(r.e_c_set, static_cast<int>(e))) ++even_free;
    }
    int symc_sym3 = 0;
    for (int k : r.sym3)
        if (r.sym[k].is_cycle()) ++symc_sym3;
    int exp = even_free + symc_sym3 + static_cast<int>(r.nsym_c.size()) - static_cast<int>(r.sym2.size());
    BigInt prod = 1;
    for (int k : i_rho)
        if (r.sym[k].is_cycle()) prod *= r.sym[k].weight;
    Rational m = exp >= 0 ? Rational(prod * (BigInt(1) << exp)) : Rational(prod, BigInt(1) << -exp);
    return m;
}

inline Rational mult_real(const TropicalCover& c, const Colouring& col) {
    return mult_real(c, classify_symmetric(c), col.i_rho);
}

// Colour constraints as a parity union-find over components.
class ColourSystem {
public:
    explicit ColourSystem(int n) : parent_(n), parity_(n, 0), fixed_(n, -1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    // colour(x) xor colour(y) == p
    void relate(int x, int y, int p) {
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry) {
            if ((px ^ py) != p) ok_ = false;
            return;
        }
        parent_[rx] = ry;
        parity_[rx] = px ^ py ^ p;
        if (fixed_[rx] >= 0) fix_root(ry, fixed_[rx] ^ parity_[rx]);
    }
    // colour(x) == v  (1 = blue)
    void fix(int x, int v) {
        auto [rx, px] = find(x);
        fix_root(rx, v ^ px);
    }
    bool consistent() const { return ok_; }
    int free_classes() {
        int n = 0;
        for (std::size_t i = 0; i < parent_.size(); ++i)
            if (find(static_cast<int>(i)).first == static_cast<int>(i) && fixed_[i] < 0) ++n;
        return n;
    }

private:
    std::pair<int, int> find(int x) {
        int p = 0;
        while (parent_[x] != x) p ^= parity_[x], x = parent_[x];
        return {x, p};
    }
    void fix_root(int r, int v) {
        if (fixed_[r] >= 0 && fixed_[r] != v) ok_ = false;
        fixed_[r] = v;
    }
    std::vector<int> parent_, parity_, fixed_;
    bool ok_ = true;
};

struct IRhoSummary {
    std::vector<int> i_rho;
    Rational mult;
    BigInt effective;      // effective colourings, any signs
    BigInt compatible;     // effective colourings reproducing the requested signs (if any)
};

// For each admissible I_rho: number of effective colourings, and those matching `signs`
// (one per event; empty means no sign requirement).
inline std::vector<IRhoSummary> colouring_summary(const TropicalCover& c, const SymmetryReport& r,
                                                  const std::vector<Sign>& signs) {
    std::vector<IRhoSummary> out;
    auto slots = c.dist.event_slots();
    for (auto& ir : admissible_i_rhos(r)) {
        auto dotted = dotted_edges(c, r, ir);
        auto comps = even_components(c, dotted);
        std::vector<SignRule> rules;
        for (int v = 0; v < c.nv; ++v) rules.push_back(sign_rule(c, dotted, v));
        auto build = [&](bool with_signs) {
            ColourSystem sys(comps.count);
            for (std::size_t ev = 0; ev < c.dist.events.size(); ++ev) {
                int a = slots[ev];
                const SignRule& ra = rules[a];
                int ka = comps.comp_of_edge[ra.key_edge];
                if (c.dist.events[ev].kind == EventKind::Pair) {
                    const SignRule& rb = rules[a + 1];
                    int kb = comps.comp_of_edge[rb.key_edge];
                    sys.relate(ka, kb, ra.blue_is_plus == rb.blue_is_plus ? 0 : 1);
                }
                if (with_signs) {
                    bool plus = signs[ev] == Sign::Plus;
                    sys.fix(ka, plus == ra.blue_is_plus ? 1 : 0);
                }
            }
            if (!sys.consistent()) return BigInt(0);
            return BigInt(1) << sys.free_classes();
        };
        IRhoSummary s;
        s.i_rho = ir;
        s.mult = mult_real(c, r, ir);
        s.effective = build(false);
        s.compatible = signs.empty() ? s.effective : build(true);
        out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<Sign> required_signs(const Distribution& d) {
    std::vector<Sign> out;
    for (const auto& e : d.events) {
        if (!e.sign) throw DomainError("distribution carries no signs");
        out.push_back(*e.sign);
    }
    return out;
}

// Explicit enumeration of effective colourings; brute force over all colour maps.
inline std::vector<Colouring> enumerate_effective_colourings(const TropicalCover& c,
                                                             const std::vector<Sign>& required) {
    auto r = classify_symmetric(c);
    std::vector<Colouring> out;
    for (auto& ir : admissible_i_rhos(r)) {
        auto comps = even_components(c, dotted_edges(c, r, ir));
        if (comps.count > 20) throw ResourceError("too many even components for explicit colourings");
        for (std::size_t mask = 0; mask < (std::size_t{1} << comps.count); ++mask) {
            Colouring col{ir, {}};
            for (int k = 0; k < comps.count; ++k) col.colours.push_back((mask >> k & 1) ? Colour::Blue : Colour::Red);
            bool ok = true;
            for (std::size_t ev = 0; ev < c.dist.events.size() && ok; ++ev) {
                try {
                    Sign s = event_sign(c, r, col, ev);
                    if (!required.empty() && s != required[ev]) ok = false;
                } catch (const DomainError&) {
                    ok = false;
                }
            }
            if (ok) out.push_back(std::move(col));
        }
    }
    return out;
}

inline Rational real_cover_contribution(const TropicalCover& c, const std::vector<Sign>& signs) {
    auto r = classify_symmetric(c);
    Rational sum = 0;
    for (const auto& s : colouring_summary(c, r, signs)) {
        if (s.compatible == 0) continue;
        if (denominator(s.mult) != 1 || s.mult < 1)
            throw InvariantError("non-integral real multiplicity on " + canonical_key(c));
        sum += s.mult * Rational(s.compatible);
    }
    return sum;
}

inline Rational real_value(const std::vector<TropicalCover>& covers, const std::vector<Sign>& signs) {
    Rational sum = 0;
    for (const auto& c : covers) sum += real_cover_contribution(c, signs);
    return sum;
}

inline Rational hurwitz_real(int g, const Partition& lam, const Partition& mu, const std::vector<Ram>& neg,
                             const std::vector<Ram>& pos, const EnumOptions& opt = {}) {
    Distribution d = distribution_from_tuple(neg, pos);
    if (d.s() * 2 + d.t() == 0) throw DomainError("standing assumption 2s+t>0 fails");
    if (is_excluded_pair(lam, mu)) throw DomainError("excluded pair");
    auto covers = enumerate_covers(g, lam, mu, d, opt);
    return real_value(covers, required_signs(d));
}

}  // namespace tropz
