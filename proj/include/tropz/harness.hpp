#pragma once

#include <chrono>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "asymptotics.hpp"
#include "constructions.hpp"

namespace tropz::harness {

using json = nlohmann::json;

inline json to_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

inline json to_json(const Rational& q) { return {{"num", to_json(numerator(q))}, {"den", to_json(denominator(q))}}; }

inline json to_json(const Partition& p) { return json(p.parts()); }

inline json cover_to_json(const TropicalCover& c) {
    json edges = json::array();
    for (const auto& e : c.edges) edges.push_back({e.tail, e.head, e.weight});
    auto w = is_generalized_zigzag(c);
    return {{"key", canonical_key(c)}, {"nv", c.nv},       {"g", c.g},           {"lambda", to_json(c.lambda)},
            {"mu", to_json(c.mu)},    {"events", c.dist.str()}, {"edges", edges}, {"label", c.label},
            {"zigzag", w.has_value()}, {"odd", w ? w->odd : false}};
}

// Graphviz: inner vertices by slot, ends as small points, contractible edges bold.
inline std::string cover_to_dot(const TropicalCover& c, const std::string& name = "cover") {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=LR;\n";
    for (int v = 0; v < c.nv; ++v) os << "  v" << v << " [label=\"" << v << "\"];\n";
    auto ann = c.contractible_annotation();
    int leaf = 0;
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
        const auto& e = c.edges[i];
        std::string t = e.tail == kLeaf ? "in" + std::to_string(leaf++) : "v" + std::to_string(e.tail);
        std::string h = e.head == kLeaf ? "out" + std::to_string(leaf++) : "v" + std::to_string(e.head);
        if (e.tail == kLeaf) os << "  " << t << " [shape=point];\n";
        if (e.head == kLeaf) os << "  " << h << " [shape=point];\n";
        os << "  " << t << " -> " << h << " [label=\"" << e.weight << "\"" << (ann[i] >= 0 ? ", style=bold" : "")
           << "];\n";
    }
    os << "}\n";
    return os.str();
}

struct GridSpec {
    int d_max = 3;
    int g_max = 1;
    int points_max = 5;  // bound on s + t
    bool include_arrangements = true;  // all orders; otherwise TRIPLE first only
    bool include_splittings = true;    // all sign splits; otherwise all positive only
    int jobs = 1;
    int degree_max = 8;
    int proper_extra_d_max = 8;  // supplementary degrees for properly mixed covers
    std::string checkpoint;      // JSON-lines file, resumable
};

struct CaseSpec {
    int g;
    Partition lam, mu;
    int s, t;
    std::string skip;  // non-empty: reason the case is not run

    std::string key() const {
        return "g=" + std::to_string(g) + ";lam=" + lam.str() + ";mu=" + mu.str() + ";s=" + std::to_string(s) +
               ";t=" + std::to_string(t);
    }
    json head() const {
        return {{"key", key()}, {"g", g}, {"lambda", to_json(lam)}, {"mu", to_json(mu)}, {"s", s}, {"t", t}};
    }
};

// All types with d <= d_max, g <= g_max and s + t <= points_max; failing standing assumptions are
// kept with a skip reason.
inline std::vector<CaseSpec> grid_cases(const GridSpec& grid, int d_min = 1) {
    std::vector<CaseSpec> out;
    for (int d = d_min; d <= grid.d_max; ++d)
        for (const auto& lam : partitions_of(d))
            for (const auto& mu : partitions_of(d))
                for (int g = 0; g <= grid.g_max; ++g) {
                    int total = lam.length() + mu.length() + 2 * g - 2;
                    for (int s = 0; 2 * s <= total; ++s) {
                        int t = total - 2 * s;
                        if (s + t > grid.points_max) continue;
                        CaseSpec c{g, lam, mu, s, t, {}};
                        if (2 * s + t == 0 || is_excluded_pair(lam, mu)) c.skip = "standing assumption";
                        out.push_back(std::move(c));
                    }
                }
    return out;
}

inline std::vector<std::vector<Ram>> grid_arrangements(const GridSpec& grid, int s, int t) {
    if (grid.include_arrangements) return all_arrangements(s, t);
    return {triple_first(s, t)};
}

// Runs fn over the cases in a pool; results keep the case order. Checkpointed records are reused.
template <class Fn>
std::vector<json> run_campaign(const std::vector<CaseSpec>& cases, const GridSpec& grid, const std::string& tag, Fn fn) {
    std::map<std::string, json> done;
    if (!grid.checkpoint.empty()) {
        std::ifstream in(grid.checkpoint);
        for (std::string line; std::getline(in, line);) {
            if (line.empty()) continue;
            auto j = json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.contains("campaign") || j["campaign"] != tag) continue;
            done[j["record"]["key"].get<std::string>()] = j["record"];
        }
    }
    std::ofstream ck;
    if (!grid.checkpoint.empty()) ck.open(grid.checkpoint, std::ios::app);
    std::mutex mu_ck;
    std::vector<json> out(cases.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < cases.size();) {
            const auto& c = cases[k];
            if (auto it = done.find(c.key()); it != done.end()) {
                out[k] = it->second;
                continue;
            }
            json rec = c.head();
            if (!c.skip.empty()) {
                rec["status"] = "skipped";
                rec["reason"] = c.skip;
            } else {
                try {
                    fn(c, rec);
                    rec["status"] = "ok";
                } catch (const ResourceError& e) {
                    rec["status"] = "resource";
                    rec["reason"] = e.what();
                } catch (const DomainError& e) {
                    rec["status"] = "skipped";
                    rec["reason"] = e.what();
                }
            }
            if (ck.is_open()) {
                std::lock_guard<std::mutex> lock(mu_ck);
                ck << json{{"campaign", tag}, {"record", rec}}.dump() << '\n' << std::flush;
            }
            out[k] = std::move(rec);
        }
    };
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex mu_err;
    for (int j = 0; j < std::max(1, grid.jobs); ++j)
        pool.emplace_back([&] {
            try {
                work();
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu_err);
                if (!err) err = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    return out;
}

struct Report {
    json doc;  // {"campaign", "cases", "summary"}

    long violations() const { return doc["summary"].value("violations", 0L); }
    long resource_notes() const { return doc["summary"].value("resource", 0L); }
    int exit_code() const { return violations() > 0 ? 1 : resource_notes() > 0 ? 2 : 0; }
};

// Summary: counts by status and by violation category over records carrying "violations".
inline Report finish(const std::string& campaign, std::vector<json> records) {
    json summary = {{"cases", 0}, {"skipped", 0}, {"resource", 0}, {"violations", 0}, {"by_category", json::object()}};
    for (const auto& r : records) {
        summary["cases"] = summary["cases"].get<long>() + 1;
        std::string st = r.value("status", "ok");
        if (st == "skipped") summary["skipped"] = summary["skipped"].get<long>() + 1;
        if (st == "resource") summary["resource"] = summary["resource"].get<long>() + 1;
        if (!r.contains("violations")) continue;
        for (const auto& v : r["violations"]) {
            summary["violations"] = summary["violations"].get<long>() + 1;
            std::string cat = v["check"].get<std::string>() + ":" + v["category"].get<std::string>();
            summary["by_category"][cat] = summary["by_category"].value(cat, 0L) + 1;
        }
    }
    Report rep;
    rep.doc = {{"campaign", campaign}, {"cases", std::move(records)}, {"summary", summary}};
    return rep;
}

inline json violation(const std::string& check, const std::string& category, json detail) {
    return {{"check", check}, {"category", category}, {"detail", std::move(detail)}};
}

namespace detail {

inline bool any_even_fork_tail(const std::vector<TropicalCover>& covers) {
    for (const auto& c : covers)
        if (auto w = is_generalized_zigzag(c); w && has_even_fork_tail(*w)) return true;
    return false;
}

inline bool has_sym3_cycle(const TropicalCover& c) {
    auto r = classify_symmetric(c);
    for (int k : r.sym3)
        if (r.sym[k].is_cycle()) return true;
    return false;
}

// Zigzag count with m read off the multiplicity parity of a colouring compatible with the given
// signs (any effective colouring when none is compatible).
inline BigInt signed_zigzag_count(const std::vector<TropicalCover>& covers, const std::vector<Sign>& signs) {
    BigInt z = 0;
    for (const auto& c : covers) {
        auto r = classify_symmetric(c);
        if (!is_generalized_zigzag(c, r)) continue;
        auto summary = colouring_summary(c, r, signs);
        const IRhoSummary* pick = nullptr;
        for (const auto& s : summary)
            if (s.compatible > 0) {
                pick = &s;
                break;
            }
        if (!pick)
            for (const auto& s : summary)
                if (s.effective > 0) {
                    pick = &s;
                    break;
                }
        if (!pick) throw InvariantError("zigzag cover without an effective colouring: " + canonical_key(c));
        bool odd = denominator(pick->mult) == 1 && numerator(pick->mult) % 2 != 0;
        z += odd ? 1 : 2;
    }
    return z;
}

}  // namespace detail

// Z <= H^R <= H^C and Z = H^R mod 2 for every arrangement and signed splitting, plus the
// multiplicity integrality and parity structure of every cover.
inline Report verify_sandwich_and_parity(const GridSpec& grid) {
    EnumOptions eo{grid.degree_max, 20'000'000, 1};
    OracleOptions oo{grid.degree_max, 1, true};
    auto records = run_campaign(grid_cases(grid), grid, "sandwich", [&](const CaseSpec& cs, json& rec) {
        Rational hc = hurwitz_complex(cs.g, cs.lam, cs.mu, cs.s, cs.t, oo);
        rec["hc"] = to_json(hc);
        json arrs = json::array(), viol = json::array();
        for (const auto& order : grid_arrangements(grid, cs.s, cs.t)) {
            Distribution d = distribution_from_order(order);
            auto covers = enumerate_covers(cs.g, cs.lam, cs.mu, d, eo);
            BigInt z = zigzag_number_of(covers, true), z_odd = zigzag_number_of(covers, false);
            bool even_fork = detail::any_even_fork_tail(covers);
            bool sym3 = std::any_of(covers.begin(), covers.end(), detail::has_sym3_cycle);
            json arr = {{"order", ram_string(order)}, {"covers", covers.size()}, {"z", to_json(z)},
                        {"z_odd_fork_tails", to_json(z_odd)}, {"splits", json::array()}};
            // multiplicity structure
            long bad_int = 0, bad_odd = 0, bad_par = 0;
            for (const auto& c : covers) {
                auto r = classify_symmetric(c);
                bool zz = is_generalized_zigzag(c, r).has_value();
                int parity = -1;
                for (const auto& s : colouring_summary(c, r, {})) {
                    if (s.effective == 0) continue;
                    bool integral = denominator(s.mult) == 1 && s.mult >= 1;
                    if (!integral) ++bad_int;
                    int p = integral ? static_cast<int>(numerator(s.mult) % 2) : -2;
                    if (p == 1 && !zz) ++bad_odd;
                    if (zz && parity >= 0 && p != parity) ++bad_par;
                    if (parity < 0) parity = p;
                }
            }
            arr["mult_checks"] = {{"non_integral", bad_int}, {"odd_not_zigzag", bad_odd}, {"parity_depends", bad_par}};
            json where = {{"order", ram_string(order)}};
            if (bad_int) viol.push_back(violation("integrality", "multiplicity", where));
            if (bad_odd) viol.push_back(violation("odd_implies_zigzag", "multiplicity", where));
            if (bad_par) viol.push_back(violation("parity_independence", "multiplicity", where));
            int nsplit = grid.include_splittings ? static_cast<int>(order.size()) : 0;
            for (int k = 0; k <= nsplit; ++k) {
                Distribution ds = with_split(d, k);
                Rational hr = real_value(covers, required_signs(ds));
                std::string neg = ram_string({order.begin(), order.begin() + k});
                std::string pos = ram_string({order.begin() + k, order.end()});
                bool lower = Rational(z) <= hr, upper = hr <= hc;
                bool integral = denominator(hr) == 1;
                bool parity = integral && (numerator(hr) - z) % 2 == 0;
                bool lower_odd = Rational(z_odd) <= hr;
                bool parity_odd = integral && (numerator(hr) - z_odd) % 2 == 0;
                arr["splits"].push_back({{"neg", neg}, {"pos", pos}, {"hr", to_json(hr)}, {"lower", lower},
                                         {"upper", upper}, {"parity", parity}, {"lower_odd_fork_tails", lower_odd},
                                         {"parity_odd_fork_tails", parity_odd}});
                json at = {{"order", ram_string(order)}, {"neg", neg}, {"pos", pos}, {"z", to_json(z)},
                           {"hr", to_json(hr)}, {"hc", to_json(hc)}};
                std::string fork_cat = even_fork ? "even-fork-tail" : "other";
                if (!lower) viol.push_back(violation("lower", fork_cat, at));
                if (!parity) viol.push_back(violation("parity", fork_cat, at));
                if (!upper) {
                    std::string cat = denominator(hc) != 1 ? "automorphism-weighting" : sym3 ? "sym3-cycle" : "other";
                    viol.push_back(violation("upper", cat, at));
                }
            }
            arrs.push_back(std::move(arr));
        }
        rec["arrangements"] = std::move(arrs);
        rec["violations"] = std::move(viol);
    });
    return finish("sandwich", std::move(records));
}

// Z over signed splittings of each arrangement, and H^R over arrangements with the same number
// of negative points when s = 0.
inline Report verify_splitting_invariance(const GridSpec& grid) {
    EnumOptions eo{grid.degree_max, 20'000'000, 1};
    auto records = run_campaign(grid_cases(grid), grid, "splitting", [&](const CaseSpec& cs, json& rec) {
        json arrs = json::array(), viol = json::array();
        std::map<int, std::set<Rational>> hr_by_neg;
        for (const auto& order : grid_arrangements(grid, cs.s, cs.t)) {
            Distribution d = distribution_from_order(order);
            auto covers = enumerate_covers(cs.g, cs.lam, cs.mu, d, eo);
            BigInt z = zigzag_number_of(covers);
            bool even_fork = detail::any_even_fork_tail(covers);
            json zs = json::array();
            bool constant = true;
            for (int k = 0; k <= static_cast<int>(order.size()); ++k) {
                auto signs = required_signs(with_split(d, k));
                BigInt zk = detail::signed_zigzag_count(covers, signs);
                zs.push_back(to_json(zk));
                if (zk != z) constant = false;
                if (cs.s == 0) hr_by_neg[k].insert(real_value(covers, signs));
            }
            arrs.push_back({{"order", ram_string(order)}, {"z", to_json(z)}, {"z_by_split", zs}, {"constant", constant}});
            if (!constant)
                viol.push_back(violation("z_splitting", even_fork ? "even-fork-tail" : "other",
                                         {{"order", ram_string(order)}, {"z", to_json(z)}, {"z_by_split", zs}}));
        }
        for (const auto& [k, vals] : hr_by_neg)
            if (vals.size() > 1) viol.push_back(violation("hr_arrangement", "other", {{"negative_points", k}}));
        rec["arrangements"] = std::move(arrs);
        rec["violations"] = std::move(viol);
    });
    return finish("splitting", std::move(records));
}

namespace detail {

// Cases above the main grid whose lambda repeats an odd part >= 3, where proper covers can exist.
inline std::vector<CaseSpec> proper_extra_cases(const GridSpec& grid) {
    std::vector<CaseSpec> out;
    if (grid.proper_extra_d_max <= grid.d_max) return out;
    GridSpec g2 = grid;
    g2.d_max = grid.proper_extra_d_max;
    g2.points_max = std::min(grid.points_max, 4);
    for (auto& c : grid_cases(g2, grid.d_max + 1)) {
        bool repeated = false;
        for (int x : c.lam) repeated = repeated || (x % 2 && x >= 3 && c.lam.multiplicity(x) >= 2);
        if (repeated && c.s >= 1 && c.t >= 1 && c.skip.empty()) out.push_back(std::move(c));
    }
    return out;
}

}  // namespace detail

// Proper count <= Z for every arrangement (s, t >= 1), and the wall-crossing image check.
inline Report verify_proper_lower_bound(const GridSpec& grid) {
    EnumOptions eo{std::max(grid.degree_max, grid.proper_extra_d_max), 20'000'000, 1};
    auto cases = grid_cases(grid);
    auto extra = detail::proper_extra_cases(grid);
    cases.insert(cases.end(), extra.begin(), extra.end());
    auto records = run_campaign(cases, grid, "proper", [&](const CaseSpec& cs, json& rec) {
        json viol = json::array(), arrs = json::array();
        if (cs.s == 0 || cs.t == 0) {
            rec["proper"] = 0;
            rec["note"] = "s=0 or t=0: no properly mixed covers";
            rec["violations"] = viol;
            return;
        }
        auto pm = properly_mixed_covers(cs.g, cs.lam, cs.mu, cs.s, cs.t, eo);
        rec["proper"] = pm.size();
        for (const auto& order : grid_arrangements(grid, cs.s, cs.t)) {
            auto covers = enumerate_covers(cs.g, cs.lam, cs.mu, distribution_from_order(order), eo);
            BigInt z = zigzag_number_of(covers);
            std::set<CanonicalKey> target, image;
            for (const auto& c : covers)
                if (is_generalized_zigzag(c)) target.insert(canonical_key(c));
            bool inside = true;
            for (const auto& c : pm) {
                auto k = canonical_key(wall_crossing_map(c, order));
                inside = inside && target.count(k) > 0;
                image.insert(k);
            }
            bool injective = image.size() == pm.size();
            bool bound = BigInt(pm.size()) <= z;
            arrs.push_back({{"order", ram_string(order)}, {"z", to_json(z)}, {"bound", bound},
                            {"injective", injective}, {"image_inside", inside}});
            json at = {{"order", ram_string(order)}};
            if (!bound) viol.push_back(violation("proper_bound", "other", at));
            if (!injective) viol.push_back(violation("wallcross_injective", "other", at));
            if (!inside) viol.push_back(violation("wallcross_image", "other", at));
        }
        rec["arrangements"] = std::move(arrs);
        rec["violations"] = std::move(viol);
    });
    return finish("proper", std::move(records));
}

// Oracle against the tropical count on the s = 0 grid; the factor table is reported, not applied.
inline Report reconcile_normalization(const GridSpec& grid) {
    EnumOptions eo{grid.degree_max, 20'000'000, 1};
    OracleOptions oo{grid.degree_max, 1, true};
    std::vector<CaseSpec> cases;
    for (auto& c : grid_cases(grid))
        if (c.s == 0) cases.push_back(std::move(c));
    std::mutex mu;
    auto records = run_campaign(cases, grid, "normalization", [&](const CaseSpec& cs, json& rec) {
        Rational hc = hurwitz_complex(cs.g, cs.lam, cs.mu, 0, cs.t, oo);
        Rational tr = complex_tropical_value(cs.g, cs.lam, cs.mu, cs.t, eo);
        rec["oracle"] = to_json(hc);
        rec["tropical"] = to_json(tr);
        json viol = json::array();
        if (tr == 0 || hc == 0) {
            rec["factor"] = nullptr;
            if (tr != hc) viol.push_back(violation("agreement", "zero-mismatch", {}));
        } else {
            Rational f = hc / tr;
            rec["factor"] = to_json(f);
            if (f != 1) viol.push_back(violation("agreement", "factor", {{"factor", to_json(f)}}));
        }
        rec["violations"] = std::move(viol);
    });
    Report rep = finish("normalization", std::move(records));
    std::set<std::string> factors;
    for (const auto& r : rep.doc["cases"])
        if (r.contains("factor") && !r["factor"].is_null()) factors.insert(r["factor"].dump());
    rep.doc["summary"]["distinct_factors"] = json(std::vector<std::string>(factors.begin(), factors.end()));
    return rep;
}

namespace detail {

inline std::set<CanonicalKey> keys_of(const std::vector<TropicalCover>& v) {
    std::set<CanonicalKey> out;
    for (const auto& c : v) out.insert(canonical_key(c));
    return out;
}

inline BigInt count_zigzag_classes(const std::vector<TropicalCover>& covers) {
    BigInt n = 0;
    for (const auto& c : covers)
        if (is_generalized_zigzag(c)) ++n;
    return n;
}

}  // namespace detail

struct ConstructionOptions {
    int jobs = 1;
    int degree_max = 8;
    std::vector<int> family_m = {4, 5, 6, 7};
    std::vector<int> family_m_construct_only = {10};
    std::vector<std::pair<int, int>> asymp2_enumerated = {{1, 1}, {1, 2}};
    std::vector<std::pair<int, int>> asymp2_construct_only = {{2, 1}};
};

inline Report verify_construction_bounds(const ConstructionOptions& opt = {}) {
    EnumOptions eo{opt.degree_max, 20'000'000, opt.jobs};
    std::vector<json> recs;
    auto push = [&](json rec, json viol) {
        rec["violations"] = std::move(viol);
        rec["status"] = "ok";
        recs.push_back(std::move(rec));
    };

    // growing pairs on (1^m)
    for (int m : opt.family_m) {
        auto fam = build_permutation_family(m, opt.jobs);
        auto fk = detail::keys_of(fam);
        auto covers = enumerate_covers(0, ones(m), ones(m), trivial_distribution(m - 1, 0), eo);
        std::set<CanonicalKey> zk;
        for (const auto& c : covers)
            if (is_generalized_zigzag(c)) zk.insert(canonical_key(c));
        BigInt bound = factorial(family_block_count(m));
        bool contained = std::includes(zk.begin(), zk.end(), fk.begin(), fk.end());
        json viol = json::array();
        if (BigInt(zk.size()) < bound) viol.push_back(violation("family_bound", "enumerated", {}));
        if (fk.size() != fam.size()) viol.push_back(violation("family_distinct", "construction", {}));
        if (!contained) viol.push_back(violation("family_inside", "construction", {}));
        push({{"key", "family:m=" + std::to_string(m)}, {"members", fam.size()}, {"distinct", fk.size()},
              {"enumerated_classes", zk.size()}, {"bound", to_json(bound)}},
             viol);
    }
    for (int m : opt.family_m_construct_only) {
        auto fam = build_permutation_family(m, opt.jobs);
        auto fk = detail::keys_of(fam);
        BigInt bound = factorial(family_block_count(m));
        json viol = json::array();
        if (BigInt(fk.size()) < bound || fk.size() != fam.size())
            viol.push_back(violation("family_distinct", "construction", {}));
        push({{"key", "family:m=" + std::to_string(m)}, {"members", fam.size()}, {"distinct", fk.size()},
              {"bound", to_json(bound)}},
             viol);
    }

    // unmixed covers on (1^{2m+1})
    for (auto [m, g] : opt.asymp2_enumerated) {
        auto covers = enumerate_covers(g, ones(2 * m + 1), ones(2 * m + 1), trivial_distribution(0, 4 * m + 2 * g), eo);
        BigInt z = zigzag_number_of(covers);
        Rational bound = asymp2_bound(m, g);
        auto fam = build_asymp2_family(m, g);
        auto fk = detail::keys_of(fam);
        std::set<CanonicalKey> zk;
        for (const auto& c : covers)
            if (is_generalized_zigzag(c)) zk.insert(canonical_key(c));
        json viol = json::array();
        if (Rational(z) < bound) viol.push_back(violation("asymp2_bound", "enumerated", {}));
        if (!std::includes(zk.begin(), zk.end(), fk.begin(), fk.end()))
            viol.push_back(violation("asymp2_inside", "construction", {}));
        push({{"key", "asymp2:m=" + std::to_string(m) + ":g=" + std::to_string(g)}, {"z", to_json(z)},
              {"bound", to_json(bound)}, {"family", fam.size()}, {"distinct", fk.size()}},
             viol);
    }
    for (auto [m, g] : opt.asymp2_construct_only) {
        auto fam = build_asymp2_family(m, g);
        auto fk = detail::keys_of(fam);
        Rational bound = asymp2_bound(m, g);
        json viol = json::array();
        if (fk.size() != fam.size() || Rational(static_cast<long long>(fk.size())) < bound)
            viol.push_back(violation("asymp2_bound", "construction", {}));
        push({{"key", "asymp2:m=" + std::to_string(m) + ":g=" + std::to_string(g)}, {"family", fam.size()},
              {"distinct", fk.size()}, {"bound", to_json(bound)}},
             viol);
    }

    // growing pairs with fixed odd parts
    {
        Partition lam{5, 3, 3, 1}, mu{5, 3, 3, 1};
        int n0 = n0_constant(lam, mu);
        for (int h : {n0 + 4, n0 + 7}) {
            auto fam = build_asymp1_family(0, lam, mu, h, opt.jobs);
            auto fk = detail::keys_of(fam);
            BigInt bound = factorial_bound(h, n0);
            json viol = json::array();
            if (BigInt(fk.size()) < bound || fk.size() != fam.size())
                viol.push_back(violation("asymp1_bound", "construction", {}));
            push({{"key", "asymp1:" + lam.str() + mu.str() + ":h=" + std::to_string(h)}, {"n0", n0},
                  {"members", fam.size()}, {"distinct", fk.size()}, {"bound", to_json(bound)}},
                 viol);
        }
    }

    // properly mixed family: product bound
    struct ProperCase {
        int g;
        Partition lam, mu;
        int extra_h, m;
    };
    for (const auto& pc : std::vector<ProperCase>{{0, {3, 3}, {6}, 4, 2}, {1, {3, 3}, {6}, 5, 2}, {0, {3, 3, 2}, {6, 1, 1}, 4, 3}}) {
        auto choice = proper_choice(pc.lam, pc.mu);
        auto [cl, cm] = proper_core_type(choice);
        int n0 = n0_constant(cl, cm);
        int h = n0 + pc.extra_h;
        auto fam = build_proper_family(pc.g, pc.lam, pc.mu, h, pc.m, 100000, opt.jobs);
        auto fk = detail::keys_of(fam.covers);
        Rational bound = Rational(factorial_bound(h, n0)) * asymp2_bound(pc.m - 1, pc.g);
        bool all_pm = std::all_of(fam.covers.begin(), fam.covers.end(),
                                  [](const TropicalCover& c) { return is_properly_mixed(c).has_value(); });
        json viol = json::array();
        if (Rational(static_cast<long long>(fk.size())) < bound || fk.size() != fam.covers.size() || !all_pm)
            viol.push_back(violation("proper_product_bound", "construction", {}));
        push({{"key", "proper:" + pc.lam.str() + pc.mu.str() + ":g=" + std::to_string(pc.g) + ":h=" + std::to_string(h) +
                          ":m=" + std::to_string(pc.m)},
              {"n0", n0}, {"c", choice.c}, {"c0", n0 + 3}, {"case", choice.sign_case}, {"members", fam.covers.size()},
              {"distinct", fk.size()}, {"bound", to_json(bound)}, {"all_properly_mixed", all_pm}},
             viol);
    }

    // constants of the one-odd-part case
    {
        Partition lam{5}, mu{3, 1, 1};
        auto n0c = N0_constant(lam, mu);
        push({{"key", "N0:" + lam.str() + mu.str()}, {"N0", n0c ? json(*n0c) : json(nullptr)}}, json::array());
    }

    // gluing count law: 2 left covers x 3 right covers
    {
        auto left = build_permutation_family(7);
        auto right_all = build_asymp2_family(2, 1);
        std::vector<TropicalCover> right(right_all.begin(), right_all.begin() + std::min<std::size_t>(3, right_all.size()));
        std::vector<TropicalCover> glued;
        for (const auto& a : left)
            for (const auto& b : right) glued.push_back(glue_first(a, b, 1));
        auto gk = detail::keys_of(glued);
        json viol = json::array();
        if (gk.size() != left.size() * right.size()) viol.push_back(violation("glue_count", "construction", {}));
        push({{"key", "glue:2x3"}, {"left", left.size()}, {"right", right.size()}, {"distinct", gk.size()}}, viol);
    }
    return finish("constructions", std::move(recs));
}

}  // namespace tropz::harness
