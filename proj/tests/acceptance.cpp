// One PASS/FAIL line per acceptance criterion. Exit status is 0 iff every outcome matches the
// expectation table below; known failures are listed in kExpectedFail with their analysis
// kept alongside the project notes.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <thread>

#include "tropz/harness.hpp"

using namespace tropz;
using namespace tropz::harness;

namespace {

const std::set<int> kExpectedFail = {3};

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int hw_jobs() { return static_cast<int>(std::max(2u, std::min(8u, std::thread::hardware_concurrency()))); }

GridSpec main_grid(int jobs) {
    GridSpec g;
    g.d_max = 5;
    g.g_max = 1;
    g.points_max = 5;
    g.jobs = jobs;
    return g;
}

std::string categories(const Report& r) { return r.doc["summary"]["by_category"].dump(); }

Outcome oracle_values() {
    struct Case {
        int g;
        Partition lam, mu;
        int t;
        Rational expect;
    };
    std::vector<Case> cases{{0, {1, 1, 1}, {1, 1, 1}, 4, 4}, {1, {3}, {3}, 2, 2}, {0, {2, 1}, {1, 1, 1}, 3, 4}};
    bool ok = true;
    double worst = 0;
    for (const auto& c : cases) {
        auto t0 = std::chrono::steady_clock::now();
        Rational v = hurwitz_complex(c.g, c.lam, c.mu, 0, c.t);
        double dt = seconds_since(t0);
        worst = std::max(worst, dt);
        ok = ok && v == c.expect && dt < 1.0;
    }
    return {ok, "three oracle values, slowest " + std::to_string(worst) + " s"};
}

Outcome tropical_agreement() {
    GridSpec g = main_grid(hw_jobs());
    g.points_max = 64;  // s = 0: every simple-branching type up to degree 5
    Report r = reconcile_normalization(g);
    const auto& s = r.doc["summary"];
    return {r.violations() == 0 && r.resource_notes() == 0,
            std::to_string(s["cases"].get<long>() - s["skipped"].get<long>()) + " cases, factors " +
                s["distinct_factors"].dump()};
}

Outcome sandwich(const Report& r) {
    long odd_lower = 0, odd_parity = 0;
    for (const auto& c : r.doc["cases"]) {
        if (!c.contains("arrangements")) continue;
        for (const auto& a : c["arrangements"])
            for (const auto& s : a["splits"]) {
                odd_lower += !s["lower_odd_fork_tails"].get<bool>();
                odd_parity += !s["parity_odd_fork_tails"].get<bool>();
            }
    }
    return {r.exit_code() == 0, std::to_string(r.violations()) + " violations " + categories(r) +
                                    "; with odd-fork tails only: lower " + std::to_string(odd_lower) + ", parity " +
                                    std::to_string(odd_parity)};
}

Outcome invariance(const Report& r) {
    return {r.exit_code() == 0, std::to_string(r.doc["summary"]["cases"].get<long>()) + " cases, " +
                                    std::to_string(r.violations()) + " violations"};
}

const json* find_record(const Report& r, const std::string& key) {
    for (const auto& c : r.doc["cases"])
        if (c["key"] == key) return &c;
    return nullptr;
}

Outcome family_bound(const Report& cons) {
    bool ok = true;
    std::string detail;
    for (int m : {4, 5, 6, 7, 10}) {
        const json* rec = find_record(cons, "family:m=" + std::to_string(m));
        if (!rec) return {false, "missing family record"};
        ok = ok && (*rec)["violations"].empty() && (*rec)["members"] == (*rec)["distinct"];
        detail += "m=" + std::to_string(m) + ":" + (*rec)["distinct"].dump();
        if (rec->contains("enumerated_classes")) detail += "/" + (*rec)["enumerated_classes"].dump();
        detail += " ";
    }
    return {ok, detail + "(members/enumerated classes)"};
}

Outcome asymp2_bound_check(const Report& cons) {
    bool ok = true;
    std::string detail;
    for (const char* key : {"asymp2:m=1:g=1", "asymp2:m=1:g=2", "asymp2:m=2:g=1"}) {
        const json* rec = find_record(cons, key);
        if (!rec) return {false, "missing asymp2 record"};
        ok = ok && (*rec)["violations"].empty();
        detail += std::string(key) + " " + (rec->contains("z") ? "Z=" + (*rec)["z"].dump() : "family=" + (*rec)["distinct"].dump()) +
                  " ";
    }
    return {ok, detail};
}

Outcome probes() {
    bool ok = abs(lemma_a1_ratio(1, 3, 10000) - 1) < Real(0.01);
    auto t = limit_probe(LimitLemma::A2, {{1000, 1000, 1000}, {10000, 10000, 10000}, {100000, 100000, 100000},
                                          {1000000, 1000000, 1000000}});
    for (std::size_t i = 1; i < t.rows.size(); ++i) ok = ok && t.rows[i].abs_err < t.rows[i - 1].abs_err;
    Real rel = abs(log_factorial(10000) - log_factorial_exact(10000)) / log_factorial_exact(10000);
    ok = ok && rel < Real(1e-9);
    return {ok, "fixed-m ratio at g=1e4: " + lemma_a1_ratio(1, 3, 10000).str(6) + ", |S-1| at 1e6: " +
                    t.rows.back().abs_err.str(4) + ", lgamma rel err " + rel.str(3)};
}

}  // namespace

int main() {
    std::cout << std::unitbuf;
    const int jobs = hw_jobs();
    std::vector<std::pair<int, Outcome>> results;
    auto record = [&](int id, Outcome o) {
        bool expected_pass = !kExpectedFail.count(id);
        std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL")
                  << (o.pass == expected_pass ? "" : o.pass ? " (unexpected pass)" : " (unexpected failure)")
                  << (!expected_pass && !o.pass ? " (expected)" : "") << " - " << o.detail << '\n';
        results.emplace_back(id, std::move(o));
    };

    auto t0 = std::chrono::steady_clock::now();
    record(1, oracle_values());
    record(2, tropical_agreement());

    Report sand = verify_sandwich_and_parity(main_grid(jobs));
    record(3, sandwich(sand));

    Report split = verify_splitting_invariance(main_grid(jobs));
    record(4, invariance(split));

    ConstructionOptions copt;
    copt.jobs = jobs;
    Report cons = verify_construction_bounds(copt);
    record(5, family_bound(cons));
    record(6, asymp2_bound_check(cons));

    Report proper = verify_proper_lower_bound(main_grid(jobs));
    record(7, {proper.exit_code() == 0, invariance(proper).detail});

    long mult_viol = 0;
    for (const auto& c : sand.doc["cases"])
        if (c.contains("violations"))
            for (const auto& v : c["violations"])
                if (v["category"] == "multiplicity") ++mult_viol;
    record(8, {mult_viol == 0 && sand.resource_notes() == 0, std::to_string(mult_viol) + " multiplicity violations"});

    record(9, probes());

    bool same = verify_sandwich_and_parity(main_grid(1)).doc.dump() == sand.doc.dump() &&
                verify_splitting_invariance(main_grid(1)).doc.dump() == split.doc.dump() &&
                verify_proper_lower_bound(main_grid(1)).doc.dump() == proper.doc.dump();
    ConstructionOptions serial;
    serial.jobs = 1;
    same = same && verify_construction_bounds(serial).doc.dump() == cons.doc.dump();
    record(10, {same, "reports at --jobs 1 and --jobs " + std::to_string(jobs) + (same ? " identical" : " differ")});

    int mismatches = 0;
    for (const auto& [id, o] : results)
        if (o.pass == static_cast<bool>(kExpectedFail.count(id))) ++mismatches;
    std::cout << "total " << seconds_since(t0) << " s; " << mismatches << " outcome(s) differ from expectation\n";
    return mismatches == 0 ? 0 : 1;
}
