#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "tropz/harness.hpp"

using namespace tropz;
using harness::json;

namespace {

constexpr const char* kOrderHelp =
    "Branch point sequences are strings over {2,3}: 2 = SIMPLE, 3 = TRIPLE, read left to right in "
    "increasing base order. --neg lists the negative points, --pos the positive ones after them; "
    "e.g. --neg 32 --pos 22 is (TRIPLE,SIMPLE | SIMPLE,SIMPLE).";

struct Global {
    int degree_max = 8;
    int jobs = 1;
    bool json_out = false;
    std::string emit_covers, emit_dot;
};

Partition parse_partition(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    for (std::string tok; std::getline(ss, tok, ',');) {
        if (tok.empty()) continue;
        std::size_t used = 0;
        int x = std::stoi(tok, &used);
        if (used != tok.size()) throw DomainError("bad partition entry: " + tok);
        v.push_back(x);
    }
    return Partition(std::move(v));
}

void emit(const Global& gl, const std::vector<TropicalCover>& covers) {
    if (!gl.emit_covers.empty()) {
        std::ofstream out(gl.emit_covers);
        for (const auto& c : covers) out << harness::cover_to_json(c).dump() << '\n';
    }
    if (!gl.emit_dot.empty()) {
        std::ofstream out(gl.emit_dot);
        for (std::size_t i = 0; i < covers.size(); ++i) out << harness::cover_to_dot(covers[i], "c" + std::to_string(i));
    }
}

void print_value(const Global& gl, const std::string& what, const json& value) {
    if (gl.json_out) {
        std::cout << json{{"quantity", what}, {"value", value}}.dump() << '\n';
    } else if (value.is_object() && value.contains("num")) {
        std::cout << what << " = " << value["num"].dump() << (value["den"] == 1 ? "" : "/" + value["den"].dump())
                  << '\n';
    } else {
        std::cout << what << " = " << value.dump() << '\n';
    }
}

struct TypeArgs {
    int g = -1;
    std::string lam, mu;
    void add(CLI::App* app, bool need_g = true) {
        if (need_g) app->add_option("--g", g, "genus")->required();
        app->add_option("--lambda", lam, "comma separated parts, e.g. 3,1")->required();
        app->add_option("--mu", mu, "comma separated parts")->required();
    }
};

struct GridArgs {
    harness::GridSpec grid;
    bool no_arrangements = false, no_splittings = false;
    std::string out;
    void add(CLI::App* app) {
        app->add_option("--d-max", grid.d_max, "largest degree");
        app->add_option("--g-max", grid.g_max, "largest genus");
        app->add_option("--points-max", grid.points_max, "bound on s + t");
        app->add_option("--proper-extra-d-max", grid.proper_extra_d_max, "extra degrees for the proper campaign");
        app->add_option("--checkpoint", grid.checkpoint, "JSON-lines checkpoint file");
        app->add_flag("--no-arrangements", no_arrangements, "TRIPLE-first order only");
        app->add_flag("--no-splittings", no_splittings, "all-positive splitting only");
        app->add_option("--out", out, "write the full report here");
    }
    harness::GridSpec spec(const Global& gl) const {
        auto g = grid;
        g.include_arrangements = !no_arrangements;
        g.include_splittings = !no_splittings;
        g.jobs = gl.jobs;
        g.degree_max = gl.degree_max;
        return g;
    }
};

int finish_report(const Global& gl, const harness::Report& rep, const std::string& out) {
    if (!out.empty()) std::ofstream(out) << rep.doc.dump(1) << '\n';
    if (gl.json_out && out.empty())
        std::cout << rep.doc.dump(1) << '\n';
    else
        std::cout << rep.doc["summary"].dump() << '\n';
    return rep.exit_code();
}

std::vector<harness::json> probe_rows(const ProbeTable& t, bool as_float) {
    std::vector<json> rows;
    for (const auto& r : t.rows) {
        json j = {{"g", r.p.g}, {"h", r.p.h}, {"m", r.p.m}};
        if (as_float) {
            j["ratio"] = static_cast<double>(r.ratio);
            j["abs_err"] = static_cast<double>(r.abs_err);
        } else {
            j["ratio"] = r.ratio.str(30);
            j["abs_err"] = r.abs_err.str(30);
        }
        rows.push_back(std::move(j));
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tropical engine for real and complex double Hurwitz numbers with triple ramification"};
    app.footer(kOrderHelp);
    app.require_subcommand(1);
    app.fallthrough();
    Global gl;
    app.add_option("--degree-max", gl.degree_max, "refuse degrees above this");
    app.add_option("--jobs", gl.jobs, "worker threads");
    app.add_flag("--json", gl.json_out, "JSON output");
    app.add_option("--emit-covers", gl.emit_covers, "write covers as JSON lines");
    app.add_option("--emit-dot", gl.emit_dot, "write covers as Graphviz");

    std::function<int()> run;

    // hurwitz
    auto* hz = app.add_subcommand("hurwitz", "Hurwitz numbers");
    hz->require_subcommand(1);
    TypeArgs hc_t;
    int hc_s = 0, hc_tt = 0;
    auto* hc = hz->add_subcommand("complex", "complex number from the factorization oracle");
    hc_t.add(hc);
    hc->add_option("--s", hc_s, "triple points (default 0)");
    hc->add_option("--t", hc_tt, "simple points (default 0)");
    hc->callback([&] {
        run = [&] {
            OracleOptions oo{gl.degree_max, gl.jobs, true};
            Rational v = hurwitz_complex(hc_t.g, parse_partition(hc_t.lam), parse_partition(hc_t.mu), hc_s, hc_tt, oo);
            print_value(gl, "H^C", harness::to_json(v));
            return 0;
        };
    });
    TypeArgs hr_t;
    std::string hr_neg, hr_pos;
    auto* hr = hz->add_subcommand("real", "real number from the tropical count");
    hr_t.add(hr);
    hr->add_option("--neg", hr_neg, "negative points");
    hr->add_option("--pos", hr_pos, "positive points");
    hr->callback([&] {
        run = [&] {
            EnumOptions eo{gl.degree_max, 20'000'000, gl.jobs};
            Rational v = hurwitz_real(hr_t.g, parse_partition(hr_t.lam), parse_partition(hr_t.mu),
                                      parse_ram_string(hr_neg), parse_ram_string(hr_pos), eo);
            print_value(gl, "H^R", harness::to_json(v));
            return 0;
        };
    });

    // zigzag
    auto* zz = app.add_subcommand("zigzag", "zigzag numbers");
    zz->require_subcommand(1);
    TypeArgs zg_t;
    std::string zg_order;
    bool zg_odd_only = false;
    auto* zg = zz->add_subcommand("generalized", "generalized zigzag number of an arrangement");
    zg_t.add(zg);
    zg->add_option("--order", zg_order, "arrangement, e.g. 322")->required();
    zg->add_flag("--odd-fork-tails-only", zg_odd_only, "leave out covers with an (e,e)-fork tail");
    zg->callback([&] {
        run = [&] {
            EnumOptions eo{gl.degree_max, 20'000'000, gl.jobs};
            auto lam = parse_partition(zg_t.lam), mu = parse_partition(zg_t.mu);
            Distribution d = distribution_from_order(parse_ram_string(zg_order));
            check_standing_assumptions(lam, mu, d.s(), d.t());
            auto covers = enumerate_covers(zg_t.g, lam, mu, d, eo);
            std::vector<TropicalCover> zc;
            for (const auto& c : covers)
                if (is_generalized_zigzag(c)) zc.push_back(c);
            emit(gl, zc);
            print_value(gl, "Z", harness::to_json(zigzag_number_of(covers, !zg_odd_only)));
            return 0;
        };
    });
    TypeArgs zp_t;
    int zp_s = 0, zp_tt = 0;
    auto* zp = zz->add_subcommand("proper", "proper zigzag number");
    zp_t.add(zp);
    zp->add_option("--s", zp_s)->required();
    zp->add_option("--t", zp_tt)->required();
    zp->callback([&] {
        run = [&] {
            EnumOptions eo{gl.degree_max, 20'000'000, gl.jobs};
            auto pm = properly_mixed_covers(zp_t.g, parse_partition(zp_t.lam), parse_partition(zp_t.mu), zp_s, zp_tt, eo);
            emit(gl, pm);
            print_value(gl, "Z_proper", static_cast<long long>(pm.size()));
            return 0;
        };
    });

    // enumerate
    TypeArgs en_t;
    std::string en_order, en_neg, en_pos;
    auto* en = app.add_subcommand("enumerate", "enumerate resolving covers of an arrangement");
    en_t.add(en);
    en->add_option("--order", en_order, "unsigned arrangement");
    en->add_option("--neg", en_neg, "negative points (with --pos: also report H^R contributions)");
    en->add_option("--pos", en_pos, "positive points");
    en->callback([&] {
        run = [&] {
            EnumOptions eo{gl.degree_max, 20'000'000, gl.jobs};
            bool signed_mode = !en_neg.empty() || !en_pos.empty();
            Distribution d = signed_mode ? distribution_from_tuple(parse_ram_string(en_neg), parse_ram_string(en_pos))
                                         : distribution_from_order(parse_ram_string(en_order));
            auto covers = enumerate_covers(en_t.g, parse_partition(en_t.lam), parse_partition(en_t.mu), d, eo);
            emit(gl, covers);
            json list = json::array();
            for (const auto& c : covers) {
                json j = harness::cover_to_json(c);
                j["complex_mult"] = harness::to_json(complex_multiplicity(c));
                if (signed_mode) j["real_contribution"] = harness::to_json(real_cover_contribution(c, required_signs(d)));
                list.push_back(std::move(j));
            }
            if (gl.json_out)
                std::cout << json{{"covers", list}}.dump(1) << '\n';
            else
                for (const auto& j : list) std::cout << j["key"].get<std::string>() << (j["zigzag"] ? "  zigzag" : "") << '\n';
            if (!gl.json_out) std::cout << covers.size() << " covers\n";
            return 0;
        };
    });

    // construct
    auto* co = app.add_subcommand("construct", "proof constructions");
    co->require_subcommand(1);
    TypeArgs nv_t;
    auto* nv = co->add_subcommand("nonvanishing", "the non-vanishing zigzag cover");
    nv_t.add(nv);
    nv->callback([&] {
        run = [&] {
            auto c = build_nonvanishing_cover(nv_t.g, parse_partition(nv_t.lam), parse_partition(nv_t.mu));
            emit(gl, {c});
            std::cout << harness::cover_to_json(c).dump(gl.json_out ? 1 : -1) << '\n';
            return 0;
        };
    });
    int fam_m = 4;
    auto* fa = co->add_subcommand("family", "the permutation family on (1^m)");
    fa->add_option("--m", fam_m)->required();
    fa->callback([&] {
        run = [&] {
            auto fam = build_permutation_family(fam_m, gl.jobs);
            emit(gl, fam);
            std::set<CanonicalKey> keys;
            for (const auto& c : fam) keys.insert(canonical_key(c));
            print_value(gl, "members", json{{"count", fam.size()}, {"distinct", keys.size()}});
            return 0;
        };
    });
    int a2_m = 1, a2_g = 0;
    std::vector<int> a2_assign;
    bool a2_all = false;
    auto* a2 = co->add_subcommand("asymp2", "the unmixed (1^{2m+1}) cover with cycles on inward tails");
    a2->add_option("--m", a2_m)->required();
    a2->add_option("--g", a2_g)->required();
    a2->add_option("--assignment", a2_assign, "cycles per inward tail")->delimiter(',');
    a2->add_flag("--all-orders", a2_all, "build every order of the vertex classes");
    a2->callback([&] {
        run = [&] {
            std::vector<TropicalCover> covers;
            if (a2_all) {
                covers = build_asymp2_family(a2_m, a2_g);
            } else {
                auto asg = a2_assign.empty() ? default_cycle_assignment(a2_m, a2_g) : a2_assign;
                covers.push_back(build_asymp2_cover(a2_m, a2_g, asg));
            }
            emit(gl, covers);
            std::set<CanonicalKey> keys;
            for (const auto& c : covers) keys.insert(canonical_key(c));
            print_value(gl, "members",
                        json{{"count", covers.size()}, {"distinct", keys.size()},
                             {"bound", harness::to_json(asymp2_bound(a2_m, a2_g))}});
            return 0;
        };
    });
    TypeArgs wc_t;
    int wc_s = 0, wc_tt = 0;
    std::string wc_order;
    auto* wc = co->add_subcommand("wallcross", "wall-crossing images of all properly mixed covers");
    wc_t.add(wc);
    wc->add_option("--s", wc_s)->required();
    wc->add_option("--t", wc_tt)->required();
    wc->add_option("--order", wc_order, "target arrangement")->required();
    wc->callback([&] {
        run = [&] {
            EnumOptions eo{gl.degree_max, 20'000'000, gl.jobs};
            auto pm = properly_mixed_covers(wc_t.g, parse_partition(wc_t.lam), parse_partition(wc_t.mu), wc_s, wc_tt, eo);
            std::vector<TropicalCover> img;
            for (const auto& c : pm) img.push_back(wall_crossing_map(c, parse_ram_string(wc_order)));
            emit(gl, img);
            std::set<CanonicalKey> keys;
            for (const auto& c : img) keys.insert(canonical_key(c));
            print_value(gl, "images", json{{"count", img.size()}, {"distinct", keys.size()}});
            return 0;
        };
    });

    // verify
    auto* ve = app.add_subcommand("verify", "verification campaigns");
    ve->require_subcommand(1);
    GridArgs va;
    for (auto [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"sandwich", "Z <= H^R <= H^C and parity"},
             {"splitting", "invariance over signed splittings"},
             {"proper", "proper count <= Z and the wall-crossing image"},
             {"normalization", "oracle against tropical count at s = 0"}}) {
        auto* sub = ve->add_subcommand(name, help);
        va.add(sub);
        sub->callback([&, name] {
            run = [&, name] {
                auto spec = va.spec(gl);
                harness::Report rep = name == "sandwich"    ? harness::verify_sandwich_and_parity(spec)
                                      : name == "splitting" ? harness::verify_splitting_invariance(spec)
                                      : name == "proper"    ? harness::verify_proper_lower_bound(spec)
                                                            : harness::reconcile_normalization(spec);
                return finish_report(gl, rep, va.out);
            };
        });
    }
    std::string vc_out;
    auto* vc = ve->add_subcommand("constructions", "construction bounds");
    vc->add_option("--out", vc_out, "write the full report here");
    vc->callback([&] {
        run = [&] {
            harness::ConstructionOptions opt;
            opt.jobs = gl.jobs;
            opt.degree_max = gl.degree_max;
            return finish_report(gl, harness::verify_construction_bounds(opt), vc_out);
        };
    });

    // asymptotics
    auto* as = app.add_subcommand("asymptotics", "limit probes");
    as->require_subcommand(1);
    std::string pr_lemma = "a2", pr_ray;
    long long pr_n0 = 0;
    bool pr_float = false;
    auto* pr = as->add_subcommand("probe", "evaluate a limit ratio along a ray; CSV or JSON");
    pr->add_option("--lemma", pr_lemma, "a1-1 | a1-2 | a2")->check(CLI::IsMember({"a1-1", "a1-2", "a2"}));
    pr->add_option("--ray", pr_ray, "points g:h:m separated by commas")->required();
    pr->add_option("--n0", pr_n0, "construction constant");
    pr->add_flag("--float", pr_float, "floating point output");
    pr->callback([&] {
        run = [&] {
            std::vector<ProbePoint> ray;
            std::stringstream ss(pr_ray);
            for (std::string tok; std::getline(ss, tok, ',');) {
                ProbePoint p;
                char c1 = 0, c2 = 0;
                std::stringstream ts(tok);
                if (!(ts >> p.g >> c1 >> p.h >> c2 >> p.m) || c1 != ':' || c2 != ':')
                    throw DomainError("ray points are g:h:m");
                ray.push_back(p);
            }
            LimitLemma lem = pr_lemma == "a1-1" ? LimitLemma::A1Part1 : pr_lemma == "a1-2" ? LimitLemma::A1Part2 : LimitLemma::A2;
            auto t = limit_probe(lem, ray, pr_n0);
            auto rows = probe_rows(t, pr_float);
            if (gl.json_out) {
                std::cout << json{{"rows", rows}, {"monotone", t.monotone}}.dump(1) << '\n';
            } else {
                std::cout << "g,h,m,ratio,abs_err\n";
                for (const auto& r : rows)
                    std::cout << r["g"] << ',' << r["h"] << ',' << r["m"] << ','
                              << (pr_float ? r["ratio"].dump() : r["ratio"].get<std::string>()) << ','
                              << (pr_float ? r["abs_err"].dump() : r["abs_err"].get<std::string>()) << '\n';
            }
            return t.monotone ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    try {
        return run ? run() : 0;
    } catch (const ResourceError& e) {
        std::cerr << "resource: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
