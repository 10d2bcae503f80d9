// Command-line front end. Talks to the library only through the C API.

#include "polyinv/polyinv.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

struct Failure {
    pi_status status;
    std::string message;
};

struct UsageFailure {
    std::string message;
};

void check(pi_status s) {
    if (s != PI_OK) {
        throw Failure{s, pi_last_error()};
    }
}

std::string take(char* s) {
    std::string out = s == nullptr ? "" : s;
    pi_string_free(s);
    return out;
}

/// Decimal integer from the library, as a JSON number when exact in a double.
Json number(const std::string& decimal) {
    const bool negative = !decimal.empty() && decimal[0] == '-';
    if (decimal.size() - (negative ? 1 : 0) <= 15) {
        return std::stoll(decimal);
    }
    return decimal;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Failure{PI_ERR_INPUT, origin + ": malformed JSON: " + e.what()};
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Failure{PI_ERR_INPUT, "cannot read '" + path + "'"};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Globals {
    std::uint64_t seed = 0;
    double tol = 1e-8;
    bool plain = false;
    bool verbose = false;
    bool paper_sign = false;
};

struct Outcome {
    std::string command;
    Json inputs = Json::object();
    Json result;
    std::optional<Json> breakdown;
    bool numeric = false;
    std::string plain_text;
};

template <typename Handle, void (*Free)(Handle*)>
struct Owned {
    Handle* ptr = nullptr;
    ~Owned() { Free(ptr); }
};
using SystemHandle = Owned<pi_system, pi_system_free>;
using PolytopeHandle = Owned<pi_polytope, pi_polytope_free>;

pi_crit_options crit_options(const Globals& g) {
    pi_crit_options o = pi_crit_default_options();
    o.tolerance = g.tol;
    o.seed = g.seed;
    return o;
}

// ---------------------------------------------------------------------------

struct SystemArgs {
    std::string file;
    std::optional<long> param;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--system", file, "System JSON file")->required();
        cmd->add_option("--param", param, "Value substituted for \"param\" degrees");
    }

    void load(SystemHandle& h, Outcome& out) const {
        const std::string text = read_file(file);
        out.inputs["system"] = parse_json_text(text, file);
        out.inputs["param"] = param ? Json(*param) : Json(nullptr);
        check(pi_system_from_json(text.c_str(), param ? 1 : 0, param.value_or(0), &h.ptr));
    }
};

struct WeightArgs {
    std::string file;
    std::string inline_json;

    void add_to(CLI::App* cmd) {
        auto* f = cmd->add_option("--weights", file, "Weight set JSON file");
        auto* j = cmd->add_option("--weights-json", inline_json, "Weight set as inline JSON");
        f->excludes(j);
    }

    std::string load(Outcome& out) const {
        if (file.empty() && inline_json.empty()) {
            throw UsageFailure{"one of --weights or --weights-json is required"};
        }
        const std::string text = file.empty() ? inline_json : read_file(file);
        out.inputs["weights"] = parse_json_text(text, file.empty() ? "--weights-json" : file);
        return text;
    }
};

void crit_result(Outcome& out, const std::string& report_text) {
    Json report = parse_json_text(report_text, "report");
    out.numeric = true;
    out.plain_text = report["count"].dump();
    out.result = std::move(report);
}

std::vector<double> complex_list(const Json& j, const char* what) {
    std::vector<double> out;
    auto push = [&](const Json& z) {
        if (z.is_number()) {
            out.push_back(z.get<double>());
            out.push_back(0.0);
        } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
            out.push_back(z[0].get<double>());
            out.push_back(z[1].get<double>());
        } else {
            throw Failure{PI_ERR_INPUT, std::string(what) + ": entries must be numbers or [re, im] pairs"};
        }
    };
    if (!j.is_array()) {
        throw Failure{PI_ERR_INPUT, std::string(what) + " must be an array"};
    }
    for (const auto& z : j) {
        push(z);
    }
    return out;
}

std::pair<double, double> complex_value(const Json& j) {
    const auto v = complex_list(Json::array({j}), "c");
    return {v[0], v[1]};
}

std::vector<double> random_complex(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    std::vector<double> out;
    for (std::size_t i = 0; i < 2 * count; ++i) {
        out.push_back(normal(rng));
    }
    return out;
}

std::vector<std::int64_t> parse_support(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw Failure{PI_ERR_INPUT, "support entry '" + item + "' is not an integer"};
        }
    }
    return out;
}

void print(const Outcome& out, const Globals& g) {
    if (g.plain) {
        if (!out.plain_text.empty()) {
            std::cout << out.plain_text << "\n";
        } else if (out.result.is_string()) {
            std::cout << out.result.get<std::string>() << "\n";
        } else {
            std::cout << out.result.dump() << "\n";
        }
        return;
    }
    Json doc;
    doc["command"] = out.command;
    doc["inputs_digest"] = fnv1a(Json{{"command", out.command}, {"inputs", out.inputs}}.dump());
    doc["result"] = out.result;
    if (out.breakdown) {
        doc["breakdown"] = *out.breakdown;
    }
    if (out.numeric) {
        doc["seed"] = g.seed;
    }
    std::cout << doc.dump(2) << "\n";
}

int exit_code(pi_status s) {
    switch (s) {
        case PI_ERR_INPUT:
        case PI_ERR_PARSE:
        case PI_ERR_DOMAIN: return 2;
        case PI_ERR_GENERICITY: return 3;
        default: return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact polytope, Euler characteristic and critical point calculator"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "Seed for numeric commands")->capture_default_str();
    app.add_option("--tol", g.tol, "Relative residual tolerance for numeric commands")->capture_default_str();
    app.add_flag("--plain", g.plain, "Print the bare result instead of JSON");
    app.add_flag("--verbose", g.verbose, "Diagnostics on standard error");
    app.add_flag("--paper-sign", g.paper_sign, "Also report mu with the opposite sign convention");

    Outcome out;
    std::function<void()> action;

    // newton-polytope
    auto* np = app.add_subcommand("newton-polytope", "Newton polytope of a Laurent polynomial");
    std::string np_poly, np_vars, np_system;
    std::size_t np_index = 0;
    std::optional<long> np_param;
    np->add_option("--poly", np_poly, "Polynomial text");
    np->add_option("--vars", np_vars, "Comma-separated variable names (default x1, x2, ...)");
    np->add_option("--system", np_system, "System JSON file");
    np->add_option("--index", np_index, "Polynomial index in --system")->capture_default_str();
    np->add_option("--param", np_param, "Value substituted for \"param\" degrees");
    np->callback([&] {
        action = [&] {
            out.command = "newton-polytope";
            SystemHandle sys;
            if (!np_poly.empty() == !np_system.empty()) {
                throw UsageFailure{"give exactly one of --poly or --system"};
            }
            if (!np_poly.empty()) {
                std::vector<std::string> names;
                std::stringstream ss(np_vars);
                for (std::string v; std::getline(ss, v, ',');) {
                    if (!v.empty()) {
                        names.push_back(v);
                    }
                }
                std::vector<const char*> cnames;
                for (const auto& n : names) {
                    cnames.push_back(n.c_str());
                }
                const char* text = np_poly.c_str();
                out.inputs = {{"poly", np_poly}, {"vars", names}};
                check(pi_system_parse(&text, 1, cnames.data(), cnames.size(), &sys.ptr));
                np_index = 0;
            } else {
                SystemArgs{np_system, np_param}.load(sys, out);
                out.inputs["index"] = np_index;
            }
            PolytopeHandle p;
            check(pi_system_newton_polytope(sys.ptr, np_index, &p.ptr));
            char* s = nullptr;
            check(pi_polytope_to_json(p.ptr, &s));
            out.result = parse_json_text(take(s), "polytope");
        };
    });

    // volume
    auto* vol = app.add_subcommand("volume", "Normalized volume of a lattice polytope");
    std::string vol_file, vol_points;
    vol->add_option("--file", vol_file, "Polytope JSON file");
    vol->add_option("--points", vol_points, "Polytope as inline JSON (object or array of points)");
    vol->callback([&] {
        action = [&] {
            out.command = "volume";
            if (vol_file.empty() == vol_points.empty()) {
                throw UsageFailure{"give exactly one of --file or --points"};
            }
            const std::string text = vol_file.empty() ? vol_points : read_file(vol_file);
            out.inputs["polytope"] = parse_json_text(text, vol_file.empty() ? "--points" : vol_file);
            PolytopeHandle p;
            check(pi_polytope_from_json(text.c_str(), &p.ptr));
            char* s = nullptr;
            check(pi_polytope_normalized_volume(p.ptr, &s));
            out.result = number(take(s));
        };
    });

    // mixed-volume
    auto* mv = app.add_subcommand("mixed-volume", "Normalized mixed volume of n polytopes in dimension n");
    std::string mv_file;
    mv->add_option("--file", mv_file, "JSON file with a list of polytopes")->required();
    mv->callback([&] {
        action = [&] {
            out.command = "mixed-volume";
            const std::string text = read_file(mv_file);
            out.inputs["polytopes"] = parse_json_text(text, mv_file);
            char* s = nullptr;
            check(pi_mixed_volume_json(text.c_str(), &s));
            out.result = number(take(s));
        };
    });

    // bkk / chi-torus / chi-affine
    SystemArgs bkk_args, torus_args, affine_args;
    auto* bkk = app.add_subcommand("bkk", "Generic root count of a square system in the torus");
    bkk_args.add_to(bkk);
    bkk->callback([&] {
        action = [&] {
            out.command = "bkk";
            SystemHandle sys;
            bkk_args.load(sys, out);
            char* s = nullptr;
            check(pi_bkk_count(sys.ptr, &s));
            out.result = number(take(s));
        };
    });
    auto* torus = app.add_subcommand("chi-torus", "Euler characteristic of a generic complete intersection in the torus");
    torus_args.add_to(torus);
    torus->callback([&] {
        action = [&] {
            out.command = "chi-torus";
            SystemHandle sys;
            torus_args.load(sys, out);
            char* s = nullptr;
            check(pi_chi_torus(sys.ptr, &s));
            out.result = number(take(s));
        };
    });
    auto* affine = app.add_subcommand("chi-affine", "Euler characteristic of a generic complete intersection in affine space");
    affine_args.add_to(affine);
    affine->callback([&] {
        action = [&] {
            out.command = "chi-affine";
            SystemHandle sys;
            affine_args.load(sys, out);
            char* s = nullptr;
            check(pi_chi_affine(sys.ptr, &s));
            Json report = parse_json_text(take(s), "report");
            out.result = report["total"];
            if (g.verbose) {
                out.breakdown = report["strata"];
            }
        };
    });

    // orbit
    auto* orbit = app.add_subcommand("orbit", "Orbit degrees, closedness and sections");
    orbit->require_subcommand(1);
    WeightArgs deg_w, closed_w;
    auto* odeg = orbit->add_subcommand("degree", "Degree of a generic torus orbit");
    deg_w.add_to(odeg);
    odeg->callback([&] {
        action = [&] {
            out.command = "orbit degree";
            const std::string text = deg_w.load(out);
            char* s = nullptr;
            check(pi_orbit_degree(text.c_str(), &s));
            out.result = number(take(s));
            int closed = 0;
            check(pi_orbit_is_closed(text.c_str(), &closed));
            Json b;
            b["origin_interior"] = closed != 0;
            if (closed != 0) {
                check(pi_orbit_crit_count(text.c_str(), &s));
                b["crit_count"] = number(take(s));
            }
            if (g.verbose) {
                out.breakdown = b;
            }
        };
    });
    auto* oclosed = orbit->add_subcommand("closed", "Whether the orbit map is a closed embedding");
    closed_w.add_to(oclosed);
    oclosed->callback([&] {
        action = [&] {
            out.command = "orbit closed";
            const std::string text = closed_w.load(out);
            int closed = 0;
            check(pi_orbit_is_closed(text.c_str(), &closed));
            out.result = closed != 0;
        };
    });
    auto* osec = orbit->add_subcommand("section-chi", "Euler characteristic of a generic hyperplane section");
    std::string sec_chi = "0", sec_deg, sec_file;
    long sec_dim = 0;
    osec->add_option("--chi", sec_chi, "Euler characteristic of the orbit")->capture_default_str();
    osec->add_option("--dim", sec_dim, "Dimension of the orbit");
    osec->add_option("--deg", sec_deg, "Degree of the orbit");
    osec->add_option("--file", sec_file, "JSON file with chi, dim and deg");
    osec->callback([&] {
        action = [&] {
            out.command = "orbit section-chi";
            if (!sec_file.empty()) {
                const Json j = parse_json_text(read_file(sec_file), sec_file);
                try {
                    sec_chi = j.contains("chi") ? j.at("chi").dump() : "0";
                    sec_dim = j.at("dim").get<long>();
                    sec_deg = j.at("deg").dump();
                } catch (const nlohmann::json::exception& e) {
                    throw Failure{PI_ERR_INPUT, sec_file + ": " + e.what()};
                }
                for (auto* v : {&sec_chi, &sec_deg}) {
                    if (v->size() >= 2 && v->front() == '"') {
                        *v = v->substr(1, v->size() - 2);
                    }
                }
            } else if (sec_deg.empty() || osec->count("--dim") == 0) {
                throw UsageFailure{"--dim and --deg are required without --file"};
            }
            out.inputs = {{"chi", sec_chi}, {"dim", sec_dim}, {"deg", sec_deg}};
            char* s = nullptr;
            check(pi_section_chi(sec_chi.c_str(), sec_dim, sec_deg.c_str(), &s));
            out.result = number(take(s));
        };
    });
    auto* ocat = orbit->add_subcommand("catalog", "Spherical module catalog");
    std::optional<int> cat_id;
    std::optional<long> cat_n, cat_m;
    bool cat_section = false;
    ocat->add_option("--id", cat_id, "Entry id 0-37 (all entries when omitted)");
    ocat->add_option("--n", cat_n, "Parameter n");
    ocat->add_option("--m", cat_m, "Parameter m");
    ocat->add_flag("--section-chi", cat_section, "Report the section Euler characteristic of the entry");
    ocat->callback([&] {
        action = [&] {
            out.command = "orbit catalog";
            out.inputs = {{"id", cat_id ? Json(*cat_id) : Json(nullptr)},
                          {"n", cat_n ? Json(*cat_n) : Json(nullptr)},
                          {"m", cat_m ? Json(*cat_m) : Json(nullptr)},
                          {"section_chi", cat_section}};
            char* s = nullptr;
            if (!cat_id) {
                if (cat_section || cat_n || cat_m) {
                    throw UsageFailure{"--n, --m and --section-chi need --id"};
                }
                check(pi_catalog_json(&s));
                out.result = parse_json_text(take(s), "catalog");
                return;
            }
            const int defaults = cat_n || cat_m ? 0 : 1;
            check(pi_catalog_entry(*cat_id, defaults, cat_n.value_or(0), cat_m.value_or(0), &s));
            Json entry = parse_json_text(take(s), "entry");
            if (cat_section) {
                check(pi_catalog_section_chi(*cat_id, defaults, cat_n.value_or(0), cat_m.value_or(0), &s));
                out.result = number(take(s));
                if (g.verbose) {
                    out.breakdown = entry;
                }
            } else {
                out.result = entry;
            }
        };
    });

    // crit
    auto* crit = app.add_subcommand("crit", "Numeric critical point and root counts");
    crit->require_subcommand(1);
    auto* cq = crit->add_subcommand("quadric", "Critical points of a linear function on x.x = c");
    std::string cq_file;
    std::size_t cq_n = 0;
    cq->add_option("--file", cq_file, "JSON file {\"f\": [...], \"c\": ...}");
    cq->add_option("--n", cq_n, "Draw a random f of this length from --seed (c = 1)");
    cq->callback([&] {
        action = [&] {
            out.command = "crit quadric";
            std::vector<double> f;
            std::pair<double, double> c{1.0, 0.0};
            if (!cq_file.empty()) {
                const Json j = parse_json_text(read_file(cq_file), cq_file);
                if (!j.contains("f")) {
                    throw Failure{PI_ERR_INPUT, cq_file + ": missing field 'f'"};
                }
                f = complex_list(j.at("f"), "f");
                if (j.contains("c")) {
                    c = complex_value(j.at("c"));
                }
                out.inputs = j;
            } else if (cq_n > 0) {
                f = random_complex(cq_n, g.seed);
                out.inputs = {{"n", cq_n}};
            } else {
                throw UsageFailure{"give --file or --n"};
            }
            const pi_crit_options o = crit_options(g);
            char* s = nullptr;
            check(pi_quadric_crit(f.size() / 2, f.data(), c.first, c.second, &o, &s));
            crit_result(out, take(s));
        };
    });
    auto* cd = crit->add_subcommand("det", "Critical points of tr(F M) on det M = c");
    std::string cd_file;
    std::size_t cd_n = 0;
    cd->add_option("--file", cd_file, "JSON file {\"F\": [[...], ...], \"c\": ...}");
    cd->add_option("--n", cd_n, "Draw a random n x n F from --seed (c = 1)");
    cd->callback([&] {
        action = [&] {
            out.command = "crit det";
            std::vector<double> F;
            std::size_t n = 0;
            std::pair<double, double> c{1.0, 0.0};
            if (!cd_file.empty()) {
                const Json j = parse_json_text(read_file(cd_file), cd_file);
                if (!j.contains("F") || !j.at("F").is_array()) {
                    throw Failure{PI_ERR_INPUT, cd_file + ": missing matrix 'F'"};
                }
                n = j.at("F").size();
                for (const auto& row : j.at("F")) {
                    const auto r = complex_list(row, "F row");
                    if (r.size() != 2 * n) {
                        throw Failure{PI_ERR_INPUT, cd_file + ": F must be square"};
                    }
                    F.insert(F.end(), r.begin(), r.end());
                }
                if (j.contains("c")) {
                    c = complex_value(j.at("c"));
                }
                out.inputs = j;
            } else if (cd_n > 0) {
                n = cd_n;
                F = random_complex(n * n, g.seed);
                out.inputs = {{"n", cd_n}};
            } else {
                throw UsageFailure{"give --file or --n"};
            }
            const pi_crit_options o = crit_options(g);
            char* s = nullptr;
            check(pi_det_crit(n, F.data(), c.first, c.second, &o, &s));
            crit_result(out, take(s));
        };
    });
    auto* cu = crit->add_subcommand("uni", "Critical points (or roots) in C* of a generic univariate Laurent polynomial");
    std::string cu_support;
    bool cu_roots = false;
    cu->add_option("--support", cu_support, "Comma-separated exponents, e.g. -1,0,2")->required()->allow_extra_args(false);
    cu->add_flag("--roots", cu_roots, "Count roots of F instead of critical points");
    cu->callback([&] {
        action = [&] {
            out.command = cu_roots ? "crit uni --roots" : "crit uni";
            const auto support = parse_support(cu_support);
            out.inputs = {{"support", support}, {"roots", cu_roots}};
            const pi_crit_options o = crit_options(g);
            char* s = nullptr;
            check(cu_roots ? pi_univariate_root_count(support.data(), support.size(), &o, &s)
                           : pi_univariate_crit_count(support.data(), support.size(), &o, &s));
            crit_result(out, take(s));
        };
    });
    SystemArgs cb_args;
    auto* cb = crit->add_subcommand("biv", "Common roots in (C*)^2 of a generic bivariate system");
    cb_args.add_to(cb);
    cb->callback([&] {
        action = [&] {
            out.command = "crit biv";
            SystemHandle sys;
            cb_args.load(sys, out);
            const pi_crit_options o = crit_options(g);
            char* s = nullptr;
            check(pi_bivariate_root_count(sys.ptr, &o, &s));
            crit_result(out, take(s));
        };
    });

    // chern
    auto* chern = app.add_subcommand("chern", "Intersection-ring Euler characteristics");
    chern->require_subcommand(1);
    std::string chern_file;
    auto chern_cmd = [&](const char* name, const char* field, const char* help) {
        auto* c = chern->add_subcommand(name, help);
        c->add_option("--data", chern_file, "IntersectionData JSON file")->required();
        c->callback([&, name, field] {
            action = [&, name, field] {
                out.command = std::string("chern ") + name;
                const std::string text = read_file(chern_file);
                out.inputs["data"] = parse_json_text(text, chern_file);
                char* s = nullptr;
                check(pi_chern_report(text.c_str(), &s));
                Json report = parse_json_text(take(s), "report");
                out.result = report[field];
                if (std::string(field) == "mu" && g.paper_sign) {
                    out.result = Json{{"mu", report["mu"]}, {"mu_paper_sign", report["mu_paper_sign"]}};
                    out.plain_text = report["mu"].dump() + " " + report["mu_paper_sign"].dump();
                }
                if (g.verbose) {
                    report.erase("data");
                    out.breakdown = report;
                }
            };
        });
    };
    chern_cmd("chi-d", "chi_D", "Euler characteristic of the divisor D");
    chern_cmd("chi-affine", "chi_affine", "Euler characteristic of the affine part of D");
    chern_cmd("mu", "mu", "Critical points of a generic linear function on the affine part of M");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        action();
    } catch (const UsageFailure& f) {
        std::cerr << "usage error: " << f.message << "\n";
        return 2;
    } catch (const Failure& f) {
        std::cerr << pi_status_name(f.status) << ": " << f.message << "\n";
        return exit_code(f.status);
    }
    print(out, g);
    if (g.verbose) {
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::cerr << "[" << out.command << "] library " << pi_version() << ", " << ms << " ms\n";
    }
    return 0;
}
