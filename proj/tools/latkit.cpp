// Command-line surface for the lattice toolkit: property checks, Moebius
// tables, crosscut complexes, quotients, doublings, chamber enumeration,
// labelling search, and the verification suites.
//
// Exit codes: 0 all verdicts hold, 1 some property fails, 2 usage or
// input error (with a machine-readable error object on stdout).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "latkit/catalog.hpp"
#include "latkit/congruence.hpp"
#include "latkit/doubling.hpp"
#include "latkit/json_io.hpp"
#include "latkit/lattice.hpp"
#include "latkit/report.hpp"
#include "latkit/verify.hpp"

namespace {

using latkit::Json;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw latkit::InvalidInput("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw latkit::InvalidInput(std::string("malformed json: ") + e.what());
    }
    return j;
}

std::pair<std::string, std::string> split_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw latkit::InvalidInput("expected a comma-separated pair: " + s);
    return {s.substr(0, comma), s.substr(comma + 1)};
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

latkit::Chamber parse_base(const latkit::Arrangement& arr, const std::string& base) {
    if (base == "auto") return latkit::base_chamber_auto(arr);
    if (static_cast<int>(base.size()) != arr.size())
        throw latkit::InvalidInput("base sign string length must match the hyperplane count");
    latkit::Chamber c;
    for (char ch : base) {
        if (ch != '+' && ch != '-') throw latkit::InvalidInput("base signs are '+' or '-'");
        c.signs.push_back(ch == '+' ? 1 : -1);
    }
    if (!latkit::chamber_realizable(arr, c))
        throw latkit::InvalidInput("sign vector is not a realizable chamber");
    return c;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json witness_names(const latkit::Lattice& lat, const std::vector<int>& elems) {
    Json a = Json::array();
    for (int e : elems) a.push_back(lat.name(e));
    return a;
}

int run_check(const std::string& file, const std::string& property) {
    auto poset = latkit::poset_from_json(load_json(file));
    std::vector<latkit::PropertyReport> reports;
    auto result = latkit::try_lattice(poset);

    auto want = [&](const std::string& p) { return property == "all" || property == p; };

    if (want("lattice")) {
        latkit::PropertyReport r{file, "lattice", latkit::Verdict::holds, {}, {}};
        if (!result.lattice) {
            r.verdict = latkit::Verdict::fails;
            const auto& w = *result.witness;
            Json mins = Json::array();
            for (int z : w.minimal_upper_bounds) mins.push_back(poset.name(z));
            r.witness = {{"pair", {poset.name(w.x), poset.name(w.y)}},
                         {"minimal_upper_bounds", mins}};
        }
        reports.push_back(std::move(r));
    }
    auto lattice_property = [&](const std::string& prop, auto&& body) {
        if (!want(prop)) return;
        latkit::PropertyReport r{file, prop, latkit::Verdict::holds, {}, {}};
        if (!result.lattice)
            r.verdict = latkit::Verdict::unverified;
        else
            body(r, *result.lattice);
        reports.push_back(std::move(r));
    };
    lattice_property("crosscut-simplicial", [](latkit::PropertyReport& r, const latkit::Lattice& lat) {
        if (auto w = lat.crosscut_violation()) {
            r.verdict = latkit::Verdict::fails;
            r.witness = {{"interval", {lat.name(w->x), lat.name(w->y)}},
                         {"subset", witness_names(lat, w->subset)}};
        }
    });
    lattice_property("meet-sd", [](latkit::PropertyReport& r, const latkit::Lattice& lat) {
        if (auto w = lat.meet_sd_violation()) {
            r.verdict = latkit::Verdict::fails;
            r.witness = {{"x", lat.name(w->x)}, {"y", lat.name(w->y)}, {"z", lat.name(w->z)}};
        }
    });
    lattice_property("join-sd", [](latkit::PropertyReport& r, const latkit::Lattice& lat) {
        if (auto w = lat.join_sd_violation()) {
            r.verdict = latkit::Verdict::fails;
            r.witness = {{"x", lat.name(w->x)}, {"y", lat.name(w->y)}, {"z", lat.name(w->z)}};
        }
    });
    lattice_property("sd", [](latkit::PropertyReport& r, const latkit::Lattice& lat) {
        auto w = lat.meet_sd_violation();
        if (!w) w = lat.join_sd_violation();
        if (w) {
            r.verdict = latkit::Verdict::fails;
            r.witness = {{"x", lat.name(w->x)}, {"y", lat.name(w->y)}, {"z", lat.name(w->z)}};
        }
    });
    lattice_property("congruence-normal", [](latkit::PropertyReport& r, const latkit::Lattice& lat) {
        if (auto w = latkit::congruence_normal_violation(lat)) {
            r.verdict = latkit::Verdict::fails;
            r.witness = {{"meet_irreducible", lat.name(w->meet_irr)},
                         {"join_irreducible", lat.name(w->join_irr)}};
        }
    });

    Json out;
    out["subject"] = file;
    Json rs = Json::array();
    bool ok = true;
    for (const auto& r : reports) {
        rs.push_back(r.to_json());
        if (r.verdict == latkit::Verdict::fails) ok = false;
    }
    out["reports"] = std::move(rs);
    out["ok"] = ok;
    emit(out);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite lattice and chamber poset toolkit"};
    app.require_subcommand(1);

    std::string file, property = "all", interval, collapse, subset, base = "auto";
    std::string suite = "all", variant = "sb", out_path;
    std::vector<int> params;
    int max_labels = 3, threads = 0;
    long long budget = 10'000'000;
    unsigned seed = 7;
    bool with_poset = false, timings = false;

    auto* check = app.add_subcommand("check", "verify properties of a poset file");
    check->add_option("file", file)->required();
    check->add_option("--property", property)
        ->check(CLI::IsMember({"all", "lattice", "crosscut-simplicial", "meet-sd", "join-sd",
                               "sd", "congruence-normal"}));

    auto* mobius = app.add_subcommand("mobius", "Moebius values of a poset file");
    mobius->add_option("file", file)->required();
    mobius->add_option("--interval", interval);

    auto* crosscut = app.add_subcommand("crosscut", "crosscut complex of an interval");
    crosscut->add_option("file", file)->required();
    crosscut->add_option("--interval", interval)->required();

    auto* quotient_cmd = app.add_subcommand("quotient", "quotient by a principal congruence");
    quotient_cmd->add_option("file", file)->required();
    quotient_cmd->add_option("--collapse", collapse)->required();

    auto* double_cmd = app.add_subcommand("double", "doubling at an order-convex subset");
    double_cmd->add_option("file", file)->required();
    double_cmd->add_option("--subset", subset)->required();

    auto* chambers_cmd = app.add_subcommand("chambers", "chambers of an arrangement");
    chambers_cmd->add_option("file", file)->required();
    chambers_cmd->add_option("--base", base);
    chambers_cmd->add_flag("--poset", with_poset);

    auto* bin_cmd = app.add_subcommand("bineighborly", "bineighborly test for an arrangement");
    bin_cmd->add_option("file", file)->required();
    bin_cmd->add_option("--base", base);

    auto* catalog_cmd = app.add_subcommand("catalog", "emit a named catalog object");
    catalog_cmd->add_option("name", file)->required();
    catalog_cmd->add_option("params", params);
    catalog_cmd->add_option("--out", out_path);

    auto* sb_cmd = app.add_subcommand("sb-search", "search for an sb labelling");
    sb_cmd->add_option("file", file)->required();
    sb_cmd->add_option("--variant", variant)->check(CLI::IsMember({"sb", "sb-prime"}));
    sb_cmd->add_option("--max-labels", max_labels);
    sb_cmd->add_option("--budget", budget);

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite);
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--threads", threads);
    verify_cmd->add_flag("--timings", timings);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // help text
        Json err{{"error", {{"type", "usage"}, {"message", e.what()}}}};
        emit(err);
        return 2;
    }

    try {
        if (*check) return run_check(file, property);

        if (*mobius) {
            auto p = latkit::poset_from_json(load_json(file));
            Json out;
            out["subject"] = file;
            if (!interval.empty()) {
                auto [xs, ys] = split_pair(interval);
                out["mobius"] = p.mobius(p.index_of(xs), p.index_of(ys));
            } else {
                auto table = p.mobius_table();
                Json rows = Json::array();
                std::vector<std::string> sorted = p.names();
                std::sort(sorted.begin(), sorted.end());
                for (const auto& xn : sorted)
                    for (const auto& yn : sorted) {
                        int x = p.index_of(xn), y = p.index_of(yn);
                        if (!p.leq(x, y)) continue;
                        rows.push_back(Json::array(
                            {xn, yn, table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]}));
                    }
                out["mobius"] = std::move(rows);
            }
            emit(out);
            return 0;
        }

        if (*crosscut) {
            auto lat = latkit::Lattice::from_poset(latkit::poset_from_json(load_json(file)));
            auto [xs, ys] = split_pair(interval);
            auto gamma = lat.crosscut_complex(lat.poset().index_of(xs), lat.poset().index_of(ys));
            emit(latkit::complex_to_json(gamma));
            return 0;
        }

        if (*quotient_cmd) {
            auto lat = latkit::Lattice::from_poset(latkit::poset_from_json(load_json(file)));
            auto [xs, ys] = split_pair(collapse);
            auto theta = latkit::principal_congruence(lat, lat.poset().index_of(xs),
                                                      lat.poset().index_of(ys));
            auto q = latkit::quotient(lat, theta);
            emit(latkit::poset_to_json(q.lattice.poset()));
            return 0;
        }

        if (*double_cmd) {
            auto lat = latkit::Lattice::from_poset(latkit::poset_from_json(load_json(file)));
            std::vector<int> convex;
            for (const auto& name : split_list(subset))
                convex.push_back(lat.poset().index_of(name));
            auto d = latkit::double_at(lat, convex);
            emit(latkit::poset_to_json(d.lattice.poset()));
            return 0;
        }

        if (*chambers_cmd) {
            auto arr = latkit::arrangement_from_json(load_json(file));
            auto c0 = parse_base(arr, base);
            auto cs = latkit::chambers(arr);
            Json out;
            out["subject"] = file;
            out["base"] = c0.str();
            Json list = Json::array();
            for (const auto& c : cs) list.push_back(c.str());
            out["chambers"] = std::move(list);
            if (with_poset) out["poset"] = latkit::poset_to_json(latkit::chamber_poset(cs, c0).poset);
            emit(out);
            return 0;
        }

        if (*bin_cmd) {
            auto arr = latkit::arrangement_from_json(load_json(file));
            auto c0 = parse_base(arr, base);
            auto w = latkit::bineighborly_violation(arr, c0);
            Json out;
            out["subject"] = file;
            out["base"] = c0.str();
            out["property"] = "bineighborly";
            out["verdict"] = w ? "fails" : "holds";
            if (w)
                out["witness"] = {{"chamber", w->chamber.str()},
                                  {"pair", {arr.hyperplane_name(w->h1), arr.hyperplane_name(w->h2)}}};
            emit(out);
            return w ? 1 : 0;
        }

        if (*catalog_cmd) {
            auto obj = latkit::catalog::named(file, params);
            Json j = std::holds_alternative<latkit::Lattice>(obj)
                         ? latkit::poset_to_json(std::get<latkit::Lattice>(obj).poset())
                         : latkit::arrangement_to_json(std::get<latkit::Arrangement>(obj));
            if (!out_path.empty()) {
                std::ofstream o(out_path);
                if (!o) throw latkit::InvalidInput("cannot write file: " + out_path);
                o << j.dump(2) << "\n";
            }
            emit(j);
            return 0;
        }

        if (*sb_cmd) {
            auto lat = latkit::Lattice::from_poset(latkit::poset_from_json(load_json(file)));
            latkit::SbSearchOptions opt;
            opt.max_labels = max_labels;
            opt.variant = variant == "sb" ? latkit::SbVariant::sb : latkit::SbVariant::sb_prime;
            opt.node_budget = budget;
            auto found = latkit::search_sb(lat, opt);
            Json out;
            out["subject"] = file;
            out["variant"] = variant;
            out["max_labels"] = max_labels;
            out["found"] = found.has_value();
            if (found)
                out["labelling"] = latkit::labelling_to_json(lat.poset(), *found);
            else
                out["exhausted"] = true;
            emit(out);
            return 0;
        }

        if (*verify_cmd) {
            latkit::RunOptions opt;
            opt.seed = seed;
            opt.threads = threads;
            opt.timings = timings;
            auto result = latkit::verify::run_suite(suite, opt);
            emit(latkit::verify::render(result, opt));
            return result.ok ? 0 : 1;
        }
    } catch (const latkit::Error& e) {
        Json err{{"error", {{"type", "input"}, {"message", e.what()}}}};
        emit(err);
        return 2;
    } catch (const std::exception& e) {
        Json err{{"error", {{"type", "internal"}, {"message", e.what()}}}};
        emit(err);
        return 2;
    }
    return 2;
}
