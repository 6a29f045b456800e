#include "hfsurg/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "hfsurg/report.hpp"
#include "hfsurg/sweep.hpp"

namespace hfsurg {

std::vector<int> parse_slope_range(const std::string& text) {
    static const std::regex range(R"(\s*(-?\d{1,6})\s*\.\.\s*(-?\d{1,6})\s*)");
    static const std::regex single(R"(\s*(-?\d{1,6})\s*)");
    std::smatch m;
    std::vector<int> out;
    if (std::regex_match(text, m, range)) {
        const int a = std::stoi(m[1]);
        const int b = std::stoi(m[2]);
        if (a > b) throw InputError("empty slope range " + text);
        for (int p = a; p <= b; ++p) {
            if (p != 0) out.push_back(p);
        }
        return out;
    }
    if (std::regex_match(text, m, single)) return {std::stoi(m[1])};
    throw InputError("slope range must look like A..B, got '" + text + "'");
}

namespace {

struct Options {
    std::string knot;
    std::optional<int> slope;
    std::string slopes;
    std::string flavor = "hat";
    std::string engine = "direct";
    std::string format = "text";
    std::string out_path;
    std::string family;
    int max_q = 15;
    bool all_slopes = false;
    bool serial = false;
};

Engine engine_of(const std::string& name) {
    if (name == "closed") return Engine::Closed;
    if (name == "both") return Engine::Both;
    return Engine::Direct;
}

std::vector<int> requested_slopes(const Options& o) {
    std::vector<int> out;
    if (o.slope) {
        if (*o.slope == 0) throw InputError("p = 0 unsupported");
        out.push_back(*o.slope);
    }
    if (!o.slopes.empty()) {
        for (int p : parse_slope_range(o.slopes)) out.push_back(p);
    }
    return out;
}

std::vector<int> admissible_slopes(const KnotModel& knot) {
    std::vector<int> out;
    const int top = 2 * knot.genus() - 1;
    for (int p = -top; p <= top; ++p) {
        if (std::abs(p) > 1) out.push_back(p);
    }
    return out;
}

std::vector<KnotModel> chosen_knots(const Options& o) {
    if (!o.knot.empty()) return {resolve_knot(parse_knot_spec(o.knot))};
    if (o.family.empty() || o.family == "torus2") return torus2_family(o.max_q);
    if (o.family == "standard") return standard_family();
    throw InputError("unknown family '" + o.family + "' (torus2 | standard)");
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out_path);
    if (!f) throw InputError("cannot write " + o.out_path);
    f << text;
}

std::string json_text(const Json& j) { return j.dump() + "\n"; }

int cmd_compute(const Options& o, std::ostream& out) {
    if (o.knot.empty()) throw InputError("--knot is required");
    const auto knot = resolve_knot(parse_knot_spec(o.knot));
    const auto slopes = requested_slopes(o);
    if (slopes.empty()) throw InputError("--slope or --slopes is required");
    const Engine engine = engine_of(o.engine);
    const bool plus = o.flavor == "plus";
    if (plus && !knot.staircase) {
        throw InputError("plus flavor needs a staircase knot; general complexes support the hat flavor only");
    }

    Json doc = document("compute");
    doc["knot"] = knot.label;
    doc["genus"] = knot.genus();
    Json results = Json::array();
    std::ostringstream text;
    text << knot.label << "  (g = " << knot.genus() << ")\n";
    for (int p : slopes) {
        Json r;
        r["slope"] = p;
        r["flavor"] = o.flavor;
        r["engine"] = o.engine;
        if (plus) {
            const auto table = hf_plus(*knot.staircase, p, engine);
            r["classes"] = plus_classes_json(table, knot.staircase);
            text << plus_text(table, knot.staircase);
        } else {
            HatTable table;
            if (engine == Engine::Closed) {
                if (!knot.staircase) throw InputError("closed-form hat dimensions need a staircase knot");
                table = closed_form_hat_dims(*knot.staircase, p);
            } else {
                table = hat_dims(knot, p);
            }
            if (engine == Engine::Both) {
                if (auto msg = verify_slope(knot, p); !msg.empty()) throw EngineMismatch(msg);
            }
            r["classes"] = hat_classes_json(table);
            text << hat_text(table);
        }
        results.push_back(r);
    }
    doc["results"] = results;
    emit(o, o.format == "json" ? json_text(doc) : text.str(), out);
    return kExitOk;
}

int cmd_obstruct(const Options& o, std::ostream& out) {
    if (o.knot.empty()) throw InputError("--knot is required");
    const auto knot = resolve_knot(parse_knot_spec(o.knot));
    auto slopes = o.all_slopes ? admissible_slopes(knot) : requested_slopes(o);
    if (slopes.empty() && !o.all_slopes) throw InputError("--slope, --slopes or --all-slopes is required");

    Json doc = document("obstruct");
    doc["knot"] = knot.label;
    doc["genus"] = knot.genus();
    Json results = Json::array();
    std::ostringstream text;
    for (int p : slopes) {
        const auto rep = full_report(knot, p);
        results.push_back(report_json(rep));
        text << report_text(rep);
    }
    doc["results"] = results;
    emit(o, o.format == "json" ? json_text(doc) : text.str(), out);
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto knots = chosen_knots(o);
    const auto explicit_slopes = requested_slopes(o);
    std::vector<SweepJob> jobs;
    if (explicit_slopes.empty() || o.all_slopes) {
        jobs = admissible_jobs(knots);
    } else {
        for (std::size_t k = 0; k < knots.size(); ++k) {
            for (int p : explicit_slopes) jobs.push_back({k, p});
        }
    }
    const auto results = verify_sweep(knots, jobs, o.serial ? Execution::Serial : Execution::Parallel);

    Json doc = document("verify");
    doc["checked"] = jobs.size();
    Json failures = Json::array();
    std::ostringstream text;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        const auto& res = results[k];
        std::string msg = res.ok() ? *res.value : "error: " + res.error;
        if (msg.empty()) continue;
        failures.push_back(Json{{"knot", knots[jobs[k].knot].label}, {"slope", jobs[k].p}, {"message", msg}});
        if (failures.size() == 1) text << "FAIL " << msg << "\n";
    }
    doc["status"] = failures.empty() ? "pass" : "fail";
    doc["failures"] = failures;
    text << "verified " << jobs.size() << " (knot, slope) pairs over " << knots.size() << " knots: "
         << (failures.empty() ? "pass" : "fail") << "\n";
    emit(o, o.format == "json" ? json_text(doc) : text.str(), out);
    return failures.empty() ? kExitOk : kExitMismatch;
}

int cmd_scan(const Options& o, std::ostream& out) {
    const auto knots = chosen_knots(o);
    const auto jobs = admissible_jobs(knots);
    const auto results = obstruct_sweep(knots, jobs, o.serial ? Execution::Serial : Execution::Parallel);

    Json doc = document("scan");
    Json entries = Json::array();
    std::ostringstream text;
    bool failed = false;
    std::size_t k = 0;
    for (std::size_t n = 0; n < knots.size(); ++n) {
        Json e;
        e["knot"] = knots[n].label;
        e["genus"] = knots[n].genus();
        Json slopes = Json::object();
        Json open = Json::array();
        for (; k < jobs.size() && jobs[k].knot == n; ++k) {
            const auto& res = results[k];
            if (!res.ok()) {
                failed = true;
                slopes[std::to_string(jobs[k].p)] = "error: " + res.error;
                continue;
            }
            slopes[std::to_string(jobs[k].p)] = to_string(res.value->overall);
            if (res.value->overall != Verdict::Obstructed) open.push_back(jobs[k].p);
        }
        e["slopes"] = slopes;
        e["not_obstructed"] = open;
        text << knots[n].label << " (g = " << knots[n].genus() << "): " << slopes.size() << " slopes, not obstructed: ";
        if (open.empty()) text << "none";
        for (std::size_t i = 0; i < open.size(); ++i) text << (i ? ", " : "") << open[i].get<int>();
        text << "\n";
        entries.push_back(e);
    }
    doc["knots"] = entries;
    emit(o, o.format == "json" ? json_text(doc) : text.str(), out);
    return failed ? kExitMismatch : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Heegaard Floer homology of integer surgeries and reducibility obstructions", "hfsurg"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--knot", o.knot, "torus:a,b | alex:\"<polynomial>\" | cfk:<path>");
        sub->add_option("--slope", o.slope, "surgery slope p");
        sub->add_option("--slopes", o.slopes, "inclusive range A..B (0 skipped)");
        sub->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", o.out_path, "write the output to this file");
    };
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("--family", o.family, "torus2 | standard");
        sub->add_option("--max-q", o.max_q, "largest q for the torus2 family");
        sub->add_flag("--serial", o.serial, "use the serial reference instead of the OpenMP kernel");
    };

    auto* compute = app.add_subcommand("compute", "per-Spin^c tables for one knot");
    add_common(compute);
    compute->add_option("--flavor", o.flavor, "hat | plus")->check(CLI::IsMember({"hat", "plus"}));
    compute->add_option("--engine", o.engine, "closed | direct | both")
        ->check(CLI::IsMember({"closed", "direct", "both"}));

    auto* obstruct = app.add_subcommand("obstruct", "reducibility obstruction report");
    add_common(obstruct);
    obstruct->add_flag("--all-slopes", o.all_slopes, "every slope with 1 < |p| <= 2g - 1");

    auto* verify = app.add_subcommand("verify", "cross-check the engines over a knot or a family");
    add_common(verify);
    add_family(verify);
    verify->add_flag("--all-slopes", o.all_slopes, "every slope with 1 < |p| <= 2g - 1");

    auto* scan = app.add_subcommand("scan", "obstruction verdicts for every admissible slope of a family");
    add_common(scan);
    add_family(scan);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*compute) return cmd_compute(o, out);
        if (*obstruct) return cmd_obstruct(o, out);
        if (*verify) return cmd_verify(o, out);
        return cmd_scan(o, out);
    } catch (const EngineMismatch& e) {
        err << "engine mismatch: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace hfsurg
