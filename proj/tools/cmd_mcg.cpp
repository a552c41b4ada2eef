#include "common.hpp"

#include <cmath>

#include "teich/mcg.hpp"

using namespace teich;

namespace {

void add_dilatation(CLI::App& app, int& rc) {
    auto* cmd = app.add_subcommand(
        "dilatation", "classify a mapping class; iterate curve-length ratios toward its dilatation");
    struct Opts {
        std::string map, base = "1/0", point = "1,0,0";
        int iters = 10;
        cli::CommonFlags flags;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--map", o->map, "mapping class a,b,c,d")->required();
    cmd->add_option("--base", o->base, "starting slope p/q");
    cmd->add_option("--point", o->point, "surface point ell,twist,boundary");
    cmd->add_option("--iters", o->iters, "number of iterations");
    o->flags.attach(cmd);
    cmd->callback([o, &rc]() {
        cli::OutputSink sink{o->flags.out_path, nullptr};
        std::ostream& os = sink.stream();
        MappingClass f = MappingClass::parse(o->map);
        Classification cls = classify(f);
        if (cls.type != MapType::PseudoAnosov) {
            if (o->flags.format == "json") {
                nlohmann::ordered_json j = {{"map", o->map},
                                            {"type", map_type_name(cls.type)},
                                            {"dilatation", 1.0}};
                os << j.dump(2) << "\n";
            } else {
                CsvWriter csv(os);
                csv.header({"map", "type", "dilatation"});
                csv.row({o->map, map_type_name(cls.type), "1"});
            }
            rc = cli::kExitOk;
            return;
        }
        auto ratios = dilatation_by_iteration(f, Slope::parse(o->base),
                                              FNTorus::parse(o->point), o->iters);
        if (o->flags.format == "json") {
            nlohmann::ordered_json j;
            j["map"] = o->map;
            j["type"] = map_type_name(cls.type);
            j["dilatation"] = cli::j12(cls.dilatation);
            nlohmann::ordered_json rj = nlohmann::ordered_json::array();
            for (double r : ratios) rj.push_back(cli::j12(r));
            j["ratios"] = rj;
            j["final_abs_error"] = cli::j12(std::fabs(ratios.back() - cls.dilatation));
            os << j.dump(2) << "\n";
        } else {
            CsvWriter csv(os);
            csv.header({"k", "ratio", "abs_error"});
            for (size_t k = 0; k < ratios.size(); ++k)
                csv.row({std::to_string(k), cli::fmt(ratios[k]),
                         cli::fmt(std::fabs(ratios[k] - cls.dilatation))});
        }
        rc = cli::kExitOk;
    });
}

void add_translate(CLI::App& app, int& rc) {
    auto* cmd = app.add_subcommand(
        "translate", "minimize the displacement of a pseudo-Anosov power over the cusped torus");
    struct Opts {
        std::string map;
        int power = 1;
        SearchConfig cfg;
        bool with_trace = false;
        cli::CommonFlags flags;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--map", o->map, "mapping class a,b,c,d")->required();
    cmd->add_option("--power", o->power, "power n of the map");
    cmd->add_option("--ell-min", o->cfg.ell_min, "grid lower bound for ell");
    cmd->add_option("--ell-max", o->cfg.ell_max, "grid upper bound for ell");
    cmd->add_option("--twist-min", o->cfg.twist_min, "grid lower bound for the twist");
    cmd->add_option("--twist-max", o->cfg.twist_max, "grid upper bound for the twist");
    cmd->add_option("--grid-ell", o->cfg.grid_ell, "grid points in ell (log-spaced)");
    cmd->add_option("--grid-twist", o->cfg.grid_twist, "grid points in the twist");
    cmd->add_option("--multistart", o->cfg.multistart, "refined starts");
    cmd->add_option("--iters", o->cfg.simplex_iters, "simplex iterations per start");
    cmd->add_option("--farey", o->cfg.farey_level, "curve family level");
    cmd->add_option("--iter-k", o->cfg.iterate_k, "iterate family depth");
    cmd->add_option("--seed", o->cfg.seed, "grid jitter seed");
    cmd->add_flag("--with-trace", o->with_trace, "include the optimizer trace in JSON output");
    o->flags.attach(cmd);
    cmd->callback([o, &rc]() {
        cli::OutputSink sink{o->flags.out_path, nullptr};
        std::ostream& os = sink.stream();
        MappingClass f = MappingClass::parse(o->map);
        TranslationEstimate te = translation_estimate(f, o->power, o->cfg);
        if (o->flags.format == "json") {
            nlohmann::ordered_json j = {
                {"map", o->map},
                {"power", te.power},
                {"min_value", cli::j12(te.min_value)},
                {"argmin",
                 {{"ell", cli::j12(te.argmin.ell)}, {"twist", cli::j12(te.argmin.twist)}, {"boundary", 0.0}}},
                {"log_dilatation", cli::j12(te.log_dilatation)},
                {"boundary_hit", te.boundary_hit},
                {"n_evals", te.n_evals}};
            if (o->with_trace) {
                nlohmann::ordered_json tr = nlohmann::ordered_json::array();
                for (const auto& [pt, val] : te.optimizer_trace)
                    tr.push_back({{"ell", cli::j12(pt.ell)}, {"twist", cli::j12(pt.twist)}, {"value", cli::j12(val)}});
                j["optimizer_trace"] = tr;
            }
            os << j.dump(2) << "\n";
        } else {
            CsvWriter csv(os);
            csv.header({"map", "power", "min_value", "argmin_ell", "argmin_twist",
                        "log_dilatation", "boundary_hit", "n_evals"});
            csv.row({o->map, std::to_string(te.power), cli::fmt(te.min_value),
                     cli::fmt(te.argmin.ell), cli::fmt(te.argmin.twist),
                     cli::fmt(te.log_dilatation), te.boundary_hit ? "1" : "0",
                     std::to_string(te.n_evals)});
        }
        rc = cli::kExitOk;
    });
}

void add_tau(CLI::App& app, int& rc) {
    auto* cmd = app.add_subcommand(
        "tau", "orbit-averaged displacement estimates (1/n) d(X0, f^n X0)");
    struct Opts {
        std::string map, x0 = "1,0,0";
        int n = 12;
        int farey = 8;
        int iter_k = 10;
        cli::CommonFlags flags;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--map", o->map, "mapping class a,b,c,d")->required();
    cmd->add_option("--x0", o->x0, "base point ell,twist,0");
    cmd->add_option("--n", o->n, "largest power");
    cmd->add_option("--farey", o->farey, "curve family level");
    cmd->add_option("--iter-k", o->iter_k, "iterate family depth");
    o->flags.attach(cmd);
    cmd->callback([o, &rc]() {
        cli::OutputSink sink{o->flags.out_path, nullptr};
        std::ostream& os = sink.stream();
        MappingClass f = MappingClass::parse(o->map);
        SearchConfig cfg;
        cfg.farey_level = o->farey;
        cfg.iterate_k = o->iter_k;
        auto seq = tau_sequence(f, FNTorus::parse(o->x0), o->n, cfg);
        if (o->flags.format == "json") {
            nlohmann::ordered_json j;
            j["map"] = o->map;
            nlohmann::ordered_json ej = nlohmann::ordered_json::array();
            for (double v : seq) ej.push_back(cli::j12(v));
            j["estimates"] = ej;
            os << j.dump(2) << "\n";
        } else {
            CsvWriter csv(os);
            csv.header({"n", "estimate"});
            for (size_t n = 1; n <= seq.size(); ++n)
                csv.row({std::to_string(n), cli::fmt(seq[n - 1])});
        }
        rc = cli::kExitOk;
    });
}

} // namespace

void register_mcg_commands(CLI::App& app, int& rc) {
    add_dilatation(app, rc);
    add_translate(app, rc);
    add_tau(app, rc);
}
