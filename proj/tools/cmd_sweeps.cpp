#include "common.hpp"

#include "teich/mcg.hpp"
#include "teich/pinch.hpp"

using namespace teich;

namespace {

void add_pinch_sweep(CLI::App& app, int& rc) {
    auto* cmd = app.add_subcommand(
        "pinch-sweep", "arc-metric vs Thurston-metric estimates while the boundary pinches");
    struct Opts {
        std::string x0, y0;
        std::string levels = "1,0.5,0.25,0.1,0.05,0.01";
        int farey = default_farey_level;
        cli::CommonFlags flags;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--x0", o->x0, "cusped source point ell,twist,0")->required();
    cmd->add_option("--y0", o->y0, "cusped target point ell,twist,0")->required();
    cmd->add_option("--levels", o->levels, "boundary lengths, decreasing");
    cmd->add_option("--farey", o->farey, "curve family level");
    o->flags.attach(cmd);
    cmd->callback([o, &rc]() {
        cli::OutputSink sink{o->flags.out_path, nullptr};
        std::ostream& os = sink.stream();
        auto rows = pinch_sweep(FNTorus::parse(o->x0), FNTorus::parse(o->y0),
                                cli::parse_levels(o->levels), o->farey);
        if (o->flags.format == "json") {
            nlohmann::ordered_json out = nlohmann::ordered_json::array();
            for (const auto& r : rows)
                out.push_back({{"L", cli::j12(r.boundary)},
                               {"d_arc", cli::j12(r.d_arc)},
                               {"d_th", cli::j12(r.d_th)},
                               {"gap", cli::j12(r.gap)},
                               {"signed_diff", cli::j12(r.signed_diff)},
                               {"witness_arc", r.witness_arc},
                               {"witness_th", r.witness_th}});
            os << out.dump(2) << "\n";
        } else {
            CsvWriter csv(os);
            csv.header({"L", "d_arc", "d_th", "gap", "witness_arc", "witness_th"});
            for (const auto& r : rows)
                csv.row({cli::fmt(r.boundary), cli::fmt(r.d_arc), cli::fmt(r.d_th),
                         cli::fmt(r.gap), r.witness_arc, r.witness_th});
        }
        rc = cli::kExitOk;
    });
}

void add_twist_pinch(CLI::App& app, int& rc) {
    auto* cmd = app.add_subcommand(
        "twist-pinch", "Dehn-twist displacement while its curve pinches");
    struct Opts {
        std::string slope = "1/0";
        std::string levels = "1,0.3,0.1,0.01";
        int farey = 6;
        cli::CommonFlags flags;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--slope", o->slope, "twisting curve p/q");
    cmd->add_option("--levels", o->levels, "curve lengths, decreasing");
    cmd->add_option("--farey", o->farey, "curve family level");
    o->flags.attach(cmd);
    cmd->callback([o, &rc]() {
        cli::OutputSink sink{o->flags.out_path, nullptr};
        std::ostream& os = sink.stream();
        auto rows = twist_pinch_experiment(Slope::parse(o->slope), cli::parse_levels(o->levels),
                                           o->farey);
        if (o->flags.format == "json") {
            nlohmann::ordered_json out = nlohmann::ordered_json::array();
            for (auto& [ell, disp] : rows) out.push_back({{"ell", cli::j12(ell)}, {"displacement", cli::j12(disp)}});
            os << out.dump(2) << "\n";
        } else {
            CsvWriter csv(os);
            csv.header({"ell", "displacement"});
            for (auto& [ell, disp] : rows) csv.row({cli::fmt(ell), cli::fmt(disp)});
        }
        rc = cli::kExitOk;
    });
}

} // namespace

void register_sweep_commands(CLI::App& app, int& rc) {
    add_pinch_sweep(app, rc);
    add_twist_pinch(app, rc);
}
