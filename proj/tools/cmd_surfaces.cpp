#include "common.hpp"

#include <cmath>

#include "teich/estimate.hpp"
#include "teich/pants.hpp"

using namespace teich;

namespace {

void add_length(CLI::App& app, int& rc) {
    auto* cmd = app.add_subcommand("length",
                                   "geodesic length of a curve class on a surface point");
    struct Opts {
        std::string torus, slope, word, decomp, point;
        cli::CommonFlags flags;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--torus", o->torus, "one-holed torus point ell,twist,boundary");
    cmd->add_option("--slope", o->slope, "curve as p/q (torus surfaces)");
    cmd->add_option("--word", o->word,
                    "curve as a word: A/a/B/b letters on a torus, generator tokens on a decomposition");
    cmd->add_option("--decomp", o->decomp, "pants decomposition JSON file");
    cmd->add_option("--point", o->point, "FN point JSON file for --decomp");
    o->flags.attach(cmd, false);
    cmd->callback([o, cmd, &rc]() {
        cli::ConfigDefaults cfg = o->flags.defaults(*cmd);
        cfg.fill(*cmd, "torus", o->torus);
        cfg.fill(*cmd, "slope", o->slope);
        cfg.fill(*cmd, "word", o->word);
        cfg.fill(*cmd, "decomp", o->decomp);
        cfg.fill(*cmd, "point", o->point);
        cli::OutputSink sink{o->flags.out_path, nullptr};
        double v = 0.0;
        if (!o->torus.empty()) {
            FNTorus x = FNTorus::parse(o->torus);
            if (!o->slope.empty())
                v = curve_length(x, Slope::parse(o->slope));
            else if (!o->word.empty())
                v = translation_length_from_log_trace(
                    evaluate_word(build_rep(x), o->word).log_abs_trace());
            else
                raise(ErrorKind::BadInput, "--torus needs --slope or --word");
        } else if (!o->decomp.empty()) {
            if (o->point.empty() || o->word.empty())
                raise(ErrorKind::BadInput, "--decomp needs --point and --word");
            PantsDecomp d = PantsDecomp::from_json(cli::read_file(o->decomp));
            FNPoint p = FNPoint::from_json(cli::read_file(o->point));
            v = build_glued_rep(d, p).word_length(o->word);
        } else {
            raise(ErrorKind::BadInput, "give --torus or --decomp");
        }
        sink.stream() << cli::fmt(v) << "\n";
        rc = cli::kExitOk;
    });
}

void add_rep_validate(CLI::App& app, int& rc) {
    auto* cmd = app.add_subcommand(
        "rep-validate", "build a holonomy representation and report its invariant residuals");
    struct Opts {
        std::vector<double> torus;
        std::string decomp, point;
        double tol = 1e-9;
        cli::CommonFlags flags;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--torus", o->torus, "ell twist boundary")->expected(3);
    cmd->add_option("--decomp", o->decomp, "pants decomposition JSON file");
    cmd->add_option("--point", o->point, "FN point JSON file for --decomp");
    cmd->add_option("--tol", o->tol, "residual tolerance for the exit code");
    o->flags.attach(cmd);
    cmd->callback([o, &rc]() {
        cli::OutputSink sink{o->flags.out_path, nullptr};
        std::ostream& os = sink.stream();
        bool json = o->flags.format == "json";
        double worst = 0.0;
        nlohmann::ordered_json report;
        if (!o->torus.empty()) {
            TorusRep rep = build_rep({o->torus[0], o->torus[1], o->torus[2]});
            RepResiduals r = rep_residuals(rep);
            worst = r.max_abs();
            report = {{"gen_a_trace", cli::j12(r.gen_a_trace)},
                      {"commutator_trace", cli::j12(r.commutator_trace)},
                      {"markov", cli::j12(r.markov)},
                      {"max_abs", cli::j12(worst)}};
        } else if (!o->decomp.empty() && !o->point.empty()) {
            PantsDecomp d = PantsDecomp::from_json(cli::read_file(o->decomp));
            FNPoint p = FNPoint::from_json(cli::read_file(o->point));
            GluedRep rep = build_glued_rep(d, p);
            worst = rep.max_trace_residual();
            report = {{"max_trace_residual", cli::j12(worst)}};
        } else {
            raise(ErrorKind::BadInput, "give --torus or --decomp with --point");
        }
        if (json) {
            os << report.dump(2) << "\n";
        } else {
            CsvWriter csv(os);
            csv.header({"residual", "value"});
            for (auto& [key, value] : report.items())
                csv.row({key, cli::fmt(value.get<double>())});
        }
        rc = worst <= o->tol ? cli::kExitOk : cli::kExitValidation;
    });
}

void add_dist(CLI::App& app, int& rc) {
    auto* cmd = app.add_subcommand(
        "dist", "finite-family estimate of the arc/Thurston distance between two points");
    struct Opts {
        std::string from, to, family = "farey:8", map;
        bool curves_only = false;
        cli::CommonFlags flags;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--from", o->from, "source point ell,twist,boundary")->required();
    cmd->add_option("--to", o->to, "target point ell,twist,boundary")->required();
    cmd->add_option("--family", o->family, "family spec: farey:N, iter:p/q:K, arcs:N, '+'-unions");
    cmd->add_option("--map", o->map, "mapping class a,b,c,d for iter tokens");
    cmd->add_flag("--curves-only", o->curves_only,
                  "skip the automatic dual arcs on matching-boundary points");
    o->flags.attach(cmd);
    cmd->callback([o, cmd, &rc]() {
        cli::OutputSink sink{o->flags.out_path, nullptr};
        std::ostream& os = sink.stream();
        FNTorus x = FNTorus::parse(o->from), y = FNTorus::parse(o->to);
        MappingClass map;
        bool has_map = !o->map.empty();
        if (has_map) map = MappingClass::parse(o->map);
        Family fam = cli::parse_family(o->family, has_map ? &map : nullptr);
        // points of the same positive-boundary stratum compare over arcs too
        if (!o->curves_only && fam.arcs.empty() && !x.cusped() && x.boundary == y.boundary) {
            std::string label = fam.label;
            fam = with_dual_arcs(fam);
            fam.label = label + "+arcs";
        }
        MetricEstimate e = dhat(x, y, fam);
        if (o->flags.format == "json") {
            nlohmann::ordered_json j = {{"value", cli::j12(e.value)},
                                        {"witness", e.witness},
                                        {"family", e.family_label},
                                        {"non_filling", e.non_filling}};
            os << j.dump(2) << "\n";
        } else if (o->flags.out_path.empty() && !cmd->count("--format")) {
            os << cli::fmt(e.value) << "\n"; // bare value for quick use
        } else {
            CsvWriter csv(os);
            csv.header({"value", "witness", "family", "non_filling"});
            csv.row({cli::fmt(e.value), e.witness, e.family_label, e.non_filling ? "1" : "0"});
        }
        rc = cli::kExitOk;
    });
}

} // namespace

void register_surface_commands(CLI::App& app, int& rc) {
    add_length(app, rc);
    add_rep_validate(app, rc);
    add_dist(app, rc);
}
