#include "common.hpp"

#include <random>

#include "teich/pinch.hpp"
#include "teich/trig.hpp"

using namespace teich;

namespace {

void add_pants_arc(CLI::App& app, int& rc) {
    auto* cmd = app.add_subcommand("pants-arc", "orthogeodesic arc lengths in a pair of pants");
    auto two = std::make_shared<std::vector<double>>();
    auto one = std::make_shared<std::vector<double>>();
    auto flags = std::make_shared<cli::CommonFlags>();
    cmd->add_option("--two-cuffs", *two,
                    "lgamma lbeta1 lbeta2: arc between two distinct cuffs")
        ->expected(3);
    cmd->add_option("--one-cuff", *one,
                    "lbeta lgamma1 lgamma2: arc from one cuff back to itself")
        ->expected(3);
    flags->attach(cmd, false);
    cmd->callback([two, one, flags, &rc]() {
        cli::OutputSink sink{flags->out_path, nullptr};
        if (two->empty() == one->empty())
            raise(ErrorKind::BadInput, "give exactly one of --two-cuffs or --one-cuff");
        double v = !two->empty() ? pants_arc_two_cuffs((*two)[0], (*two)[1], (*two)[2])
                                 : pants_arc_one_cuff((*one)[0], (*one)[1], (*one)[2]);
        sink.stream() << cli::fmt(v) << "\n";
        rc = cli::kExitOk;
    });
}

void add_collar(CLI::App& app, int& rc) {
    auto* cmd = app.add_subcommand("collar", "embedded collar half-width of a geodesic");
    auto ell = std::make_shared<double>(0.0);
    auto flags = std::make_shared<cli::CommonFlags>();
    cmd->add_option("--ell", *ell, "geodesic length")->required();
    flags->attach(cmd, false);
    cmd->callback([ell, flags, &rc]() {
        cli::OutputSink sink{flags->out_path, nullptr};
        sink.stream() << cli::fmt(collar_width(*ell)) << "\n";
        rc = cli::kExitOk;
    });
}

void add_quad(CLI::App& app, int& rc) {
    auto* cmd = app.add_subcommand(
        "quad", "right-angled quadrilateral side, optionally the long-regime ratio check");
    struct Opts {
        double a = 0, b = 0, ell = 1;
        std::vector<double> other;
        int random_check = 0;
        std::uint64_t seed = 20240810;
        cli::CommonFlags flags;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--a", o->a, "left side")->required();
    cmd->add_option("--b", o->b, "right side")->required();
    cmd->add_option("--ell", o->ell, "far side")->required();
    cmd->add_option("--compare", o->other, "a' b' ell': also run the ratio check")->expected(3);
    cmd->add_option("--random-check", o->random_check,
                    "run N random ratio checks in the ell >= 10 regime");
    cmd->add_option("--seed", o->seed, "seed for --random-check");
    o->flags.attach(cmd);
    cmd->callback([o, &rc]() {
        cli::OutputSink sink{o->flags.out_path, nullptr};
        std::ostream& os = sink.stream();
        bool json = o->flags.format == "json";
        double side = quad_side(o->a, o->b, o->ell);
        rc = cli::kExitOk;
        if (o->other.empty() && o->random_check == 0) {
            os << cli::fmt(side) << "\n";
            return;
        }
        CsvWriter csv(os);
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        if (!json) csv.header({"ratio", "bound", "pass"});
        auto emit = [&](const QuadRatioCheck& q) {
            if (json)
                rows.push_back({{"ratio", cli::j12(q.ratio)}, {"bound", cli::j12(q.bound)}, {"pass", q.pass}});
            else
                csv.row({cli::fmt(q.ratio), cli::fmt(q.bound), q.pass ? "1" : "0"});
            if (!q.pass) rc = cli::kExitValidation;
        };
        if (!o->other.empty())
            emit(quad_ratio_check(o->a, o->b, o->ell, o->other[0], o->other[1], o->other[2]));
        if (o->random_check > 0) {
            std::mt19937_64 gen(o->seed);
            std::uniform_real_distribution<double> side_d(0.0, 4.0), delta(-1.0, 1.0),
                ell_d(10.0, 30.0);
            for (int i = 0; i < o->random_check; ++i) {
                double a = side_d(gen), b = side_d(gen);
                double a2 = std::max(0.0, a + delta(gen)), b2 = std::max(0.0, b + delta(gen));
                emit(quad_ratio_check(a, b, ell_d(gen), a2, b2, ell_d(gen)));
            }
        }
        if (json) os << rows.dump(2) << "\n";
    });
}

void add_arc_residual(CLI::App& app, int& rc) {
    auto* cmd = app.add_subcommand(
        "arc-residual", "defect of the two-cuff arc against its small-boundary expansion");
    struct Opts {
        double lgamma = 1.0;
        std::string levels = "0.5,0.1,0.05,0.01";
        cli::CommonFlags flags;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--lgamma", o->lgamma, "length of the third cuff")->required();
    cmd->add_option("--levels", o->levels, "comma list of boundary lengths");
    o->flags.attach(cmd);
    cmd->callback([o, &rc]() {
        cli::OutputSink sink{o->flags.out_path, nullptr};
        std::ostream& os = sink.stream();
        std::vector<double> levels = cli::parse_levels(o->levels);
        // two constant-term normalizations, reported side by side:
        // the exact limit log 2 + log(cosh(lgamma/2)+1), and lgamma - log 2
        if (o->flags.format == "json") {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (double L : levels)
                rows.push_back({{"lgamma", cli::j12(o->lgamma)},
                                {"L", cli::j12(L)},
                                {"arc", cli::j12(pants_arc_two_cuffs(o->lgamma, L, L))},
                                {"residual_exact_const", cli::j12(arc_residual(o->lgamma, L))},
                                {"residual_linear_const", cli::j12(arc_residual_linear_const(o->lgamma, L))}});
            os << rows.dump(2) << "\n";
        } else {
            CsvWriter csv(os);
            csv.header({"lgamma", "L", "arc", "residual_exact_const", "residual_linear_const"});
            for (double L : levels)
                csv.row({cli::fmt(o->lgamma), cli::fmt(L),
                         cli::fmt(pants_arc_two_cuffs(o->lgamma, L, L)),
                         cli::fmt(arc_residual(o->lgamma, L)),
                         cli::fmt(arc_residual_linear_const(o->lgamma, L))});
        }
        rc = cli::kExitOk;
    });
}

} // namespace

void register_geometry_commands(CLI::App& app, int& rc) {
    add_pants_arc(app, rc);
    add_collar(app, rc);
    add_quad(app, rc);
    add_arc_residual(app, rc);
}
