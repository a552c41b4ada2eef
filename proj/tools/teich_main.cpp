#include "common.hpp"

#include <iostream>

namespace cli {

teich::Family parse_family(const std::string& spec, const teich::MappingClass* map) {
    using namespace teich;
    Family out;
    std::stringstream ss(spec);
    std::string token;
    bool any = false;
    while (std::getline(ss, token, '+')) {
        any = true;
        std::vector<std::string> parts;
        std::stringstream ts(token);
        std::string piece;
        while (std::getline(ts, piece, ':')) parts.push_back(piece);
        if (parts.empty()) raise(ErrorKind::BadInput, "empty family token in '" + spec + "'");
        try {
            if (parts[0] == "farey" && parts.size() == 2) {
                out = family_union(out, farey_family(std::stoi(parts[1])));
            } else if (parts[0] == "arcs" && parts.size() == 2) {
                Family base = farey_family(std::stoi(parts[1]));
                Family arcs;
                arcs.label = "arcs:" + parts[1];
                arcs.arcs = with_dual_arcs(base).arcs;
                out = family_union(out, arcs);
            } else if (parts[0] == "iter" && parts.size() == 3) {
                if (!map)
                    raise(ErrorKind::BadInput, "family token 'iter' needs --map on this command");
                out = family_union(out,
                                   iterate_family(*map, Slope::parse(parts[1]), std::stoi(parts[2])));
            } else {
                raise(ErrorKind::BadInput, "unknown family token '" + token + "'");
            }
        } catch (const std::invalid_argument&) {
            raise(ErrorKind::BadInput, "bad number in family token '" + token + "'");
        }
    }
    if (!any) raise(ErrorKind::BadInput, "empty family spec");
    out.label = spec;
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) teich::raise(teich::ErrorKind::BadInput, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace cli

int main(int argc, char** argv) {
    CLI::App app{"computations on Teichmueller spaces of the one-holed torus and friends:\n"
                 "holonomy from Fenchel-Nielsen coordinates, geodesic lengths, arc/Thurston\n"
                 "metric estimates, pinching sweeps and mapping-class translation lengths"};
    app.require_subcommand(1);

    int rc = cli::kExitOk;
    try {
        register_geometry_commands(app, rc);
        register_surface_commands(app, rc);
        register_sweep_commands(app, rc);
        register_mcg_commands(app, rc);
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? cli::kExitOk : cli::kExitUsage;
    } catch (const teich::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitUsage;
    }
    return rc;
}
