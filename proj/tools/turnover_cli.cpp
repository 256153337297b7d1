#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "turnover/characters.hpp"
#include "turnover/cohomology.hpp"
#include "turnover/cusps.hpp"
#include "turnover/errors.hpp"
#include "turnover/representation.hpp"
#include "turnover/serialization.hpp"
#include "turnover/verification.hpp"

using namespace turnover;
using ordered_json = nlohmann::ordered_json;

namespace {

// --out without a directory component lands in TURNOVER_OUT_DIR when set.
std::string resolve_out(const std::string& path) {
    if (path.find('/') != std::string::npos) return path;
    const char* dir = std::getenv("TURNOVER_OUT_DIR");
    if (dir == nullptr || *dir == '\0') return path;
    std::string full(dir);
    if (full.back() != '/') full += '/';
    return full + path;
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::string path = resolve_out(out_path);
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "cannot open " << path << " for writing\n";
        return 2;
    }
    file << text;
    file.flush();
    if (!file) {
        std::cerr << "write to " << path << " failed\n";
        return 2;
    }
    return 0;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, sep)) parts.push_back(item);
    return parts;
}

int parse_int(const std::string& text) {
    size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw parse_error("not an integer: " + text);
    return value;
}

double parse_double(const std::string& text) {
    size_t used = 0;
    double value = std::stod(text, &used);
    if (used != text.size()) throw parse_error("not a number: " + text);
    return value;
}

int cmd_verify(const std::optional<double>& tol, const std::string& out,
               const std::string& format) {
    if (format != "json") {
        std::cerr << "unsupported format: " << format << "\n";
        return 2;
    }
    ToleranceSet tols = tol ? ToleranceSet::from_base(*tol) : ToleranceSet{};
    VerificationReport report = run_verification(tols);
    int io = write_output(verification_report_to_json(report) + "\n", out);
    if (io != 0) return io;
    return report.pass ? 0 : 1;
}

int cmd_cohomology(const std::string& orders_text, const std::string& module_name_text,
                   const std::string& out) {
    auto parts = split(orders_text, ',');
    if (parts.size() != 3) {
        std::cerr << "--orders wants three comma-separated integers\n";
        return 2;
    }
    ModuleKind kind;
    if (module_name_text == "adjoint")
        kind = ModuleKind::adjoint;
    else if (module_name_text == "standard")
        kind = ModuleKind::standard;
    else if (module_name_text == "wedge2")
        kind = ModuleKind::wedge2;
    else {
        std::cerr << "--module wants adjoint, standard, or wedge2\n";
        return 2;
    }
    int n1, n2, n3;
    try {
        n1 = parse_int(parts[0]);
        n2 = parse_int(parts[1]);
        n3 = parse_int(parts[2]);
    } catch (const std::exception& e) {
        std::cerr << "--orders: " << e.what() << "\n";
        return 2;
    }
    try {
        TurnoverPresentation pres(n1, n2, n3);
        if (!pres.is_euclidean()) {
            std::cerr << "orders (" << n1 << ", " << n2 << ", " << n3
                      << ") are not Euclidean; no cusp holonomy to analyze\n";
            return 1;
        }
        Representation rho = hyperbolic_cusp_holonomy(pres);
        CohomologyReport report = cohomology_report(rho, kind);
        return write_output(cohomology_report_to_json(report, pres) + "\n", out);
    } catch (const domain_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}

int cmd_slice(std::optional<double> u, std::optional<double> v, const std::string& polar,
              const std::string& out) {
    double uu = u.value_or(0.0), vv = v.value_or(0.0);
    if (!polar.empty()) {
        if (u || v) {
            std::cerr << "--polar excludes --u and --v\n";
            return 2;
        }
        auto parts = split(polar, ',');
        if (parts.size() != 2) {
            std::cerr << "--polar wants t,theta\n";
            return 2;
        }
        try {
            auto [pu, pv] = polar_slice_parameters(parse_double(parts[0]),
                                                   parse_double(parts[1]));
            uu = pu;
            vv = pv;
        } catch (const std::exception& e) {
            std::cerr << "--polar: " << e.what() << "\n";
            return 2;
        }
    }

    Representation rho = slice_representation(uu, vv);
    RelationReport relations = verify_relations(rho, 1e-9);
    CuspVerdict verdict = classify_end(rho);

    ordered_json j;
    j["schema_version"] = "1";
    j["parameters"] = {{"u", uu}, {"v", vv}};
    j["representation"] = ordered_json::parse(representation_to_json(rho));
    j["relations"] = {{"deviations", relations.deviations}, {"pass", relations.pass}};
    j["verdict"] = ordered_json::parse(cusp_verdict_to_json(verdict));
    int io = write_output(j.dump(2) + "\n", out);
    if (io != 0) return io;
    return relations.pass ? 0 : 1;
}

int cmd_surface(const std::string& grid_text, const std::string& signs, const std::string& out) {
    auto parts = split(grid_text, ':');
    if (parts.size() != 3) {
        std::cerr << "--grid wants lo:hi:count\n";
        return 2;
    }
    if (signs.size() != 2 || (signs[0] != '+' && signs[0] != '-') ||
        (signs[1] != '+' && signs[1] != '-')) {
        std::cerr << "--signs wants two characters drawn from + and -\n";
        return 2;
    }
    bool floating = parts[0].find_first_of(".eE") != std::string::npos ||
                    parts[1].find_first_of(".eE") != std::string::npos;
    try {
        Backend backend = floating ? Backend::floating : Backend::exact;
        Scalar lo = scalar_from_string(parts[0], backend);
        Scalar hi = scalar_from_string(parts[1], backend);
        int count = parse_int(parts[2]);
        SurfaceGrid grid;
        grid.x1_values = linear_grid(lo, hi, count);
        grid.x2_values = grid.x1_values;
        grid.sign1 = signs[0] == '+' ? 1 : -1;
        grid.sign2 = signs[1] == '+' ? 1 : -1;
        std::vector<SurfaceSample> samples =
            floating ? sample_surface(grid, 1e-9) : sample_surface(grid);
        return write_output(surface_csv(samples), out);
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "--grid: " << e.what() << "\n";
        return 2;
    }
}

int cmd_isolated(const std::string& out) {
    IsolatedEnumeration enumeration = enumerate_isolated_points();
    int io = write_output(isolated_enumeration_to_json(enumeration) + "\n", out);
    if (io != 0) return io;
    int count = static_cast<int>(enumeration.classes.size());
    if (count != enumeration.expected_count) {
        std::cerr << "expected " << enumeration.expected_count << " classes, found " << count
                  << "; case tallies [" << enumeration.case_tallies[0] << ", "
                  << enumeration.case_tallies[1] << ", " << enumeration.case_tallies[2] << ", "
                  << enumeration.case_tallies[3] << "]; "
                  << enumeration.collision_evidence.size()
                  << " trace-coincident pairs conjugate only through negative determinant; "
                  << enumeration.on_surface_discarded << " class(es) on the diagonal surface "
                  << "discarded\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and floating toolkit for turnover-group representations into SL(4, R)"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand(
        "verify", "Run the full verification battery and emit the JSON report");
    std::optional<double> tol;
    std::string verify_out, format = "json";
    verify->add_option("--tol", tol, "Tighten every tolerance to at most this value")
        ->check(CLI::PositiveNumber);
    verify->add_option("--out", verify_out, "Write the report here instead of stdout");
    verify->add_option("--format", format, "Report format (json)");

    auto* cohomology = app.add_subcommand(
        "cohomology", "Twisted cohomology report for a Euclidean turnover holonomy");
    std::string orders, module_choice, cohomology_out;
    cohomology->add_option("--orders", orders, "Cone orders n1,n2,n3")->required();
    cohomology->add_option("--module", module_choice, "adjoint | standard | wedge2")->required();
    cohomology->add_option("--out", cohomology_out, "Write the report here instead of stdout");

    auto* slice = app.add_subcommand(
        "slice", "Evaluate the two-parameter deformation and classify its end");
    std::optional<double> u, v;
    std::string polar, slice_out;
    slice->add_option("--u", u, "First slice coordinate");
    slice->add_option("--v", v, "Second slice coordinate");
    slice->add_option("--polar", polar, "t,theta with (u, v) = t (cos 3 theta, sin 3 theta)");
    slice->add_option("--out", slice_out, "Write the JSON here instead of stdout");

    auto* surface = app.add_subcommand(
        "surface", "Sample the character surface over a diagonal grid and emit CSV");
    std::string grid = "1/4:4:10", signs = "++", surface_out;
    surface->add_option("--grid", grid,
                        "lo:hi:count per axis; rational bounds sample exactly");
    surface->add_option("--signs", signs, "Sign pattern for the two axes, e.g. ++ or --");
    surface->add_option("--out", surface_out, "Write the CSV here instead of stdout");

    auto* isolated = app.add_subcommand(
        "isolated", "Enumerate the isolated conjugacy classes and emit JSON");
    std::string isolated_out;
    isolated->add_option("--out", isolated_out, "Write the JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(tol, verify_out, format);
        if (cohomology->parsed()) return cmd_cohomology(orders, module_choice, cohomology_out);
        if (slice->parsed()) return cmd_slice(u, v, polar, slice_out);
        if (surface->parsed()) return cmd_surface(grid, signs, surface_out);
        if (isolated->parsed()) return cmd_isolated(isolated_out);
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
