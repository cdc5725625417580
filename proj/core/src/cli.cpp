#include "sombor/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sombor/certificate.hpp"
#include "sombor/constructions.hpp"
#include "sombor/enumeration.hpp"
#include "sombor/errors.hpp"
#include "sombor/graph.hpp"
#include "sombor/indices.hpp"
#include "sombor/report.hpp"
#include "sombor/verify.hpp"

namespace sombor {

namespace {

int emit_report(const VerificationReport& report, const std::string& emit, std::ostream& out,
                std::ostream& err) {
    out << (emit == "json" ? render_json(report) : render_csv(report));
    err << report.suite << ": " << report.passed_count() << "/" << report.rows.size()
        << " rows passed\n";
    return report.pass() ? kExitOk : kExitVerifyFailed;
}

IndexKind index_from_flag(const std::string& flag) {
    return *parse_index_kind(flag); // flags are pre-validated by CLI11
}

} // namespace

int run_command(const std::vector<std::string>& argv, std::istream& in, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"Sombor-type indices on unicyclic graphs: construction, enumeration, "
                 "extremal search and verification",
                 "sombor"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List unicyclic isomorphism classes");
    int enum_n = 0;
    std::optional<int> enum_d;
    std::string enum_emit = "graphs";
    unsigned enum_jobs = 0;
    enumerate_cmd->add_option("--n", enum_n, "Number of vertices")->required();
    enumerate_cmd->add_option("--d", enum_d, "Keep only classes with this diameter");
    enumerate_cmd->add_option("--emit", enum_emit, "Output form")
        ->check(CLI::IsMember({"graphs", "count"}));
    enumerate_cmd->add_option("--jobs", enum_jobs, "Worker threads (0 = hardware)");

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "Build a reference family member");
    std::string family;
    int con_n = 0;
    int con_d = 0;
    int con_a = 0;
    int con_b = 0;
    int con_c = 0;
    construct_cmd->add_option("--family", family, "Which family")
        ->required()
        ->check(CLI::IsMember({"cycle", "diameter-max", "triangle-pendant"}));
    construct_cmd->add_option("--n", con_n, "Number of vertices")->required();
    construct_cmd->add_option("--d", con_d, "Diameter (diameter-max family)");
    construct_cmd->add_option("--a", con_a, "Pendants on triangle vertex 0");
    construct_cmd->add_option("--b", con_b, "Pendants on triangle vertex 1");
    construct_cmd->add_option("--c", con_c, "Pendants on triangle vertex 2");

    // index
    auto* index_cmd = app.add_subcommand("index", "Evaluate an index on a graph");
    std::string index_flag = "so";
    std::string input_path = "-";
    index_cmd->add_option("--index", index_flag, "Which index")
        ->check(CLI::IsMember({"so", "sored"}));
    index_cmd->add_option("--input", input_path, "Graph text file (- = stdin)");

    // closed-form
    auto* closed_cmd = app.add_subcommand("closed-form", "Closed-form extremal value");
    int cf_n = 0;
    int cf_d = 0;
    std::string cf_index = "both";
    closed_cmd->add_option("--n", cf_n, "Number of vertices")->required();
    closed_cmd->add_option("--d", cf_d, "Diameter")->required();
    closed_cmd->add_option("--index", cf_index, "Which index")
        ->check(CLI::IsMember({"so", "sored", "both"}));

    // extremal
    auto* extremal_cmd = app.add_subcommand("extremal", "Exhaustive extremal search");
    int ext_n = 0;
    std::optional<int> ext_d;
    std::string ext_index = "so";
    std::string ext_direction = "max";
    std::string ext_emit = "json";
    double ext_tolerance = kDefaultTolerance;
    unsigned ext_jobs = 0;
    extremal_cmd->add_option("--n", ext_n, "Number of vertices")->required();
    extremal_cmd->add_option("--d", ext_d, "Restrict to this diameter");
    extremal_cmd->add_option("--index", ext_index, "Which index")
        ->required()
        ->check(CLI::IsMember({"so", "sored"}));
    extremal_cmd->add_option("--direction", ext_direction, "Optimize up or down")
        ->required()
        ->check(CLI::IsMember({"max", "min"}));
    extremal_cmd->add_option("--emit", ext_emit, "Output form")
        ->check(CLI::IsMember({"json", "csv"}));
    extremal_cmd->add_option("--tolerance", ext_tolerance, "Tie tolerance");
    extremal_cmd->add_option("--jobs", ext_jobs, "Worker threads (0 = hardware)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check a theorem exhaustively");
    std::string theorem;
    std::string ver_index = "so";
    std::optional<int> ver_n_min;
    int ver_n_max = 0;
    std::string ver_emit = "csv";
    double ver_tolerance = kDefaultTolerance;
    unsigned ver_jobs = 0;
    verify_cmd->add_option("--theorem", theorem, "Which statement")
        ->required()
        ->check(CLI::IsMember({"max", "min", "small-diameter", "structure"}));
    verify_cmd->add_option("--index", ver_index, "Which index (max theorem)")
        ->check(CLI::IsMember({"so", "sored"}));
    verify_cmd->add_option("--n-min", ver_n_min, "Smallest order (default per theorem)");
    verify_cmd->add_option("--n-max", ver_n_max, "Largest order")->required();
    verify_cmd->add_option("--emit", ver_emit, "Report format")
        ->check(CLI::IsMember({"csv", "json"}));
    verify_cmd->add_option("--tolerance", ver_tolerance, "Comparison tolerance");
    verify_cmd->add_option("--jobs", ver_jobs, "Worker threads (0 = hardware)");

    // lemmas
    auto* lemmas_cmd = app.add_subcommand("lemmas", "Check auxiliary grids and deltas");
    int grid_max_degree = 12;
    std::string lem_emit = "csv";
    lemmas_cmd->add_option("--grid-max-degree", grid_max_degree, "Degree grid upper bound");
    lemmas_cmd->add_option("--emit", lem_emit, "Report format")
        ->check(CLI::IsMember({"csv", "json"}));

    // inequalities
    auto* ineq_cmd = app.add_subcommand("inequalities", "Evaluate the radical constant catalog");
    std::string ineq_emit = "csv";
    ineq_cmd->add_option("--emit", ineq_emit, "Report format")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*enumerate_cmd) {
            auto classes = enumerate_unicyclic(enum_n, enum_jobs);
            long long kept = 0;
            for (const auto& entry : classes) {
                if (enum_d && diameter(entry.graph) != *enum_d) {
                    continue;
                }
                ++kept;
                if (enum_emit == "graphs") {
                    out << write_graph_text(entry.graph);
                }
            }
            if (enum_emit == "count") {
                out << kept << "\n";
            }
            return kExitOk;
        }

        if (*construct_cmd) {
            Graph g;
            if (family == "cycle") {
                g = build_cycle(con_n);
            } else if (family == "diameter-max") {
                if (!construct_cmd->count("--d")) {
                    err << "error: --family diameter-max requires --d\n";
                    return kExitUsage;
                }
                g = build_diameter_max_family(con_n, con_d);
            } else {
                g = build_triangle_pendants(con_n, con_a, con_b, con_c);
            }
            out << write_graph_text(g);
            return kExitOk;
        }

        if (*index_cmd) {
            Graph g;
            if (input_path == "-") {
                g = read_graph_text(in);
            } else {
                std::ifstream file(input_path);
                if (!file) {
                    err << "error: cannot open " << input_path << "\n";
                    return kExitUsage;
                }
                g = read_graph_text(file);
            }
            out << format_real(index_value(g, index_from_flag(index_flag)).value) << "\n";
            return kExitOk;
        }

        if (*closed_cmd) {
            if (cf_index == "so" || cf_index == "both") {
                out << "so " << format_real(closed_form_value(cf_n, cf_d, IndexKind::Sombor).value)
                    << "\n";
            }
            if (cf_index == "sored" || cf_index == "both") {
                out << "sored "
                    << format_real(closed_form_value(cf_n, cf_d, IndexKind::ReducedSombor).value)
                    << "\n";
            }
            return kExitOk;
        }

        if (*extremal_cmd) {
            const auto record =
                extremal_record(ext_n, ext_d, index_from_flag(ext_index),
                                *parse_direction(ext_direction), ext_tolerance, ext_jobs);
            std::string optima_hex;
            for (const auto& cert : record.optima) {
                optima_hex += (optima_hex.empty() ? "" : " ") + cert.hex();
            }
            if (ext_emit == "csv") {
                out << "n,d,index,direction,value,optima,searched\n";
                out << record.n << ',' << (record.diameter_filter ? std::to_string(*record.diameter_filter) : "any")
                    << ',' << index_name(record.kind) << ',' << direction_name(record.direction)
                    << ',' << format_real(record.value.value) << ',' << optima_hex << ','
                    << record.classes_searched << "\n";
            } else {
                out << "{\n"
                    << "  \"n\": " << record.n << ",\n"
                    << "  \"d\": "
                    << (record.diameter_filter ? "\"" + std::to_string(*record.diameter_filter) + "\""
                                               : "\"any\"")
                    << ",\n"
                    << "  \"index\": \"" << index_name(record.kind) << "\",\n"
                    << "  \"direction\": \"" << direction_name(record.direction) << "\",\n"
                    << "  \"value\": \"" << format_real(record.value.value) << "\",\n"
                    << "  \"optima\": [";
                for (std::size_t i = 0; i < record.optima.size(); ++i) {
                    out << (i ? ", " : "") << "\"" << record.optima[i].hex() << "\"";
                }
                out << "],\n"
                    << "  \"searched\": " << record.classes_searched << "\n"
                    << "}\n";
            }
            return kExitOk;
        }

        if (*verify_cmd) {
            VerifyOptions options;
            options.tolerance = ver_tolerance;
            options.jobs = ver_jobs;
            VerificationReport report;
            if (theorem == "max") {
                report = verify_max_theorem(ver_n_min.value_or(6), ver_n_max,
                                            index_from_flag(ver_index), options);
            } else if (theorem == "min") {
                report = verify_min(ver_n_min.value_or(5), ver_n_max, options);
            } else if (theorem == "small-diameter") {
                report = verify_small_diameter(ver_n_min.value_or(5), ver_n_max, options);
            } else {
                report = check_maximizer_structure_range(ver_n_min.value_or(7), ver_n_max, options);
            }
            return emit_report(report, ver_emit, out, err);
        }

        if (*lemmas_cmd) {
            const auto report =
                merge_reports("lemmas", {check_lemma_grids(),
                                         check_transformation_deltas(grid_max_degree)});
            return emit_report(report, lem_emit, out, err);
        }

        if (*ineq_cmd) {
            return emit_report(check_inequality_catalog(), ineq_emit, out, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    err << "error: no subcommand selected\n";
    return kExitUsage;
}

int run_command(const std::vector<std::string>& argv) {
    return run_command(argv, std::cin, std::cout, std::cerr);
}

} // namespace sombor
