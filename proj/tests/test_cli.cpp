#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "sombor/cli.hpp"
#include "sombor/constructions.hpp"
#include "sombor/graph.hpp"
#include "sombor/indices.hpp"
#include "sombor/report.hpp"
#include "sombor/verify.hpp"

using namespace sombor;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& argv, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_command(argv, in, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).exit_code == kExitUsage);
    CHECK(run({"frobnicate"}).exit_code == kExitUsage);
    CHECK(run({"enumerate"}).exit_code == kExitUsage);              // missing --n
    CHECK(run({"enumerate", "--n", "5", "--emit", "x"}).exit_code == kExitUsage);
    CHECK(run({"construct", "--family", "diameter-max", "--n", "8"}).exit_code == kExitUsage);
    CHECK(run({"verify", "--theorem", "max"}).exit_code == kExitUsage); // missing --n-max
    CHECK(run({"index", "--input", "/no/such/file"}).exit_code == kExitUsage);
}

TEST_CASE("help exits cleanly") {
    const auto result = run({"--help"});
    CHECK(result.exit_code == kExitOk);
    CHECK(result.out.find("sombor") != std::string::npos);
}

TEST_CASE("infeasible or out-of-range requests exit with 2") {
    // enumeration bound exceeded
    CHECK(run({"enumerate", "--n", "13", "--emit", "count"}).exit_code == kExitUsage);
    // infeasible diameter filter on extremal search
    CHECK(run({"extremal", "--n", "6", "--d", "9", "--index", "so", "--direction", "max"})
              .exit_code == kExitUsage);
    // sweep range outside the supported window
    CHECK(run({"verify", "--theorem", "max", "--n-max", "5"}).exit_code == kExitUsage);
    CHECK(run({"verify", "--theorem", "max", "--n-max", "13"}).exit_code == kExitUsage);
    // malformed construction parameters
    CHECK(run({"construct", "--family", "triangle-pendant", "--n", "9", "--a", "1", "--b", "4"})
              .exit_code == kExitUsage);
}

TEST_CASE("construct writes the graph text format") {
    const auto result = run({"construct", "--family", "cycle", "--n", "4"});
    CHECK(result.exit_code == kExitOk);
    CHECK(result.out == write_graph_text(build_cycle(4)));

    const auto family = run({"construct", "--family", "diameter-max", "--n", "8", "--d", "5"});
    CHECK(family.exit_code == kExitOk);
    CHECK(family.out == write_graph_text(build_diameter_max_family(8, 5)));

    const auto triangle =
        run({"construct", "--family", "triangle-pendant", "--n", "7", "--a", "3", "--b", "1"});
    CHECK(triangle.exit_code == kExitOk);
    CHECK(triangle.out == write_graph_text(build_triangle_pendants(7, 3, 1, 0)));
}

TEST_CASE("index reads stdin and files") {
    const std::string text = write_graph_text(build_cycle(5));
    const auto from_stdin = run({"index", "--index", "so"}, text);
    CHECK(from_stdin.exit_code == kExitOk);
    CHECK(from_stdin.out ==
          format_real(index_value(build_cycle(5), IndexKind::Sombor).value) + "\n");

    const std::string path = "cli_test_graph.txt";
    {
        std::ofstream file(path);
        file << text;
    }
    const auto from_file = run({"index", "--index", "sored", "--input", path});
    CHECK(from_file.exit_code == kExitOk);
    CHECK(from_file.out ==
          format_real(index_value(build_cycle(5), IndexKind::ReducedSombor).value) + "\n");
    std::remove(path.c_str());

    CHECK(run({"index"}, "garbage").exit_code == kExitUsage);
}

TEST_CASE("closed-form prints both kinds by default") {
    const auto result = run({"closed-form", "--n", "10", "--d", "5"});
    CHECK(result.exit_code == kExitOk);
    const std::string expected =
        "so " + format_real(closed_form_value(10, 5, IndexKind::Sombor).value) + "\n" +
        "sored " + format_real(closed_form_value(10, 5, IndexKind::ReducedSombor).value) + "\n";
    CHECK(result.out == expected);

    CHECK(run({"closed-form", "--n", "6", "--d", "3"}).exit_code == kExitUsage);
}

TEST_CASE("enumerate emits counts and graph blocks") {
    CHECK(run({"enumerate", "--n", "5", "--emit", "count"}).out == "5\n");
    // diameter filter: on 5 vertices only C5 and the double-pendant
    // triangle have diameter 2
    CHECK(run({"enumerate", "--n", "5", "--d", "2", "--emit", "count"}).out == "2\n");
    // an empty filter is an empty listing, not an error
    const auto empty = run({"enumerate", "--n", "5", "--d", "9", "--emit", "count"});
    CHECK(empty.exit_code == kExitOk);
    CHECK(empty.out == "0\n");

    const auto graphs = run({"enumerate", "--n", "4", "--emit", "graphs"});
    CHECK(graphs.exit_code == kExitOk);
    // two classes on 4 vertices, emitted as consecutive text blocks
    int headers = 0;
    std::istringstream stream(graphs.out);
    for (int i = 0; i < 2; ++i) {
        const Graph g = read_graph_text(stream);
        CHECK(g.order() == 4);
        ++headers;
    }
    CHECK(headers == 2);
}

TEST_CASE("extremal emits csv and json") {
    const auto csv = run({"extremal", "--n", "6", "--d", "4", "--index", "so", "--direction",
                          "max", "--emit", "csv"});
    CHECK(csv.exit_code == kExitOk);
    CHECK(csv.out.find("n,d,index,direction,value,optima,searched\n") == 0);
    CHECK(csv.out.find(format_real(closed_form_value(6, 4, IndexKind::Sombor).value)) !=
          std::string::npos);

    const auto json = run({"extremal", "--n", "6", "--index", "so", "--direction", "min"});
    CHECK(json.exit_code == kExitOk);
    CHECK(json.out.find("\"direction\": \"min\"") != std::string::npos);
    CHECK(json.out.find("\"d\": \"any\"") != std::string::npos);
}

TEST_CASE("verify emits a report and exit code 0 on success") {
    const auto result = run({"verify", "--theorem", "max", "--n-max", "7"});
    CHECK(result.exit_code == kExitOk);
    CHECK(result.out == render_csv(verify_max_theorem(6, 7, IndexKind::Sombor)));
    CHECK(result.err.find("3/3 rows passed") != std::string::npos);

    const auto json = run({"verify", "--theorem", "min", "--n-max", "6", "--emit", "json"});
    CHECK(json.exit_code == kExitOk);
    CHECK(json.out == render_json(verify_min(5, 6)));
}

TEST_CASE("verify exit code 1 when a row fails") {
    // An absurd tolerance makes every class a tie, so uniqueness fails
    // while the machinery still runs: the report must say fail, exit 1.
    const auto result =
        run({"verify", "--theorem", "max", "--n-max", "6", "--tolerance", "100"});
    CHECK(result.exit_code == kExitVerifyFailed);
    CHECK(result.out.find("false") != std::string::npos);
}

TEST_CASE("verify output is byte-identical across worker counts") {
    const auto one = run({"verify", "--theorem", "max", "--n-max", "8", "--jobs", "1"});
    const auto four = run({"verify", "--theorem", "max", "--n-max", "8", "--jobs", "4"});
    CHECK(one.exit_code == kExitOk);
    CHECK(one.out == four.out);
}

TEST_CASE("lemmas and inequalities subcommands") {
    const auto lemmas = run({"lemmas", "--grid-max-degree", "6"});
    CHECK(lemmas.exit_code == kExitOk);
    // 5 grid rows + 16 delta rows + header
    CHECK(std::count(lemmas.out.begin(), lemmas.out.end(), '\n') == 22);

    const auto small_grid = run({"lemmas", "--grid-max-degree", "2"});
    CHECK(small_grid.exit_code == kExitUsage);

    const auto ineq = run({"inequalities", "--emit", "json"});
    CHECK(ineq.exit_code == kExitOk);
    CHECK(ineq.out == render_json(check_inequality_catalog()));
}

TEST_SUITE_END();
