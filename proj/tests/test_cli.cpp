#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "perc/graph.hpp"
#include "perc/percolation.hpp"
#include "perc/random.hpp"
#include "perc/report.hpp"

namespace fs = std::filesystem;
using namespace perc;

namespace {

std::string binary() {
    const char* p = std::getenv("PERC_BIN");
    REQUIRE_MESSAGE(p != nullptr, "PERC_BIN must point at the perc executable");
    return p;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("perc_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

int run(const std::string& args) {
    std::string cmd = binary() + " " + args + " >/dev/null 2>/dev/null";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

// data rows of a "vertex,percolation" CSV
std::vector<double> csv_values(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<double> values;
    bool seen_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!seen_header) {
            REQUIRE(line == "vertex,percolation");
            seen_header = true;
            continue;
        }
        auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        values.push_back(std::stod(line.substr(comma + 1)));
    }
    REQUIRE(seen_header);
    return values;
}

}  // namespace

TEST_CASE("cli: estimate writes csv with one row per vertex") {
    TempDir dir;
    fs::path graph = dir.path / "p3.txt";
    write_file(graph, "0 1\n1 2\n");
    fs::path out = dir.path / "est.csv";
    int rc = run("estimate --graph " + graph.string() +
                 " --random-states 7 --epsilon 0.05 --delta 0.1 --format csv --output " +
                 out.string());
    CHECK(rc == 0);
    auto values = csv_values(slurp(out));
    CHECK(values.size() == 3);
}

TEST_CASE("cli: usage errors exit 1") {
    TempDir dir;
    fs::path graph = dir.path / "p3.txt";
    write_file(graph, "0 1\n1 2\n");
    std::string base = "--graph " + graph.string() + " --random-states 1 ";
    CHECK(run("estimate " + base + "--epsilon 1.5") == 1);
    CHECK(run("estimate " + base + "--delta 0") == 1);
    CHECK(run("estimate --graph " + graph.string()) == 1);  // no states source
    CHECK(run("compare " + base + "--trials 0") == 1);
    CHECK(run("generate --model er --n 10 --m 2") == 1);
    CHECK(run("generate --model ba --n 2 --m 2") == 1);
    CHECK(run("bogus") == 1);
}

TEST_CASE("cli: io errors exit 2") {
    TempDir dir;
    CHECK(run("exact --graph " + (dir.path / "missing.txt").string() + " --random-states 1") == 2);
    fs::path bad = dir.path / "bad.txt";
    write_file(bad, "0 1\nnot numbers\n");
    CHECK(run("exact --graph " + bad.string() + " --random-states 1") == 2);
}

TEST_CASE("cli: computation preconditions exit 3") {
    TempDir dir;
    fs::path graph = dir.path / "single.txt";
    write_file(graph, "# lonely vertex via self-loop\n0 0\n");
    CHECK(run("exact --graph " + graph.string() + " --random-states 1") == 3);
}

TEST_CASE("cli: exact on P3 reproduces 1/6") {
    TempDir dir;
    fs::path graph = dir.path / "p3.txt";
    write_file(graph, "0 1\n1 2\n");
    fs::path states = dir.path / "s.txt";
    write_file(states, "0 1.0\n1 0.5\n2 0.0\n");
    fs::path out = dir.path / "exact.csv";
    CHECK(run("exact --graph " + graph.string() + " --states " + states.string() +
              " --output " + out.string()) == 0);
    auto values = csv_values(slurp(out));
    REQUIRE(values.size() == 3);
    CHECK(values[0] == 0.0);
    CHECK(values[1] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(values[2] == 0.0);
}

TEST_CASE("cli: estimate on K4 emits all zeros") {
    TempDir dir;
    fs::path graph = dir.path / "k4.txt";
    write_file(graph, "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    fs::path out = dir.path / "k4.csv";
    CHECK(run("estimate --graph " + graph.string() +
              " --random-states 3 --epsilon 0.2 --delta 0.2 --output " + out.string()) == 0);
    for (double v : csv_values(slurp(out))) CHECK(v == 0.0);
}

TEST_CASE("cli: identical flags give byte-identical outputs") {
    TempDir dir;
    fs::path graph = dir.path / "ba.txt";
    CHECK(run("generate --model ba --n 80 --m 2 --seed 9 --output " + graph.string()) == 0);
    fs::path out1 = dir.path / "a.csv", out2 = dir.path / "b.csv";
    std::string flags = "estimate --graph " + graph.string() +
                        " --random-states 5 --epsilon 0.1 --delta 0.1 --seed 42 --threads 2 ";
    CHECK(run(flags + "--output " + out1.string()) == 0);
    CHECK(run(flags + "--output " + out2.string()) == 0);
    CHECK(slurp(out1) == slurp(out2));

    fs::path j1 = dir.path / "a.json", j2 = dir.path / "b.json";
    CHECK(run(flags + "--format json --output " + j1.string()) == 0);
    CHECK(run(flags + "--format json --output " + j2.string()) == 0);
    CHECK(slurp(j1) == slurp(j2));
}

TEST_CASE("cli: generate matches the edge-count formula and reloads") {
    TempDir dir;
    fs::path out = dir.path / "gen.txt";
    CHECK(run("generate --model ba --n 100 --m 2 --seed 1 --output " + out.string()) == 0);
    Graph g = load_edge_list_file(out.string(), false, false);
    CHECK(g.num_vertices() == 100);
    CHECK(g.num_edges() == 196);
}

TEST_CASE("cli: diameter prints an integer within the approximation bound") {
    TempDir dir;
    fs::path graph = dir.path / "p5.txt";
    write_file(graph, "0 1\n1 2\n2 3\n3 4\n");
    fs::path out = dir.path / "vd.txt";
    CHECK(run("diameter --graph " + graph.string() + " --output " + out.string()) == 0);
    int vd = std::stoi(slurp(out));
    CHECK(vd >= 5);
    CHECK(vd <= 10);
}

TEST_CASE("cli: compare report carries consistent aggregates") {
    TempDir dir;
    fs::path graph = dir.path / "ba.txt";
    CHECK(run("generate --model ba --n 60 --m 2 --seed 2 --output " + graph.string()) == 0);
    fs::path out = dir.path / "cmp.csv";
    CHECK(run("compare --graph " + graph.string() +
              " --random-states 4 --epsilon 0.2 --delta 0.2 --trials 3 --output " +
              out.string()) == 0);
    std::istringstream in(slurp(out));
    std::string line;
    double avg = -1, stddev = -1, maxe = -1;
    std::vector<double> errors;
    while (std::getline(in, line)) {
        if (line.rfind("# avg_error=", 0) == 0) avg = std::stod(line.substr(12));
        else if (line.rfind("# std_error=", 0) == 0) stddev = std::stod(line.substr(12));
        else if (line.rfind("# max_error=", 0) == 0) maxe = std::stod(line.substr(12));
        else if (!line.empty() && line[0] != '#' && line.find("trial,") != 0) {
            auto last = line.rfind(',');
            errors.push_back(std::stod(line.substr(last + 1)));
        }
    }
    REQUIRE(errors.size() == 3 * 60);
    double sum = 0, sq = 0, mx = 0;
    for (double e : errors) {
        sum += e;
        sq += e * e;
        mx = std::max(mx, e);
    }
    double mean = sum / errors.size();
    CHECK(avg == doctest::Approx(mean).epsilon(1e-9));
    CHECK(maxe == doctest::Approx(mx).epsilon(1e-9));
    CHECK(stddev == doctest::Approx(std::sqrt(std::max(0.0, sq / errors.size() - mean * mean)))
                        .epsilon(1e-6));
    CHECK(mx >= mean);
}

TEST_CASE("cli: compare on flat states reports zero error") {
    TempDir dir;
    fs::path graph = dir.path / "p4.txt";
    write_file(graph, "0 1\n1 2\n2 3\n");
    fs::path states = dir.path / "flat.txt";
    write_file(states, "0.5\n0.5\n0.5\n0.5\n");
    fs::path out = dir.path / "cmp.json";
    CHECK(run("compare --graph " + graph.string() + " --states " + states.string() +
              " --trials 2 --format json --output " + out.string()) == 0);
    std::string text = slurp(out);
    CHECK(text.find("\"avg_error\": 0.0") != std::string::npos);
    CHECK(text.find("\"max_error\": 0.0") != std::string::npos);
}

TEST_CASE("compare: estimator honors the epsilon bound on BA(200,2)") {
    Graph g = generate_barabasi_albert(200, 2, 77);
    PercolationStates st = assign_random_states(200, 78);
    RunConfig cfg{.epsilon = 0.1, .delta = 0.1, .seed = 5};
    CompareReport rep = run_compare(g, st, cfg, 5);
    int within = 0;
    for (const TrialStats& t : rep.per_trial)
        if (t.max_error <= cfg.epsilon) ++within;
    CHECK(within >= 4);  // guaranteed per trial with probability >= 0.9
    CHECK(rep.speedup > 0.0);
    CHECK(rep.max_error >= rep.avg_error);
    CHECK(rep.avg_error >= 0.0);
    CHECK(rep.r == rep.per_trial.front().r);
}

TEST_CASE("writers: csv values survive a parse round trip") {
    CentralityEstimates est;
    est.kind = EstimateKind::estimated;
    est.r = 77;
    est.vd_bound = 9;
    est.seed = 123;
    auto rng = make_rng(31);
    est.values.resize(50);
    for (double& v : est.values) v = uniform01(rng) * 1e-3;
    est.values[7] = 1.0 / 3.0;
    est.values[9] = 0.0;

    std::ostringstream out;
    write_estimates_csv(out, est);
    auto parsed = csv_values(out.str());
    REQUIRE(parsed.size() == est.values.size());
    for (size_t i = 0; i < parsed.size(); ++i) CHECK(parsed[i] == est.values[i]);
    CHECK(out.str().find("# r=77\n") != std::string::npos);
    CHECK(out.str().find("# vd_bound=9\n") != std::string::npos);
    CHECK(out.str().find("# seed=123\n") != std::string::npos);
}
