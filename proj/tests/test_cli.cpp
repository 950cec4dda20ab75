#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "holes/decompose.hpp"
#include "holes/graph.hpp"
#include "holes/hole_enum.hpp"
#include "holes/io.hpp"
#include "holes/manifest.hpp"
#include "holes/rings.hpp"

using namespace holes;

namespace {

namespace fs = std::filesystem;

const fs::path& work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "holes_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

int run(const std::string& args, std::string* out = nullptr) {
    fs::path capture = work_dir() / "stdout.txt";
    std::string cmd = std::string(HOLES_CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    if (out) {
        std::ifstream in(capture);
        std::ostringstream os;
        os << in.rdbuf();
        *out = os.str();
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void put(const fs::path& p, const std::string& data) {
    std::ofstream out(p);
    out << data;
}

Graph read_g6_file(const fs::path& p) {
    std::istringstream in(slurp(p));
    std::string line;
    REQUIRE(std::getline(in, line));
    return from_graph6(line);
}

} // namespace

TEST_CASE("gen ring produces a verifiable manifest") {
    fs::path out = work_dir() / "ring.g6";
    int code = run("gen ring --k 9 --sizes 2,1,1,1,1,1,1,1,1 --seed 7 --out " + out.string());
    REQUIRE(code == 0);
    Graph g = read_g6_file(out);
    CHECK(g.n() == 10);
    auto m = Manifest::parse(slurp(out.string() + ".manifest"));
    CHECK(verify_manifest(g, m).empty());
    auto ring = recognize_ring(g);
    REQUIRE(ring.has_value());
    CHECK(ring->k == 9);
}

TEST_CASE("gen odd-template with edgeless base and full hyperedge is the pyramid") {
    fs::path out = work_dir() / "pyr.g6";
    int code = run("gen odd-template --ell 3 --k 3 --edgeless-j --full-hyperedge --out " +
                   out.string());
    REQUIRE(code == 0);
    Graph g = read_g6_file(out);
    CHECK(g.n() == 10);
    auto spectrum = hole_spectrum(g, false);
    CHECK(spectrum.kind == SpectrumKind::Uniform);
    CHECK(spectrum.uniform_length() == 7);
}

TEST_CASE("gen blowup from a template manifest keeps the spectrum") {
    fs::path tout = work_dir() / "tpl.g6";
    REQUIRE(run("gen odd-template --ell 3 --k 3 --seed 5 --out " + tout.string()) == 0);
    fs::path bout = work_dir() / "blown.g6";
    int code = run("gen blowup --from " + tout.string() + ".manifest --seed 1 --out " +
                   bout.string());
    REQUIRE(code == 0);
    Graph g = read_g6_file(bout);
    auto spectrum = hole_spectrum(g, false);
    CHECK(spectrum.kind == SpectrumKind::Uniform);
    CHECK(spectrum.uniform_length() == 7);
    auto m = Manifest::parse(slurp(bout.string() + ".manifest"));
    CHECK(verify_manifest(g, m).empty());
}

TEST_CASE("gen even-template, threshold, and composite verify their manifests") {
    for (const std::string& args :
         {std::string("gen even-template --ell 4 --k 2 --s 1 --seed 3"),
          std::string("gen threshold --n 7 --seed 11"),
          std::string("gen composite --k 7 --max-n 26 --seed 2")}) {
        fs::path out = work_dir() / "artifact.g6";
        CAPTURE(args);
        REQUIRE(run(args + " --out " + out.string()) == 0);
        Graph g = read_g6_file(out);
        auto m = Manifest::parse(slurp(out.string() + ".manifest"));
        CHECK(verify_manifest(g, m).empty());
    }
}

TEST_CASE("check reports membership with the documented exit codes") {
    fs::path c7 = work_dir() / "c7.g6";
    put(c7, to_graph6(cycle_graph(7)) + "\n");
    std::string report;
    CHECK(run("check " + c7.string() + " --k 7", &report) == 0);
    CHECK(report.find("uniform 7") != std::string::npos);

    fs::path mixed = work_dir() / "mixed.g6";
    put(mixed, to_graph6(disjoint_union(cycle_graph(6), cycle_graph(8))) + "\n");
    CHECK(run("check " + mixed.string() + " --k 7", &report) == 1);
    CHECK(report.find("witness hole length 6") != std::string::npos);
    CHECK(report.find("witness hole length 8") != std::string::npos);

    fs::path tree = work_dir() / "tree.g6";
    put(tree, to_graph6(path_graph(5)) + "\n");
    CHECK(run("check " + tree.string() + " --k 9", &report) == 0);
    CHECK(report.find("chordal (vacuous member)") != std::string::npos);
}

TEST_CASE("decompose writes a verifying tree and rejects non-members") {
    fs::path c9 = work_dir() / "c9.g6";
    put(c9, to_graph6(cycle_graph(9)) + "\n");
    fs::path tree_out = work_dir() / "c9.tree";
    REQUIRE(run("decompose " + c9.string() + " --k 9 --out " + tree_out.string()) == 0);
    auto tree = tree_from_text(slurp(tree_out));
    CHECK(verify_tree(cycle_graph(9), tree));
    CHECK(slurp(tree_out).find("leaf ring k=9") != std::string::npos);

    fs::path c6 = work_dir() / "c6.g6";
    put(c6, to_graph6(cycle_graph(6)) + "\n");
    CHECK(run("decompose " + c6.string() + " --k 9") == 1);
}

TEST_CASE("classify prints class flags and a configuration census") {
    fs::path k4 = work_dir() / "k4.g6";
    put(k4, to_graph6(complete_graph(4)) + "\n");
    std::string report;
    REQUIRE(run("classify " + k4.string(), &report) == 0);
    for (const char* cls : {"chordal: yes", "cograph: yes", "split: yes", "threshold: yes",
                            "quasi-threshold: yes", "half-graph: yes"})
        CHECK(report.find(cls) != std::string::npos);

    fs::path p4 = work_dir() / "p4.g6";
    put(p4, to_graph6(path_graph(4)) + "\n");
    REQUIRE(run("classify " + p4.string(), &report) == 0);
    CHECK(report.find("chordal: yes") != std::string::npos);
    CHECK(report.find("cograph: no") != std::string::npos);
    CHECK(report.find("threshold: no") != std::string::npos);

    fs::path c4 = work_dir() / "c4.g6";
    put(c4, to_graph6(cycle_graph(4)) + "\n");
    REQUIRE(run("classify " + c4.string(), &report) == 0);
    // C4 is P4-free and hence a cograph; it fails every other class.
    for (const char* cls : {"chordal: no", "cograph: yes", "split: no", "threshold: no",
                            "quasi-threshold: no", "half-graph: no"})
        CHECK(report.find(cls) != std::string::npos);
}

TEST_CASE("generation is byte-identical for identical seeds") {
    fs::path a = work_dir() / "det_a.g6";
    fs::path b = work_dir() / "det_b.g6";
    REQUIRE(run("gen composite --k 8 --max-n 28 --seed 99 --out " + a.string()) == 0);
    REQUIRE(run("gen composite --k 8 --max-n 28 --seed 99 --out " + b.string()) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a.string() + ".manifest") == slurp(b.string() + ".manifest"));
    CHECK_FALSE(slurp(a).empty());
}

TEST_CASE("unreadable input yields the parse exit code") {
    fs::path junk = work_dir() / "junk.g6";
    put(junk, "");
    CHECK(run("check " + junk.string() + " --k 7") == 3);
    CHECK(run("check " + (work_dir() / "missing.g6").string() + " --k 7") == 3);
    CHECK(run("bogus-command") == 3);
}
