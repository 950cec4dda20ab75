// Command-line surface for the library: seeded generation of class
// members with verifiable manifests, membership checking, recursive
// decomposition, and graph-class classification.
//
// Exit codes: 0 success/member, 1 semantic rejection, 2 stuck or budget
// exceeded, 3 parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "holes/classes.hpp"
#include "holes/decompose.hpp"
#include "holes/graph.hpp"
#include "holes/hole_enum.hpp"
#include "holes/io.hpp"
#include "holes/manifest.hpp"
#include "holes/truemper.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitStuck = 2;
constexpr int kExitParse = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw holes::ParseError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << data;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

holes::Graph read_graph(const std::string& path, const std::string& format) {
    std::string text = read_file(path);
    std::string fmt = format;
    if (fmt.empty()) fmt = ends_with(path, ".g6") ? "graph6" : "edgelist";
    if (fmt == "graph6") {
        std::istringstream in(text);
        std::string line;
        if (!std::getline(in, line) || line.empty())
            throw holes::ParseError("empty graph6 input");
        return holes::from_graph6(line);
    }
    if (fmt == "edgelist") return holes::from_edge_list(text);
    throw holes::ParseError("unsupported input format: " + fmt);
}

std::string render_graph(const holes::Graph& g, const std::string& format) {
    if (format == "graph6") return holes::to_graph6(g) + "\n";
    if (format == "edgelist") return holes::to_edge_list(g);
    if (format == "dot") return holes::to_dot(g);
    throw holes::ParseError("unsupported output format: " + format);
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw holes::ParseError("empty entry in integer list");
        out.push_back(std::stoi(tok));
    }
    return out;
}

struct GenResult {
    holes::Graph graph;
    holes::Manifest manifest;
};

GenResult gen_threshold(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("threshold graphs need at least one vertex");
    std::mt19937_64 rng(seed);
    std::string word;
    for (int i = 1; i < n; ++i) word += (rng() & 1) ? 'C' : 'A';
    GenResult r;
    r.graph = holes::threshold_from_word(word);
    r.manifest.section("artifact");
    r.manifest.kv("kind", "threshold");
    r.manifest.kv("seed", std::to_string(seed));
    r.manifest.section("recipe");
    r.manifest.kv("word", word.empty() ? "-" : word);
    return r;
}

GenResult gen_ring(int k, const std::vector<int>& sizes, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    holes::RingSpec spec;
    if (sizes.empty()) {
        spec = holes::random_ring_spec(k, 3, rng);
    } else {
        if (static_cast<int>(sizes.size()) != k)
            throw std::invalid_argument("ring needs exactly k clique sizes");
        spec.k = k;
        spec.sizes = sizes;
        for (int i = 0; i < k; ++i) {
            std::vector<int> t(static_cast<std::size_t>(sizes[static_cast<std::size_t>(i)]));
            t[0] = sizes[static_cast<std::size_t>((i + 1) % k)];
            for (std::size_t j = 1; j < t.size(); ++j)
                t[j] = std::uniform_int_distribution<int>(1, t[j - 1])(rng);
            spec.staircases.push_back(std::move(t));
        }
    }
    auto built = holes::build_ring(spec);
    GenResult r;
    r.graph = built.graph;
    r.manifest.section("artifact");
    r.manifest.kv("kind", "ring");
    r.manifest.kv("k", std::to_string(k));
    r.manifest.kv("seed", std::to_string(seed));
    r.manifest.section("recipe");
    r.manifest.add_block(holes::to_text(spec));
    return r;
}

GenResult gen_odd_template(int ell, int k, bool edgeless_j, bool full_hyperedge,
                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    holes::OddTemplateSpec spec;
    if (edgeless_j || full_hyperedge) {
        spec.ell = ell;
        spec.j = edgeless_j ? holes::Graph(k) : holes::random_threshold_graph(k, rng);
        spec.h.n = k;
        if (full_hyperedge) {
            std::vector<int> all;
            for (int v = 0; v < k; ++v) all.push_back(v);
            spec.h.add_edge(all);
        }
    } else {
        spec = holes::random_odd_spec(ell, k, rng);
    }
    auto built = holes::build_odd_template(spec);
    GenResult r;
    r.graph = built.graph;
    r.manifest.section("artifact");
    r.manifest.kv("kind", "odd-template");
    r.manifest.kv("k", std::to_string(2 * ell + 1));
    r.manifest.kv("seed", std::to_string(seed));
    r.manifest.section("recipe");
    r.manifest.add_block(holes::to_text(spec));
    return r;
}

GenResult gen_even_template(int ell, int k, int s, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto spec = holes::random_even_spec(ell, k, s, rng);
    auto built = holes::build_even_template(spec);
    GenResult r;
    r.graph = built.graph;
    r.manifest.section("artifact");
    r.manifest.kv("kind", "even-template");
    r.manifest.kv("k", std::to_string(2 * ell));
    r.manifest.kv("seed", std::to_string(seed));
    r.manifest.section("recipe");
    r.manifest.add_block(holes::to_text(spec));
    return r;
}

GenResult gen_blowup(const std::string& from, int max_total, std::uint64_t seed) {
    auto src = holes::Manifest::parse(read_file(from));
    auto kind = src.get("artifact", "kind");
    if (!kind || (*kind != "odd-template" && *kind != "even-template"))
        throw std::invalid_argument("blowup generation needs a template manifest");
    std::mt19937_64 rng(seed);
    holes::Graph tmpl;
    holes::TemplatePartition part;
    if (*kind == "odd-template") {
        auto built = holes::build_odd_template(holes::odd_spec_from_text(src.block("recipe")));
        auto tw = holes::make_twinless(built.graph, built.part);
        tmpl = tw.graph;
        part = holes::to_proper_partition(tmpl, tw.part);
    } else {
        auto built = holes::build_even_template(holes::even_spec_from_text(src.block("recipe")));
        auto tw = holes::make_twinless(built.graph, built.part);
        tmpl = tw.graph;
        part = holes::even_to_proper(tmpl, tw.part);
    }
    if (max_total <= 0) max_total = tmpl.n() + 4;
    auto bs = holes::random_blowup_spec(tmpl, part, rng, max_total);
    auto built = holes::build_blowup(tmpl, part, bs);
    GenResult r;
    r.graph = built.graph;
    r.manifest.section("artifact");
    r.manifest.kv("kind", "blowup");
    r.manifest.kv("parity", *kind == "odd-template" ? "odd" : "even");
    r.manifest.kv("k", *src.get("artifact", "k"));
    r.manifest.kv("seed", std::to_string(seed));
    r.manifest.section("recipe");
    r.manifest.add_block(src.block("recipe"));
    r.manifest.section("blowup");
    r.manifest.add_block(holes::to_text(bs));
    return r;
}

GenResult gen_composite(int k, int max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    GenResult r;
    r.graph = holes::random_composite(k, rng, max_n);
    r.manifest.section("artifact");
    r.manifest.kv("kind", "composite");
    r.manifest.kv("k", std::to_string(k));
    r.manifest.kv("seed", std::to_string(seed));
    r.manifest.kv("max-n", std::to_string(max_n));
    return r;
}

int cmd_check(const holes::Graph& g, int k, std::size_t budget) {
    auto spectrum = holes::hole_spectrum(g, false, budget);
    if (spectrum.kind == holes::SpectrumKind::Chordal) {
        std::cout << "spectrum: chordal (vacuous member)\n";
        return kExitOk;
    }
    std::cout << "spectrum: " << (spectrum.kind == holes::SpectrumKind::Uniform ? "uniform" : "mixed");
    for (int len : spectrum.witness_lengths) std::cout << " " << len;
    std::cout << "\n";
    std::size_t shown = 0;
    std::vector<int> seen_lengths;
    for (const auto& h : spectrum.witnesses) {
        int len = h.length();
        if (std::find(seen_lengths.begin(), seen_lengths.end(), len) != seen_lengths.end() &&
            shown >= 2)
            continue;
        std::cout << "witness hole length " << len << ":";
        for (int v : h.cycle) std::cout << " " << v;
        std::cout << "\n";
        seen_lengths.push_back(len);
        if (++shown >= 2) break;
    }
    bool member = spectrum.kind == holes::SpectrumKind::Uniform && spectrum.uniform_length() == k;
    std::cout << (member ? "member" : "not a member") << " of the class for k=" << k << "\n";
    return member ? kExitOk : kExitRejected;
}

int cmd_decompose(const holes::Graph& g, int k, const std::string& out_path) {
    try {
        auto tree = holes::decompose(g, k);
        if (!holes::verify_tree(g, tree))
            throw std::runtime_error("internal error: decomposition tree failed verification");
        std::string text = holes::to_text(tree);
        if (out_path.empty()) std::cout << text;
        else write_file(out_path, text);
        return kExitOk;
    } catch (const holes::StuckError& ex) {
        std::cerr << ex.what() << "\n";
        std::cerr << "residual: " << holes::to_graph6(ex.residual) << "\n";
        return kExitStuck;
    } catch (const std::invalid_argument& ex) {
        std::cerr << ex.what() << "\n";
        return kExitRejected;
    }
}

int cmd_classify(const holes::Graph& g) {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "chordal: " << yn(holes::recognize_chordal(g).has_value()) << "\n";
    std::cout << "cograph: " << yn(holes::recognize_cograph(g).has_value()) << "\n";
    std::cout << "split: " << yn(holes::recognize_split(g).has_value()) << "\n";
    std::cout << "threshold: " << yn(holes::recognize_threshold(g).has_value()) << "\n";
    std::cout << "quasi-threshold: " << yn(holes::recognize_quasi_threshold(g).has_value()) << "\n";
    std::cout << "half-graph: " << yn(holes::recognize_half_graph(g).has_value()) << "\n";
    auto configs = holes::find_configs(g, holes::all_config_kinds());
    int prisms = 0, pyramids = 0, thetas = 0, wheels = 0;
    for (const auto& c : configs) {
        switch (c.kind) {
            case holes::ConfigKind::Prism: ++prisms; break;
            case holes::ConfigKind::Pyramid: ++pyramids; break;
            case holes::ConfigKind::Theta: ++thetas; break;
            case holes::ConfigKind::Wheel: ++wheels; break;
        }
    }
    std::cout << "prisms: " << prisms << "\npyramids: " << pyramids << "\nthetas: " << thetas
              << "\nwheels: " << wheels << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generation, checking, classification, and decomposition "
                 "for graphs whose holes all have one length"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a class member with a manifest");
    std::string gen_kind, gen_sizes, gen_from, gen_out = "out.g6", gen_format = "graph6";
    int gen_k = 0, gen_ell = 0, gen_s = 1, gen_n = 8, gen_max = 0;
    std::uint64_t gen_seed = 0;
    bool edgeless_j = false, full_hyperedge = false;
    gen->add_option("kind", gen_kind,
                    "threshold | ring | odd-template | even-template | blowup | composite")
        ->required();
    gen->add_option("--k", gen_k, "hole length (ring, composite) or base size (templates)");
    gen->add_option("--ell", gen_ell, "template parameter ell");
    gen->add_option("--s", gen_s, "even template stable-part size");
    gen->add_option("--n", gen_n, "vertex count (threshold)");
    gen->add_option("--max-n", gen_max, "size budget (blowup, composite)");
    gen->add_option("--sizes", gen_sizes, "comma-separated clique sizes (ring)");
    gen->add_option("--from", gen_from, "template manifest to blow up");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output graph path (manifest at <out>.manifest)");
    gen->add_option("--format", gen_format, "graph6 | edgelist | dot");
    gen->add_flag("--edgeless-j", edgeless_j, "odd template: edgeless base graph");
    gen->add_flag("--full-hyperedge", full_hyperedge, "odd template: one hyperedge covering the base");

    // check
    auto* check = app.add_subcommand("check", "membership check with witness holes");
    std::string check_in, check_format;
    int check_k = 0;
    std::size_t check_budget = holes::HoleEnumOptions{}.budget;
    check->add_option("input", check_in, "graph file")->required();
    check->add_option("--k", check_k, "required hole length")->required();
    check->add_option("--budget", check_budget, "enumeration budget");
    check->add_option("--format", check_format, "graph6 | edgelist");

    // decompose
    auto* dec = app.add_subcommand("decompose", "build and verify a decomposition tree");
    std::string dec_in, dec_out, dec_format;
    int dec_k = 0;
    dec->add_option("input", dec_in, "graph file")->required();
    dec->add_option("--k", dec_k, "hole length")->required();
    dec->add_option("--out", dec_out, "tree output path (stdout when absent)");
    dec->add_option("--format", dec_format, "graph6 | edgelist");

    // classify
    auto* cls = app.add_subcommand("classify", "graph-class flags and configuration census");
    std::string cls_in, cls_format;
    cls->add_option("input", cls_in, "graph file")->required();
    cls->add_option("--format", cls_format, "graph6 | edgelist");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*gen) {
            GenResult r;
            if (gen_kind == "threshold") r = gen_threshold(gen_n, gen_seed);
            else if (gen_kind == "ring")
                r = gen_ring(gen_k, gen_sizes.empty() ? std::vector<int>{} : parse_int_list(gen_sizes),
                             gen_seed);
            else if (gen_kind == "odd-template")
                r = gen_odd_template(gen_ell, gen_k, edgeless_j, full_hyperedge, gen_seed);
            else if (gen_kind == "even-template")
                r = gen_even_template(gen_ell, gen_k, gen_s, gen_seed);
            else if (gen_kind == "blowup")
                r = gen_blowup(gen_from, gen_max, gen_seed);
            else if (gen_kind == "composite")
                r = gen_composite(gen_k, gen_max > 0 ? gen_max : 30, gen_seed);
            else
                throw holes::ParseError("unknown generation kind: " + gen_kind);
            write_file(gen_out, render_graph(r.graph, gen_format));
            write_file(gen_out + ".manifest", r.manifest.text());
            auto issues = holes::verify_manifest(r.graph, r.manifest);
            if (!issues.empty()) {
                for (const auto& s : issues) std::cerr << s << "\n";
                return kExitRejected;
            }
            std::cout << "wrote " << gen_out << " (" << r.graph.n() << " vertices)\n";
            return kExitOk;
        }
        if (*check) return cmd_check(read_graph(check_in, check_format), check_k, check_budget);
        if (*dec) return cmd_decompose(read_graph(dec_in, dec_format), dec_k, dec_out);
        if (*cls) return cmd_classify(read_graph(cls_in, cls_format));
    } catch (const holes::ParseError& ex) {
        std::cerr << ex.what() << "\n";
        return kExitParse;
    } catch (const holes::BudgetExceeded& ex) {
        std::cerr << ex.what() << "\n";
        return kExitStuck;
    } catch (const std::exception& ex) {
        std::cerr << ex.what() << "\n";
        return kExitRejected;
    }
    return kExitOk;
}
