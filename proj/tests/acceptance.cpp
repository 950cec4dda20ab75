// Acceptance suite: one line of output per criterion, nonzero exit on
// any failure.  Every quota is generated from fixed seeds so the run is
// reproducible byte for byte.

#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "holes/blowup.hpp"
#include "holes/classes.hpp"
#include "holes/decompose.hpp"
#include "holes/graph.hpp"
#include "holes/hole_enum.hpp"
#include "holes/hypergraph.hpp"
#include "holes/io.hpp"
#include "holes/manifest.hpp"
#include "holes/rings.hpp"
#include "holes/subgraphs.hpp"
#include "holes/templates.hpp"
#include "holes/truemper.hpp"

using namespace holes;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
    std::printf("criterion %2d: %s — %s%s%s\n", id, o.pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    if (!o.pass) ++failures;
}

// Certified instances retained for the configuration audit.
std::vector<std::pair<Graph, int>> audit_pool;

OddPretemplateCandidate candidate_of(const TemplatePartition& p) {
    OddPretemplateCandidate c;
    c.A = p.A;
    c.B = p.B;
    c.Ap = p.Ap;
    c.Bp = p.Bp;
    c.I = p.I;
    std::sort(c.A.begin(), c.A.end());
    std::sort(c.Ap.begin(), c.Ap.end());
    return c;
}

EvenPretemplateCandidate even_candidate_of(const TemplatePartition& p) {
    EvenPretemplateCandidate c;
    for (int i = 0; i < p.k + p.s; ++i) {
        if (i < p.k) {
            c.AK.push_back(p.A[static_cast<std::size_t>(i)]);
            c.ApK.push_back(p.Ap[static_cast<std::size_t>(i)]);
        } else {
            c.AS.push_back(p.A[static_cast<std::size_t>(i)]);
            c.ApS.push_back(p.Ap[static_cast<std::size_t>(i)]);
        }
    }
    c.B = p.B;
    c.Bp = p.Bp;
    c.I = p.I;
    return c;
}

struct BlownInstance {
    Graph tmpl;
    TemplatePartition part;
    Graph graph;
    BlowupMapping mapping;
};

BlownInstance random_blown(Parity parity, int ell, std::mt19937_64& rng) {
    BlownInstance out;
    if (parity == Parity::Odd) {
        auto built = build_odd_template(random_odd_spec(ell, 3 + static_cast<int>(rng() % 2), rng));
        auto tw = make_twinless(built.graph, built.part);
        out.tmpl = tw.graph;
        out.part = to_proper_partition(tw.graph, tw.part);
    } else {
        auto built = build_even_template(
            random_even_spec(ell, 2, 1 + static_cast<int>(rng() % 2), rng));
        auto tw = make_twinless(built.graph, built.part);
        out.tmpl = tw.graph;
        out.part = even_to_proper(tw.graph, tw.part);
    }
    int budget = std::min(40, out.tmpl.n() + 2 + static_cast<int>(rng() % 5));
    auto bs = random_blowup_spec(out.tmpl, out.part, rng, budget);
    auto built = build_blowup(out.tmpl, out.part, bs);
    out.graph = built.graph;
    out.mapping = built.mapping;
    return out;
}

// ---------------------------------------------------------------------------

Outcome criterion_blowup_soundness(Parity parity, int count, std::uint64_t seed) {
    Outcome o;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        int ell = parity == Parity::Odd ? 3 + i % 3 : 4 + i % 2;
        int want = parity == Parity::Odd ? 2 * ell + 1 : 2 * ell;
        BlownInstance inst;
        try {
            inst = random_blown(parity, ell, rng);
        } catch (const std::exception& ex) {
            o.fail("instance " + std::to_string(i) + " generation: " + ex.what());
            break;
        }
        if (inst.graph.n() > 40) {
            o.fail("instance " + std::to_string(i) + " exceeds 40 vertices");
            break;
        }
        auto spectrum = hole_spectrum(inst.graph, false);
        if (spectrum.kind != SpectrumKind::Uniform || spectrum.uniform_length() != want) {
            o.fail("instance " + std::to_string(i) + " has a hole of the wrong length");
            break;
        }
        if (parity == Parity::Odd) audit_pool.emplace_back(inst.graph, want);
    }
    if (o.pass) o.detail = std::to_string(count) + " instances";
    return o;
}

Outcome criterion_ring_soundness(int count, std::uint64_t seed) {
    Outcome o;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        int k = 7 + i % 4;
        RingSpec spec = random_ring_spec(k, k <= 8 ? 4 : 3, rng);
        auto built = build_ring(spec);
        if (built.graph.n() > 40) {
            o.fail("instance " + std::to_string(i) + " exceeds 40 vertices");
            break;
        }
        auto spectrum = hole_spectrum(built.graph, false);
        if (spectrum.kind != SpectrumKind::Uniform || spectrum.uniform_length() != k) {
            o.fail("instance " + std::to_string(i) + " hole spectrum is not uniform k");
            break;
        }
        auto rec = recognize_ring(built.graph);
        if (!rec || rec->k != k || !verify_ring(built.graph, *rec).empty()) {
            o.fail("instance " + std::to_string(i) + " recognition round trip failed");
            break;
        }
        audit_pool.emplace_back(built.graph, k);
    }
    if (o.pass) o.detail = std::to_string(count) + " instances";
    return o;
}

Outcome criterion_totality(Parity parity, int count, std::uint64_t seed) {
    Outcome o;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        int k = parity == Parity::Odd ? (i % 2 ? 9 : 7) : (i % 2 ? 10 : 8);
        Graph g = random_composite(k, rng, 36);
        try {
            auto tree = decompose(g, k);
            if (!verify_tree(g, tree)) {
                o.fail("instance " + std::to_string(i) + " tree failed verification");
                break;
            }
            auto parsed = tree_from_text(to_text(tree));
            if (!verify_tree(g, parsed)) {
                o.fail("instance " + std::to_string(i) + " parsed tree failed verification");
                break;
            }
        } catch (const StuckError& ex) {
            o.fail("instance " + std::to_string(i) + " stuck: " + ex.what());
            break;
        } catch (const std::exception& ex) {
            o.fail("instance " + std::to_string(i) + ": " + ex.what());
            break;
        }
        audit_pool.emplace_back(g, k);
    }
    if (o.pass) o.detail = std::to_string(count) + " composites";
    return o;
}

Outcome criterion_characterizations(int samples, std::uint64_t seed) {
    Outcome o;
    std::mt19937_64 rng(seed);
    const Graph p4 = path_graph(4), c4 = cycle_graph(4), c5 = cycle_graph(5);
    const Graph kk2 = disjoint_union(complete_graph(2), complete_graph(2));
    const Graph k1x3 = Graph(3);
    for (int i = 0; i < samples && o.pass; ++i) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 10 < 1 + rng() % 9) g.add_edge(u, v);

        bool th_free = !contains_induced(g, p4) && !contains_induced(g, c4) &&
                       !contains_induced(g, kk2);
        if (th_free != recognize_threshold(g).has_value())
            o.fail("threshold mismatch at sample " + std::to_string(i));

        bool qt_free = !contains_induced(g, p4) && !contains_induced(g, c4);
        auto qt = recognize_quasi_threshold(g);
        if (qt_free != qt.has_value())
            o.fail("quasi-threshold mismatch at sample " + std::to_string(i));
        if (qt && !(line_graph(*qt) == g))
            o.fail("quasi-threshold line graph mismatch at sample " + std::to_string(i));

        bool half_free = !contains_induced(g, k1x3) && !contains_induced(g, c4) &&
                         !contains_induced(g, c5);
        if (half_free != recognize_half_graph(g).has_value())
            o.fail("half-graph mismatch at sample " + std::to_string(i));

        bool split_free = !contains_induced(g, c4) && !contains_induced(g, c5) &&
                          !contains_induced(g, kk2);
        if (split_free != recognize_split(g).has_value())
            o.fail("split mismatch at sample " + std::to_string(i));
    }
    if (o.pass) o.detail = std::to_string(samples) + " samples, four equivalences each";
    return o;
}

Outcome criterion_truemper_audit() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& [g, k] : audit_pool) {
        try {
            FindConfigOptions opt;
            opt.budget = 400'000'000;
            auto report = audit_configs_for_class(g, k, opt);
            checked += report.configs_checked;
            if (!report.ok()) {
                o.fail("violation: " + report.violations.front());
                break;
            }
        } catch (const std::exception& ex) {
            o.fail(std::string("audit aborted: ") + ex.what());
            break;
        }
    }
    if (o.pass)
        o.detail = std::to_string(audit_pool.size()) + " instances, " +
                   std::to_string(checked) + " configurations";
    return o;
}

Outcome criterion_pretemplate_round_trip(int count, std::uint64_t seed) {
    Outcome o;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count && o.pass; ++i) {
        int ell = 3 + i % 3;
        auto built = build_odd_template(random_odd_spec(ell, 3 + static_cast<int>(rng() % 2), rng));
        auto cand = candidate_of(built.part);
        if (!validate_odd_pretemplate(built.graph, cand, ell).empty()) {
            o.fail("odd template " + std::to_string(i) + " rejected by the validator");
            break;
        }
        TemplatePartition rec;
        try {
            rec = pretemplate_to_template(built.graph, cand, ell);
        } catch (const std::exception& ex) {
            o.fail("odd template " + std::to_string(i) + ": " + ex.what());
            break;
        }
        auto sets = [](const std::map<int, std::vector<int>>& m) {
            std::multiset<std::vector<int>> out;
            for (const auto& [x, h] : m) {
                auto s = h;
                std::sort(s.begin(), s.end());
                out.insert(s);
            }
            return out;
        };
        if (sets(rec.hmap) != sets(built.part.hmap) || sets(rec.hmapp) != sets(built.part.hmapp))
            o.fail("odd template " + std::to_string(i) + " hyperedges not recovered");
    }
    std::mt19937_64 erng(seed + 1);
    for (int i = 0; i < count && o.pass; ++i) {
        int ell = 4 + i % 2;
        auto spec = random_even_spec(ell, 2, 1 + static_cast<int>(erng() % 2), erng);
        auto built = build_even_template(spec);
        auto cand = even_candidate_of(built.part);
        if (!validate_even_pretemplate(built.graph, cand, ell).empty()) {
            o.fail("even template " + std::to_string(i) + " rejected by the validator");
            break;
        }
        Graph base = detail::even_base_graph(spec, false);
        Graph basep = detail::even_base_graph(spec, true);
        auto trace = detail::stable_trace(base, basep, spec.h, spec.hp, spec.k);
        if (has_hyper_cycle_gt2(trace))
            o.fail("even template " + std::to_string(i) + " stable trace has a hyper cycle");
    }
    if (o.pass) o.detail = std::to_string(count) + " odd + " + std::to_string(count) + " even";
    return o;
}

Outcome criterion_hole_shapes(int count, std::uint64_t seed) {
    Outcome o;
    std::mt19937_64 rng(seed);
    auto shape_of = [](const Hole& h, const TemplatePartition& p, std::vector<int>& extras) {
        std::set<int> hv(h.cycle.begin(), h.cycle.end());
        std::set<int> covered;
        int full = 0, longs = 0;
        for (std::size_t i = 0; i < p.paths.size(); ++i) {
            bool all = true;
            for (int v : p.paths[i])
                if (!hv.count(v)) all = false;
            if (all) {
                ++full;
                if (static_cast<int>(i) < p.k || p.parity == Parity::Odd) ++longs;
                for (int v : p.paths[i]) covered.insert(v);
            }
        }
        extras.clear();
        for (int v : h.cycle)
            if (!covered.count(v)) extras.push_back(v);
        return std::pair{full, longs};
    };
    for (int i = 0; i < count && o.pass; ++i) {
        auto built = build_odd_template(random_odd_spec(3 + i % 3, 3 + static_cast<int>(rng() % 2), rng));
        for (const auto& h : enumerate_holes(built.graph)) {
            std::vector<int> extras;
            auto [full, longs] = shape_of(h, built.part, extras);
            if (full != 2 || extras.size() != 1) {
                o.fail("odd template " + std::to_string(i) + " hole off-shape");
                break;
            }
        }
    }
    std::mt19937_64 erng(seed + 1);
    for (int i = 0; i < count && o.pass; ++i) {
        auto built = build_even_template(
            random_even_spec(4 + i % 2, 2, 1 + static_cast<int>(erng() % 2), erng));
        for (const auto& h : enumerate_holes(built.graph)) {
            std::vector<int> extras;
            auto [full, longs] = shape_of(h, built.part, extras);
            if (full != 2 || static_cast<int>(extras.size()) != 2 - longs) {
                o.fail("even template " + std::to_string(i) + " hole off-shape");
                break;
            }
        }
    }
    if (o.pass) o.detail = "all holes of " + std::to_string(2 * count) + " templates";
    return o;
}

Outcome criterion_mutation_sensitivity(int count, std::uint64_t seed) {
    Outcome o;
    std::mt19937_64 rng(seed);
    int caught = 0, still_valid = 0;
    for (int i = 0; i < count; ++i) {
        int family = i % 3;
        bool violated = false, genuinely_valid = false;
        if (family == 0) {  // ring certificate, edge or label flip
            auto built = build_ring(random_ring_spec(7 + i % 3, 3, rng));
            Graph g = built.graph;
            RingPartition part = built.partition;
            if (rng() & 1) {
                int u = static_cast<int>(rng() % static_cast<std::size_t>(g.n()));
                int v = static_cast<int>(rng() % static_cast<std::size_t>(g.n()));
                if (u == v) v = (v + 1) % g.n();
                g.toggle_edge(u, v);
            } else {
                std::size_t a = rng() % part.cliques.size();
                std::size_t b = (a + 1 + rng() % (part.cliques.size() - 1)) % part.cliques.size();
                part.cliques[b].push_back(part.cliques[a].back());
                part.cliques[a].pop_back();
            }
            violated = !verify_ring(g, part).empty();
            if (!violated) {
                auto spectrum = hole_spectrum(g, false);
                genuinely_valid = spectrum.kind == SpectrumKind::Uniform &&
                                  spectrum.uniform_length() == part.k;
            }
        } else if (family == 1) {  // blowup certificate, edge or mapping flip
            auto inst = random_blown(Parity::Odd, 3 + i % 3, rng);
            Graph g = inst.graph;
            BlowupMapping m = inst.mapping;
            if (rng() & 1) {
                int u = static_cast<int>(rng() % static_cast<std::size_t>(g.n()));
                int v = static_cast<int>(rng() % static_cast<std::size_t>(g.n()));
                if (u == v) v = (v + 1) % g.n();
                g.toggle_edge(u, v);
            } else {
                std::size_t a = rng() % m.cliques.size();
                std::size_t b = (a + 1 + rng() % (m.cliques.size() - 1)) % m.cliques.size();
                std::swap(m.cliques[a].back(), m.cliques[b].back());
                for (std::size_t u = 0; u < m.cliques.size(); ++u)
                    for (std::size_t r = 0; r < m.cliques[u].size(); ++r) {
                        m.origin[static_cast<std::size_t>(m.cliques[u][r])] = static_cast<int>(u);
                        m.rank[static_cast<std::size_t>(m.cliques[u][r])] = static_cast<int>(r);
                    }
            }
            violated = !verify_blowup(g, inst.tmpl, inst.part, m).empty();
            if (!violated) {
                auto spectrum = hole_spectrum(g, false);
                genuinely_valid = spectrum.kind == SpectrumKind::Uniform &&
                                  spectrum.uniform_length() == 2 * inst.part.ell + 1;
            }
        } else {  // template certificate, edge flip against the validator
            int ell = 3 + i % 3;
            auto built = build_odd_template(random_odd_spec(ell, 3 + static_cast<int>(rng() % 2), rng));
            Graph g = built.graph;
            int u = static_cast<int>(rng() % static_cast<std::size_t>(g.n()));
            int v = static_cast<int>(rng() % static_cast<std::size_t>(g.n()));
            if (u == v) v = (v + 1) % g.n();
            g.toggle_edge(u, v);
            // Full certificate check: structural validation plus the
            // reconstruction (which re-checks the hole spectrum).
            violated = !validate_odd_pretemplate(g, candidate_of(built.part), ell).empty();
            if (!violated) {
                try {
                    pretemplate_to_template(g, candidate_of(built.part), ell);
                    genuinely_valid = true;
                } catch (const std::exception&) {
                    violated = true;
                }
            }
        }
        if (violated) ++caught;
        else if (genuinely_valid) ++still_valid;
        else {
            o.fail("mutant " + std::to_string(i) + " accepted but invalid");
            return o;
        }
    }
    if (caught * 100 < count * 99)
        o.fail("only " + std::to_string(caught) + "/" + std::to_string(count) + " mutants caught");
    else
        o.detail = std::to_string(caught) + "/" + std::to_string(count) + " caught, " +
                   std::to_string(still_valid) + " proven still-valid";
    return o;
}

std::string determinism_digest(std::uint64_t seed) {
    std::ostringstream out;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 4; ++i) {
        auto built = build_ring(random_ring_spec(7 + i, 3, rng));
        out << to_graph6(built.graph) << "\n";
    }
    for (int i = 0; i < 4; ++i) {
        auto inst = random_blown(i % 2 ? Parity::Even : Parity::Odd, i % 2 ? 4 : 3, rng);
        out << to_graph6(inst.graph) << "\n";
    }
    for (int i = 0; i < 2; ++i) {
        std::mt19937_64 crng(seed + 100 + static_cast<std::uint64_t>(i));
        Graph g = random_composite(i ? 8 : 7, crng, 30);
        out << to_graph6(g) << "\n";
        out << to_text(decompose(g, i ? 8 : 7));
    }
    Manifest m;
    m.section("artifact");
    m.kv("kind", "composite");
    m.kv("k", "7");
    m.kv("seed", std::to_string(seed));
    m.kv("max-n", "26");
    out << m.text();
    return out.str();
}

Outcome criterion_determinism(std::uint64_t seed) {
    Outcome o;
    std::string a = determinism_digest(seed);
    std::string b = determinism_digest(seed);
    if (a != b) o.fail("repeated generation produced different bytes");
    else o.detail = std::to_string(a.size()) + " digest bytes identical across two runs";
    return o;
}

} // namespace

int main() {
    report(1, "odd blowups have only (2l+1)-holes",
           criterion_blowup_soundness(Parity::Odd, 500, 1001));
    report(2, "even blowups have only 2l-holes",
           criterion_blowup_soundness(Parity::Even, 300, 1002));
    report(3, "rings are sound and recognized", criterion_ring_soundness(300, 1003));
    {
        Outcome odd = criterion_totality(Parity::Odd, 200, 1004);
        Outcome even = criterion_totality(Parity::Even, 200, 1005);
        Outcome both = odd;
        if (!even.pass) both.fail(even.detail);
        else if (both.pass) both.detail = "200 odd + 200 even composites, zero stuck";
        report(4, "composites decompose with exact reassembly", both);
    }
    report(5, "small-graph class characterizations agree",
           criterion_characterizations(10000, 1006));
    report(6, "configuration audit over certified instances", criterion_truemper_audit());
    report(7, "pretemplate-template round trips", criterion_pretemplate_round_trip(200, 1007));
    report(8, "template hole shapes", criterion_hole_shapes(200, 1008));
    report(9, "mutation sensitivity", criterion_mutation_sensitivity(100, 1009));
    report(10, "seeded generation is byte-identical", criterion_determinism(1010));
    return failures;
}
