// Self-describing artifact manifests: ordered key/value lines grouped
// under [section] headers, one format for every certificate kind, plus
// the closed-loop verifier that rebuilds each artifact from its recipe
// and compares it against the shipped graph.
#pragma once

#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "holes/blowup.hpp"
#include "holes/decompose.hpp"
#include "holes/graph.hpp"
#include "holes/hole_enum.hpp"
#include "holes/io.hpp"
#include "holes/rings.hpp"
#include "holes/templates.hpp"

namespace holes {

struct Manifest {
    struct Entry {
        std::string key, value;
    };
    struct Section {
        std::string name;
        std::vector<Entry> entries;
    };
    std::vector<Section> sections;

    Section& section(const std::string& name) {
        sections.push_back({name, {}});
        return sections.back();
    }
    void kv(const std::string& key, const std::string& value) {
        if (sections.empty()) section("artifact");
        sections.back().entries.push_back({key, value});
    }

    const Section* find(const std::string& name) const {
        for (const auto& s : sections)
            if (s.name == name) return &s;
        return nullptr;
    }
    std::optional<std::string> get(const std::string& sec, const std::string& key) const {
        if (const Section* s = find(sec))
            for (const auto& e : s->entries)
                if (e.key == key) return e.value;
        return std::nullopt;
    }
    std::vector<std::string> values(const std::string& sec, const std::string& key) const {
        std::vector<std::string> out;
        if (const Section* s = find(sec))
            for (const auto& e : s->entries)
                if (e.key == key) out.push_back(e.value);
        return out;
    }
    // Reassemble repeated "line" entries into a multi-line text block.
    std::string block(const std::string& sec) const {
        std::string out;
        for (const auto& line : values(sec, "line")) out += line + "\n";
        return out;
    }
    void add_block(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) kv("line", line);
    }

    std::string text() const {
        std::ostringstream out;
        for (const auto& s : sections) {
            out << "[" << s.name << "]\n";
            for (const auto& e : s.entries) out << e.key << ": " << e.value << "\n";
        }
        return out.str();
    }

    static Manifest parse(const std::string& text) {
        Manifest m;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']') throw ParseError("manifest: unterminated section header");
                m.section(line.substr(1, line.size() - 2));
                continue;
            }
            auto colon = line.find(": ");
            if (colon == std::string::npos) {
                colon = line.find(':');
                if (colon == std::string::npos)
                    throw ParseError("manifest: line without key separator");
            }
            std::string key = line.substr(0, colon);
            std::string value =
                line.size() > colon + 1 && line[colon + 1] == ' ' ? line.substr(colon + 2)
                                                                  : line.substr(colon + 1);
            if (m.sections.empty()) throw ParseError("manifest: entry before any section");
            m.kv(key, value);
        }
        return m;
    }
};

// Threshold graphs as growth words: vertex i > 0 is complete ('C') or
// anticomplete ('A') to all earlier vertices.
inline Graph threshold_from_word(const std::string& word) {
    Graph g(static_cast<int>(word.size()) + 1);
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] != 'C' && word[i] != 'A')
            throw ParseError("threshold word must be over {C, A}");
        if (word[i] == 'C')
            for (int u = 0; u <= static_cast<int>(i); ++u)
                g.add_edge(u, static_cast<int>(i) + 1);
    }
    return g;
}

namespace detail {

inline Graph rebuild_from_manifest(const Manifest& m) {
    auto kind = m.get("artifact", "kind");
    if (!kind) throw ParseError("manifest: missing artifact kind");
    if (*kind == "threshold") {
        auto word = m.get("recipe", "word");
        if (!word) throw ParseError("manifest: threshold artifact without a word");
        return threshold_from_word(*word == "-" ? "" : *word);
    }
    if (*kind == "ring")
        return build_ring(ring_spec_from_text(m.block("recipe"))).graph;
    if (*kind == "odd-template")
        return build_odd_template(odd_spec_from_text(m.block("recipe"))).graph;
    if (*kind == "even-template")
        return build_even_template(even_spec_from_text(m.block("recipe"))).graph;
    if (*kind == "blowup") {
        auto parity = m.get("artifact", "parity");
        if (!parity) throw ParseError("manifest: blowup artifact without parity");
        Graph tmpl;
        TemplatePartition part;
        if (*parity == "odd") {
            auto built = build_odd_template(odd_spec_from_text(m.block("recipe")));
            auto tw = make_twinless(built.graph, built.part);
            tmpl = tw.graph;
            part = to_proper_partition(tmpl, tw.part);
        } else {
            auto built = build_even_template(even_spec_from_text(m.block("recipe")));
            auto tw = make_twinless(built.graph, built.part);
            tmpl = tw.graph;
            part = even_to_proper(tmpl, tw.part);
        }
        BlowupSpec bs = blowup_spec_from_text(m.block("blowup"));
        return build_blowup(tmpl, part, bs).graph;
    }
    if (*kind == "composite") {
        auto k = m.get("artifact", "k");
        auto seed = m.get("artifact", "seed");
        auto maxn = m.get("artifact", "max-n");
        if (!k || !seed || !maxn) throw ParseError("manifest: incomplete composite parameters");
        std::mt19937_64 rng(std::stoull(*seed));
        return random_composite(std::stoi(*k), rng, std::stoi(*maxn));
    }
    throw ParseError("manifest: unknown artifact kind " + *kind);
}

} // namespace detail

// Closed loop: rebuild the artifact from its own recipe and demand the
// exact graph back, then re-check the advertised hole spectrum.
inline std::vector<std::string> verify_manifest(const Graph& g, const Manifest& m) {
    std::vector<std::string> out;
    Graph rebuilt;
    try {
        rebuilt = detail::rebuild_from_manifest(m);
    } catch (const std::exception& ex) {
        out.push_back(std::string("rebuild failed: ") + ex.what());
        return out;
    }
    if (!(rebuilt == g)) out.push_back("rebuilt graph differs from the shipped graph");
    if (auto k = m.get("artifact", "k")) {
        auto spectrum = hole_spectrum(g, false);
        bool ok = spectrum.kind == SpectrumKind::Chordal ||
                  (spectrum.kind == SpectrumKind::Uniform &&
                   spectrum.uniform_length() == std::stoi(*k));
        if (!ok) out.push_back("hole spectrum does not match the advertised length");
    }
    return out;
}

} // namespace holes
