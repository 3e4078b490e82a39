#include "freeknot/interlace.hpp"

#include "freeknot/errors.hpp"

#include <algorithm>
#include <sstream>

namespace freeknot {

namespace {

std::vector<std::size_t> degrees(const SimpleGraph& g) {
    std::vector<std::size_t> out(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        out[v] = g.degree(v);
    }
    return out;
}

// Backtracking injection from pattern vertices into host vertices that
// preserves adjacency and non-adjacency. With equal sizes this is an
// isomorphism search.
class Embedder {
public:
    Embedder(const SimpleGraph& pattern, const SimpleGraph& host, bool exact_degrees)
        : pattern_(pattern), host_(host), exact_(exact_degrees),
          pdeg_(degrees(pattern)), hdeg_(degrees(host)),
          image_(pattern.size()), used_(host.size(), false) {}

    bool run() { return extend(0); }

private:
    bool extend(std::size_t v) {
        if (v == pattern_.size()) {
            return true;
        }
        for (std::size_t h = 0; h < host_.size(); ++h) {
            if (used_[h]) {
                continue;
            }
            if (exact_ ? hdeg_[h] != pdeg_[v] : hdeg_[h] < pdeg_[v]) {
                continue;
            }
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u) {
                ok = pattern_.adjacent(u, v) == host_.adjacent(image_[u], h);
            }
            if (!ok) {
                continue;
            }
            used_[h] = true;
            image_[v] = h;
            if (extend(v + 1)) {
                return true;
            }
            used_[h] = false;
        }
        return false;
    }

    const SimpleGraph& pattern_;
    const SimpleGraph& host_;
    bool exact_;
    std::vector<std::size_t> pdeg_;
    std::vector<std::size_t> hdeg_;
    std::vector<std::size_t> image_;
    std::vector<bool> used_;
};

}  // namespace

SimpleGraph::SimpleGraph(std::size_t n) : adj_(n, std::vector<std::uint8_t>(n, 0)) {}

SimpleGraph::SimpleGraph(std::vector<std::vector<std::uint8_t>> adjacency)
    : adj_(std::move(adjacency)) {
    const std::size_t n = adj_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (adj_[i].size() != n) {
            throw DomainError("adjacency matrix is not square");
        }
        if (adj_[i][i]) {
            throw DomainError("adjacency matrix has a loop at " + std::to_string(i));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if ((adj_[i][j] != 0) != (adj_.at(j).at(i) != 0)) {
                throw DomainError("adjacency matrix is not symmetric");
            }
            adj_[i][j] = adj_[i][j] ? 1 : 0;
        }
    }
}

std::size_t SimpleGraph::degree(std::size_t v) const {
    std::size_t d = 0;
    for (auto b : adj_.at(v)) {
        d += b;
    }
    return d;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
    if (u == v || u >= size() || v >= size()) {
        throw DomainError("bad edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    adj_[u][v] = adj_[v][u] = 1;
}

SimpleGraph interlacement_graph(const FramedDiagram& diagram) {
    return SimpleGraph(interlacement(diagram).rows());
}

SimpleGraph wheel_graph(std::size_t k) {
    if (k < 3) {
        throw DomainError("wheel needs a rim of at least 3 vertices, got " + std::to_string(k));
    }
    SimpleGraph g(k + 1);
    for (std::size_t i = 1; i <= k; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, i % k + 1);
    }
    return g;
}

GraphOddnessReport graph_is_irreducibly_odd(const SimpleGraph& g) {
    const std::size_t n = g.size();
    if (n == 0) {
        return {false, EmptyGraphWitness{}};
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (g.degree(v) % 2 == 0) {
            return {false, OddVertexWitness{v}};
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            bool distinguished = false;
            for (std::size_t c = 0; c < n && !distinguished; ++c) {
                distinguished = c != a && c != b && g.adjacent(a, c) != g.adjacent(b, c);
            }
            if (!distinguished) {
                return {false, TwinWitness{a, b}};
            }
        }
    }
    return {true, std::nullopt};
}

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.size() != b.size()) {
        return false;
    }
    auto da = degrees(a);
    auto db = degrees(b);
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) {
        return false;
    }
    return Embedder(a, b, true).run();
}

bool contains_induced(const SimpleGraph& host, const SimpleGraph& pattern) {
    if (pattern.size() > host.size()) {
        return false;
    }
    return Embedder(pattern, host, false).run();
}

RealizationSearch realize_bruteforce(const SimpleGraph& g, const CensusOptions& options) {
    RealizationSearch out;
    auto target = degrees(g);
    std::sort(target.begin(), target.end());
    for_each_pairing(
        g.size(),
        [&](const Word& w) {
            ++out.pairings_enumerated;
            if (out.realization) {
                return;
            }
            FramedDiagram d(std::vector<Word>{w});
            const auto h = interlacement_graph(d);
            auto hd = degrees(h);
            std::sort(hd.begin(), hd.end());
            if (hd != target) {
                return;
            }
            ++out.diagrams_compared;
            if (isomorphic(g, h)) {
                out.realization = std::move(d);
            }
        },
        options);
    return out;
}

RealizationSearch realize_induced(const SimpleGraph& g, std::size_t max_chords,
                                  const CensusOptions& options) {
    RealizationSearch out;
    for (std::size_t m = g.size(); m <= max_chords && !out.realization; ++m) {
        out.pairings_enumerated += pairing_count(m);
        for (const auto& d : census_diagrams(m, options)) {
            ++out.diagrams_compared;
            if (contains_induced(interlacement_graph(d), g)) {
                out.realization = d;
                break;
            }
        }
    }
    return out;
}

std::string to_adjacency_text(const SimpleGraph& g) {
    std::string out;
    for (std::size_t v = 0; v < g.size(); ++v) {
        out += std::to_string(v) + ":";
        for (std::size_t u = 0; u < g.size(); ++u) {
            if (g.adjacent(v, u)) {
                out += " " + std::to_string(u);
            }
        }
        out += "\n";
    }
    return out;
}

SimpleGraph parse_adjacency_text(std::string_view text) {
    std::vector<std::vector<std::size_t>> lists;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw SyntaxError("expected 'v: neighbors', got '" + line + "'");
        }
        std::istringstream head(line.substr(0, colon));
        std::size_t v = 0;
        std::string rest;
        if (!(head >> v) || (head >> rest) || v != lists.size()) {
            throw SyntaxError("vertex lines must be numbered 0, 1, 2, ... in order; got '" + line + "'");
        }
        std::istringstream tail(line.substr(colon + 1));
        std::vector<std::size_t> nbrs;
        std::string tok;
        while (tail >> tok) {
            if (tok.find_first_not_of("0123456789") != std::string::npos) {
                throw SyntaxError("bad neighbor '" + tok + "'");
            }
            nbrs.push_back(std::stoul(tok));
        }
        lists.push_back(std::move(nbrs));
    }
    const std::size_t n = lists.size();
    std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u : lists[v]) {
            if (u >= n) {
                throw SyntaxError("neighbor " + std::to_string(u) + " out of range");
            }
            adj[v][u] = 1;
        }
    }
    return SimpleGraph(std::move(adj));
}

}  // namespace freeknot
