#ifndef FREEKNOT_INTERLACE_HPP
#define FREEKNOT_INTERLACE_HPP

#include "freeknot/census.hpp"
#include "freeknot/diagram.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace freeknot {

// Simple graph on vertices 0..n-1 as a symmetric Z2 adjacency matrix with
// zero diagonal.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n);

    // Throws DomainError if the matrix is not square, symmetric and
    // zero-diagonal.
    explicit SimpleGraph(std::vector<std::vector<std::uint8_t>> adjacency);

    std::size_t size() const noexcept { return adj_.size(); }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_.at(u).at(v) != 0; }
    std::size_t degree(std::size_t v) const;

    // Throws DomainError on loops or out-of-range vertices.
    void add_edge(std::size_t u, std::size_t v);

    const std::vector<std::vector<std::uint8_t>>& adjacency() const noexcept { return adj_; }

    bool operator==(const SimpleGraph&) const = default;

private:
    std::vector<std::vector<std::uint8_t>> adj_;
};

// Vertex i is the i-th chord in sorted label order.
SimpleGraph interlacement_graph(const FramedDiagram& diagram);

// Hub 0 joined to rim vertices 1..k, which form a k-cycle. DomainError for
// k < 3.
SimpleGraph wheel_graph(std::size_t k);

struct EmptyGraphWitness {};

struct OddVertexWitness {
    std::size_t vertex = 0;  // of even degree
};

struct TwinWitness {
    std::size_t first = 0;
    std::size_t second = 0;
};

struct GraphOddnessReport {
    bool irreducibly_odd = false;
    std::optional<std::variant<EmptyGraphWitness, OddVertexWitness, TwinWitness>> witness;
};

GraphOddnessReport graph_is_irreducibly_odd(const SimpleGraph& g);

// Backtracking over vertex maps, pruned by degree and adjacency.
bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// Is `pattern` an induced subgraph of `host`? Same backtracking search.
bool contains_induced(const SimpleGraph& host, const SimpleGraph& pattern);

struct RealizationSearch {
    std::optional<FramedDiagram> realization;
    std::uint64_t pairings_enumerated = 0;
    std::uint64_t diagrams_compared = 0;
};

// Scans every pairing on g.size() chords for a one-component diagram with
// interlacement graph isomorphic to g. BudgetExceeded past the census limit.
RealizationSearch realize_bruteforce(const SimpleGraph& g, const CensusOptions& options = {});

inline std::optional<FramedDiagram> realizable_bruteforce(const SimpleGraph& g,
                                                          const CensusOptions& options = {}) {
    return realize_bruteforce(g, options).realization;
}

// Looks for a diagram with up to max_chords chords whose interlacement graph
// contains g as an induced subgraph.
RealizationSearch realize_induced(const SimpleGraph& g, std::size_t max_chords,
                                  const CensusOptions& options = {});

// One line per vertex: "v: u1 u2 ...". Lines in vertex order.
std::string to_adjacency_text(const SimpleGraph& g);

// Inverse of to_adjacency_text. Blank lines and '#' comments are skipped.
// Throws SyntaxError, or DomainError for an asymmetric listing.
SimpleGraph parse_adjacency_text(std::string_view text);

}  // namespace freeknot

#endif  // FREEKNOT_INTERLACE_HPP
