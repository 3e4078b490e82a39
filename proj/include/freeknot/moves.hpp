#ifndef FREEKNOT_MOVES_HPP
#define FREEKNOT_MOVES_HPP

#include "freeknot/diagram.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace freeknot {

// Insertion gap in front of `position` on a component. A free loop has the
// single slot 0; a word of length m has slots 0..m-1 (slot 0 is also the gap
// after the last letter).
struct Slot {
    std::size_t component = 0;
    std::size_t position = 0;

    auto operator<=>(const Slot&) const = default;
};

// The edge from `start` to the cyclically next position of a component.
struct Arc {
    std::size_t component = 0;
    std::size_t start = 0;

    auto operator<=>(const Arc&) const = default;
};

enum class R2Pattern {
    Parallel,  // x y ... y x
    Crossed    // x y ... x y
};

// === Move sites ===

struct R1Add {
    Slot slot;
};

// Loop removal: `arc` joins the two occurrences of `chord`.
struct R1Del {
    Label chord = 0;
    Arc arc;
};

struct R2Add {
    Slot first;
    Slot second;
    R2Pattern pattern = R2Pattern::Parallel;
};

// Bigon removal: two occurrence-disjoint arcs, each joining `first` and
// `second`.
struct R2Del {
    Label first = 0;
    Label second = 0;
    std::array<Arc, 2> arcs{};
};

// Triangle: three occurrence-disjoint arcs realizing the pairs of `chords`,
// meeting every chord at both of its occurrences. Applying transposes the
// two letters of every arc.
struct R3Move {
    std::array<Label, 3> chords{};
    std::array<Arc, 3> arcs{};
};

using MoveSite = std::variant<R1Add, R1Del, R2Add, R2Del, R3Move>;

enum class MoveKind { R1Add, R1Del, R2Add, R2Del, R3 };

MoveKind kind_of(const MoveSite& site);
std::string_view kind_name(MoveKind kind);

std::vector<MoveSite> find_r1_del(const FramedDiagram& diagram);
std::vector<MoveSite> find_r2_del(const FramedDiagram& diagram);
std::vector<MoveSite> find_r3(const FramedDiagram& diagram);

// Every R1_ADD slot and every unordered slot pair (a slot may pair with
// itself) in both R2_ADD patterns.
std::vector<MoveSite> enumerate_add(const FramedDiagram& diagram);

// Decreasing moves, R3 sites and (optionally) increasing moves.
std::vector<MoveSite> enumerate_sites(const FramedDiagram& diagram, bool include_add = true);

// Throws StaleSite when the site does not validate against the diagram.
// Fresh chords take the smallest unused positive labels.
FramedDiagram apply_move(const FramedDiagram& diagram, const MoveSite& site);

// One-line replay form, e.g. "R2_DEL 1 2 @0:0 @0:2".
std::string to_string(const MoveSite& site);

// Inverse of to_string; throws SyntaxError.
MoveSite parse_site(std::string_view text);

struct WalkTrace {
    std::vector<FramedDiagram> states;  // states[0] is the start
    std::vector<MoveSite> moves;        // moves[i] takes states[i] to states[i+1]
};

inline constexpr std::size_t kDefaultWalkMaxChords = 10;

// Seeded walk applying a uniformly chosen site at every step. Increasing
// moves that would exceed max_chords are not offered. Stops early only if a
// diagram admits no site at all.
WalkTrace random_walk(const FramedDiagram& start, std::size_t steps, std::uint64_t seed,
                      std::size_t max_chords = kDefaultWalkMaxChords);

}  // namespace freeknot

#endif  // FREEKNOT_MOVES_HPP
