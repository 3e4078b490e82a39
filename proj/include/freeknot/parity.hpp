#ifndef FREEKNOT_PARITY_HPP
#define FREEKNOT_PARITY_HPP

#include "freeknot/diagram.hpp"

#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

namespace freeknot {

enum class Parity { Even, Odd };

// chord -> parity of the number of chords linked with it.
using ParityVector = std::map<Label, Parity>;

// The parity calculus below is only defined for one unicursal component;
// every function throws MultiComponent otherwise.

ParityVector parity_vector(const FramedDiagram& diagram);

// E_a: the chords linked with `chord` (never the chord itself).
std::set<Label> incidence_set(const FramedDiagram& diagram, Label chord);

struct Bunch {
    std::vector<Label> chords;  // sorted
    bool pairwise_linked = false;
};

// Chords up to a ~ b iff E_a + E_b is 0 or a + b. Bunches are ordered by
// their smallest chord; `pairing[i][j]` is the linking of any chord of
// bunch i with any chord of bunch j (i != j).
struct BunchPartition {
    std::vector<Bunch> bunches;
    std::vector<std::vector<std::uint8_t>> pairing;
};

BunchPartition bunches(const FramedDiagram& diagram);

// The chordless diagram G0 is not counted as irreducibly odd.
struct NoChordsWitness {};

struct EvenChordWitness {
    Label chord = 0;
};

// No third chord links differently with the two.
struct IndistinguishablePairWitness {
    Label first = 0;
    Label second = 0;
};

using OddnessWitness =
    std::variant<NoChordsWitness, EvenChordWitness, IndistinguishablePairWitness>;

struct OddnessReport {
    bool irreducibly_odd = false;
    std::optional<OddnessWitness> witness;  // set iff !irreducibly_odd
};

OddnessReport is_irreducibly_odd(const FramedDiagram& diagram);

std::string describe(const OddnessWitness& witness);

// Deletes all odd chords at once.
FramedDiagram project_odd(const FramedDiagram& diagram);

// Least n with the n-th iterate of project_odd all-even.
std::size_t filtration_index(const FramedDiagram& diagram);

// The full orbit D, f(D), ..., ending at the first all-even diagram.
std::vector<FramedDiagram> projection_orbit(const FramedDiagram& diagram);

// Parity of the number of chords shared by the two components. Throws
// WrongComponentCount unless there are exactly two.
int link_crossing_parity(const FramedDiagram& diagram);

}  // namespace freeknot

#endif  // FREEKNOT_PARITY_HPP
