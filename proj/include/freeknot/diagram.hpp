#ifndef FREEKNOT_DIAGRAM_HPP
#define FREEKNOT_DIAGRAM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace freeknot {

// Chord labels are positive integers. Textual labels that are not plain
// decimal integers are renumbered by the parser.
using Label = int;

// One unicursal component, read as a cyclic word. Rotations and reversal
// describe the same component; an empty word is a free loop.
using Word = std::vector<Label>;

struct Occurrence {
    std::size_t component = 0;
    std::size_t position = 0;

    auto operator<=>(const Occurrence&) const = default;
};

// A framed 4-graph as a double-occurrence multi-word: every label occurs
// exactly twice over the union of the components. Always has at least one
// component.
class FramedDiagram {
public:
    // G0, the one-component free loop.
    FramedDiagram();

    // Throws LabelCountError unless every label occurs exactly twice, and
    // DomainError for an empty component list or a non-positive label.
    explicit FramedDiagram(std::vector<Word> components);

    const std::vector<Word>& components() const noexcept { return components_; }
    const Word& component(std::size_t i) const { return components_.at(i); }
    std::size_t component_count() const noexcept { return components_.size(); }
    std::size_t chord_count() const noexcept;

    // Sorted ascending.
    std::vector<Label> chords() const;
    bool has_chord(Label chord) const;

    // Both occurrences of a chord in (component, position) order; throws
    // UnknownChord.
    std::pair<Occurrence, Occurrence> occurrences(Label chord) const;

    Label at(const Occurrence& occ) const {
        return components_.at(occ.component).at(occ.position);
    }

    // Smallest positive label not used by the diagram.
    Label fresh_label() const;

    bool operator==(const FramedDiagram&) const = default;

private:
    std::vector<Word> components_;
};

// Deterministic text for a diagram up to rotation and reflection of every
// component, component order and chord relabeling. Uses the Gauss code text
// grammar with labels 1..n.
struct CanonicalCode {
    std::string text;

    auto operator<=>(const CanonicalCode&) const = default;
};

// Symmetric Z2 matrix of chord linking, indexed by the sorted chord list.
class InterlacementMatrix {
public:
    InterlacementMatrix() = default;
    InterlacementMatrix(std::vector<Label> chords, std::vector<std::vector<std::uint8_t>> bits);

    std::size_t size() const noexcept { return chords_.size(); }
    const std::vector<Label>& chords() const noexcept { return chords_; }

    // Throws UnknownChord.
    std::size_t index_of(Label chord) const;

    bool at(std::size_t i, std::size_t j) const { return bits_[i][j] != 0; }
    bool linked(Label a, Label b) const { return at(index_of(a), index_of(b)); }
    std::size_t row_sum(std::size_t i) const;

    const std::vector<std::vector<std::uint8_t>>& rows() const noexcept { return bits_; }

private:
    std::vector<Label> chords_;
    std::vector<std::vector<std::uint8_t>> bits_;
};

enum class SmoothingKind { A, B };

// Components separated by ';', labels by whitespace, '@' for a free loop.
FramedDiagram parse_gauss(std::string_view text);

std::string to_text(const FramedDiagram& diagram);

InterlacementMatrix interlacement(const FramedDiagram& diagram);

// The canonical representative itself: labels 1..n by first appearance,
// free loops first, components ordered by (length, word).
FramedDiagram canonical_form(const FramedDiagram& diagram);
CanonicalCode canonical_code(const FramedDiagram& diagram);

// Minimal rotation/reflection of a single cyclic word relabeled 1..n.
Word canonical_word(const Word& word);

// True when the word (already relabeled by first appearance) equals its own
// canonical_word.
bool is_canonical_word(const Word& word);

inline bool canonically_equal(const FramedDiagram& a, const FramedDiagram& b) {
    return canonical_code(a) == canonical_code(b);
}

inline std::size_t unicursal_count(const FramedDiagram& diagram) {
    return diagram.component_count();
}

// Removes the vertex of `chord` and repastes its half-edges. For v.P.v.Q on
// one component, A splits into P and Q and B joins into P.reverse(Q). For
// v.P and v.Q on two components, A gives P.Q and B gives P.reverse(Q).
FramedDiagram smooth(const FramedDiagram& diagram, Label chord, SmoothingKind kind);

}  // namespace freeknot

#endif  // FREEKNOT_DIAGRAM_HPP
