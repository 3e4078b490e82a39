#ifndef FREEKNOT_BRACKET_HPP
#define FREEKNOT_BRACKET_HPP

#include "freeknot/diagram.hpp"
#include "freeknot/parity.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>

namespace freeknot {

// An element of the Z2 space spanned by one-component diagrams modulo the
// second Reidemeister move: a set of canonical codes of R2-irreducible
// diagrams, where adding a member twice removes it.
class Z2GClass {
public:
    Z2GClass() = default;

    static Z2GClass single(CanonicalCode code);

    void toggle(const CanonicalCode& code);

    bool contains(const CanonicalCode& code) const { return members_.count(code) != 0; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const std::set<CanonicalCode>& members() const noexcept { return members_; }

    // Symmetric difference.
    Z2GClass& operator+=(const Z2GClass& other);

    bool operator==(const Z2GClass&) const = default;

private:
    std::set<CanonicalCode> members_;
};

// Count line, then the sorted member codes, one per line.
std::string serialize(const Z2GClass& value);
Z2GClass deserialize_z2g(std::string_view text);

inline bool z2g_equal(const Z2GClass& x, const Z2GClass& y) { return x == y; }

// Applies decreasing second moves until none is left. The default picks the
// first site found; `choose(k)` selects among k available sites instead.
FramedDiagram reduce_r2(const FramedDiagram& diagram);
FramedDiagram reduce_r2(const FramedDiagram& diagram,
                        const std::function<std::size_t(std::size_t)>& choose);

inline constexpr std::size_t kDefaultBracketBudget = 20;

struct BracketOptions {
    // Largest number of even chords smoothed (2^k states).
    std::size_t max_even_chords = kDefaultBracketBudget;
};

struct BracketExpansion {
    Z2GClass value;
    std::size_t even_chords = 0;
    // One-component smoothings before reduction and mod-2 cancellation.
    std::uint64_t one_component_summands = 0;
};

// Sum over both smoothings of every chord that is even in `diagram`, keeping
// only one-component results, each reduced by R2 and canonicalized. Throws
// MultiComponent and BudgetExceeded.
BracketExpansion expand_bracket(const FramedDiagram& diagram, const BracketOptions& options = {});

inline Z2GClass bracket(const FramedDiagram& diagram, const BracketOptions& options = {}) {
    return expand_bracket(diagram, options).value;
}

struct MinimalityCertificate {
    CanonicalCode subject;
    std::size_t chord_count = 0;
    std::string basis;
};

struct CertificateRefusal {
    std::string reason;
    std::optional<OddnessWitness> witness;
};

using Certification = std::variant<MinimalityCertificate, CertificateRefusal>;

// Certifies that every diagram of the free knot has at least as many chords
// as an irreducibly odd diagram whose bracket is itself.
Certification minimality_certificate(const FramedDiagram& diagram,
                                     const BracketOptions& options = {});

enum class Nontriviality { ProvablyNontrivial, Inconclusive };

// ProvablyNontrivial iff the bracket differs from {G0}.
Nontriviality nontriviality_test(const FramedDiagram& diagram, const BracketOptions& options = {});

std::string_view to_string(Nontriviality verdict);

}  // namespace freeknot

#endif  // FREEKNOT_BRACKET_HPP
