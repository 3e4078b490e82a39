#include "freeknot/bracket.hpp"

#include "freeknot/errors.hpp"
#include "freeknot/moves.hpp"

#include <sstream>

namespace freeknot {

namespace {

class StateSum {
public:
    StateSum(std::vector<Label> even, BracketExpansion& out) : even_(std::move(even)), out_(out) {}

    void run(const FramedDiagram& start) { descend(start, 0); }

private:
    void descend(const FramedDiagram& d, std::size_t depth) {
        const std::size_t remaining = even_.size() - depth;
        // A smoothing changes the component count by at most one.
        if (d.component_count() > remaining + 1) {
            return;
        }
        if (remaining == 0) {
            ++out_.one_component_summands;
            out_.value.toggle(canonical_code(reduce_r2(d)));
            return;
        }
        const Label chord = even_[depth];
        descend(smooth(d, chord, SmoothingKind::A), depth + 1);
        descend(smooth(d, chord, SmoothingKind::B), depth + 1);
    }

    std::vector<Label> even_;
    BracketExpansion& out_;
};

}  // namespace

Z2GClass Z2GClass::single(CanonicalCode code) {
    Z2GClass out;
    out.members_.insert(std::move(code));
    return out;
}

void Z2GClass::toggle(const CanonicalCode& code) {
    auto [it, inserted] = members_.insert(code);
    if (!inserted) {
        members_.erase(it);
    }
}

Z2GClass& Z2GClass::operator+=(const Z2GClass& other) {
    for (const auto& code : other.members_) {
        toggle(code);
    }
    return *this;
}

std::string serialize(const Z2GClass& value) {
    std::string out = std::to_string(value.size()) + "\n";
    for (const auto& code : value.members()) {
        out += code.text;
        out += '\n';
    }
    return out;
}

Z2GClass deserialize_z2g(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) {
        throw SyntaxError("missing count line");
    }
    std::size_t count = 0;
    try {
        count = std::stoul(line);
    } catch (const std::exception&) {
        throw SyntaxError("bad count line '" + line + "'");
    }
    Z2GClass out;
    for (std::size_t i = 0; i < count; ++i) {
        if (!std::getline(in, line)) {
            throw SyntaxError("expected " + std::to_string(count) + " codes");
        }
        out.toggle(canonical_code(parse_gauss(line)));
    }
    if (out.size() != count) {
        throw SyntaxError("repeated member code");
    }
    return out;
}

FramedDiagram reduce_r2(const FramedDiagram& diagram) {
    return reduce_r2(diagram, [](std::size_t) { return std::size_t{0}; });
}

FramedDiagram reduce_r2(const FramedDiagram& diagram,
                        const std::function<std::size_t(std::size_t)>& choose) {
    FramedDiagram cur = diagram;
    while (true) {
        const auto sites = find_r2_del(cur);
        if (sites.empty()) {
            return cur;
        }
        cur = apply_move(cur, sites[choose(sites.size()) % sites.size()]);
    }
}

BracketExpansion expand_bracket(const FramedDiagram& diagram, const BracketOptions& options) {
    // Parities are read once, in the diagram itself.
    const auto parity = parity_vector(diagram);
    std::vector<Label> even;
    for (const auto& [chord, p] : parity) {
        if (p == Parity::Even) {
            even.push_back(chord);
        }
    }
    if (even.size() > options.max_even_chords) {
        throw BudgetExceeded("bracket needs 2^" + std::to_string(even.size()) +
                             " smoothings; budget is 2^" + std::to_string(options.max_even_chords));
    }
    BracketExpansion out;
    out.even_chords = even.size();
    StateSum(std::move(even), out).run(diagram);
    return out;
}

Certification minimality_certificate(const FramedDiagram& diagram, const BracketOptions& options) {
    const auto report = is_irreducibly_odd(diagram);
    if (!report.irreducibly_odd) {
        return CertificateRefusal{"not irreducibly odd: " + describe(*report.witness), report.witness};
    }
    const auto code = canonical_code(diagram);
    if (bracket(diagram, options) != Z2GClass::single(code)) {
        return CertificateRefusal{"bracket differs from the diagram itself", std::nullopt};
    }
    const std::size_t n = diagram.chord_count();
    return MinimalityCertificate{
        code, n,
        "irreducibly odd and its bracket is {itself}: every diagram of this free knot has at least " +
            std::to_string(n) + " chords and has a smoothing with exactly " + std::to_string(n) +
            " chords that is R2-equivalent to the subject"};
}

Nontriviality nontriviality_test(const FramedDiagram& diagram, const BracketOptions& options) {
    const auto trivial = Z2GClass::single(canonical_code(FramedDiagram{}));
    return bracket(diagram, options) == trivial ? Nontriviality::Inconclusive
                                                : Nontriviality::ProvablyNontrivial;
}

std::string_view to_string(Nontriviality verdict) {
    return verdict == Nontriviality::ProvablyNontrivial ? "provably_nontrivial" : "inconclusive";
}

}  // namespace freeknot
