#include "freeknot/parity.hpp"

#include "freeknot/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace freeknot {

namespace {

void require_one_component(const FramedDiagram& d, const char* op) {
    if (d.component_count() != 1) {
        throw MultiComponent(std::string(op) + " needs one unicursal component, got " +
                             std::to_string(d.component_count()));
    }
}

// Rows agree outside {i, j}.
bool twins(const InterlacementMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < m.size(); ++c) {
        if (c != i && c != j && m.at(i, c) != m.at(j, c)) {
            return false;
        }
    }
    return true;
}

bool all_even(const FramedDiagram& d) {
    const auto m = interlacement(d);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.row_sum(i) % 2) {
            return false;
        }
    }
    return true;
}

}  // namespace

ParityVector parity_vector(const FramedDiagram& diagram) {
    require_one_component(diagram, "parity_vector");
    const auto m = interlacement(diagram);
    ParityVector out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[m.chords()[i]] = m.row_sum(i) % 2 ? Parity::Odd : Parity::Even;
    }
    return out;
}

std::set<Label> incidence_set(const FramedDiagram& diagram, Label chord) {
    require_one_component(diagram, "incidence_set");
    const auto m = interlacement(diagram);
    const std::size_t i = m.index_of(chord);
    std::set<Label> out;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m.at(i, j)) {
            out.insert(m.chords()[j]);
        }
    }
    return out;
}

BunchPartition bunches(const FramedDiagram& diagram) {
    require_one_component(diagram, "bunches");
    const auto m = interlacement(diagram);
    const std::size_t n = m.size();

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (twins(m, i, j)) {
                parent[find(j)] = find(i);
            }
        }
    }

    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> class_of(n);
    std::map<std::size_t, std::size_t> root_to_class;
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, inserted] = root_to_class.try_emplace(find(i), classes.size());
        if (inserted) {
            classes.emplace_back();
        }
        classes[it->second].push_back(i);
        class_of[i] = it->second;
    }

    BunchPartition out;
    for (const auto& cls : classes) {
        Bunch b;
        for (std::size_t i : cls) {
            b.chords.push_back(m.chords()[i]);
        }
        b.pairwise_linked = cls.size() > 1 && m.at(cls[0], cls[1]);
        out.bunches.push_back(std::move(b));
    }
    const std::size_t k = classes.size();
    out.pairing.assign(k, std::vector<std::uint8_t>(k, 0));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            if (a != b) {
                out.pairing[a][b] = m.at(classes[a][0], classes[b][0]) ? 1 : 0;
            }
        }
    }
    return out;
}

OddnessReport is_irreducibly_odd(const FramedDiagram& diagram) {
    require_one_component(diagram, "is_irreducibly_odd");
    const auto m = interlacement(diagram);
    if (m.size() == 0) {
        return {false, NoChordsWitness{}};
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.row_sum(i) % 2 == 0) {
            return {false, EvenChordWitness{m.chords()[i]}};
        }
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (twins(m, i, j)) {
                return {false, IndistinguishablePairWitness{m.chords()[i], m.chords()[j]}};
            }
        }
    }
    return {true, std::nullopt};
}

std::string describe(const OddnessWitness& witness) {
    if (std::holds_alternative<NoChordsWitness>(witness)) {
        return "no chords";
    }
    if (const auto* e = std::get_if<EvenChordWitness>(&witness)) {
        return "even chord " + std::to_string(e->chord);
    }
    const auto& p = std::get<IndistinguishablePairWitness>(witness);
    return "indistinguishable pair " + std::to_string(p.first) + " " + std::to_string(p.second);
}

FramedDiagram project_odd(const FramedDiagram& diagram) {
    const auto parity = parity_vector(diagram);
    Word kept;
    for (Label l : diagram.component(0)) {
        if (parity.at(l) == Parity::Even) {
            kept.push_back(l);
        }
    }
    return FramedDiagram(std::vector<Word>{std::move(kept)});
}

std::vector<FramedDiagram> projection_orbit(const FramedDiagram& diagram) {
    require_one_component(diagram, "projection_orbit");
    std::vector<FramedDiagram> orbit{diagram};
    while (!all_even(orbit.back())) {
        orbit.push_back(project_odd(orbit.back()));
    }
    return orbit;
}

std::size_t filtration_index(const FramedDiagram& diagram) {
    return projection_orbit(diagram).size() - 1;
}

int link_crossing_parity(const FramedDiagram& diagram) {
    if (diagram.component_count() != 2) {
        throw WrongComponentCount("link_crossing_parity needs exactly 2 components, got " +
                                  std::to_string(diagram.component_count()));
    }
    int shared = 0;
    for (Label chord : diagram.chords()) {
        const auto [o1, o2] = diagram.occurrences(chord);
        if (o1.component != o2.component) {
            ++shared;
        }
    }
    return shared % 2;
}

}  // namespace freeknot
