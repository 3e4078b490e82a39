#include "freeknot/moves.hpp"

#include "freeknot/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace freeknot {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// An arc between two distinct occurrences of two different chords.
struct LabeledArc {
    Arc arc;
    Occurrence from;
    Occurrence to;
    Label a = 0;
    Label b = 0;
};

Occurrence arc_end(const FramedDiagram& d, const Arc& arc) {
    const std::size_t m = d.component(arc.component).size();
    return {arc.component, (arc.start + 1) % m};
}

bool arc_valid(const FramedDiagram& d, const Arc& arc) {
    return arc.component < d.component_count() && d.component(arc.component).size() >= 2 &&
           arc.start < d.component(arc.component).size();
}

std::vector<LabeledArc> mixed_arcs(const FramedDiagram& d) {
    std::vector<LabeledArc> out;
    for (std::size_t c = 0; c < d.component_count(); ++c) {
        const auto& w = d.component(c);
        if (w.size() < 2) {
            continue;
        }
        for (std::size_t p = 0; p < w.size(); ++p) {
            const Arc arc{c, p};
            const Occurrence from{c, p};
            const Occurrence to = arc_end(d, arc);
            const Label a = d.at(from);
            const Label b = d.at(to);
            if (a != b) {
                out.push_back({arc, from, to, a, b});
            }
        }
    }
    return out;
}

bool slot_valid(const FramedDiagram& d, const Slot& s) {
    return s.component < d.component_count() &&
           s.position < std::max<std::size_t>(d.component(s.component).size(), 1);
}

std::vector<Word> without_chords(const FramedDiagram& d, std::initializer_list<Label> gone) {
    std::vector<Word> out;
    for (const auto& w : d.components()) {
        Word kept;
        for (Label l : w) {
            if (std::find(gone.begin(), gone.end(), l) == gone.end()) {
                kept.push_back(l);
            }
        }
        out.push_back(std::move(kept));
    }
    return out;
}

[[noreturn]] void stale(const MoveSite& site, const std::string& why) {
    throw StaleSite("site '" + to_string(site) + "' does not apply: " + why);
}

FramedDiagram apply_r1_add(const FramedDiagram& d, const R1Add& s) {
    auto comps = d.components();
    const Label x = d.fresh_label();
    auto& w = comps[s.slot.component];
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(s.slot.position), {x, x});
    return FramedDiagram(std::move(comps));
}

FramedDiagram apply_r2_add(const FramedDiagram& d, const R2Add& s) {
    auto comps = d.components();
    const Label x = d.fresh_label();
    Label y = x + 1;
    while (d.has_chord(y)) {
        ++y;
    }
    const Word first_part{x, y};
    const Word second_part = s.pattern == R2Pattern::Parallel ? Word{y, x} : Word{x, y};
    if (s.first == s.second) {
        Word both = first_part;
        both.insert(both.end(), second_part.begin(), second_part.end());
        auto& w = comps[s.first.component];
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(s.first.position), both.begin(), both.end());
        return FramedDiagram(std::move(comps));
    }
    // Insert at the later gap first so the earlier index stays valid.
    std::vector<std::pair<Slot, const Word*>> parts{{s.first, &first_part}, {s.second, &second_part}};
    std::sort(parts.begin(), parts.end(),
              [](const auto& l, const auto& r) { return l.first > r.first; });
    for (const auto& [slot, part] : parts) {
        auto& w = comps[slot.component];
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(slot.position), part->begin(), part->end());
    }
    return FramedDiagram(std::move(comps));
}

std::optional<std::size_t> parse_index(std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return v;
}

// "@c:p"
std::pair<std::size_t, std::size_t> parse_locus(std::string_view tok) {
    if (tok.size() < 4 || tok.front() != '@') {
        throw SyntaxError("expected @component:position, got '" + std::string(tok) + "'");
    }
    tok.remove_prefix(1);
    const auto colon = tok.find(':');
    if (colon == std::string_view::npos) {
        throw SyntaxError("expected @component:position, got '@" + std::string(tok) + "'");
    }
    auto c = parse_index(tok.substr(0, colon));
    auto p = parse_index(tok.substr(colon + 1));
    if (!c || !p) {
        throw SyntaxError("bad locus '@" + std::string(tok) + "'");
    }
    return {*c, *p};
}

Label parse_label(std::string_view tok) {
    auto v = parse_index(tok);
    if (!v || *v == 0 || *v > 1'000'000'000) {
        throw SyntaxError("bad chord label '" + std::string(tok) + "'");
    }
    return static_cast<Label>(*v);
}

std::string locus(std::size_t c, std::size_t p) {
    return "@" + std::to_string(c) + ":" + std::to_string(p);
}

}  // namespace

MoveKind kind_of(const MoveSite& site) {
    return std::visit(Overloaded{
                          [](const R1Add&) { return MoveKind::R1Add; },
                          [](const R1Del&) { return MoveKind::R1Del; },
                          [](const R2Add&) { return MoveKind::R2Add; },
                          [](const R2Del&) { return MoveKind::R2Del; },
                          [](const R3Move&) { return MoveKind::R3; },
                      },
                      site);
}

std::string_view kind_name(MoveKind kind) {
    switch (kind) {
        case MoveKind::R1Add: return "R1_ADD";
        case MoveKind::R1Del: return "R1_DEL";
        case MoveKind::R2Add: return "R2_ADD";
        case MoveKind::R2Del: return "R2_DEL";
        case MoveKind::R3: return "R3";
    }
    return "?";
}

std::vector<MoveSite> find_r1_del(const FramedDiagram& d) {
    std::vector<MoveSite> out;
    for (Label chord : d.chords()) {
        const auto [o1, o2] = d.occurrences(chord);
        if (o1.component != o2.component) {
            continue;
        }
        const std::size_t m = d.component(o1.component).size();
        if (o2.position == o1.position + 1) {
            out.push_back(R1Del{chord, Arc{o1.component, o1.position}});
        } else if (o1.position == 0 && o2.position == m - 1) {
            out.push_back(R1Del{chord, Arc{o1.component, o2.position}});
        }
    }
    return out;
}

std::vector<MoveSite> find_r2_del(const FramedDiagram& d) {
    std::map<std::pair<Label, Label>, std::vector<LabeledArc>> by_pair;
    for (const auto& la : mixed_arcs(d)) {
        by_pair[{std::min(la.a, la.b), std::max(la.a, la.b)}].push_back(la);
    }
    std::vector<MoveSite> out;
    for (const auto& [pair, arcs] : by_pair) {
        bool found = false;
        for (std::size_t i = 0; i < arcs.size() && !found; ++i) {
            for (std::size_t j = i + 1; j < arcs.size() && !found; ++j) {
                const auto& u = arcs[i];
                const auto& v = arcs[j];
                if (u.from != v.from && u.from != v.to && u.to != v.from && u.to != v.to) {
                    out.push_back(R2Del{pair.first, pair.second, {u.arc, v.arc}});
                    found = true;
                }
            }
        }
    }
    return out;
}

std::vector<MoveSite> find_r3(const FramedDiagram& d) {
    const auto arcs = mixed_arcs(d);
    std::vector<MoveSite> out;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        for (std::size_t j = i + 1; j < arcs.size(); ++j) {
            for (std::size_t k = j + 1; k < arcs.size(); ++k) {
                const std::array<const LabeledArc*, 3> t{&arcs[i], &arcs[j], &arcs[k]};
                std::array<Occurrence, 6> occ{};
                std::map<Label, int> uses;
                for (std::size_t e = 0; e < 3; ++e) {
                    occ[2 * e] = t[e]->from;
                    occ[2 * e + 1] = t[e]->to;
                    ++uses[t[e]->a];
                    ++uses[t[e]->b];
                }
                if (uses.size() != 3) {
                    continue;
                }
                std::sort(occ.begin(), occ.end());
                if (std::adjacent_find(occ.begin(), occ.end()) != occ.end()) {
                    continue;
                }
                // Three chords, each on two arcs, with six distinct occurrences:
                // every chord meets the triangle at both of its occurrences.
                R3Move site;
                std::size_t c = 0;
                for (const auto& [label, count] : uses) {
                    site.chords[c++] = label;
                }
                site.arcs = {t[0]->arc, t[1]->arc, t[2]->arc};
                out.push_back(site);
            }
        }
    }
    return out;
}

std::vector<MoveSite> enumerate_add(const FramedDiagram& d) {
    std::vector<Slot> slots;
    for (std::size_t c = 0; c < d.component_count(); ++c) {
        const std::size_t n = std::max<std::size_t>(d.component(c).size(), 1);
        for (std::size_t p = 0; p < n; ++p) {
            slots.push_back({c, p});
        }
    }
    std::vector<MoveSite> out;
    for (const auto& s : slots) {
        out.push_back(R1Add{s});
    }
    for (std::size_t i = 0; i < slots.size(); ++i) {
        for (std::size_t j = i; j < slots.size(); ++j) {
            out.push_back(R2Add{slots[i], slots[j], R2Pattern::Parallel});
            out.push_back(R2Add{slots[i], slots[j], R2Pattern::Crossed});
        }
    }
    return out;
}

std::vector<MoveSite> enumerate_sites(const FramedDiagram& d, bool include_add) {
    auto out = find_r1_del(d);
    for (auto& s : find_r2_del(d)) {
        out.push_back(std::move(s));
    }
    for (auto& s : find_r3(d)) {
        out.push_back(std::move(s));
    }
    if (include_add) {
        for (auto& s : enumerate_add(d)) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

FramedDiagram apply_move(const FramedDiagram& d, const MoveSite& site) {
    return std::visit(
        Overloaded{
            [&](const R1Add& s) {
                if (!slot_valid(d, s.slot)) {
                    stale(site, "no such slot");
                }
                return apply_r1_add(d, s);
            },
            [&](const R1Del& s) {
                if (!arc_valid(d, s.arc) || d.at({s.arc.component, s.arc.start}) != s.chord ||
                    d.at(arc_end(d, s.arc)) != s.chord) {
                    stale(site, "arc does not join the two occurrences of the chord");
                }
                return FramedDiagram(without_chords(d, {s.chord}));
            },
            [&](const R2Add& s) {
                if (!slot_valid(d, s.first) || !slot_valid(d, s.second)) {
                    stale(site, "no such slot");
                }
                return apply_r2_add(d, s);
            },
            [&](const R2Del& s) {
                std::set<Occurrence> seen;
                for (const auto& arc : s.arcs) {
                    if (!arc_valid(d, arc)) {
                        stale(site, "no such arc");
                    }
                    const Occurrence from{arc.component, arc.start};
                    const Occurrence to = arc_end(d, arc);
                    const std::set<Label> ends{d.at(from), d.at(to)};
                    if (ends != std::set<Label>{s.first, s.second} || s.first == s.second) {
                        stale(site, "arc does not join the two chords");
                    }
                    seen.insert(from);
                    seen.insert(to);
                }
                if (seen.size() != 4) {
                    stale(site, "arcs share an occurrence");
                }
                return FramedDiagram(without_chords(d, {s.first, s.second}));
            },
            [&](const R3Move& s) {
                std::set<Occurrence> seen;
                std::map<Label, int> uses;
                for (const auto& arc : s.arcs) {
                    if (!arc_valid(d, arc)) {
                        stale(site, "no such arc");
                    }
                    const Occurrence from{arc.component, arc.start};
                    const Occurrence to = arc_end(d, arc);
                    seen.insert(from);
                    seen.insert(to);
                    if (d.at(from) == d.at(to)) {
                        stale(site, "arc is a loop");
                    }
                    ++uses[d.at(from)];
                    ++uses[d.at(to)];
                }
                std::set<Label> expected(s.chords.begin(), s.chords.end());
                std::set<Label> actual;
                for (const auto& [label, count] : uses) {
                    actual.insert(label);
                }
                if (seen.size() != 6 || actual != expected || expected.size() != 3) {
                    stale(site, "arcs do not form a triangle on the chords");
                }
                auto comps = d.components();
                for (const auto& arc : s.arcs) {
                    auto& w = comps[arc.component];
                    std::swap(w[arc.start], w[(arc.start + 1) % w.size()]);
                }
                return FramedDiagram(std::move(comps));
            },
        },
        site);
}

std::string to_string(const MoveSite& site) {
    return std::visit(
        Overloaded{
            [](const R1Add& s) {
                return "R1_ADD " + locus(s.slot.component, s.slot.position);
            },
            [](const R1Del& s) {
                return "R1_DEL " + std::to_string(s.chord) + " " +
                       locus(s.arc.component, s.arc.start);
            },
            [](const R2Add& s) {
                return "R2_ADD " + locus(s.first.component, s.first.position) + " " +
                       locus(s.second.component, s.second.position) + " " +
                       (s.pattern == R2Pattern::Parallel ? "parallel" : "crossed");
            },
            [](const R2Del& s) {
                return "R2_DEL " + std::to_string(s.first) + " " + std::to_string(s.second) + " " +
                       locus(s.arcs[0].component, s.arcs[0].start) + " " +
                       locus(s.arcs[1].component, s.arcs[1].start);
            },
            [](const R3Move& s) {
                std::string out = "R3";
                for (Label l : s.chords) {
                    out += " " + std::to_string(l);
                }
                for (const auto& a : s.arcs) {
                    out += " " + locus(a.component, a.start);
                }
                return out;
            },
        },
        site);
}

MoveSite parse_site(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tok;
    for (std::string t; in >> t;) {
        tok.push_back(t);
    }
    auto need = [&](std::size_t n) {
        if (tok.size() != n) {
            throw SyntaxError("malformed move site '" + std::string(text) + "'");
        }
    };
    if (tok.empty()) {
        throw SyntaxError("empty move site");
    }
    const std::string& kind = tok[0];
    if (kind == "R1_ADD") {
        need(2);
        auto [c, p] = parse_locus(tok[1]);
        return R1Add{{c, p}};
    }
    if (kind == "R1_DEL") {
        need(3);
        auto [c, p] = parse_locus(tok[2]);
        return R1Del{parse_label(tok[1]), {c, p}};
    }
    if (kind == "R2_ADD") {
        need(4);
        auto [c1, p1] = parse_locus(tok[1]);
        auto [c2, p2] = parse_locus(tok[2]);
        R2Pattern pattern;
        if (tok[3] == "parallel") {
            pattern = R2Pattern::Parallel;
        } else if (tok[3] == "crossed") {
            pattern = R2Pattern::Crossed;
        } else {
            throw SyntaxError("unknown R2 pattern '" + tok[3] + "'");
        }
        return R2Add{{c1, p1}, {c2, p2}, pattern};
    }
    if (kind == "R2_DEL") {
        need(5);
        auto [c1, p1] = parse_locus(tok[3]);
        auto [c2, p2] = parse_locus(tok[4]);
        return R2Del{parse_label(tok[1]), parse_label(tok[2]), {Arc{c1, p1}, Arc{c2, p2}}};
    }
    if (kind == "R3") {
        need(7);
        R3Move s;
        for (std::size_t i = 0; i < 3; ++i) {
            s.chords[i] = parse_label(tok[1 + i]);
            auto [c, p] = parse_locus(tok[4 + i]);
            s.arcs[i] = {c, p};
        }
        return s;
    }
    throw SyntaxError("unknown move kind '" + kind + "'");
}

WalkTrace random_walk(const FramedDiagram& start, std::size_t steps, std::uint64_t seed,
                      std::size_t max_chords) {
    std::mt19937_64 rng(seed);
    WalkTrace trace;
    trace.states.push_back(start);
    for (std::size_t step = 0; step < steps; ++step) {
        const auto& cur = trace.states.back();
        const std::size_t n = cur.chord_count();
        std::vector<MoveSite> sites = enumerate_sites(cur, false);
        for (auto& s : enumerate_add(cur)) {
            const std::size_t added = kind_of(s) == MoveKind::R1Add ? 1 : 2;
            if (n + added <= max_chords) {
                sites.push_back(std::move(s));
            }
        }
        if (sites.empty()) {
            break;
        }
        // Plain modulo keeps the walk identical across standard libraries.
        const auto& chosen = sites[static_cast<std::size_t>(rng() % sites.size())];
        trace.states.push_back(apply_move(cur, chosen));
        trace.moves.push_back(chosen);
    }
    return trace;
}

}  // namespace freeknot
