#include "freeknot/census.hpp"
#include "freeknot/errors.hpp"
#include "freeknot/moves.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace freeknot;

namespace {

FramedDiagram P(const char* s) { return parse_gauss(s); }

std::vector<FramedDiagram> small_diagrams(std::size_t max_n) {
    std::vector<FramedDiagram> out;
    for (std::size_t n = 0; n <= max_n; ++n) {
        for (auto& d : census_diagrams(n)) out.push_back(d);
    }
    for (const char* s : {"1 ; 1", "1 2 ; 1 2", "1 2 ; 2 1", "@ ; 1 1", "1 2 3 ; 1 2 3", "@ ; @"}) {
        out.push_back(P(s));
    }
    return out;
}

FramedDiagram delete_chords(const FramedDiagram& d, std::set<Label> gone) {
    std::vector<Word> comps;
    for (const auto& w : d.components()) {
        Word v;
        for (Label l : w) {
            if (!gone.count(l)) v.push_back(l);
        }
        comps.push_back(v);
    }
    return FramedDiagram(comps);
}

// (a, b) pairs with a bigon, found by scanning neighbour pairs on each component
std::set<std::pair<Label, Label>> oracle_bigons(const FramedDiagram& d) {
    std::vector<std::tuple<std::size_t, std::size_t, Label, Label>> arcs;
    for (std::size_t c = 0; c < d.component_count(); ++c) {
        const auto& w = d.component(c);
        if (w.size() < 2) continue;
        for (std::size_t i = 0; i < w.size(); ++i) {
            Label a = w[i], b = w[(i + 1) % w.size()];
            if (a != b) arcs.emplace_back(c, i, std::min(a, b), std::max(a, b));
        }
    }
    std::set<std::pair<Label, Label>> out;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        for (std::size_t j = i + 1; j < arcs.size(); ++j) {
            auto [c1, p1, a1, b1] = arcs[i];
            auto [c2, p2, a2, b2] = arcs[j];
            if (a1 != a2 || b1 != b2) continue;
            std::set<std::pair<std::size_t, std::size_t>> spots{
                {c1, p1}, {c1, (p1 + 1) % d.component(c1).size()},
                {c2, p2}, {c2, (p2 + 1) % d.component(c2).size()}};
            if (spots.size() == 4) out.insert({a1, b1});
        }
    }
    return out;
}

std::set<std::set<Label>> oracle_triangles(const FramedDiagram& d) {
    struct A { std::size_t c, i, j; Label a, b; };
    std::vector<A> arcs;
    for (std::size_t c = 0; c < d.component_count(); ++c) {
        const auto& w = d.component(c);
        if (w.size() < 2) continue;
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::size_t j = (i + 1) % w.size();
            if (w[i] != w[j]) arcs.push_back({c, i, j, w[i], w[j]});
        }
    }
    std::set<std::set<Label>> out;
    for (std::size_t x = 0; x < arcs.size(); ++x)
        for (std::size_t y = x + 1; y < arcs.size(); ++y)
            for (std::size_t z = y + 1; z < arcs.size(); ++z) {
                std::set<std::pair<std::size_t, std::size_t>> spots;
                std::map<Label, int> hits;
                for (auto* e : {&arcs[x], &arcs[y], &arcs[z]}) {
                    spots.insert({e->c, e->i});
                    spots.insert({e->c, e->j});
                    ++hits[e->a];
                    ++hits[e->b];
                }
                if (spots.size() != 6 || hits.size() != 3) continue;
                std::set<Label> t;
                for (auto [l, k] : hits) t.insert(l);
                out.insert(t);
            }
    return out;
}

}  // namespace

TEST(FindR1Del, Examples) {
    EXPECT_EQ(find_r1_del(P("1 1")).size(), 1u);
    EXPECT_EQ(find_r1_del(P("1 2 1 2")).size(), 0u);
    EXPECT_EQ(find_r1_del(P("1 2 2 1")).size(), 2u);
    EXPECT_EQ(find_r1_del(P("1 ; 1")).size(), 0u);
}

TEST(FindR2Del, Examples) {
    auto s = find_r2_del(P("1 2 1 2"));
    ASSERT_EQ(s.size(), 1u);
    auto r2 = std::get<R2Del>(s[0]);
    EXPECT_EQ(std::set<Label>({r2.first, r2.second}), std::set<Label>({1, 2}));

    auto t = find_r2_del(P("1 2 3 2 1 3"));
    ASSERT_EQ(t.size(), 1u);
    auto u = std::get<R2Del>(t[0]);
    EXPECT_EQ(std::set<Label>({u.first, u.second}), std::set<Label>({1, 2}));

    EXPECT_TRUE(find_r2_del(P("1 1")).empty());
    EXPECT_EQ(find_r2_del(P("1 2 ; 1 2")).size(), 1u);
}

TEST(FindR3, Examples) {
    auto s = find_r3(P("1 2 3 1 2 3"));
    ASSERT_GE(s.size(), 1u);
    for (const auto& site : s) {
        auto r3 = std::get<R3Move>(site);
        EXPECT_EQ(std::set<Label>(r3.chords.begin(), r3.chords.end()), std::set<Label>({1, 2, 3}));
    }
    // the word has three separated adjacencies 1-2, 2-3, 3-1 on distinct occurrences
    auto back = find_r3(P("1 1 2 2 3 3"));
    ASSERT_EQ(back.size(), 1u);
    EXPECT_TRUE(find_r3(P("1 2 1 2")).empty());
}

TEST(FindSites, MatchOracleScans) {
    for (const auto& d : small_diagrams(5)) {
        std::set<std::pair<Label, Label>> pairs;
        for (const auto& s : find_r2_del(d)) {
            auto r = std::get<R2Del>(s);
            pairs.insert({std::min(r.first, r.second), std::max(r.first, r.second)});
        }
        ASSERT_EQ(pairs, oracle_bigons(d)) << to_text(d);
        // one site per bigon pair
        ASSERT_EQ(pairs.size(), find_r2_del(d).size()) << to_text(d);

        std::set<std::set<Label>> tris;
        for (const auto& s : find_r3(d)) {
            auto r = std::get<R3Move>(s);
            tris.insert({r.chords.begin(), r.chords.end()});
        }
        ASSERT_EQ(tris, oracle_triangles(d)) << to_text(d);

        std::set<Label> kinks;
        for (const auto& s : find_r1_del(d)) kinks.insert(std::get<R1Del>(s).chord);
        for (Label l : d.chords()) {
            auto [o1, o2] = d.occurrences(l);
            const auto n = d.component(o1.component).size();
            bool adj = o1.component == o2.component &&
                       ((o1.position + 1) % n == o2.position || (o2.position + 1) % n == o1.position);
            ASSERT_EQ(kinks.count(l) == 1, adj) << to_text(d) << " chord " << l;
        }
    }
}

TEST(EnumerateAdd, Counts) {
    // one slot on the loop: R1 there, R2 on the slot with itself in two patterns
    EXPECT_EQ(enumerate_add(FramedDiagram()).size(), 3u);
    // word of length m: m R1 slots and m(m+1)/2 slot pairs, two patterns each
    for (const char* s : {"1 1", "1 2 1 2", "1 2 3 1 2 3"}) {
        const auto m = P(s).component(0).size();
        EXPECT_EQ(enumerate_add(P(s)).size(), m + m * (m + 1)) << s;
    }
}

TEST(Apply, Examples) {
    EXPECT_EQ(to_text(apply_move(FramedDiagram(), R1Add{{0, 0}})), "1 1");
    EXPECT_EQ(canonical_code(apply_move(P("1 1"), R1Add{{0, 1}})), canonical_code(P("1 2 2 1")));

    std::set<std::string> r2;
    for (auto pattern : {R2Pattern::Parallel, R2Pattern::Crossed}) {
        r2.insert(canonical_code(apply_move(FramedDiagram(), R2Add{{0, 0}, {0, 0}, pattern})).text);
    }
    EXPECT_EQ(r2, (std::set<std::string>{canonical_code(P("1 2 2 1")).text,
                                         canonical_code(P("1 2 1 2")).text}));

    EXPECT_EQ(to_text(apply_move(P("1 1"), find_r1_del(P("1 1"))[0])), "@");
    EXPECT_EQ(to_text(apply_move(P("1 2 1 2"), find_r2_del(P("1 2 1 2"))[0])), "@");
    EXPECT_EQ(to_text(apply_move(P("1 2 ; 1 2"), find_r2_del(P("1 2 ; 1 2"))[0])), "@ ; @");
}

TEST(Apply, R3TransposesEachArc) {
    const auto d = P("1 2 3 1 2 3");
    const R3Move site{{1, 2, 3}, {Arc{0, 0}, Arc{0, 2}, Arc{0, 4}}};
    const auto e = apply_move(d, site);
    EXPECT_EQ(to_text(e), "2 1 1 3 3 2");
    EXPECT_EQ(e.component_count(), 1u);
    for (const auto& s : find_r3(d)) {
        EXPECT_EQ(canonical_code(apply_move(d, s)), canonical_code(P("1 1 2 2 3 3")));
    }
}

TEST(Apply, StaleSites) {
    EXPECT_THROW(apply_move(P("1 2 1 2"), R1Del{1, Arc{0, 0}}), StaleSite);
    EXPECT_THROW(apply_move(P("1 1"), R1Add{{0, 5}}), StaleSite);
    EXPECT_THROW(apply_move(P("1 1"), R1Add{{1, 0}}), StaleSite);
    EXPECT_THROW(apply_move(P("1 2 1 2"), R2Del{1, 2, {Arc{0, 0}, Arc{0, 1}}}), StaleSite);
    EXPECT_THROW(apply_move(P("1 2 1 2"), R3Move{{1, 2, 3}, {Arc{0, 0}, Arc{0, 1}, Arc{0, 2}}}),
                 StaleSite);
}

TEST(Moves, Properties) {
    for (const auto& d : small_diagrams(4)) {
        const auto n = d.chord_count();
        for (const auto& site : enumerate_sites(d)) {
            const auto e = apply_move(d, site);
            ASSERT_EQ(e.component_count(), d.component_count()) << to_string(site);
            switch (kind_of(site)) {
                case MoveKind::R1Add: {
                    ASSERT_EQ(e.chord_count(), n + 1);
                    const Label x = d.fresh_label();
                    bool undone = false;
                    for (const auto& back : find_r1_del(e)) {
                        if (std::get<R1Del>(back).chord == x) {
                            undone = apply_move(e, back) == d;
                        }
                    }
                    ASSERT_TRUE(undone) << to_text(d) << " " << to_string(site);
                    break;
                }
                case MoveKind::R2Add: {
                    ASSERT_EQ(e.chord_count(), n + 2);
                    const Label x = d.fresh_label();
                    Label y = x + 1;
                    while (d.has_chord(y)) ++y;
                    ASSERT_TRUE(oracle_bigons(e).count({x, y})) << to_text(e);
                    bool undone = false;
                    for (const auto& back : find_r2_del(e)) {
                        auto r = std::get<R2Del>(back);
                        if (std::min(r.first, r.second) == x && std::max(r.first, r.second) == y) {
                            undone = apply_move(e, back) == d;
                        }
                    }
                    ASSERT_TRUE(undone) << to_text(d) << " " << to_string(site);
                    break;
                }
                case MoveKind::R1Del: {
                    const auto r = std::get<R1Del>(site);
                    ASSERT_EQ(e, delete_chords(d, {r.chord}));
                    break;
                }
                case MoveKind::R2Del: {
                    const auto r = std::get<R2Del>(site);
                    ASSERT_EQ(e, delete_chords(d, {r.first, r.second}));
                    break;
                }
                case MoveKind::R3: {
                    ASSERT_EQ(e.chord_count(), n);
                    const auto r = std::get<R3Move>(site);
                    const std::set<Label> tri(r.chords.begin(), r.chords.end());
                    for (Label a : d.chords()) {
                        for (Label b : d.chords()) {
                            if (a == b) continue;
                            const bool flip = tri.count(a) && tri.count(b);
                            ASSERT_EQ(oracle::linked(e.components(), a, b),
                                      oracle::linked(d.components(), a, b) != flip);
                        }
                    }
                    bool involution = false;
                    for (const auto& back : find_r3(e)) {
                        involution = involution || apply_move(e, back) == d;
                    }
                    ASSERT_TRUE(involution) << to_text(d) << " " << to_string(site);
                    break;
                }
            }
        }
    }
}

TEST(SiteText, RoundTrip) {
    for (const auto& d : small_diagrams(3)) {
        for (const auto& site : enumerate_sites(d)) {
            const auto text = to_string(site);
            const auto again = parse_site(text);
            ASSERT_EQ(to_string(again), text);
            ASSERT_EQ(apply_move(d, again), apply_move(d, site));
        }
    }
    EXPECT_EQ(to_string(parse_site("R2_DEL 1 2 @0:0 @0:2")), "R2_DEL 1 2 @0:0 @0:2");
    EXPECT_EQ(kind_of(parse_site("R1_ADD @0:0")), MoveKind::R1Add);
    EXPECT_EQ(kind_name(MoveKind::R3), "R3");
    EXPECT_THROW(parse_site("R4 1"), SyntaxError);
    EXPECT_THROW(parse_site("R1_DEL x @0:0"), SyntaxError);
    EXPECT_THROW(parse_site("R2_ADD @0:0 @0:1 sideways"), SyntaxError);
    EXPECT_THROW(parse_site("R1_ADD 0:0"), SyntaxError);
}

TEST(RandomWalk, ZeroSteps) {
    auto t = random_walk(FramedDiagram(), 0, 5);
    ASSERT_EQ(t.states.size(), 1u);
    EXPECT_EQ(t.states[0], FramedDiagram());
    EXPECT_TRUE(t.moves.empty());
}

TEST(RandomWalk, DeterministicAndReplayable) {
    for (const char* s : {"@", "1 2 1 2", "1 2 3 1 2 3", "1 ; 1"}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto a = random_walk(P(s), 15, seed, 8);
            const auto b = random_walk(P(s), 15, seed, 8);
            ASSERT_EQ(a.states, b.states);
            ASSERT_EQ(a.moves.size() + 1, a.states.size());
            ASSERT_EQ(a.moves.size(), 15u);
            for (std::size_t i = 0; i < a.moves.size(); ++i) {
                ASSERT_EQ(apply_move(a.states[i], a.moves[i]), a.states[i + 1]);
                ASSERT_LE(a.states[i + 1].chord_count(), 8u);
                ASSERT_EQ(a.states[i + 1].component_count(), a.states[0].component_count());
            }
        }
    }
}

TEST(RandomWalk, ChordCap) {
    // at the cap only decreasing moves and R3 remain on offer
    const auto d = P("1 2 1 2");
    auto t = random_walk(d, 20, 3, 2);
    for (const auto& s : t.states) EXPECT_LE(s.chord_count(), 2u);
}
