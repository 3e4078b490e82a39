#include "freeknot/census.hpp"
#include "freeknot/errors.hpp"
#include "freeknot/parity.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace freeknot;

namespace {

FramedDiagram P(const char* s) { return parse_gauss(s); }

std::set<Label> oracle_incidence(const Word& w, Label a) {
    std::set<Label> out;
    for (Label b : oracle::labels({w})) {
        if (b != a && oracle::linked({w}, a, b)) out.insert(b);
    }
    return out;
}

// E_a + E_b is empty or exactly {a, b}
bool oracle_equivalent(const Word& w, Label a, Label b) {
    std::set<Label> sym;
    auto ea = oracle_incidence(w, a), eb = oracle_incidence(w, b);
    std::set_symmetric_difference(ea.begin(), ea.end(), eb.begin(), eb.end(),
                                  std::inserter(sym, sym.begin()));
    return sym.empty() || sym == std::set<Label>{a, b};
}

bool oracle_irreducibly_odd(const Word& w) {
    const auto ls = oracle::labels({w});
    if (ls.empty()) return false;
    for (Label a : ls) {
        if (oracle::degree({w}, a) % 2 == 0) return false;
    }
    for (Label a : ls)
        for (Label b : ls)
            if (a < b && oracle_equivalent(w, a, b)) return false;
    return true;
}

}  // namespace

TEST(ParityVector, Examples) {
    EXPECT_EQ(parity_vector(P("1 1")), (ParityVector{{1, Parity::Even}}));
    EXPECT_EQ(parity_vector(P("1 2 1 2")), (ParityVector{{1, Parity::Odd}, {2, Parity::Odd}}));
    EXPECT_EQ(parity_vector(P("1 2 3 1 2 3")),
              (ParityVector{{1, Parity::Even}, {2, Parity::Even}, {3, Parity::Even}}));
    EXPECT_TRUE(parity_vector(P("@")).empty());
    EXPECT_THROW(parity_vector(P("1 ; 1")), MultiComponent);
}

TEST(ParityVector, OddChordsComeInPairs) {
    for (std::size_t n = 0; n <= 6; ++n) {
        for (const auto& d : census_diagrams(n)) {
            int odd = 0;
            for (auto [l, p] : parity_vector(d)) {
                ASSERT_EQ(p == Parity::Odd, oracle::degree(d.components(), l) % 2 == 1);
                odd += p == Parity::Odd;
            }
            ASSERT_EQ(odd % 2, 0) << to_text(d);
        }
    }
}

TEST(Incidence, Examples) {
    EXPECT_EQ(incidence_set(P("1 2 1 2"), 1), std::set<Label>{2});
    EXPECT_TRUE(incidence_set(P("1 1 2 2"), 1).empty());
    EXPECT_EQ(incidence_set(P("1 2 3 1 2 3"), 2), (std::set<Label>{1, 3}));
    EXPECT_THROW(incidence_set(P("1 1"), 4), UnknownChord);
}

TEST(Bunches, Examples) {
    auto b = bunches(P("1 2 1 2"));
    ASSERT_EQ(b.bunches.size(), 1u);
    EXPECT_EQ(b.bunches[0].chords, (std::vector<Label>{1, 2}));
    EXPECT_TRUE(b.bunches[0].pairwise_linked);

    auto c = bunches(P("1 1 2 2"));
    ASSERT_EQ(c.bunches.size(), 1u);
    EXPECT_FALSE(c.bunches[0].pairwise_linked);

    auto e = bunches(P("@"));
    EXPECT_TRUE(e.bunches.empty());
}

TEST(Bunches, PartitionIsWellDefined) {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& d : census_diagrams(n)) {
            const Word& w = d.component(0);
            const auto part = bunches(d);
            std::map<Label, std::size_t> where;
            for (std::size_t i = 0; i < part.bunches.size(); ++i) {
                for (Label l : part.bunches[i].chords) where[l] = i;
            }
            ASSERT_EQ(where.size(), d.chord_count());
            for (Label a : d.chords()) {
                for (Label b : d.chords()) {
                    if (a == b) continue;
                    ASSERT_EQ(where[a] == where[b], oracle_equivalent(w, a, b)) << to_text(d);
                    if (where[a] == where[b]) {
                        ASSERT_EQ(part.bunches[where[a]].pairwise_linked, oracle::linked({w}, a, b));
                    } else {
                        ASSERT_EQ(part.pairing[where[a]][where[b]] != 0, oracle::linked({w}, a, b));
                    }
                }
            }
        }
    }
}

TEST(IrreduciblyOdd, Examples) {
    auto r = is_irreducibly_odd(P("1 2 1 2"));
    EXPECT_FALSE(r.irreducibly_odd);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(std::holds_alternative<IndistinguishablePairWitness>(*r.witness));
    EXPECT_EQ(describe(*r.witness), "indistinguishable pair 1 2");

    auto k = is_irreducibly_odd(P("1 1"));
    EXPECT_FALSE(k.irreducibly_odd);
    EXPECT_EQ(describe(*k.witness), "even chord 1");

    auto g0 = is_irreducibly_odd(P("@"));
    EXPECT_FALSE(g0.irreducibly_odd);
    EXPECT_EQ(describe(*g0.witness), "no chords");

    EXPECT_TRUE(is_irreducibly_odd(P("1 2 1 3 4 2 5 3 5 6 4 6")).irreducibly_odd);
}

TEST(IrreduciblyOdd, CensusScanMatchesOracle) {
    // smallest instances appear at six chords
    const std::vector<std::size_t> counts = {0, 0, 0, 0, 0, 0, 2};
    for (std::size_t n = 0; n < counts.size(); ++n) {
        std::size_t found = 0;
        for (const auto& d : census_diagrams(n)) {
            const bool got = is_irreducibly_odd(d).irreducibly_odd;
            ASSERT_EQ(got, oracle_irreducibly_odd(d.component(0))) << to_text(d);
            found += got;
        }
        EXPECT_EQ(found, counts[n]) << n;
    }
}

TEST(ProjectOdd, Examples) {
    EXPECT_EQ(to_text(project_odd(P("1 2 1 2"))), "@");
    EXPECT_EQ(project_odd(P("1 1")), P("1 1"));
    EXPECT_EQ(project_odd(P("@")), P("@"));
    EXPECT_EQ(filtration_index(P("1 1")), 0u);
    EXPECT_EQ(filtration_index(P("1 2 1 2")), 1u);
    EXPECT_EQ(filtration_index(P("@")), 0u);
    EXPECT_THROW(project_odd(P("1 ; 1")), MultiComponent);
}

TEST(ProjectOdd, FixedPointsAreAllEven) {
    for (std::size_t n = 0; n <= 6; ++n) {
        for (const auto& d : census_diagrams(n)) {
            bool all_even = true;
            for (auto [l, p] : parity_vector(d)) all_even = all_even && p == Parity::Even;
            const auto f = project_odd(d);
            ASSERT_EQ(f == d, all_even);
            if (!all_even) {
                ASSERT_LT(f.chord_count(), d.chord_count());
            }
            const auto orbit = projection_orbit(d);
            ASSERT_EQ(orbit.front(), d);
            ASSERT_EQ(orbit.size(), filtration_index(d) + 1);
            ASSERT_EQ(project_odd(orbit.back()), orbit.back());
        }
    }
}

TEST(ProjectOdd, IndexCanExceedOne) {
    // 3 and 4 are odd; once they go, 1 and 2 become odd
    const auto d = P("1 2 3 1 2 4 3 4");
    EXPECT_EQ(filtration_index(d), 2u);
    EXPECT_EQ(to_text(projection_orbit(d)[1]), "1 2 1 2");
    std::size_t deepest = 0;
    for (std::size_t n = 0; n <= 6; ++n) {
        for (const auto& e : census_diagrams(n)) deepest = std::max(deepest, filtration_index(e));
    }
    EXPECT_GE(deepest, 2u);
}

TEST(LinkParity, Examples) {
    EXPECT_EQ(link_crossing_parity(P("1 ; 1")), 1);
    EXPECT_EQ(link_crossing_parity(P("1 1 ; @")), 0);
    EXPECT_EQ(link_crossing_parity(P("@ ; @")), 0);
    EXPECT_EQ(link_crossing_parity(P("1 2 ; 1 2")), 0);
    EXPECT_THROW(link_crossing_parity(P("1 1")), WrongComponentCount);
    EXPECT_THROW(link_crossing_parity(P("@ ; @ ; @")), WrongComponentCount);
}
