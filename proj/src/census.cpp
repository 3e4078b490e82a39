#include "freeknot/census.hpp"

#include "freeknot/errors.hpp"

#include <algorithm>
#include <string>

namespace freeknot {

namespace {

void check_budget(std::size_t n, const CensusOptions& options) {
    if (n > options.max_chords) {
        throw BudgetExceeded("census of " + std::to_string(n) + " chords exceeds the limit of " +
                             std::to_string(options.max_chords));
    }
}

void pair_up(Word& word, Label next, const std::function<void(const Word&)>& visit) {
    auto first = std::find(word.begin(), word.end(), 0);
    if (first == word.end()) {
        visit(word);
        return;
    }
    *first = next;
    for (auto it = first + 1; it != word.end(); ++it) {
        if (*it == 0) {
            *it = next;
            pair_up(word, next + 1, visit);
            *it = 0;
        }
    }
    *first = 0;
}

}  // namespace

std::uint64_t pairing_count(std::size_t n) {
    std::uint64_t total = 1;
    for (std::uint64_t k = 2 * n; k > 1; k -= 2) {
        total *= k - 1;
    }
    return total;
}

void for_each_pairing(std::size_t n, const std::function<void(const Word&)>& visit,
                      const CensusOptions& options) {
    check_budget(n, options);
    Word word(2 * n, 0);
    pair_up(word, 1, visit);
}

std::vector<FramedDiagram> census_diagrams(std::size_t n, const CensusOptions& options) {
    std::vector<Word> words;
    // Each orbit contains exactly one first-appearance word equal to its own
    // canonical word, so filtering needs no global dedup.
    for_each_pairing(
        n,
        [&](const Word& w) {
            if (is_canonical_word(w)) {
                words.push_back(w);
            }
        },
        options);
    std::vector<std::pair<CanonicalCode, FramedDiagram>> keyed;
    keyed.reserve(words.size());
    for (auto& w : words) {
        FramedDiagram d(std::vector<Word>{std::move(w)});
        keyed.emplace_back(CanonicalCode{to_text(d)}, std::move(d));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<FramedDiagram> out;
    out.reserve(keyed.size());
    for (auto& [code, d] : keyed) {
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<CanonicalCode> census(std::size_t n, const CensusOptions& options) {
    std::vector<CanonicalCode> out;
    for (const auto& d : census_diagrams(n, options)) {
        out.push_back(CanonicalCode{to_text(d)});
    }
    return out;
}

}  // namespace freeknot
