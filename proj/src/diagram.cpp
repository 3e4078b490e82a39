#include "freeknot/diagram.hpp"

#include "freeknot/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <unordered_map>

namespace freeknot {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
            ++j;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

// Plain decimal integer without leading zeros, small enough to keep.
std::optional<Label> as_plain_integer(std::string_view token) {
    if (token.empty() || token.size() > 9 || token.front() == '0') {
        return std::nullopt;
    }
    Label value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

// Relabels a diagram's chords densely as 0..n-1 in sorted label order.
std::vector<Word> dense_components(const FramedDiagram& d, std::size_t& n_out) {
    const auto chords = d.chords();
    n_out = chords.size();
    std::vector<Word> out;
    out.reserve(d.component_count());
    for (const auto& w : d.components()) {
        Word dw;
        dw.reserve(w.size());
        for (Label l : w) {
            auto it = std::lower_bound(chords.begin(), chords.end(), l);
            dw.push_back(static_cast<Label>(it - chords.begin()));
        }
        out.push_back(std::move(dw));
    }
    return out;
}

// Branch-and-bound search for the minimal relabeled concatenation of the
// non-empty components, with components taken in non-decreasing length.
class CanonicalSearch {
public:
    CanonicalSearch(std::vector<Word> comps, std::size_t n_chords)
        : comps_(std::move(comps)), used_(comps_.size(), false), map_(n_chords, 0) {
        std::sort(comps_.begin(), comps_.end(),
                  [](const Word& a, const Word& b) { return a.size() < b.size(); });
        for (const auto& c : comps_) {
            lengths_.push_back(c.size());
            total_ += c.size();
        }
        cur_.reserve(total_);
    }

    std::vector<Word> run() {
        dfs(0);
        std::vector<Word> out;
        std::size_t off = 0;
        for (std::size_t len : lengths_) {
            out.emplace_back(best_.begin() + static_cast<std::ptrdiff_t>(off),
                             best_.begin() + static_cast<std::ptrdiff_t>(off + len));
            off += len;
        }
        return out;
    }

private:
    void dfs(std::size_t slot) {
        if (slot == comps_.size()) {
            if (!have_best_ || cur_ < best_) {
                best_ = cur_;
                have_best_ = true;
            }
            return;
        }
        const std::size_t len = lengths_[slot];
        for (std::size_t c = 0; c < comps_.size(); ++c) {
            if (used_[c] || comps_[c].size() != len) {
                continue;
            }
            used_[c] = true;
            const Word& w = comps_[c];
            for (int dir : {1, -1}) {
                for (std::size_t start = 0; start < len; ++start) {
                    const std::size_t base = cur_.size();
                    const Label saved_next = next_;
                    std::vector<Label> assigned;
                    bool prune = false;
                    bool tie = have_best_ && std::equal(cur_.begin(), cur_.end(), best_.begin());
                    for (std::size_t i = 0; i < len; ++i) {
                        const std::size_t idx =
                            dir > 0 ? (start + i) % len : (start + len - i) % len;
                        const Label lab = w[idx];
                        if (map_[lab] == 0) {
                            map_[lab] = ++next_;
                            assigned.push_back(lab);
                        }
                        const Label v = map_[lab];
                        if (tie) {
                            const Label b = best_[base + i];
                            if (v > b) {
                                prune = true;
                                break;
                            }
                            if (v < b) {
                                tie = false;
                            }
                        }
                        cur_.push_back(v);
                    }
                    if (!prune) {
                        dfs(slot + 1);
                    }
                    cur_.resize(base);
                    for (Label lab : assigned) {
                        map_[lab] = 0;
                    }
                    next_ = saved_next;
                }
            }
            used_[c] = false;
        }
    }

    std::vector<Word> comps_;
    std::vector<bool> used_;
    std::vector<Label> map_;
    std::vector<std::size_t> lengths_;
    std::size_t total_ = 0;
    Label next_ = 0;
    Word cur_;
    Word best_;
    bool have_best_ = false;
};

}  // namespace

FramedDiagram::FramedDiagram() : components_(1) {}

FramedDiagram::FramedDiagram(std::vector<Word> components) : components_(std::move(components)) {
    if (components_.empty()) {
        throw DomainError("a diagram needs at least one component");
    }
    std::map<Label, int> counts;
    for (const auto& w : components_) {
        for (Label l : w) {
            if (l <= 0) {
                throw DomainError("chord labels must be positive, got " + std::to_string(l));
            }
            ++counts[l];
        }
    }
    for (const auto& [label, count] : counts) {
        if (count != 2) {
            throw LabelCountError("label " + std::to_string(label) + " occurs " +
                                  std::to_string(count) + " times, expected 2");
        }
    }
}

std::size_t FramedDiagram::chord_count() const noexcept {
    std::size_t total = 0;
    for (const auto& w : components_) {
        total += w.size();
    }
    return total / 2;
}

std::vector<Label> FramedDiagram::chords() const {
    std::vector<Label> out;
    for (const auto& w : components_) {
        out.insert(out.end(), w.begin(), w.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool FramedDiagram::has_chord(Label chord) const {
    for (const auto& w : components_) {
        if (std::find(w.begin(), w.end(), chord) != w.end()) {
            return true;
        }
    }
    return false;
}

std::pair<Occurrence, Occurrence> FramedDiagram::occurrences(Label chord) const {
    std::vector<Occurrence> found;
    for (std::size_t c = 0; c < components_.size(); ++c) {
        for (std::size_t p = 0; p < components_[c].size(); ++p) {
            if (components_[c][p] == chord) {
                found.push_back({c, p});
            }
        }
    }
    if (found.size() != 2) {
        throw UnknownChord("no chord " + std::to_string(chord) + " in diagram");
    }
    return {found[0], found[1]};
}

Label FramedDiagram::fresh_label() const {
    const auto used = chords();
    Label candidate = 1;
    for (Label l : used) {
        if (l == candidate) {
            ++candidate;
        } else if (l > candidate) {
            break;
        }
    }
    return candidate;
}

InterlacementMatrix::InterlacementMatrix(std::vector<Label> chords,
                                         std::vector<std::vector<std::uint8_t>> bits)
    : chords_(std::move(chords)), bits_(std::move(bits)) {}

std::size_t InterlacementMatrix::index_of(Label chord) const {
    auto it = std::lower_bound(chords_.begin(), chords_.end(), chord);
    if (it == chords_.end() || *it != chord) {
        throw UnknownChord("no chord " + std::to_string(chord) + " in interlacement matrix");
    }
    return static_cast<std::size_t>(it - chords_.begin());
}

std::size_t InterlacementMatrix::row_sum(std::size_t i) const {
    std::size_t s = 0;
    for (auto b : bits_[i]) {
        s += b;
    }
    return s;
}

FramedDiagram parse_gauss(std::string_view text) {
    text = trim(text);
    if (text.empty()) {
        throw SyntaxError("empty Gauss code");
    }
    std::vector<std::vector<std::string_view>> raw;
    std::size_t start = 0;
    while (true) {
        const std::size_t semi = text.find(';', start);
        const std::string_view part =
            text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
        auto tokens = split_tokens(part);
        if (tokens.empty()) {
            throw SyntaxError("empty component; write '@' for a free loop");
        }
        if (tokens.size() > 1 && std::find(tokens.begin(), tokens.end(), "@") != tokens.end()) {
            throw SyntaxError("'@' must stand alone in its component");
        }
        for (auto tok : tokens) {
            if (tok == "@") {
                continue;
            }
            for (char ch : tok) {
                if (!std::isalnum(static_cast<unsigned char>(ch))) {
                    throw SyntaxError("illegal character '" + std::string(1, ch) + "' in label '" +
                                      std::string(tok) + "'");
                }
            }
        }
        raw.push_back(std::move(tokens));
        if (semi == std::string_view::npos) {
            break;
        }
        start = semi + 1;
    }

    std::map<std::string_view, int> counts;
    std::vector<std::string_view> first_seen;
    for (const auto& comp : raw) {
        for (auto tok : comp) {
            if (tok == "@") {
                continue;
            }
            if (counts[tok]++ == 0) {
                first_seen.push_back(tok);
            }
        }
    }
    for (const auto& [tok, count] : counts) {
        if (count != 2) {
            throw LabelCountError("label '" + std::string(tok) + "' occurs " + std::to_string(count) +
                                  " times, expected 2");
        }
    }

    std::map<std::string_view, Label> ids;
    std::set<Label> taken;
    for (auto tok : first_seen) {
        if (auto v = as_plain_integer(tok)) {
            ids[tok] = *v;
            taken.insert(*v);
        }
    }
    Label next = 1;
    for (auto tok : first_seen) {
        if (ids.count(tok)) {
            continue;
        }
        while (taken.count(next)) {
            ++next;
        }
        ids[tok] = next;
        taken.insert(next);
    }

    std::vector<Word> comps;
    for (const auto& comp : raw) {
        Word w;
        for (auto tok : comp) {
            if (tok != "@") {
                w.push_back(ids.at(tok));
            }
        }
        comps.push_back(std::move(w));
    }
    return FramedDiagram(std::move(comps));
}

std::string to_text(const FramedDiagram& diagram) {
    std::string out;
    bool first_comp = true;
    for (const auto& w : diagram.components()) {
        if (!first_comp) {
            out += " ; ";
        }
        first_comp = false;
        if (w.empty()) {
            out += '@';
            continue;
        }
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) {
                out += ' ';
            }
            out += std::to_string(w[i]);
        }
    }
    return out;
}

InterlacementMatrix interlacement(const FramedDiagram& diagram) {
    auto chords = diagram.chords();
    const std::size_t n = chords.size();
    std::vector<std::vector<std::uint8_t>> bits(n, std::vector<std::uint8_t>(n, 0));
    // For each chord lying on a single component: its two positions.
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> span(n);
    std::vector<std::size_t> comp_of(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [o1, o2] = diagram.occurrences(chords[i]);
        if (o1.component == o2.component) {
            span[i] = std::make_pair(o1.position, o2.position);
            comp_of[i] = o1.component;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!span[i] || !span[j] || comp_of[i] != comp_of[j]) {
                continue;
            }
            const auto [p1, p2] = *span[i];
            const auto [q1, q2] = *span[j];
            const bool in1 = p1 < q1 && q1 < p2;
            const bool in2 = p1 < q2 && q2 < p2;
            if (in1 != in2) {
                bits[i][j] = bits[j][i] = 1;
            }
        }
    }
    return InterlacementMatrix(std::move(chords), std::move(bits));
}

Word canonical_word(const Word& word) {
    const std::size_t m = word.size();
    if (m == 0) {
        return {};
    }
    std::unordered_map<Label, Label> map;
    Word best;
    Word cand(m);
    for (int dir : {1, -1}) {
        for (std::size_t start = 0; start < m; ++start) {
            map.clear();
            Label next = 0;
            bool less = best.empty();
            bool greater = false;
            for (std::size_t i = 0; i < m; ++i) {
                const std::size_t idx = dir > 0 ? (start + i) % m : (start + m - i) % m;
                auto [it, inserted] = map.try_emplace(word[idx], next + 1);
                if (inserted) {
                    ++next;
                }
                const Label v = it->second;
                if (!less) {
                    if (v > best[i]) {
                        greater = true;
                        break;
                    }
                    if (v < best[i]) {
                        less = true;
                    }
                }
                cand[i] = v;
            }
            if (!greater && less) {
                best = cand;
            }
        }
    }
    return best;
}

bool is_canonical_word(const Word& word) {
    const std::size_t m = word.size();
    if (m == 0) {
        return true;
    }
    Label max_label = 0;
    for (Label l : word) {
        max_label = std::max(max_label, l);
    }
    std::vector<Label> map(static_cast<std::size_t>(max_label) + 1, 0);
    for (int dir : {1, -1}) {
        for (std::size_t start = 0; start < m; ++start) {
            if (dir > 0 && start == 0) {
                continue;
            }
            std::fill(map.begin(), map.end(), 0);
            Label next = 0;
            for (std::size_t i = 0; i < m; ++i) {
                const std::size_t idx = dir > 0 ? (start + i) % m : (start + m - i) % m;
                Label& slot = map[static_cast<std::size_t>(word[idx])];
                if (slot == 0) {
                    slot = ++next;
                }
                if (slot < word[i]) {
                    return false;
                }
                if (slot > word[i]) {
                    break;
                }
            }
        }
    }
    // The word must also be in first-appearance labeling itself.
    std::fill(map.begin(), map.end(), 0);
    Label next = 0;
    for (Label l : word) {
        Label& slot = map[static_cast<std::size_t>(l)];
        if (slot == 0) {
            slot = ++next;
        }
        if (slot != l) {
            return false;
        }
    }
    return true;
}

FramedDiagram canonical_form(const FramedDiagram& diagram) {
    std::size_t free_loops = 0;
    std::vector<Word> nonempty;
    for (const auto& w : diagram.components()) {
        if (w.empty()) {
            ++free_loops;
        }
    }
    std::vector<Word> out(free_loops);
    if (diagram.component_count() - free_loops == 1) {
        for (const auto& w : diagram.components()) {
            if (!w.empty()) {
                out.push_back(canonical_word(w));
            }
        }
        return FramedDiagram(std::move(out));
    }
    std::size_t n = 0;
    auto dense = dense_components(diagram, n);
    for (auto& w : dense) {
        if (!w.empty()) {
            nonempty.push_back(std::move(w));
        }
    }
    if (!nonempty.empty()) {
        CanonicalSearch search(std::move(nonempty), n);
        for (auto& w : search.run()) {
            out.push_back(std::move(w));
        }
    }
    return FramedDiagram(std::move(out));
}

CanonicalCode canonical_code(const FramedDiagram& diagram) {
    return CanonicalCode{to_text(canonical_form(diagram))};
}

FramedDiagram smooth(const FramedDiagram& diagram, Label chord, SmoothingKind kind) {
    const auto [o1, o2] = diagram.occurrences(chord);
    const auto& comps = diagram.components();
    std::vector<Word> out;
    out.reserve(comps.size() + 1);

    if (o1.component == o2.component) {
        const Word& w = comps[o1.component];
        const std::size_t m = w.size();
        // Read the word as v P v Q starting from the first occurrence.
        Word p(w.begin() + static_cast<std::ptrdiff_t>(o1.position + 1),
               w.begin() + static_cast<std::ptrdiff_t>(o2.position));
        Word q;
        for (std::size_t i = o2.position + 1; i < m + o1.position; ++i) {
            q.push_back(w[i % m]);
        }
        for (std::size_t c = 0; c < comps.size(); ++c) {
            if (c != o1.component) {
                out.push_back(comps[c]);
                continue;
            }
            if (kind == SmoothingKind::A) {
                out.push_back(std::move(p));
                out.push_back(std::move(q));
            } else {
                Word joined = std::move(p);
                joined.insert(joined.end(), q.rbegin(), q.rend());
                out.push_back(std::move(joined));
            }
        }
        return FramedDiagram(std::move(out));
    }

    // v.P on one component, v.Q on another.
    auto tail_after = [&](const Occurrence& o) {
        const Word& w = comps[o.component];
        Word t;
        for (std::size_t i = 1; i < w.size(); ++i) {
            t.push_back(w[(o.position + i) % w.size()]);
        }
        return t;
    };
    Word joined = tail_after(o1);
    Word q = tail_after(o2);
    if (kind == SmoothingKind::A) {
        joined.insert(joined.end(), q.begin(), q.end());
    } else {
        joined.insert(joined.end(), q.rbegin(), q.rend());
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (c == o1.component) {
            out.push_back(joined);
        } else if (c != o2.component) {
            out.push_back(comps[c]);
        }
    }
    return FramedDiagram(std::move(out));
}

}  // namespace freeknot
