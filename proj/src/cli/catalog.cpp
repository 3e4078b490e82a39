#include "freeknot/catalog.hpp"

#include "freeknot/errors.hpp"
#include "freeknot/parity.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>

namespace freeknot {

namespace {

std::size_t field_number(std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw SyntaxError("bad numeric field '" + std::string(s) + "'");
    }
    return v;
}

bool field_flag(std::string_view s) {
    if (s == "0") {
        return false;
    }
    if (s == "1") {
        return true;
    }
    throw SyntaxError("bad flag field '" + std::string(s) + "'");
}

}  // namespace

CatalogRecord make_record(const FramedDiagram& diagram, const BracketOptions& options) {
    CatalogRecord r;
    r.code = canonical_code(diagram);
    r.chords = diagram.chord_count();
    for (const auto& [chord, p] : parity_vector(diagram)) {
        (p == Parity::Even ? r.even : r.odd) += 1;
    }
    r.irreducibly_odd = is_irreducibly_odd(diagram).irreducibly_odd;
    const auto value = bracket(diagram, options);
    r.bracket_size = value.size();
    r.nontrivial = value != Z2GClass::single(canonical_code(FramedDiagram{}));
    return r;
}

std::vector<CatalogRecord> build_catalog(std::size_t max_chords, const CensusOptions& census,
                                         const BracketOptions& bracket) {
    if (max_chords > census.max_chords) {
        throw BudgetExceeded("census of " + std::to_string(max_chords) + " chords exceeds the limit of " +
                             std::to_string(census.max_chords));
    }
    std::vector<CatalogRecord> out;
    for (std::size_t n = 0; n <= max_chords; ++n) {
        for (const auto& d : census_diagrams(n, census)) {
            out.push_back(make_record(d, bracket));
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.chords, a.code) < std::tie(b.chords, b.code);
    });
    return out;
}

std::string format_record(const CatalogRecord& r) {
    return r.code.text + '\t' + std::to_string(r.chords) + '\t' + std::to_string(r.even) + '\t' +
           std::to_string(r.odd) + '\t' + (r.irreducibly_odd ? "1" : "0") + '\t' +
           std::to_string(r.bracket_size) + '\t' + (r.nontrivial ? "1" : "0");
}

CatalogRecord parse_record(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto tab = line.find('\t', start);
        fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
        if (tab == std::string_view::npos) {
            break;
        }
        start = tab + 1;
    }
    if (fields.size() != 7) {
        throw SyntaxError("catalog record needs 7 tab-separated fields, got " +
                          std::to_string(fields.size()));
    }
    CatalogRecord r;
    r.code = CanonicalCode{std::string(fields[0])};
    r.chords = field_number(fields[1]);
    r.even = field_number(fields[2]);
    r.odd = field_number(fields[3]);
    r.irreducibly_odd = field_flag(fields[4]);
    r.bracket_size = field_number(fields[5]);
    r.nontrivial = field_flag(fields[6]);
    return r;
}

std::string catalog_header() {
    return "# code\tchords\teven\todd\tirreducibly_odd\tbracket_size\tnontrivial";
}

std::string format_catalog(const std::vector<CatalogRecord>& records) {
    std::string out = catalog_header() + "\n";
    for (const auto& r : records) {
        out += format_record(r);
        out += '\n';
    }
    return out;
}

}  // namespace freeknot
