#ifndef FREEKNOT_CATALOG_HPP
#define FREEKNOT_CATALOG_HPP

#include "freeknot/bracket.hpp"
#include "freeknot/census.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace freeknot {

// One census diagram with its derived statistics. Every field after `code`
// is recomputable from the code.
struct CatalogRecord {
    CanonicalCode code;
    std::size_t chords = 0;
    std::size_t even = 0;
    std::size_t odd = 0;
    bool irreducibly_odd = false;
    std::size_t bracket_size = 0;
    bool nontrivial = false;

    bool operator==(const CatalogRecord&) const = default;
};

CatalogRecord make_record(const FramedDiagram& diagram, const BracketOptions& options = {});

// Records for every one-component diagram with 0..max_chords chords, sorted
// by (chords, code).
std::vector<CatalogRecord> build_catalog(std::size_t max_chords, const CensusOptions& census = {},
                                         const BracketOptions& bracket = {});

// Tab-separated, in field order; nontrivial and irreducibly_odd as 0/1.
std::string format_record(const CatalogRecord& record);
CatalogRecord parse_record(std::string_view line);

// "# code\tchords\t..." comment line naming the columns.
std::string catalog_header();

std::string format_catalog(const std::vector<CatalogRecord>& records);

}  // namespace freeknot

#endif  // FREEKNOT_CATALOG_HPP
