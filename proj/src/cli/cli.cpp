#include "freeknot/cli.hpp"

#include "freeknot/bracket.hpp"
#include "freeknot/catalog.hpp"
#include "freeknot/census.hpp"
#include "freeknot/errors.hpp"
#include "freeknot/interlace.hpp"
#include "freeknot/moves.hpp"
#include "freeknot/parity.hpp"
#include "freeknot/render.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace freeknot::cli {

namespace {

std::size_t env_or(const char* name, std::size_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) {
        return fallback;
    }
    try {
        return std::stoul(v);
    } catch (const std::exception&) {
        throw DomainError(std::string("bad value for ") + name + ": '" + v + "'");
    }
}

std::string slurp(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw DomainError("cannot open '" + path + "' for writing");
    }
    f << text;
}

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

class Driver {
public:
    explicit Driver(Context ctx) : ctx_(ctx) {}

    int run(int argc, const char* const* argv);

private:
    FramedDiagram input(const std::string& code) const {
        return parse_gauss(code.empty() ? slurp(ctx_.in) : code);
    }

    BracketOptions bracket_options() const {
        return {budget_ ? *budget_ : env_or(kBracketBudgetEnv, kDefaultBracketBudget)};
    }

    CensusOptions census_options() const {
        return {census_limit_ ? *census_limit_ : env_or(kCensusLimitEnv, kDefaultCensusLimit)};
    }

    int canon();
    int parity();
    int show_bunches();
    int show_bracket();
    int equal();
    int reduce();
    int moves();
    int fuzz();
    int project();
    int run_census();
    int realizable();
    int certify();
    int link_parity();
    int render();

    Context ctx_;
    std::string code_;
    std::string code2_;
    std::optional<std::size_t> budget_;
    std::optional<std::size_t> census_limit_;
    std::string out_path_;
    // moves
    std::string apply_site_;
    // fuzz
    std::size_t steps_ = 15;
    std::uint64_t seed_ = 1;
    std::size_t trials_ = 10;
    std::size_t max_chords_ = kDefaultWalkMaxChords;
    bool check_link_parity_ = false;
    bool quiet_ = false;
    // project
    bool iterate_ = false;
    // census
    std::size_t census_max_ = 0;
    // realizable
    std::string graph_path_;
    std::optional<std::size_t> wheel_;
    std::optional<std::size_t> induced_up_to_;
    // render
    std::string format_ = "svg";
};

int Driver::canon() {
    ctx_.out << canonical_code(input(code_)).text << "\n";
    return kExitOk;
}

int Driver::parity() {
    const auto d = input(code_);
    std::size_t odd = 0;
    for (const auto& [chord, p] : parity_vector(d)) {
        ctx_.out << chord << " " << (p == Parity::Even ? "even" : "odd") << "\n";
        odd += p == Parity::Odd;
    }
    ctx_.out << "odd_count " << odd << "\n";
    return kExitOk;
}

int Driver::show_bunches() {
    const auto part = bunches(input(code_));
    for (std::size_t i = 0; i < part.bunches.size(); ++i) {
        const auto& b = part.bunches[i];
        ctx_.out << "bunch " << i << ":";
        for (Label l : b.chords) {
            ctx_.out << " " << l;
        }
        ctx_.out << (b.chords.size() < 2 ? "" : b.pairwise_linked ? " (linked)" : " (unlinked)") << "\n";
    }
    ctx_.out << "pairing\n";
    for (const auto& row : part.pairing) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            ctx_.out << (j ? " " : "") << int(row[j]);
        }
        ctx_.out << "\n";
    }
    return kExitOk;
}

int Driver::show_bracket() {
    ctx_.out << serialize(bracket(input(code_), bracket_options()));
    return kExitOk;
}

int Driver::equal() {
    const auto x = bracket(parse_gauss(code_), bracket_options());
    const auto y = bracket(parse_gauss(code2_), bracket_options());
    const bool same = z2g_equal(x, y);
    ctx_.out << (same ? "equal" : "different") << "\n";
    return same ? kExitOk : kExitNo;
}

int Driver::reduce() {
    ctx_.out << canonical_code(reduce_r2(input(code_))).text << "\n";
    return kExitOk;
}

int Driver::moves() {
    const auto d = input(code_);
    if (!apply_site_.empty()) {
        ctx_.out << to_text(apply_move(d, parse_site(apply_site_))) << "\n";
        return kExitOk;
    }
    for (const auto& site : enumerate_sites(d)) {
        ctx_.out << to_string(site) << "\t" << canonical_code(apply_move(d, site)).text << "\n";
    }
    return kExitOk;
}

int Driver::fuzz() {
    const auto start = input(code_);
    const auto options = bracket_options();
    if (check_link_parity_ && start.component_count() != 2) {
        throw WrongComponentCount("--link-parity needs a two-component diagram");
    }
    std::optional<Z2GClass> reference;
    int reference_parity = 0;
    if (check_link_parity_) {
        reference_parity = link_crossing_parity(start);
    } else {
        reference = bracket(start, options);
    }
    std::size_t total_moves = 0;
    for (std::size_t t = 0; t < trials_; ++t) {
        const std::uint64_t seed = seed_ + t;
        const auto walk = random_walk(start, steps_, seed, max_chords_);
        std::size_t lo = start.chord_count();
        std::size_t hi = lo;
        for (std::size_t i = 1; i < walk.states.size(); ++i) {
            const auto& state = walk.states[i];
            lo = std::min(lo, state.chord_count());
            hi = std::max(hi, state.chord_count());
            bool ok = true;
            std::string detail;
            if (check_link_parity_) {
                const int p = link_crossing_parity(state);
                ok = p == reference_parity;
                detail = "link parity " + std::to_string(p) + ", expected " + std::to_string(reference_parity);
            } else {
                const auto value = bracket(state, options);
                ok = value == *reference;
                detail = "bracket\n" + serialize(value) + "expected\n" + serialize(*reference);
            }
            if (!ok) {
                ctx_.out << "VIOLATION trial " << t << " seed " << seed << " step " << i << "\n"
                         << "before: " << to_text(walk.states[i - 1]) << "\n"
                         << "site: " << to_string(walk.moves[i - 1]) << "\n"
                         << "after: " << to_text(state) << "\n"
                         << detail;
                return kExitViolation;
            }
        }
        total_moves += walk.moves.size();
        ctx_.out << "trial " << t << " seed " << seed << ": pass (" << walk.moves.size()
                 << " moves, chords " << lo << ".." << hi << ")\n";
        if (!quiet_) {
            for (const auto& m : walk.moves) {
                ctx_.out << "  " << to_string(m) << "\n";
            }
        }
    }
    ctx_.out << "summary: " << trials_ << " trials, " << total_moves << " moves, 0 violations\n";
    return kExitOk;
}

int Driver::project() {
    const auto d = input(code_);
    if (!iterate_) {
        ctx_.out << to_text(project_odd(d)) << "\n";
        return kExitOk;
    }
    const auto orbit = projection_orbit(d);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        ctx_.out << i << " " << to_text(orbit[i]) << "\n";
    }
    ctx_.out << "filtration_index " << orbit.size() - 1 << "\n";
    return kExitOk;
}

int Driver::run_census() {
    const auto records = build_catalog(census_max_, census_options(), bracket_options());
    write_output(out_path_, format_catalog(records), ctx_.out);
    if (!out_path_.empty()) {
        ctx_.out << records.size() << " records written to " << out_path_ << "\n";
    }
    return kExitOk;
}

int Driver::realizable() {
    SimpleGraph g;
    if (wheel_) {
        g = wheel_graph(*wheel_);
    } else if (!graph_path_.empty()) {
        std::ifstream f(graph_path_);
        if (!f) {
            throw DomainError("cannot open '" + graph_path_ + "'");
        }
        g = parse_adjacency_text(slurp(f));
    } else {
        g = parse_adjacency_text(slurp(ctx_.in));
    }
    const auto odd = graph_is_irreducibly_odd(g);
    ctx_.out << "vertices " << g.size() << "\n"
             << "irreducibly_odd " << (odd.irreducibly_odd ? 1 : 0) << "\n";
    const auto search = induced_up_to_ ? realize_induced(g, *induced_up_to_, census_options())
                                       : realize_bruteforce(g, census_options());
    ctx_.out << "pairings " << search.pairings_enumerated << "\n";
    if (search.realization) {
        ctx_.out << "realization " << to_text(*search.realization) << "\n";
    } else {
        ctx_.out << "absent\n";
    }
    return kExitOk;
}

int Driver::certify() {
    const auto result = minimality_certificate(input(code_), bracket_options());
    if (const auto* c = std::get_if<MinimalityCertificate>(&result)) {
        ctx_.out << "certificate\nsubject " << c->subject.text << "\nchords " << c->chord_count
                 << "\nbasis " << c->basis << "\n";
        return kExitOk;
    }
    ctx_.out << "refused: " << std::get<CertificateRefusal>(result).reason << "\n";
    return kExitNo;
}

int Driver::link_parity() {
    ctx_.out << link_crossing_parity(input(code_)) << "\n";
    return kExitOk;
}

int Driver::render() {
    const auto d = input(code_);
    write_output(out_path_, format_ == "dot" ? render_dot(d) : render_svg(d), ctx_.out);
    return kExitOk;
}

int Driver::run(int argc, const char* const* argv) {
    CLI::App app{"Free knots: canonical chord diagrams, moves, parity and the smoothing bracket"};
    app.require_subcommand(1);

    auto code_arg = [&](CLI::App* sub) {
        sub->add_option("code", code_, "Gauss code (read from standard input when omitted)");
    };
    auto budget_opt = [&](CLI::App* sub) {
        sub->add_option("--budget", budget_, "Largest number of even chords smoothed");
    };

    auto* canon_cmd = app.add_subcommand("canon", "Print the canonical code");
    code_arg(canon_cmd);
    auto* parity_cmd = app.add_subcommand("parity", "Print chord parities");
    code_arg(parity_cmd);
    auto* bunches_cmd = app.add_subcommand("bunches", "Print the bunch partition");
    code_arg(bunches_cmd);
    auto* bracket_cmd = app.add_subcommand("bracket", "Print the bracket as sorted codes");
    code_arg(bracket_cmd);
    budget_opt(bracket_cmd);
    auto* equal_cmd = app.add_subcommand("equal", "Compare the brackets of two diagrams");
    equal_cmd->add_option("first", code_)->required();
    equal_cmd->add_option("second", code2_)->required();
    budget_opt(equal_cmd);
    auto* reduce_cmd = app.add_subcommand("reduce", "Remove bigons until none is left");
    code_arg(reduce_cmd);
    auto* moves_cmd = app.add_subcommand("moves", "List move sites, or apply one");
    code_arg(moves_cmd);
    moves_cmd->add_option("--apply", apply_site_, "Site in replay form to apply");
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Check invariance along seeded random walks");
    code_arg(fuzz_cmd);
    fuzz_cmd->add_option("--steps", steps_, "Moves per walk");
    fuzz_cmd->add_option("--seed", seed_, "Seed of the first trial; trial t uses seed + t");
    fuzz_cmd->add_option("--trials", trials_, "Number of walks");
    fuzz_cmd->add_option("--max-chords", max_chords_, "No increasing move past this many chords");
    fuzz_cmd->add_flag("--link-parity", check_link_parity_, "Check the two-component link parity");
    fuzz_cmd->add_flag("--quiet", quiet_, "Omit per-trial move traces");
    budget_opt(fuzz_cmd);
    auto* project_cmd = app.add_subcommand("project", "Delete all odd chords");
    code_arg(project_cmd);
    project_cmd->add_flag("--iterate", iterate_, "Print the whole orbit and the filtration index");
    auto* census_cmd = app.add_subcommand("census", "Write the catalog of diagrams up to n chords");
    census_cmd->add_option("--max-chords", census_max_, "Largest chord count")->required();
    census_cmd->add_option("--out", out_path_, "Output file (standard output when omitted)");
    census_cmd->add_option("--limit", census_limit_, "Census size guard");
    budget_opt(census_cmd);
    auto* realizable_cmd =
        app.add_subcommand("realizable", "Search for a chord diagram realizing a graph");
    realizable_cmd->add_option("--graph", graph_path_, "Adjacency-list file (standard input when omitted)");
    realizable_cmd->add_option("--wheel", wheel_, "Use the wheel with this many rim vertices");
    realizable_cmd->add_option("--induced-up-to", induced_up_to_,
                               "Search for an induced copy in diagrams up to this many chords");
    realizable_cmd->add_option("--limit", census_limit_, "Census size guard");
    auto* certify_cmd = app.add_subcommand("certify", "Issue a minimality certificate");
    code_arg(certify_cmd);
    budget_opt(certify_cmd);
    auto* link_cmd = app.add_subcommand("link-parity", "Parity of chords shared by two components");
    code_arg(link_cmd);
    auto* render_cmd = app.add_subcommand("render", "Draw the diagram as SVG or DOT");
    code_arg(render_cmd);
    render_cmd->add_option("--format", format_, "svg or dot")->check(CLI::IsMember({"svg", "dot"}));
    render_cmd->add_option("--out", out_path_, "Output file (standard output when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, ctx_.out, ctx_.err);
        return code == 0 ? kExitOk : kExitNo;
    }

    try {
        if (*canon_cmd) return canon();
        if (*parity_cmd) return parity();
        if (*bunches_cmd) return show_bunches();
        if (*bracket_cmd) return show_bracket();
        if (*equal_cmd) return equal();
        if (*reduce_cmd) return reduce();
        if (*moves_cmd) return moves();
        if (*fuzz_cmd) return fuzz();
        if (*project_cmd) return project();
        if (*census_cmd) return run_census();
        if (*realizable_cmd) return realizable();
        if (*certify_cmd) return certify();
        if (*link_cmd) return link_parity();
        if (*render_cmd) return render();
    } catch (const SyntaxError& e) {
        ctx_.err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const LabelCountError& e) {
        ctx_.err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const StaleSite& e) {
        ctx_.err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const MultiComponent& e) {
        ctx_.err << "error: " << e.what() << "\n";
        return kExitComponents;
    } catch (const WrongComponentCount& e) {
        ctx_.err << "error: " << e.what() << "\n";
        return kExitComponents;
    } catch (const BudgetExceeded& e) {
        ctx_.err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        ctx_.err << "error: " << e.what() << "\n";
        return kExitNo;
    }
    return kExitNo;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    return Driver(Context{in, out, err}).run(argc, argv);
}

}  // namespace freeknot::cli
