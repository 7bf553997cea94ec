// contactcalc: command-line front end.
//
//   contactcalc invariants NAME [--tau K]...      classical invariants and sharpness
//   contactcalc lutz NAME [--d3 Q]                d3 after half torsion along the link
//   contactcalc predict NAME                      every applicable d3 prediction
//   contactcalc grid FILE [--mirror] [--entry E]  grid homology pipeline
//   contactcalc corpus-check                      all consistency checks over the corpus
//
// Exit status: 0 when every check passes, 1 when one fails, 2 on bad input.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "contactcalc/commands.hpp"
#include "contactcalc/errors.hpp"

using namespace contactcalc;

namespace {

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const long long v = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return Rational(static_cast<std::int64_t>(v));
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        const long long p = std::stoll(num, &used);
        if (used != num.size()) throw std::invalid_argument(text);
        const long long q = std::stoll(den, &used);
        if (used != den.size()) throw std::invalid_argument(text);
        return Rational(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q));
    } catch (const std::logic_error&) {
        throw DataError("not an exact rational: '" + text + "'");
    }
}

int emit(const Report& report, bool json) {
    if (json) {
        std::cout << report.json().dump(2) << '\n';
    } else {
        std::cout << report.text();
    }
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for Legendrian link invariants and d3 of contact structures"};
    app.require_subcommand(1);

    std::optional<std::string> corpus_flag;
    bool json = false;
    app.add_option("--corpus", corpus_flag, "corpus directory or corpus.json (default $CONTACTCALC_CORPUS, then ./corpus)");
    app.add_flag("--json", json, "print the report as JSON");

    std::string name;
    std::string entry_flag;
    std::string inline_json;
    std::vector<std::int64_t> taus;
    std::string d3_text = "0";
    std::string grid_path;
    bool mirror = false;

    auto* inv = app.add_subcommand("invariants", "classical invariants of a representative");
    inv->add_option("name", name, "representative or entry name");
    inv->add_option("--entry", entry_flag, "representative or entry name");
    inv->add_option("--inline", inline_json, R"(link data as JSON: {"name","tb","rot","lk"})");
    inv->add_option("--tau", taus, "tau values to test for sharpness");

    auto* lutz = app.add_subcommand("lutz", "d3 shift from half Giroux torsion along the link");
    lutz->add_option("name", name, "representative or entry name");
    lutz->add_option("--entry", entry_flag, "representative or entry name");
    lutz->add_option("--inline", inline_json, "link data as JSON");
    lutz->add_option("--d3", d3_text, "d3 of the ambient structure (integer or p/q)");

    auto* predict = app.add_subcommand("predict", "d3 predictions for a corpus entry");
    predict->add_option("name", name, "entry name");
    predict->add_option("--entry", entry_flag, "entry name");

    auto* grid = app.add_subcommand("grid", "grid homology of a grid file");
    grid->add_option("file", grid_path, "grid file")->required();
    grid->add_flag("--mirror", mirror, "use the mirror diagram");
    grid->add_option("--entry", entry_flag, "corpus entry to compare against");

    app.add_subcommand("corpus-check", "run every consistency check over the corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    const std::string target = entry_flag.empty() ? name : entry_flag;
    try {
        auto load = [&] { return corpus::load(corpus::resolve_path(corpus_flag)); };
        auto need_target = [&] {
            if (target.empty()) throw LookupError("no name given");
        };

        if (*inv) {
            if (!inline_json.empty()) return emit(commands::invariants(corpus::parse_link_json(inline_json), taus, nullptr), json);
            need_target();
            return emit(commands::invariants(load(), target, taus), json);
        }
        if (*lutz) {
            const Rational d3 = parse_rational(d3_text);
            if (!inline_json.empty()) return emit(commands::lutz_shift(corpus::parse_link_json(inline_json), d3, nullptr), json);
            need_target();
            return emit(commands::lutz_shift(load(), target, d3), json);
        }
        if (*predict) {
            need_target();
            return emit(commands::predict(load(), target), json);
        }
        if (*grid) {
            std::optional<Corpus> corpus;
            const CorpusEntry* entry = nullptr;
            if (!entry_flag.empty()) {
                corpus = load();
                entry = &corpus->entry(entry_flag);
            } else {
                try {
                    corpus = load();
                    entry = corpus->entry_for_grid(grid_path);
                } catch (const DataError&) {
                    entry = nullptr;  // no readable corpus: report on the grid alone
                }
            }
            return emit(commands::grid(grid_path, mirror, entry), json);
        }
        return emit(commands::corpus_check(load()), json);
    } catch (const InternalConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
