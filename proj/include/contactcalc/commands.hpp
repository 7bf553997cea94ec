#pragma once

// Report-producing commands behind the command-line tool. Each returns a
// Report; a report with a Fail row means the command's checks did not hold.
// Lookup, parse and data errors propagate as exceptions.

#include <filesystem>
#include <string>
#include <vector>

#include "contactcalc/corpus.hpp"
#include "contactcalc/exact.hpp"
#include "contactcalc/gridhom.hpp"
#include "contactcalc/report.hpp"

namespace contactcalc::commands {

// `entry` may be null; when present its tau is tested for sharpness too.
Report invariants(const LegendrianLinkData& link, const std::vector<std::int64_t>& taus, const CorpusEntry* entry);
Report invariants(const Corpus& corpus, const std::string& name, const std::vector<std::int64_t>& taus);

Report lutz_shift(const LegendrianLinkData& link, const Rational& d3, const CorpusEntry* entry);
Report lutz_shift(const Corpus& corpus, const std::string& name, const Rational& d3);

Report predict(const CorpusEntry& entry);
Report predict(const Corpus& corpus, const std::string& name);

struct GridAnalysis {
    GridDiagram diagram;
    BigradedRanks tilde;
    BigradedRanks hat;
    bool boundary_squares_to_zero = false;
};
GridAnalysis analyze_grid(const GridDiagram& g);

// `entry` may be null; it supplies the polynomial and stored values to compare against.
Report grid(const std::filesystem::path& path, bool mirror, const CorpusEntry* entry);
Report grid(const GridDiagram& g, bool mirror, const CorpusEntry* entry, const std::string& label);

Report corpus_check(const Corpus& corpus);

}  // namespace contactcalc::commands
