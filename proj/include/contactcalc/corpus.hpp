#pragma once

// Corpus of curated links, stored as JSON:
//
//   { "entries": [ { "name": ..., "n": ..., "tau": ..., ...,
//                    "representatives": [ {"name", "tb", "rot", "lk"} ],
//                    "sublinkTau": [ {"components": [1, 2], "tau": 1} ],
//                    "grid": "grids/file.grid" } ] }
//
// Record field names follow SmoothLinkRecord in camelCase. alexanderPoly is a
// list of [exponent, coefficient] pairs, topClass is {"Mtop", "Atop"}, and
// knownD3 is a list of {"label", "d3", "source"}. Component indices in
// sublinkTau are 1-based. Numbers must be integers.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "contactcalc/model.hpp"

namespace contactcalc {

struct CorpusEntry {
    SmoothLinkRecord record;
    std::vector<LegendrianLinkData> representatives;
    // tau of sublinks, keyed by 0-based ascending component indices.
    std::map<std::vector<std::size_t>, std::int64_t> sublink_tau;
    std::optional<std::filesystem::path> grid;  // resolved against the corpus directory
    std::string note;
};

struct RepresentativeRef {
    const CorpusEntry* entry;
    const LegendrianLinkData* link;
};

class Corpus {
public:
    Corpus() = default;
    explicit Corpus(std::vector<CorpusEntry> entries);

    const std::vector<CorpusEntry>& entries() const { return entries_; }

    // Throw LookupError for unknown names.
    const CorpusEntry& entry(const std::string& name) const;
    // A representative by its own name, or the first representative of an entry.
    RepresentativeRef representative(const std::string& name) const;
    // The entry whose grid file has this file name, if any.
    const CorpusEntry* entry_for_grid(const std::filesystem::path& grid) const;

private:
    std::vector<CorpusEntry> entries_;
};

namespace corpus {

// Throws DataError naming the offending entry.
Corpus parse(const std::string& json_text, const std::filesystem::path& base_dir);
// `path` is corpus.json itself or a directory holding it.
Corpus load(const std::filesystem::path& path);

// The --corpus value if given, else $CONTACTCALC_CORPUS, else ./corpus.
std::filesystem::path resolve_path(const std::optional<std::string>& flag);

LegendrianLinkData parse_link_json(const std::string& json_text);

}  // namespace corpus
}  // namespace contactcalc
