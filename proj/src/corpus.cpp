#include "contactcalc/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "contactcalc/errors.hpp"
#include "contactcalc/report.hpp"

namespace contactcalc {

using nlohmann::json;

Corpus::Corpus(std::vector<CorpusEntry> entries) : entries_(std::move(entries)) {
    std::set<std::string> names;
    for (const auto& e : entries_) {
        if (!names.insert(e.record.name).second) throw DataError("duplicate corpus name '" + e.record.name + "'");
        for (const auto& rep : e.representatives) {
            if (!names.insert(rep.name()).second) throw DataError("duplicate corpus name '" + rep.name() + "'");
        }
    }
}

const CorpusEntry& Corpus::entry(const std::string& name) const {
    for (const auto& e : entries_) {
        if (e.record.name == name) return e;
    }
    throw LookupError("no corpus entry named '" + name + "'");
}

RepresentativeRef Corpus::representative(const std::string& name) const {
    for (const auto& e : entries_) {
        for (const auto& rep : e.representatives) {
            if (rep.name() == name) return {&e, &rep};
        }
    }
    for (const auto& e : entries_) {
        if (e.record.name == name) {
            if (e.representatives.empty()) throw LookupError("entry '" + name + "' has no Legendrian representative");
            return {&e, &e.representatives.front()};
        }
    }
    throw LookupError("no representative or entry named '" + name + "'");
}

const CorpusEntry* Corpus::entry_for_grid(const std::filesystem::path& grid) const {
    for (const auto& e : entries_) {
        if (e.grid && e.grid->filename() == grid.filename()) return &e;
    }
    return nullptr;
}

namespace corpus {

namespace {

class Reader {
public:
    Reader(const json& obj, std::string context) : obj_(obj), context_(std::move(context)) {
        if (!obj_.is_object()) fail("expected an object");
    }

    [[noreturn]] void fail(const std::string& what) const { throw DataError(context_ + ": " + what); }

    bool has(const char* key) const { return obj_.contains(key) && !obj_.at(key).is_null(); }

    static std::int64_t as_int(const json& v, const std::string& where) {
        if (!v.is_number_integer()) throw DataError(where + ": expected an integer");
        return v.get<std::int64_t>();
    }

    std::int64_t integer(const char* key) const {
        if (!has(key)) fail(std::string("missing field '") + key + "'");
        return as_int(obj_.at(key), context_ + "." + key);
    }

    std::optional<std::int64_t> opt_integer(const char* key) const {
        if (!has(key)) return std::nullopt;
        return integer(key);
    }

    bool boolean(const char* key) const {
        if (!has(key)) fail(std::string("missing field '") + key + "'");
        if (!obj_.at(key).is_boolean()) fail(std::string("field '") + key + "' must be true or false");
        return obj_.at(key).get<bool>();
    }

    std::string string(const char* key) const {
        if (!has(key)) fail(std::string("missing field '") + key + "'");
        if (!obj_.at(key).is_string()) fail(std::string("field '") + key + "' must be a string");
        return obj_.at(key).get<std::string>();
    }

    std::vector<std::int64_t> int_list(const char* key) const {
        if (!has(key)) fail(std::string("missing field '") + key + "'");
        return int_list_of(obj_.at(key), context_ + "." + key);
    }

    static std::vector<std::int64_t> int_list_of(const json& v, const std::string& where) {
        if (!v.is_array()) throw DataError(where + ": expected a list");
        std::vector<std::int64_t> out;
        for (const auto& item : v) out.push_back(as_int(item, where));
        return out;
    }

    const json& at(const char* key) const { return obj_.at(key); }
    const std::string& context() const { return context_; }

private:
    const json& obj_;
    std::string context_;
};

LegendrianLinkData parse_link(const json& j, const std::string& where) {
    Reader r(j, where);
    const std::string name = r.string("name");
    Reader named(j, where + " '" + name + "'");
    auto tb = named.int_list("tb");
    auto rot = named.int_list("rot");
    std::vector<std::vector<std::int64_t>> lk;
    if (named.has("lk")) {
        if (!named.at("lk").is_array()) named.fail("lk must be a list of rows");
        for (const auto& row : named.at("lk")) lk.push_back(Reader::int_list_of(row, named.context() + ".lk"));
    } else if (tb.size() == 1) {
        lk = {{0}};
    } else {
        named.fail("missing field 'lk'");
    }
    try {
        return LegendrianLinkData(name, std::move(tb), std::move(rot), std::move(lk));
    } catch (const Error& e) {
        named.fail(e.what());
    }
}

SmoothLinkRecord parse_record(const Reader& r) {
    SmoothLinkRecord rec;
    rec.name = r.string("name");
    rec.n = r.integer("n");
    rec.tau = r.integer("tau");
    rec.tau_star = r.opt_integer("tauStar");
    rec.signature = r.opt_integer("signature");
    rec.thurston_norm = r.opt_integer("thurstonNorm");
    rec.thickness = r.opt_integer("thickness");
    rec.genus3 = r.opt_integer("genus3");
    rec.chi4 = r.opt_integer("chi4");
    rec.max_self_linking = r.opt_integer("maxSelfLinking");
    rec.fibered = r.boolean("fibered");
    rec.strongly_quasi_positive = r.boolean("stronglyQuasiPositive");
    rec.quasi_positive = r.boolean("quasiPositive");
    if (r.has("alexanderPoly")) {
        if (!r.at("alexanderPoly").is_array()) r.fail("alexanderPoly must be a list of [exponent, coefficient]");
        std::map<std::int64_t, std::int64_t> poly;
        for (const auto& term : r.at("alexanderPoly")) {
            const auto pair = Reader::int_list_of(term, r.context() + ".alexanderPoly");
            if (pair.size() != 2) r.fail("alexanderPoly terms are [exponent, coefficient]");
            if (!poly.emplace(pair[0], pair[1]).second) r.fail("alexanderPoly repeats an exponent");
        }
        rec.alexander_poly = std::move(poly);
    }
    if (r.has("topClass")) {
        Reader top(r.at("topClass"), r.context() + ".topClass");
        rec.top_class = TopClass{top.integer("Mtop"), top.integer("Atop")};
    }
    if (r.has("knownD3")) {
        if (!r.at("knownD3").is_array()) r.fail("knownD3 must be a list");
        for (const auto& item : r.at("knownD3")) {
            Reader k(item, r.context() + ".knownD3");
            const std::string label = k.string("label");
            if (rec.find_known(label)) r.fail("knownD3 repeats label '" + label + "'");
            const std::string source = k.string("source");
            try {
                parse_source(source);
            } catch (const DataError& err) {
                k.fail(err.what());
            }
            rec.known_d3.push_back({label, k.integer("d3"), source});
        }
    }
    return rec;
}

CorpusEntry parse_entry(const json& j, std::size_t index, const std::filesystem::path& base_dir) {
    std::string context = "entries[" + std::to_string(index) + "]";
    if (j.is_object() && j.contains("name") && j.at("name").is_string()) {
        context = "entry '" + j.at("name").get<std::string>() + "'";
    }
    Reader r(j, context);
    CorpusEntry e;
    e.record = parse_record(r);
    try {
        validate(e.record);
    } catch (const Error& err) {
        r.fail(err.what());
    }
    if (r.has("representatives")) {
        if (!r.at("representatives").is_array()) r.fail("representatives must be a list");
        for (const auto& rep : r.at("representatives")) {
            auto link = parse_link(rep, context + ".representatives");
            if (static_cast<std::int64_t>(link.components()) != e.record.n) {
                r.fail("representative '" + link.name() + "' has the wrong number of components");
            }
            e.representatives.push_back(std::move(link));
        }
    }
    if (r.has("sublinkTau")) {
        if (!r.at("sublinkTau").is_array()) r.fail("sublinkTau must be a list");
        for (const auto& item : r.at("sublinkTau")) {
            Reader s(item, context + ".sublinkTau");
            std::vector<std::size_t> comps;
            for (auto c : s.int_list("components")) {
                if (c < 1 || c > e.record.n) s.fail("component index " + std::to_string(c) + " out of range");
                comps.push_back(static_cast<std::size_t>(c - 1));
            }
            if (comps.empty() || !std::is_sorted(comps.begin(), comps.end()) ||
                std::adjacent_find(comps.begin(), comps.end()) != comps.end()) {
                s.fail("components must be nonempty, ascending and distinct");
            }
            if (!e.sublink_tau.emplace(comps, s.integer("tau")).second) s.fail("repeated sublink");
        }
    }
    if (r.has("grid")) e.grid = base_dir / r.string("grid");
    if (r.has("note")) e.note = r.string("note");
    return e;
}

}  // namespace

Corpus parse(const std::string& json_text, const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw DataError(std::string("corpus is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("entries") || !doc.at("entries").is_array()) {
        throw DataError("corpus must be an object with an 'entries' list");
    }
    std::vector<CorpusEntry> entries;
    std::size_t index = 0;
    for (const auto& j : doc.at("entries")) entries.push_back(parse_entry(j, index++, base_dir));
    return Corpus(std::move(entries));
}

Corpus load(const std::filesystem::path& path) {
    std::filesystem::path file = path;
    if (std::filesystem::is_directory(file)) file /= "corpus.json";
    std::ifstream in(file);
    if (!in) throw DataError("cannot read corpus file " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), file.parent_path());
}

std::filesystem::path resolve_path(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return *flag;
    if (const char* env = std::getenv("CONTACTCALC_CORPUS"); env && *env) return env;
    return "corpus";
}

LegendrianLinkData parse_link_json(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw DataError(std::string("link data is not valid JSON: ") + e.what());
    }
    return parse_link(doc, "inline link");
}

}  // namespace corpus
}  // namespace contactcalc
