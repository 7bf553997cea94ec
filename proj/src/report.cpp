#include "contactcalc/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "contactcalc/errors.hpp"

namespace contactcalc {

const char* to_string(Source s) {
    switch (s) {
        case Source::Literature: return "literature";
        case Source::Derived: return "derived";
        case Source::Identity: return "identity";
    }
    return "?";
}

const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Info: return "INFO";
        case Status::Skipped: return "SKIP";
    }
    return "?";
}

Source parse_source(const std::string& text) {
    for (Source s : {Source::Literature, Source::Derived, Source::Identity}) {
        if (text == to_string(s)) return s;
    }
    throw DataError("unknown source '" + text + "' (expected literature, derived or identity)");
}

ReportRow::ReportRow(std::string check_name, std::string expected_value, std::string computed_value, Source src,
                     Status st, std::string row_note)
    : check(std::move(check_name)),
      expected(std::move(expected_value)),
      computed(std::move(computed_value)),
      source(src),
      status(st),
      note(std::move(row_note)) {}

void Report::check(std::string name, const std::string& expected, const std::string& computed, Source source,
                   std::string note) {
    rows_.emplace_back(std::move(name), expected, computed, source, expected == computed ? Status::Pass : Status::Fail,
                       std::move(note));
}

void Report::info(std::string name, std::string computed, Source source, std::string note) {
    rows_.emplace_back(std::move(name), "", std::move(computed), source, Status::Info, std::move(note));
}

void Report::skip(std::string name, std::string reason, Source source) {
    rows_.emplace_back(std::move(name), "", "", source, Status::Skipped, std::move(reason));
}

void Report::fail(std::string name, std::string reason, Source source) {
    rows_.emplace_back(std::move(name), "", "", source, Status::Fail, std::move(reason));
}

void Report::append(const Report& other, const std::string& prefix) {
    for (auto row : other.rows()) {
        row.check = prefix + row.check;
        rows_.push_back(std::move(row));
    }
}

bool Report::passed() const { return count(Status::Fail) == 0; }

std::size_t Report::count(Status s) const {
    return static_cast<std::size_t>(std::count_if(rows_.begin(), rows_.end(), [s](const ReportRow& r) { return r.status == s; }));
}

std::string Report::text() const {
    // Longer values overflow their column rather than widening every row.
    constexpr std::size_t kMaxWidth = 24;
    std::array<std::size_t, 4> width{5, 8, 8, 6};  // check, expected, computed, source
    for (const auto& r : rows_) {
        width[0] = std::max(width[0], r.check.size());
        width[1] = std::max(width[1], std::min(kMaxWidth, r.expected.size()));
        width[2] = std::max(width[2], std::min(kMaxWidth, r.computed.size()));
        width[3] = std::max(width[3], std::string(to_string(r.source)).size());
    }
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, s.size()), ' '); };

    std::ostringstream os;
    os << title_ << '\n';
    os << "  " << pad("", 4) << "  " << pad("check", width[0]) << "  " << pad("expected", width[1]) << "  "
       << pad("computed", width[2]) << "  " << pad("source", width[3]) << "  note\n";
    for (const auto& r : rows_) {
        std::string line = "  " + std::string(to_string(r.status)) + "  " + pad(r.check, width[0]) + "  " +
                           pad(r.expected, width[1]) + "  " + pad(r.computed, width[2]) + "  " +
                           pad(to_string(r.source), width[3]) + "  " + r.note;
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    os << "  " << count(Status::Pass) << " passed, " << count(Status::Fail) << " failed, " << count(Status::Skipped)
       << " skipped, " << count(Status::Info) << " informational\n";
    return os.str();
}

nlohmann::ordered_json Report::json() const {
    nlohmann::ordered_json out;
    out["title"] = title_;
    out["passed"] = passed();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : rows_) {
        nlohmann::ordered_json row;
        row["check"] = r.check;
        row["expected"] = r.expected;
        row["computed"] = r.computed;
        row["source"] = to_string(r.source);
        row["status"] = to_string(r.status);
        if (!r.note.empty()) row["note"] = r.note;
        rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    return out;
}

}  // namespace contactcalc
