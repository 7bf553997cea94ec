#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace contactcalc {

// Where the expected value of a row comes from.
enum class Source {
    Literature,  // stated in the literature the corpus cites
    Derived,     // computed by an independent route
    Identity,    // forced by a definition or an algebraic identity
};

enum class Status { Pass, Fail, Info, Skipped };

const char* to_string(Source s);
const char* to_string(Status s);
// Inverse of to_string(Source); throws DataError for anything else.
Source parse_source(const std::string& text);

struct ReportRow {
    // Every row names its source; there is no default.
    ReportRow(std::string check, std::string expected, std::string computed, Source source, Status status,
              std::string note = {});

    std::string check;
    std::string expected;
    std::string computed;
    Source source;
    Status status;
    std::string note;
};

class Report {
public:
    explicit Report(std::string title) : title_(std::move(title)) {}

    const std::string& title() const { return title_; }
    const std::vector<ReportRow>& rows() const { return rows_; }

    void add(ReportRow row) { rows_.push_back(std::move(row)); }
    // A Pass or Fail row comparing two rendered values.
    void check(std::string name, const std::string& expected, const std::string& computed, Source source,
               std::string note = {});
    void info(std::string name, std::string computed, Source source, std::string note = {});
    void skip(std::string name, std::string reason, Source source);
    void fail(std::string name, std::string reason, Source source);
    void append(const Report& other, const std::string& prefix);

    bool passed() const;
    std::size_t count(Status s) const;

    std::string text() const;
    nlohmann::ordered_json json() const;

private:
    std::string title_;
    std::vector<ReportRow> rows_;
};

}  // namespace contactcalc
