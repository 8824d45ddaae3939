#include "fibexp/report.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace fibexp {

nlohmann::json json_int(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() &&
        v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "?";
}

void Report::add(std::string check, long long index, bool ok, std::string witness) {
    entries.push_back({std::move(check), index, ok ? CheckStatus::Pass : CheckStatus::Fail,
                       std::move(witness)});
}

void Report::skip(std::string check, long long index, std::string witness) {
    entries.push_back({std::move(check), index, CheckStatus::Skip, std::move(witness)});
}

bool Report::all_pass() const {
    return std::none_of(entries.begin(), entries.end(),
                        [](const CheckRecord& r) { return r.status == CheckStatus::Fail; });
}

std::size_t Report::failures() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(),
                      [](const CheckRecord& r) { return r.status == CheckStatus::Fail; }));
}

const CheckRecord* Report::first_failure() const {
    for (const auto& r : entries)
        if (r.status == CheckStatus::Fail) return &r;
    return nullptr;
}

nlohmann::json Report::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : entries) {
        arr.push_back({{"check", r.check},
                       {"index", r.index},
                       {"status", to_string(r.status)},
                       {"witness", r.witness}});
    }
    return arr;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

void Report::write_csv(std::ostream& os) const {
    os << "check,index,status,witness\n";
    for (const auto& r : entries) {
        os << r.check << ',' << r.index << ',' << to_string(r.status) << ','
           << csv_escape(r.witness) << '\n';
    }
}

}  // namespace fibexp
