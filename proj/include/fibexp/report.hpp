#pragma once

#include "fibexp/numeric.hpp"

#include <json.hpp>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace fibexp {

// JSON value for an exact integer: a number when it fits 64 bits, the
// decimal string otherwise.
nlohmann::json json_int(const Int& v);

enum class CheckStatus { Pass, Fail, Skip };

const char* to_string(CheckStatus s);

struct CheckRecord {
    std::string check;
    long long index;  // -1 for checks not tied to a sequence index
    CheckStatus status;
    std::string witness;
};

// Flat list of exact-check outcomes, one row per check. Serializable to
// JSON and CSV so runs can be diffed and post-processed.
struct Report {
    std::vector<CheckRecord> entries;

    void add(std::string check, long long index, bool ok, std::string witness = {});
    void skip(std::string check, long long index, std::string witness);

    bool all_pass() const;  // no Fail entries (Skip is not a failure)
    std::size_t failures() const;
    const CheckRecord* first_failure() const;

    nlohmann::json to_json() const;
    void write_csv(std::ostream& os) const;
};

std::string csv_escape(const std::string& s);

}  // namespace fibexp
