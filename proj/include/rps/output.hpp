#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rps/rational.hpp"

namespace rps {

/// One emitted value. Exact rationals travel as decimal strings (they
/// overflow 64-bit integers fast), approx is the 15-significant-digit
/// decimal expansion of the exact value when both are present.
struct OutputRecord {
    long n = 0;
    std::string quantity;
    std::optional<std::pair<std::string, std::string>> exact;  // {num, den}, den > 0, reduced
    std::optional<std::string> approx;
    std::map<std::string, std::string> metadata;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline constexpr unsigned kApproxDigits = 15;

inline OutputRecord make_record(long n, std::string quantity, const Rational& exact,
                                std::map<std::string, std::string> metadata = {}) {
    OutputRecord r;
    r.n = n;
    r.quantity = std::move(quantity);
    r.exact = {exact.numerator().str(), exact.denominator().str()};
    r.approx = exact.to_decimal_string(kApproxDigits);
    r.metadata = std::move(metadata);
    return r;
}

inline OutputRecord make_approx_record(long n, std::string quantity, const std::string& approx,
                                       std::map<std::string, std::string> metadata = {}) {
    OutputRecord r;
    r.n = n;
    r.quantity = std::move(quantity);
    r.approx = approx;
    r.metadata = std::move(metadata);
    return r;
}

inline nlohmann::json to_json(const OutputRecord& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["quantity"] = r.quantity;
    if (r.exact) j["exact"] = {{"num", r.exact->first}, {"den", r.exact->second}};
    if (r.approx) j["approx"] = *r.approx;
    j["metadata"] = r.metadata;
    return j;
}

inline OutputRecord record_from_json(const nlohmann::json& j) {
    OutputRecord r;
    r.n = j.at("n").get<long>();
    r.quantity = j.at("quantity").get<std::string>();
    if (j.contains("exact"))
        r.exact = {j["exact"].at("num").get<std::string>(),
                   j["exact"].at("den").get<std::string>()};
    if (j.contains("approx")) r.approx = j["approx"].get<std::string>();
    if (j.contains("metadata"))
        r.metadata = j["metadata"].get<std::map<std::string, std::string>>();
    return r;
}

inline std::string to_json_text(const std::vector<OutputRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
}

inline std::vector<OutputRecord> records_from_json_text(const std::string& text) {
    std::vector<OutputRecord> out;
    for (const auto& j : nlohmann::json::parse(text)) out.push_back(record_from_json(j));
    return out;
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

}  // namespace detail

/// CSV with a mandatory header: the fixed columns n, quantity, exact
/// ("num/den"), approx, then one column per metadata key present anywhere in
/// the batch, in sorted order. Absent values are empty cells.
inline std::string to_csv_text(const std::vector<OutputRecord>& records) {
    std::set<std::string> keys;
    for (const auto& r : records)
        for (const auto& [k, v] : r.metadata) keys.insert(k);

    std::ostringstream os;
    os << "n,quantity,exact,approx";
    for (const auto& k : keys) os << "," << detail::csv_escape(k);
    os << "\n";
    for (const auto& r : records) {
        os << r.n << "," << detail::csv_escape(r.quantity) << ",";
        if (r.exact) os << detail::csv_escape(r.exact->first + "/" + r.exact->second);
        os << ",";
        if (r.approx) os << detail::csv_escape(*r.approx);
        for (const auto& k : keys) {
            os << ",";
            auto it = r.metadata.find(k);
            if (it != r.metadata.end()) os << detail::csv_escape(it->second);
        }
        os << "\n";
    }
    return os.str();
}

/// Inverse of to_csv_text for records whose metadata values are non-empty.
inline std::vector<OutputRecord> records_from_csv_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("records_from_csv_text: empty input");
    const std::vector<std::string> header = detail::csv_split(line);
    if (header.size() < 4 || header[0] != "n" || header[1] != "quantity" || header[2] != "exact" ||
        header[3] != "approx")
        throw std::invalid_argument("records_from_csv_text: unexpected header");

    std::vector<OutputRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> fields = detail::csv_split(line);
        if (fields.size() != header.size())
            throw std::invalid_argument("records_from_csv_text: ragged row");
        OutputRecord r;
        r.n = std::stol(fields[0]);
        r.quantity = fields[1];
        if (!fields[2].empty()) {
            const auto slash = fields[2].find('/');
            if (slash == std::string::npos)
                throw std::invalid_argument("records_from_csv_text: exact cell without '/'");
            r.exact = {fields[2].substr(0, slash), fields[2].substr(slash + 1)};
        }
        if (!fields[3].empty()) r.approx = fields[3];
        for (std::size_t i = 4; i < fields.size(); ++i)
            if (!fields[i].empty()) r.metadata[header[i]] = fields[i];
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace rps
