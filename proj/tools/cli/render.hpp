#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "jacobsthal/identity.hpp"

namespace jacobsthal::cli
{

    using Json = nlohmann::ordered_json;

    enum class Format
    {
        Text,
        Json,
        Csv,
    };

    std::optional<Format> parse_format(std::string_view tag);

    Json to_json(const BigRational &x);
    Json to_json(const Mat3 &m);
    Json to_json(const Value &v);
    Json to_json(const ParamMap &params);
    Json to_json(const IdentityReport &report);

    /// One document per invocation, two-space indent, trailing newline.
    void write_json(std::ostream &out, const Json &doc);

    /// Three "a,b,c" rows.
    void write_csv_rows(std::ostream &out, const Mat3 &m, std::string_view prefix = {});

    void write_text(std::ostream &out, const IdentityReport &report);
    void write_csv_header(std::ostream &out);
    void write_csv(std::ostream &out, const IdentityReport &report);

} // namespace jacobsthal::cli
