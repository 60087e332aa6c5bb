#include "render.hpp"

namespace jacobsthal::cli
{

    std::optional<Format> parse_format(std::string_view tag)
    {
        if (tag == "text")
            return Format::Text;
        if (tag == "json")
            return Format::Json;
        if (tag == "csv")
            return Format::Csv;
        return std::nullopt;
    }

    Json to_json(const BigRational &x) { return x.to_string(); }

    Json to_json(const Mat3 &m)
    {
        Json rows = Json::array();
        for (std::size_t r = 0; r < 3; ++r)
        {
            Json row = Json::array();
            for (std::size_t c = 0; c < 3; ++c)
                row.push_back(m(r, c).to_string());
            rows.push_back(std::move(row));
        }
        return rows;
    }

    Json to_json(const Value &v)
    {
        return std::visit([](const auto &x)
                          { return to_json(x); },
                          v);
    }

    Json to_json(const ParamMap &params)
    {
        Json out = Json::object();
        for (const auto &[name, value] : params)
            out[name] = value.to_string();
        return out;
    }

    Json to_json(const IdentityReport &report)
    {
        Json out;
        out["id"] = report.id;
        out["params"] = to_json(report.params);
        out["range"] = {{"lo", report.range.lo}, {"hi", report.range.hi}};
        out["status"] = std::string(to_string(report.status));
        out["expected"] = std::string(to_string(report.expected));
        out["checked"] = report.checked;
        out["failures"] = report.failures;
        out["degenerate"] = report.degenerate ? Json(*report.degenerate) : Json(nullptr);
        Json ces = Json::array();
        for (const auto &ce : report.counterexamples)
        {
            Json j;
            j["n"] = ce.n;
            j["params"] = to_json(ce.params);
            j["part"] = ce.part;
            j["lhs"] = to_json(ce.lhs);
            j["rhs"] = to_json(ce.rhs);
            j["entry"] = ce.entry ? Json::array({ce.entry->first, ce.entry->second}) : Json(nullptr);
            ces.push_back(std::move(j));
        }
        out["counterexamples"] = std::move(ces);
        return out;
    }

    void write_json(std::ostream &out, const Json &doc) { out << doc.dump(2) << '\n'; }

    void write_csv_rows(std::ostream &out, const Mat3 &m, std::string_view prefix)
    {
        for (std::size_t r = 0; r < 3; ++r)
            out << prefix << m(r, 0) << ',' << m(r, 1) << ',' << m(r, 2) << '\n';
    }

    void write_text(std::ostream &out, const IdentityReport &report)
    {
        out << to_string(report.status) << "  " << report.id;
        if (!report.params.empty())
            out << ' ' << to_string(report.params);
        if (report.range.empty())
            out << "  n=[]";
        else
            out << "  n=[" << report.range.lo << ',' << report.range.hi << ']';
        out << "  checked=" << report.checked << "  failures=" << report.failures
            << "  expected=" << to_string(report.expected);
        if (report.degenerate)
            out << "  degenerate: " << *report.degenerate;
        out << '\n';
        for (const auto &ce : report.counterexamples)
        {
            out << "    n=" << ce.n << " part " << ce.part;
            if (ce.entry)
                out << " entry (" << ce.entry->first << ',' << ce.entry->second << ')';
            out << ": " << to_string(ce.lhs) << " != " << to_string(ce.rhs) << '\n';
        }
    }

    void write_csv_header(std::ostream &out)
    {
        out << "id,params,lo,hi,status,expected,checked,failures,degenerate\n";
    }

    void write_csv(std::ostream &out, const IdentityReport &report)
    {
        std::string params;
        for (const auto &[name, value] : report.params)
            params += (params.empty() ? "" : ";") + name + "=" + value.to_string();
        out << report.id << ',' << params << ',' << report.range.lo << ',' << report.range.hi << ','
            << to_string(report.status) << ',' << to_string(report.expected) << ',' << report.checked << ','
            << report.failures << ',' << report.degenerate.value_or("") << '\n';
    }

} // namespace jacobsthal::cli
