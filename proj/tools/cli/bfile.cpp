#include "bfile.hpp"

#include <charconv>
#include <sstream>
#include <string>

namespace jacobsthal::cli
{

    BFileError::BFileError(std::size_t line, const std::string &what)
        : DomainError("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    namespace
    {
        bool is_integer_token(const std::string &t)
        {
            std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
            if (i == t.size())
                return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9')
                    return false;
            return true;
        }
    } // namespace

    std::vector<BFileRow> parse_bfile(std::istream &in)
    {
        std::vector<BFileRow> rows;
        std::string line;
        std::size_t number = 0;
        while (std::getline(in, line))
        {
            ++number;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#')
                continue;

            std::istringstream fields(line);
            std::string index_text, value_text, extra;
            fields >> index_text >> value_text;
            if (value_text.empty())
                throw BFileError(number, "expected \"<index> <value>\"");
            if (fields >> extra)
                throw BFileError(number, "unexpected trailing field '" + extra + "'");
            if (!is_integer_token(index_text))
                throw BFileError(number, "bad index '" + index_text + "'");
            if (!is_integer_token(value_text))
                throw BFileError(number, "bad value '" + value_text + "'");

            BFileRow row;
            const char *begin = index_text.data() + (index_text[0] == '+' ? 1 : 0);
            const char *end = index_text.data() + index_text.size();
            if (auto [p, ec] = std::from_chars(begin, end, row.index); ec != std::errc{} || p != end)
                throw BFileError(number, "index out of range '" + index_text + "'");
            row.value.set_str(value_text[0] == '+' ? value_text.substr(1) : value_text, 10);

            if (!rows.empty() && row.index <= rows.back().index)
                throw BFileError(number, "index " + index_text + " is not strictly increasing");
            rows.push_back(std::move(row));
        }
        return rows;
    }

} // namespace jacobsthal::cli
