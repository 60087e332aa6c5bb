#pragma once

#include <cstddef>
#include <istream>
#include <vector>

#include <gmpxx.h>

#include "jacobsthal/errors.hpp"
#include "jacobsthal/exact.hpp"

namespace jacobsthal::cli
{

    struct BFileRow
    {
        SeqIndex index = 0;
        mpz_class value;
    };

    /// Malformed b-file content; `line` is 1-based.
    class BFileError : public DomainError
    {
    public:
        BFileError(std::size_t line, const std::string &what);
        std::size_t line() const { return line_; }

    private:
        std::size_t line_;
    };

    /// Reads "<index> <value>" rows. Blank lines and '#' comments are skipped;
    /// indices must be strictly increasing.
    std::vector<BFileRow> parse_bfile(std::istream &in);

} // namespace jacobsthal::cli
