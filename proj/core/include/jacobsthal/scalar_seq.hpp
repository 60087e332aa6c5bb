#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "jacobsthal/exact.hpp"

namespace jacobsthal
{

    /// The scalar sequences the library knows how to evaluate.
    enum class SeqId
    {
        Jacobsthal,       ///< J_n:  J_{n+1} = J_n + 2 J_{n-1}; 0, 1
        JacobsthalLucas,  ///< j_n:  same recurrence; 2, 1
        Jacobsthal3,      ///< J_n^(3): a_{n+3} = a_{n+2} + a_{n+1} + 2 a_n; 0, 1, 1
        JacobsthalLucas3, ///< j_n^(3): same recurrence; 2, 1, 5
        V3,               ///< period-3 sequence 2, -3, 1
    };

    /// Short tags used on the command line and in reports: J, j, J3, j3, V3.
    std::string_view to_string(SeqId seq);
    std::optional<SeqId> parse_seq_id(std::string_view tag);

    /// Exact term by iterating the defining recurrence from its seeds. For
    /// n < 0 the recurrence is run backwards, solving for the lowest term
    /// (a division by 2), so negative-index values are dyadic rationals.
    BigRational term_recurrence(SeqId seq, SeqIndex n);

    /// Terms lo..hi inclusive in one pass. Throws BadRange if lo > hi.
    std::vector<BigRational> term_range(SeqId seq, SeqIndex lo, SeqIndex hi);

    /// V_n^(3): 2, -3, 1 by n mod 3 (nonnegative residue, so V_{-2} = V_1 = -3).
    BigRational v3(SeqIndex n);

    /// Rational closed form: J3 = (2^{n+1} - V_n)/7, j3 = (2^{n+3} + 3 V_n)/7.
    /// Throws UnsupportedSequence for the other tags.
    BigRational term_binet(SeqId seq, SeqIndex n);

    /// Coefficients of c1 * 2^n + c2 * w^n + c3 * conj(w)^n.
    struct BinetCoefficients
    {
        CycloRational two;
        CycloRational omega;
        CycloRational omega_bar;
    };

    /// Throws UnsupportedSequence unless seq is Jacobsthal3 or JacobsthalLucas3.
    BinetCoefficients binet_coefficients(SeqId seq);

    /// Evaluates the three-root closed form in Q(w) and returns its rational
    /// part. Throws NonRationalResult if the w-component does not cancel.
    BigRational term_binet_cyclotomic(SeqId seq, SeqIndex n);

    /// sum_{k=0}^{n} J_k^(3) by its closed form: J_{n+1}, minus 1 when 3 | n.
    /// Throws BadRange for n < 0.
    BigRational partial_sum_J3(SeqIndex n);

} // namespace jacobsthal
