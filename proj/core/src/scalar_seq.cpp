#include "jacobsthal/scalar_seq.hpp"

#include <array>
#include <string>

namespace jacobsthal
{

    namespace
    {
        // a_{k+order} = sum_i coeff[i] * a_{k+order-1-i}
        struct Recurrence
        {
            std::size_t order;
            std::array<long, 3> coeff;
            std::array<long, 3> seed;
        };

        Recurrence recurrence_of(SeqId seq)
        {
            switch (seq)
            {
            case SeqId::Jacobsthal:
                return {2, {1, 2, 0}, {0, 1, 0}};
            case SeqId::JacobsthalLucas:
                return {2, {1, 2, 0}, {2, 1, 0}};
            case SeqId::Jacobsthal3:
                return {3, {1, 1, 2}, {0, 1, 1}};
            case SeqId::JacobsthalLucas3:
                return {3, {1, 1, 2}, {2, 1, 5}};
            case SeqId::V3:
                // j - 4J satisfies the order-3 recurrence too
                return {3, {1, 1, 2}, {2, -3, 1}};
            }
            throw UnsupportedSequence("unknown sequence tag");
        }

        void require_closed_form(SeqId seq)
        {
            if (seq != SeqId::Jacobsthal3 && seq != SeqId::JacobsthalLucas3)
                throw UnsupportedSequence("closed form is defined only for J3 and j3, not " +
                                          std::string(to_string(seq)));
        }
    } // namespace

    std::string_view to_string(SeqId seq)
    {
        switch (seq)
        {
        case SeqId::Jacobsthal:
            return "J";
        case SeqId::JacobsthalLucas:
            return "j";
        case SeqId::Jacobsthal3:
            return "J3";
        case SeqId::JacobsthalLucas3:
            return "j3";
        case SeqId::V3:
            return "V3";
        }
        return "?";
    }

    std::optional<SeqId> parse_seq_id(std::string_view tag)
    {
        for (SeqId s : {SeqId::Jacobsthal, SeqId::JacobsthalLucas, SeqId::Jacobsthal3,
                        SeqId::JacobsthalLucas3, SeqId::V3})
            if (to_string(s) == tag)
                return s;
        return std::nullopt;
    }

    std::vector<BigRational> term_range(SeqId seq, SeqIndex lo, SeqIndex hi)
    {
        if (lo > hi)
            throw BadRange("empty index range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        const Recurrence rec = recurrence_of(seq);
        const std::size_t order = rec.order;
        std::vector<BigRational> out(static_cast<std::size_t>(hi - lo) + 1);

        if (lo < 0)
        {
            // window[i] = a_{k+i}, starting at k = 0
            std::array<BigRational, 3> window;
            for (std::size_t i = 0; i < order; ++i)
                window[i] = rec.seed[i];
            const BigRational lowest_coeff(rec.coeff[order - 1]);
            for (SeqIndex k = -1; k >= lo; --k)
            {
                BigRational v = window[order - 1];
                for (std::size_t i = 0; i + 1 < order; ++i)
                    v -= BigRational(rec.coeff[i]) * window[order - 2 - i];
                v /= lowest_coeff;
                for (std::size_t i = order - 1; i > 0; --i)
                    window[i] = std::move(window[i - 1]);
                window[0] = v;
                if (k <= hi)
                    out[static_cast<std::size_t>(k - lo)] = std::move(v);
            }
        }

        if (hi >= 0)
        {
            // Integer seeds and coefficients: the forward pass stays in Z.
            std::array<mpz_class, 3> window;
            for (std::size_t i = 0; i < order; ++i)
                window[i] = rec.seed[i];
            const SeqIndex start = lo > 0 ? lo : 0;
            for (SeqIndex k = 0; k <= hi; ++k)
            {
                if (k >= static_cast<SeqIndex>(order))
                {
                    mpz_class next = 0;
                    for (std::size_t i = 0; i < order; ++i)
                        next += rec.coeff[i] * window[order - 1 - i];
                    for (std::size_t i = 0; i + 1 < order; ++i)
                        window[i].swap(window[i + 1]);
                    window[order - 1] = std::move(next);
                }
                if (k >= start)
                {
                    const std::size_t slot = k < static_cast<SeqIndex>(order) ? static_cast<std::size_t>(k) : order - 1;
                    out[static_cast<std::size_t>(k - lo)] = BigRational(window[slot]);
                }
            }
        }
        return out;
    }

    BigRational term_recurrence(SeqId seq, SeqIndex n)
    {
        return std::move(term_range(seq, n, n).front());
    }

    BigRational v3(SeqIndex n)
    {
        static const int values[3] = {2, -3, 1};
        return values[mod3(n)];
    }

    BigRational term_binet(SeqId seq, SeqIndex n)
    {
        require_closed_form(seq);
        if (seq == SeqId::Jacobsthal3)
            return (BigRational::pow2(n + 1) - v3(n)) / 7;
        return (BigRational::pow2(n + 3) + 3 * v3(n)) / 7;
    }

    BinetCoefficients binet_coefficients(SeqId seq)
    {
        require_closed_form(seq);
        // i*sqrt(3) = 2w + 1 for w = (-1 + i sqrt 3)/2
        const CycloRational i_sqrt3(1, 2);
        const CycloRational three(3);
        if (seq == SeqId::Jacobsthal3)
        {
            const BigRational k(mpz_class(-1), mpz_class(21));
            return {CycloRational(BigRational(mpz_class(2), mpz_class(7))),
                    (three + 2 * i_sqrt3) * k,
                    (three - 2 * i_sqrt3) * k};
        }
        const BigRational k(mpz_class(1), mpz_class(7));
        return {CycloRational(BigRational(mpz_class(8), mpz_class(7))),
                (three + 2 * i_sqrt3) * k,
                (three - 2 * i_sqrt3) * k};
    }

    BigRational term_binet_cyclotomic(SeqId seq, SeqIndex n)
    {
        const BinetCoefficients c = binet_coefficients(seq);
        // conj(w) = w^2 = w^{-1}
        const CycloRational value = c.two * CycloRational(BigRational::pow2(n)) +
                                    c.omega * CycloRational::omega_pow(n) +
                                    c.omega_bar * CycloRational::omega_pow(-n);
        if (!value.is_rational())
            throw NonRationalResult("Binet evaluation of " + std::string(to_string(seq)) + " at n=" +
                                    std::to_string(n));
        return value.a();
    }

    BigRational partial_sum_J3(SeqIndex n)
    {
        if (n < 0)
            throw BadRange("partial_sum_J3 requires n >= 0, got " + std::to_string(n));
        BigRational next = term_recurrence(SeqId::Jacobsthal3, n + 1);
        if (mod3(n) == 0)
            next -= 1;
        return next;
    }

} // namespace jacobsthal
