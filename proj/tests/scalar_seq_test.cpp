#include "doctest.h"
#include "oracle.hpp"

#include "jacobsthal/scalar_seq.hpp"

using namespace jacobsthal;

namespace
{
    BigRational Q(long n, long d = 1) { return {mpz_class(n), mpz_class(d)}; }

    // Second-order reference: a_{n+2} = a_{n+1} + 2 a_n.
    mpq_class order2(long s0, long s1, std::int64_t n)
    {
        mpq_class a = s0, b = s1;
        if (n >= 0)
        {
            for (std::int64_t i = 0; i < n; ++i)
            {
                mpq_class c = b + 2 * a;
                a = b;
                b = c;
            }
            return a;
        }
        for (std::int64_t i = 0; i > n; --i)
        {
            mpq_class prev = (b - a) / 2;
            b = a;
            a = prev;
        }
        return a;
    }
} // namespace

TEST_SUITE("scalar sequences")
{
    TEST_CASE("documented values")
    {
        CHECK(term_recurrence(SeqId::Jacobsthal3, 5) == Q(9));
        CHECK(term_recurrence(SeqId::Jacobsthal3, -2) == Q(1, 2));
        CHECK(term_recurrence(SeqId::Jacobsthal3, -3) == Q(-1, 4));
        CHECK(term_recurrence(SeqId::JacobsthalLucas3, 4) == Q(17));
        CHECK(term_recurrence(SeqId::JacobsthalLucas3, -1) == Q(1));
        CHECK(term_recurrence(SeqId::JacobsthalLucas3, -2) == Q(-1));
        CHECK(term_recurrence(SeqId::JacobsthalLucas3, -3) == Q(1));
        CHECK(v3(300) == Q(2));
        CHECK(v3(-2) == Q(-3));
        CHECK(term_binet(SeqId::Jacobsthal3, 5) == Q(9));
        CHECK(term_binet(SeqId::JacobsthalLucas3, 4) == Q(17));
        CHECK(term_binet_cyclotomic(SeqId::Jacobsthal3, 6) == Q(18));
        CHECK(term_binet_cyclotomic(SeqId::JacobsthalLucas3, 5) == Q(37));
    }

    TEST_CASE("term_range")
    {
        const auto head = term_range(SeqId::Jacobsthal3, 0, 7);
        const std::vector<BigRational> expected{0, 1, 1, 2, 5, 9, 18, 37};
        CHECK(head == expected);
        const auto lucas = term_range(SeqId::JacobsthalLucas3, -3, 3);
        const std::vector<BigRational> lucas_expected{1, -1, 1, 2, 1, 5, 10};
        CHECK(lucas == lucas_expected);
        CHECK(term_range(SeqId::V3, 5, 5).size() == 1);
        CHECK_THROWS_AS(term_range(SeqId::Jacobsthal3, 3, 2), BadRange);
    }

    TEST_CASE("second-order sequences")
    {
        for (std::int64_t n = -20; n <= 60; ++n)
        {
            CHECK(term_recurrence(SeqId::Jacobsthal, n) == oracle::to_big(order2(0, 1, n)));
            CHECK(term_recurrence(SeqId::JacobsthalLucas, n) == oracle::to_big(order2(2, 1, n)));
        }
        CHECK_THROWS_AS(term_binet(SeqId::Jacobsthal, 3), UnsupportedSequence);
        CHECK_THROWS_AS(term_binet_cyclotomic(SeqId::JacobsthalLucas, 3), UnsupportedSequence);
        CHECK_THROWS_AS(binet_coefficients(SeqId::V3), UnsupportedSequence);
    }

    TEST_CASE("tags")
    {
        for (SeqId s : {SeqId::Jacobsthal, SeqId::JacobsthalLucas, SeqId::Jacobsthal3,
                        SeqId::JacobsthalLucas3, SeqId::V3})
            CHECK(parse_seq_id(to_string(s)) == s);
        CHECK(to_string(SeqId::Jacobsthal3) == "J3");
        CHECK_FALSE(parse_seq_id("Q9").has_value());
    }

    TEST_CASE("all methods agree with the brute-force recurrence on [-64, 2000]")
    {
        auto J = oracle::jacobsthal3();
        auto j = oracle::lucas3();
        const auto Jr = term_range(SeqId::Jacobsthal3, -64, 2000);
        const auto jr = term_range(SeqId::JacobsthalLucas3, -64, 2000);
        REQUIRE(Jr.size() == 2065);
        bool ok = true;
        for (std::int64_t n = -64; n <= 2000; ++n)
        {
            const auto i = static_cast<std::size_t>(n + 64);
            const auto Jn = oracle::to_big(J(n));
            const auto jn = oracle::to_big(j(n));
            ok = ok && Jr[i] == Jn && jr[i] == jn;
            ok = ok && term_binet(SeqId::Jacobsthal3, n) == Jn && term_binet(SeqId::JacobsthalLucas3, n) == jn;
            ok = ok && term_binet_cyclotomic(SeqId::Jacobsthal3, n) == Jn &&
                 term_binet_cyclotomic(SeqId::JacobsthalLucas3, n) == jn;
            if (n % 97 == 0)
                ok = ok && term_recurrence(SeqId::Jacobsthal3, n) == Jn &&
                     term_recurrence(SeqId::JacobsthalLucas3, n) == jn;
            if (!ok)
            {
                FAIL("disagreement at n = " << n);
                break;
            }
        }
        CHECK(ok);
    }

    TEST_CASE("binet coefficients")
    {
        const CycloRational i_sqrt3(1, 2);
        const auto J = binet_coefficients(SeqId::Jacobsthal3);
        CHECK(J.two == CycloRational(Q(2, 7)));
        CHECK(J.omega == (CycloRational(-3) - CycloRational(2) * i_sqrt3) * CycloRational(Q(1, 21)));
        CHECK(J.omega_bar == J.omega.conj());
        const auto j = binet_coefficients(SeqId::JacobsthalLucas3);
        CHECK(j.two == CycloRational(Q(8, 7)));
        CHECK(j.omega == (CycloRational(3) + CycloRational(2) * i_sqrt3) * CycloRational(Q(1, 7)));
        CHECK(j.omega_bar == j.omega.conj());
        // The coefficients reproduce the seeds.
        CHECK(J.two + J.omega + J.omega_bar == CycloRational(0));
        CHECK(j.two + j.omega + j.omega_bar == CycloRational(2));
    }

    TEST_CASE("V is 3-periodic and ties the two sequences together")
    {
        for (SeqIndex n = -30; n <= 30; ++n)
        {
            const std::array<long, 3> period{2, -3, 1};
            CHECK(v3(n) == Q(period[static_cast<std::size_t>(mod3(n))]));
            const auto J = term_recurrence(SeqId::Jacobsthal3, n);
            const auto j = term_recurrence(SeqId::JacobsthalLucas3, n);
            CHECK(j - 4 * J == v3(n));
            CHECK(3 * J + j == BigRational::pow2(n + 1));
        }
    }

    TEST_CASE("partial sums")
    {
        CHECK(partial_sum_J3(0) == Q(0));
        CHECK(partial_sum_J3(3) == Q(4));
        CHECK(partial_sum_J3(4) == Q(9));
        CHECK_THROWS_AS(partial_sum_J3(-1), BadRange);
        auto J = oracle::jacobsthal3();
        mpq_class running = 0;
        for (SeqIndex n = 0; n <= 300; ++n)
        {
            running += J(n);
            CHECK(partial_sum_J3(n) == oracle::to_big(running));
        }
    }

    TEST_CASE("integrality and growth")
    {
        const auto Jr = term_range(SeqId::Jacobsthal3, 0, 1500);
        for (SeqIndex n = 0; n <= 1500; ++n)
        {
            const auto &Jn = Jr[static_cast<std::size_t>(n)];
            CHECK(Jn.is_integer());
            // |7 J_n - 2^{n+1}| = |V_n| <= 3
            const BigRational gap = 7 * Jn - BigRational::pow2(n + 1);
            CHECK(gap * gap <= Q(9));
        }
        // Negative indices carry dyadic denominators only.
        for (SeqIndex n = -40; n < 0; ++n)
        {
            const mpz_class d = term_recurrence(SeqId::JacobsthalLucas3, n).den();
            CHECK((d & (d - 1)) == 0);
        }
    }
}
