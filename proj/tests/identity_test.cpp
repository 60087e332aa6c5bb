#include <set>

#include "doctest.h"
#include "oracle.hpp"

#include "jacobsthal/identity.hpp"
#include "jacobsthal/matrix_seq.hpp"

using namespace jacobsthal;

namespace
{
    BigRational Q(long n, long d = 1) { return {mpz_class(n), mpz_class(d)}; }

    const Mat3 &as_matrix(const Value &v) { return std::get<Mat3>(v); }
    const BigRational &as_scalar(const Value &v) { return std::get<BigRational>(v); }

    // Direct sum of brute-force matrices, weighted by x^{-k}.
    Mat3 oracle_weighted(MatFamily family, const BigRational &x, SeqIndex n)
    {
        Mat3 sum;
        for (SeqIndex k = 0; k <= n; ++k)
            sum += matrix_term(family, k, MatMethod::Recurrence) * x.pow(-k);
        return sum;
    }
} // namespace

TEST_SUITE("identity engine")
{
    TEST_CASE("catalog is sorted, unique and complete")
    {
        const auto &catalog = identity_catalog();
        std::set<std::string> ids;
        for (std::size_t i = 0; i < catalog.size(); ++i)
        {
            ids.insert(catalog[i].id);
            if (i > 0)
                CHECK(catalog[i - 1].id < catalog[i].id);
            CHECK(catalog[i].evaluate);
        }
        CHECK(ids.size() == catalog.size());
        for (const char *id : {"eq04", "eq05", "eq06", "eq07", "eq08", "eq09", "eq10", "eq11", "eq12", "eq13",
                               "eq14", "eq17", "eq18", "eq19", "eq20", "eq26", "eq27", "eq28", "eq29", "eq30",
                               "eq31", "eq32", "eq33", "eq36", "eq37", "eq38", "eq39", "thm2.4-J",
                               "thm2.4-J-corrected", "thm2.4-j", "thm2.4-j-corrected", "thm2.5-J", "thm2.5-j",
                               "cor3.5", "cor3.5-corrected"})
            CHECK(ids.count(id) == 1);
        CHECK_THROWS_AS(find_identity("eq99"), UnknownIdentity);
    }

    TEST_CASE("scalar identities with witnesses")
    {
        for (const char *id : {"eq04", "eq05", "eq09"})
        {
            const auto report = verify(id, {0, 10});
            CHECK(report.status == Status::Pass);
            CHECK(report.checked == 11);
        }
        CHECK(verify("eq06", {0, 9}).status == Status::Pass);

        Oracle o;
        const auto &eq04 = find_identity("eq04");
        const auto chain = eq04.evaluate(o, 4, {});
        CHECK(as_scalar(chain.front()) == Q(32));
        const auto eq09 = find_identity("eq09").evaluate(o, 2, {});
        CHECK(as_scalar(eq09.front()) == Q(0));
        const auto eq06 = find_identity("eq06").evaluate(o, 1, {});
        CHECK(as_scalar(eq06.front()) == Q(-2));
        const auto eq05 = find_identity("eq05").evaluate(o, 3, {});
        CHECK(as_scalar(eq05.front()) == Q(4));
    }

    TEST_CASE("scalar identities on [-30, 200]")
    {
        for (const char *id : {"eq04", "eq05", "eq06", "eq07", "eq08", "eq09", "eq10", "eq11", "eq12"})
        {
            CAPTURE(id);
            const auto report = verify(id, {-30, 200});
            CHECK(report.status == Status::Pass);
            CHECK(report.checked == 231);
        }
    }

    TEST_CASE("weighted sums")
    {
        const auto one = weighted_sum(MatFamily::Jacobsthal, Q(1), 1);
        CHECK(one.direct(0, 0) == Q(2));
        CHECK(one.corrected(0, 0) == Q(2));
        CHECK(one.printed(0, 0) == Q(-2));
        CHECK(weighted_sum_delta(Q(1)) == Q(3));
        CHECK(weighted_sum_delta(Q(3)) == Q(-13));

        const auto three = weighted_sum(MatFamily::Jacobsthal, Q(3), 0);
        CHECK(three.direct == Mat3::identity());
        CHECK(three.corrected == Mat3::identity());

        CHECK_THROWS_AS(weighted_sum(MatFamily::Jacobsthal, Q(2), 3), BadParams);
        CHECK_THROWS_AS(weighted_sum(MatFamily::Jacobsthal, Q(0), 3), BadParams);
        CHECK_THROWS_AS(weighted_sum(MatFamily::Jacobsthal, Q(1), -1), BadRange);

        for (MatFamily family : {MatFamily::Jacobsthal, MatFamily::JacobsthalLucas})
            for (const BigRational &x : {Q(1), Q(-1), Q(3), Q(1, 2), Q(-5, 2), Q(7, 3)})
                for (SeqIndex n = 0; n <= 12; ++n)
                {
                    const auto s = weighted_sum(family, x, n);
                    CHECK(s.direct == oracle_weighted(family, x, n));
                    CHECK(s.corrected == s.direct);
                    CHECK(s.printed == Q(-1) * s.direct);
                }
    }

    TEST_CASE("weighted sum reports")
    {
        const auto [printed, corrected] = verify_weighted_sum(MatFamily::Jacobsthal, Q(1), {0, 50});
        CHECK(corrected.status == Status::Pass);
        CHECK(corrected.checked == 51);
        CHECK(printed.status == Status::Fail);
        CHECK(printed.matches_expected());
        bool found = false;
        for (const auto &ce : printed.counterexamples)
            if (ce.n == 1)
            {
                found = true;
                REQUIRE(ce.entry.has_value());
                CHECK(*ce.entry == std::pair{1, 1});
                CHECK(as_matrix(ce.lhs)(0, 0) == Q(2));
                CHECK(as_matrix(ce.rhs)(0, 0) == Q(-2));
            }
        CHECK(found);
        CHECK_THROWS_AS(verify_weighted_sum(MatFamily::Jacobsthal, Q(2), {0, 5}), BadParams);
    }

    TEST_CASE("strided sums")
    {
        const auto c1 = strided_sum_constants(1);
        CHECK(c1.w == Q(-1));
        CHECK(c1.sigma == Q(4 + (1 - 2) * -1 - 2));
        CHECK(strided_sum_constants(3).w == Q(2));
        CHECK(strided_sum_constants(3).sigma == Q(0));
        CHECK(strided_sum_constants(6).sigma == Q(0));

        const auto s = strided_sum(MatFamily::Jacobsthal, 1, 1, 1);
        CHECK(s.direct(0, 0) == Q(3));
        REQUIRE(s.closed.has_value());
        CHECK((*s.closed)(0, 0) == Q(3));

        const auto degenerate = strided_sum(MatFamily::Jacobsthal, 3, 3, 0);
        CHECK_FALSE(degenerate.closed.has_value());
        const auto report = verify_strided_sum(MatFamily::Jacobsthal, 3, 3, {0, 10});
        REQUIRE(report.degenerate.has_value());
        CHECK(*report.degenerate == "sigma(m)=0");
        CHECK(report.checked == 0);

        CHECK_THROWS_AS(strided_sum(MatFamily::Jacobsthal, 0, 1, 1), BadParams);
        CHECK_THROWS_AS(strided_sum(MatFamily::Jacobsthal, 2, 1, 1), BadParams);

        for (MatFamily family : {MatFamily::Jacobsthal, MatFamily::JacobsthalLucas})
            for (SeqIndex m : {1, 2, 4, 5})
                for (SeqIndex r = m; r <= m + 2; ++r)
                    for (SeqIndex n = 0; n <= 8; ++n)
                    {
                        Mat3 direct;
                        for (SeqIndex k = 0; k <= n; ++k)
                            direct += matrix_term(family, m * k + r, MatMethod::Recurrence);
                        const auto sum = strided_sum(family, m, r, n);
                        CHECK(sum.direct == direct);
                        REQUIRE(sum.closed.has_value());
                        CHECK(*sum.closed == direct);
                    }
    }

    TEST_CASE("squared Lucas entry")
    {
        const auto [printed, corrected] = verify_lucas_square_entry({0, 100});
        CHECK(corrected.status == Status::Pass);
        CHECK(printed.status == Status::Fail);
        REQUIRE_FALSE(printed.counterexamples.empty());
        bool found = false;
        for (const auto &ce : printed.counterexamples)
            if (ce.n == 1)
            {
                found = true;
                CHECK(as_scalar(ce.lhs) == Q(34));
                CHECK(as_scalar(ce.rhs) == Q(145));
            }
        CHECK(found);

        Oracle o;
        const auto at2 = find_identity("cor3.5-corrected").evaluate(o, 2, {});
        for (const auto &v : at2)
            CHECK(as_scalar(v) == Q(145));
    }

    TEST_CASE("parameter validation")
    {
        CHECK_THROWS_AS(verify("thm2.4-J", {0, 5}, {{"x", Q(2)}}), BadParams);
        CHECK_THROWS_AS(verify("thm2.4-J", {0, 5}), BadParams);
        CHECK_THROWS_AS(verify("thm2.5-J", {0, 5}, {{"m", Q(2)}, {"r", Q(1)}}), BadParams);
        CHECK_THROWS_AS(verify("eq26", {0, 5}, {{"m", Q(1, 2)}}), BadParams);
        CHECK_THROWS_AS(verify_sweep("eq04", {0, 5}, {{"m", Q(1)}}), BadParams);
        CHECK_THROWS_AS(verify("eq99", {0, 5}), UnknownIdentity);
        const auto pinned = verify_sweep("eq26", {0, 5}, {{"m", Q(3)}});
        REQUIRE(pinned.size() == 1);
        CHECK(pinned.front().params.at("m") == Q(3));
    }

    TEST_CASE("range clipping")
    {
        const auto report = verify("thm2.4-J-corrected", {-5, 3}, {{"x", Q(1, 2)}});
        CHECK(report.range == IndexRange{0, 3});
        CHECK(report.checked == 4);
        const auto empty = verify("thm2.4-J", {-5, -1}, {{"x", Q(1)}});
        CHECK(empty.checked == 0);
        CHECK(empty.matches_expected());
    }

    TEST_CASE("verify_all over [0, 50]")
    {
        const auto reports = verify_all({0, 50});
        CHECK(all_as_expected(reports));
        std::set<std::string> failing;
        for (const auto &r : reports)
        {
            if (r.status == Status::Fail)
                failing.insert(r.id);
            if (r.expected == Expectation::Holds)
                CHECK(r.status == Status::Pass);
        }
        CHECK(failing == std::set<std::string>{"cor3.5", "thm2.4-J", "thm2.4-j"});
        for (std::size_t i = 1; i < reports.size(); ++i)
            CHECK(reports[i - 1].id <= reports[i].id);
    }

    TEST_CASE("verify_all is deterministic across thread counts")
    {
        VerifyOptions one;
        one.threads = 1;
        VerifyOptions many;
        many.threads = 6;
        const auto a = verify_all({-20, 20}, {}, one);
        const auto b = verify_all({-20, 20}, {}, many);
        REQUIRE(a.size() == b.size());
        CHECK(all_as_expected(a));
        for (std::size_t i = 0; i < a.size(); ++i)
        {
            CHECK(a[i].id == b[i].id);
            CHECK(a[i].params == b[i].params);
            CHECK(a[i].status == b[i].status);
            CHECK(a[i].checked == b[i].checked);
        }
    }

    TEST_CASE("empty range is vacuous")
    {
        const auto reports = verify_all({1, 0});
        CHECK(all_as_expected(reports));
        for (const auto &r : reports)
        {
            CHECK(r.checked == 0);
            CHECK(r.status == Status::Pass);
        }
    }

    TEST_CASE("value rendering")
    {
        CHECK(to_string(Value(Q(-3, 4))) == "-3/4");
        CHECK(to_string(Value(Mat3::identity())) == "[[1,0,0],[0,1,0],[0,0,1]]");
        CHECK(to_string(Expectation::FailsAsPrinted) == "FAILS_AS_PRINTED");
        CHECK(to_string(Status::Pass) == "PASS");
    }
}
