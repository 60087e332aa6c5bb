#include <algorithm>

#include "jacobsthal/identity.hpp"
#include "jacobsthal/matrix_seq.hpp"
#include "jacobsthal/scalar_seq.hpp"
#include "sums.hpp"

namespace jacobsthal
{

    namespace
    {
        using Chain = std::vector<Value>;
        using Q = BigRational;

        Q q(long v) { return Q(v); }
        Q q(long num, long den) { return Q(mpz_class(num), mpz_class(den)); }

        SeqIndex int_param(const ParamMap &p, const std::string &name)
        {
            return p.at(name).num().get_si();
        }

        std::function<std::vector<ParamMap>()> integer_sweep(std::string name, SeqIndex lo, SeqIndex hi)
        {
            return [name, lo, hi]
            {
                std::vector<ParamMap> out;
                for (SeqIndex v = lo; v <= hi; ++v)
                    out.push_back({{name, q(v)}});
                return out;
            };
        }

        ParamDecl integer_param(std::string name, std::optional<SeqIndex> min = std::nullopt, std::string doc = {})
        {
            return {std::move(name), true, min, {}, std::move(doc)};
        }

        // sum_{k=0}^{n} J_k, with sum_{k=0}^{n} = -sum_{k=n+1}^{-1} for n < 0.
        Q direct_partial_sum(Oracle &o, SeqIndex n)
        {
            Q s;
            if (n >= 0)
                for (SeqIndex k = 0; k <= n; ++k)
                    s += o.J(k);
            else
                for (SeqIndex k = n + 1; k <= -1; ++k)
                    s -= o.J(k);
            return s;
        }

        Mat3 repeated_product(const Mat3 &a, SeqIndex m)
        {
            Mat3 out = Mat3::identity();
            for (SeqIndex i = 0; i < m; ++i)
                out = out * a;
            return out;
        }

        detail::TermLookup lookup(Oracle &o, MatFamily family)
        {
            return [&o, family](SeqIndex k)
            { return o.M(family, k); };
        }

        const std::vector<BigRational> &weighted_sum_points()
        {
            static const std::vector<BigRational> xs = {q(1), q(-1), q(3), q(1, 2), q(-5, 2), q(7, 3)};
            return xs;
        }

        IdentitySpec weighted_sum_spec(MatFamily family, bool corrected)
        {
            const std::string tag(to_string(family));
            IdentitySpec s;
            s.id = "thm2.4-" + tag + (corrected ? "-corrected" : "");
            s.statement = corrected ? "sum_{k=0}^{n} M_" + tag + "(k)/x^k = N(x,n) / (x^n (2+x+x^2-x^3))"
                                    : "sum_{k=0}^{n} M_" + tag + "(k)/x^k = N(x,n) / (x^n (x^3-x^2-x-2))";
            s.expected = corrected ? Expectation::Holds : Expectation::FailsAsPrinted;
            s.params = {{"x", false, std::nullopt, {q(0), q(2)}, "x must be nonzero and not a root of x^3-x^2-x-2"}};
            s.min_index = 0;
            s.default_sweep = []
            {
                std::vector<ParamMap> out;
                for (const auto &x : weighted_sum_points())
                    out.push_back({{"x", x}});
                return out;
            };
            s.evaluate = [family, corrected](Oracle &o, SeqIndex n, const ParamMap &p) -> Chain
            {
                const Q &x = p.at("x");
                const auto M = lookup(o, family);
                Q denom = x.pow(n) * weighted_sum_delta(x);
                if (!corrected)
                    denom = -denom;
                return {detail::weighted_direct(M, x, n), detail::weighted_numerator(M, x, n) * denom.inverse()};
            };
            return s;
        }

        IdentitySpec strided_sum_spec(MatFamily family)
        {
            const std::string tag(to_string(family));
            IdentitySpec s;
            s.id = "thm2.5-" + tag;
            s.statement = "sum_{k=0}^{n} M_" + tag + "(mk+r) = closed form / sigma(m)";
            s.params = {integer_param("m", 1), integer_param("r", 1)};
            s.min_index = 0;
            s.constraint = [](const ParamMap &p) -> std::optional<std::string>
            {
                if (p.at("r") < p.at("m"))
                    return "r >= m violated (m=" + p.at("m").to_string() + ", r=" + p.at("r").to_string() + ")";
                return std::nullopt;
            };
            s.degenerate = [](const ParamMap &p) -> std::optional<std::string>
            {
                if (strided_sum_constants(int_param(p, "m")).sigma.is_zero())
                    return std::string("sigma(m)=0");
                return std::nullopt;
            };
            s.default_sweep = []
            {
                std::vector<ParamMap> out;
                for (SeqIndex m = 1; m <= 6; ++m)
                    for (SeqIndex r = m; r <= m + 5; ++r)
                        out.push_back({{"m", q(m)}, {"r", q(r)}});
                return out;
            };
            s.evaluate = [family](Oracle &o, SeqIndex n, const ParamMap &p) -> Chain
            {
                const SeqIndex m = int_param(p, "m");
                const SeqIndex r = int_param(p, "r");
                const auto M = lookup(o, family);
                const StridedSumConstants c = strided_sum_constants(m);
                return {detail::strided_direct(M, m, r, n), detail::strided_closed(M, m, r, n, c.sigma, c.mu)};
            };
            return s;
        }

        IdentitySpec scalar(std::string id, std::string statement,
                            std::function<Chain(Oracle &, SeqIndex)> f)
        {
            IdentitySpec s;
            s.id = std::move(id);
            s.statement = std::move(statement);
            s.evaluate = [f = std::move(f)](Oracle &o, SeqIndex n, const ParamMap &)
            { return f(o, n); };
            return s;
        }

        IdentitySpec with_m(std::string id, std::string statement, ParamDecl m, SeqIndex lo, SeqIndex hi,
                            std::function<Chain(Oracle &, SeqIndex, SeqIndex)> f)
        {
            IdentitySpec s;
            s.id = std::move(id);
            s.statement = std::move(statement);
            s.params = {std::move(m)};
            s.default_sweep = integer_sweep("m", lo, hi);
            s.evaluate = [f = std::move(f)](Oracle &o, SeqIndex n, const ParamMap &p)
            { return f(o, n, int_param(p, "m")); };
            return s;
        }

        std::vector<IdentitySpec> build()
        {
            std::vector<IdentitySpec> c;

            // ---- scalar identities
            c.push_back(scalar("eq04", "3J_n + j_n = 2^{n+1}", [](Oracle &o, SeqIndex n) -> Chain
                               { return {3 * o.J(n) + o.j(n), Q::pow2(n + 1)}; }));
            c.push_back(scalar("eq05", "j_n - 3J_n = 2 j_{n-3}", [](Oracle &o, SeqIndex n) -> Chain
                               { return {o.j(n) - 3 * o.J(n), 2 * o.j(n - 3)}; }));
            c.push_back(scalar("eq06", "J_{n+2} - 4J_n = -2 if n=1 (mod 3), else 1", [](Oracle &o, SeqIndex n) -> Chain
                               { return {o.J(n + 2) - 4 * o.J(n), mod3(n) == 1 ? q(-2) : q(1)}; }));
            c.push_back(scalar("eq07", "j_n - 4J_n = 2, -3, 1 for n = 0, 1, 2 (mod 3)", [](Oracle &o, SeqIndex n) -> Chain
                               {
                                   static const long cases[3] = {2, -3, 1};
                                   return {o.j(n) - 4 * o.J(n), q(cases[mod3(n)]), v3(n)}; }));
            c.push_back(scalar("eq08", "j_{n+1} + j_n = 3J_{n+2}", [](Oracle &o, SeqIndex n) -> Chain
                               { return {o.j(n + 1) + o.j(n), 3 * o.J(n + 2)}; }));
            c.push_back(scalar("eq09", "j_n - J_{n+2} = 1, -1, 0 for n = 0, 1, 2 (mod 3)", [](Oracle &o, SeqIndex n) -> Chain
                               {
                                   static const long cases[3] = {1, -1, 0};
                                   return {o.j(n) - o.J(n + 2), q(cases[mod3(n)])}; }));
            c.push_back(scalar("eq10", "j_{n-3}^2 + 3 J_n j_n = 4^n", [](Oracle &o, SeqIndex n) -> Chain
                               { return {o.j(n - 3) * o.j(n - 3) + 3 * o.J(n) * o.j(n), q(4).pow(n)}; }));
            c.push_back(scalar("eq11", "sum_{k=0}^{n} J_k = J_{n+1} - [n=0 (mod 3)]", [](Oracle &o, SeqIndex n) -> Chain
                               {
                                   Chain chain{direct_partial_sum(o, n), mod3(n) == 0 ? o.J(n + 1) - 1 : o.J(n + 1)};
                                   if (n >= 0)
                                       chain.push_back(partial_sum_J3(n));
                                   return chain; }));
            c.push_back(scalar("eq12", "j_n^2 - 9 J_n^2 = 2^{n+2} j_{n-3}", [](Oracle &o, SeqIndex n) -> Chain
                               { return {o.j(n) * o.j(n) - 9 * o.J(n) * o.J(n), Q::pow2(n + 2) * o.j(n - 3)}; }));
            c.push_back(scalar("eq13", "J_n = (2^{n+1} - V_n)/7 = Binet over Q(w)", [](Oracle &o, SeqIndex n) -> Chain
                               { return {o.J(n), term_binet(SeqId::Jacobsthal3, n),
                                         term_binet_cyclotomic(SeqId::Jacobsthal3, n)}; }));
            c.push_back(scalar("eq14", "j_n = (2^{n+3} + 3V_n)/7 = Binet over Q(w)", [](Oracle &o, SeqIndex n) -> Chain
                               { return {o.j(n), term_binet(SeqId::JacobsthalLucas3, n),
                                         term_binet_cyclotomic(SeqId::JacobsthalLucas3, n)}; }));

            // ---- matrix closed forms
            for (MatFamily f : {MatFamily::Jacobsthal, MatFamily::JacobsthalLucas})
            {
                const bool jac = f == MatFamily::Jacobsthal;
                const std::string tag(to_string(f));
                c.push_back(scalar(jac ? "eq17" : "eq18", "M_" + tag + "(n) = c1 2^n + c2 w^n + c3 conj(w)^n",
                                   [f](Oracle &o, SeqIndex n) -> Chain
                                   { return {o.M(f, n), matrix_term(f, n, MatMethod::Binet)}; }));
                c.push_back(scalar(jac ? "eq19" : "eq20", "M_" + tag + "(n) = explicit entry pattern",
                                   [f](Oracle &o, SeqIndex n) -> Chain
                                   { return {o.M(f, n), matrix_term(f, n, MatMethod::Explicit)}; }));
                c.push_back(weighted_sum_spec(f, false));
                c.push_back(weighted_sum_spec(f, true));
                c.push_back(strided_sum_spec(f));
            }

            // ---- products
            c.push_back(with_m("eq26", "M_J(n) M_J(m) = M_J(m) M_J(n) = M_J(n+m)", integer_param("m"), -8, 32,
                               [](Oracle &o, SeqIndex n, SeqIndex m) -> Chain
                               { return {o.MJ(n) * o.MJ(m), o.MJ(m) * o.MJ(n), o.MJ(n + m),
                                         matrix_term(MatFamily::Jacobsthal, n + m, MatMethod::Power)}; }));
            c.push_back(with_m("eq27", "M_j(n) M_j(m) = M_j(m) M_j(n)", integer_param("m"), -8, 32,
                               [](Oracle &o, SeqIndex n, SeqIndex m) -> Chain
                               { return {o.Mj(n) * o.Mj(m), o.Mj(m) * o.Mj(n)}; }));
            c.push_back(scalar("eq28", "M_j(1) M_J(n) = M_J(n) M_j(1) = M_j(n+1)", [](Oracle &o, SeqIndex n) -> Chain
                               { return {o.Mj(1) * o.MJ(n), o.MJ(n) * o.Mj(1), o.Mj(n + 1),
                                         matrix_term(MatFamily::JacobsthalLucas, n + 1, MatMethod::Power)}; }));
            c.push_back(scalar("eq29", "M_j(n) M_J(1) = M_J(1) M_j(n) = M_j(n+1)", [](Oracle &o, SeqIndex n) -> Chain
                               { return {o.Mj(n) * o.MJ(1), o.MJ(1) * o.Mj(n), o.Mj(n + 1)}; }));
            c.push_back(scalar("eq30", "M_J(n) M_j(n+1) = M_j(2n+1)", [](Oracle &o, SeqIndex n) -> Chain
                               { return {o.MJ(n) * o.Mj(n + 1), o.Mj(2 * n + 1)}; }));
            c.push_back(scalar("eq31", "M_j(n) = M_J(n) + 4M_J(n-1) + 4M_J(n-2)", [](Oracle &o, SeqIndex n) -> Chain
                               { return {o.Mj(n), o.MJ(n) + 4 * o.MJ(n - 1) + 4 * o.MJ(n - 2)}; }));
            c.push_back(scalar("eq32", "M_j(n) = 2M_J(n+1) - M_J(n) + 2M_J(n-1)", [](Oracle &o, SeqIndex n) -> Chain
                               { return {o.Mj(n), 2 * o.MJ(n + 1) - o.MJ(n) + 2 * o.MJ(n - 1)}; }));
            c.push_back(scalar("eq33", "M_j(1) M_J(n) = M_J(n+2) + 3M_J(n) + 2M_J(n-1)", [](Oracle &o, SeqIndex n) -> Chain
                               { return {o.Mj(1) * o.MJ(n), o.MJ(n + 2) + 3 * o.MJ(n) + 2 * o.MJ(n - 1)}; }));
            c.push_back(with_m("eq36", "M_J(m) M_j(n+1) = M_j(n+1) M_J(m) = M_j(m+n+1)", integer_param("m"), -8, 32,
                               [](Oracle &o, SeqIndex n, SeqIndex m) -> Chain
                               { return {o.MJ(m) * o.Mj(n + 1), o.Mj(n + 1) * o.MJ(m), o.Mj(m + n + 1)}; }));
            c.push_back(with_m("eq37", "M_j(n+1)^m = M_j(1)^m M_J(mn)", integer_param("m", 0), 0, 8,
                               [](Oracle &o, SeqIndex n, SeqIndex m) -> Chain
                               { return {repeated_product(o.Mj(n + 1), m), repeated_product(o.Mj(1), m) * o.MJ(m * n)}; }));
            c.push_back(scalar("eq38", "M_j(n+1)^2 = M_j(1)^2 M_J(2n) = M_j(1) M_j(2n+1)", [](Oracle &o, SeqIndex n) -> Chain
                               {
                                   const Mat3 a = o.Mj(n + 1);
                                   const Mat3 l = o.Mj(1);
                                   return {a * a, l * l * o.MJ(2 * n), l * o.Mj(2 * n + 1)}; }));
            c.push_back(scalar("eq39", "M_j(n+1)^3 = M_j(1)^3 M_J(3n) = M_j(1)^2 M_j(3n+1)", [](Oracle &o, SeqIndex n) -> Chain
                               {
                                   const Mat3 a = o.Mj(n + 1);
                                   const Mat3 l = o.Mj(1);
                                   return {a * a * a, l * l * l * o.MJ(3 * n), l * l * o.Mj(3 * n + 1)}; }));

            // ---- (1,1) entry of M_j(n)^2
            {
                IdentitySpec printed = scalar(
                    "cor3.5",
                    "j_{n+1}^2 + j_n^2 + 4 j_n j_{n-1} = 34J_{2n+1} + 43J_{2n} + 34J_{2n-1} = 5j_{2n+2} + 5j_{2n+1} + 2j_{2n}",
                    [](Oracle &o, SeqIndex n) -> Chain
                    {
                        return {o.j(n + 1) * o.j(n + 1) + o.j(n) * o.j(n) + 4 * o.j(n) * o.j(n - 1),
                                34 * o.J(2 * n + 1) + 43 * o.J(2 * n) + 34 * o.J(2 * n - 1),
                                5 * o.j(2 * n + 2) + 5 * o.j(2 * n + 1) + 2 * o.j(2 * n)};
                    });
                printed.expected = Expectation::FailsAsPrinted;
                c.push_back(std::move(printed));
                c.push_back(scalar(
                    "cor3.5-corrected",
                    "j_{n+1}^2 + j_n^2 + 4 j_n j_{n-1} = 34J_{2n-1} + 43J_{2n-2} + 34J_{2n-3} = 5j_{2n} + 5j_{2n-1} + 2j_{2n-2}",
                    [](Oracle &o, SeqIndex n) -> Chain
                    {
                        const Mat3 a = o.Mj(n);
                        return {o.j(n + 1) * o.j(n + 1) + o.j(n) * o.j(n) + 4 * o.j(n) * o.j(n - 1),
                                34 * o.J(2 * n - 1) + 43 * o.J(2 * n - 2) + 34 * o.J(2 * n - 3),
                                5 * o.j(2 * n) + 5 * o.j(2 * n - 1) + 2 * o.j(2 * n - 2),
                                (a * a)(0, 0)};
                    }));
            }

            std::sort(c.begin(), c.end(), [](const IdentitySpec &a, const IdentitySpec &b)
                      { return a.id < b.id; });
            return c;
        }
    } // namespace

    const std::vector<IdentitySpec> &identity_catalog()
    {
        static const std::vector<IdentitySpec> catalog = build();
        return catalog;
    }

} // namespace jacobsthal
