#include "jacobsthal/identity.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <thread>

#include "sums.hpp"

namespace jacobsthal
{

    // ---------------------------------------------------------------- formatting

    std::string to_string(const Value &v)
    {
        return std::visit([](const auto &x)
                          { return x.to_string(); },
                          v);
    }

    std::string to_string(const ParamMap &params)
    {
        std::string s;
        for (const auto &[name, value] : params)
        {
            if (!s.empty())
                s += ',';
            s += name + '=' + value.to_string();
        }
        return s;
    }

    std::string_view to_string(Expectation e)
    {
        return e == Expectation::Holds ? "HOLDS" : "FAILS_AS_PRINTED";
    }

    std::string_view to_string(Status s)
    {
        return s == Status::Pass ? "PASS" : "FAIL";
    }

    bool IdentityReport::matches_expected() const
    {
        if (expected == Expectation::Holds)
            return status == Status::Pass;
        return status == Status::Fail || checked == 0;
    }

    bool all_as_expected(const std::vector<IdentityReport> &reports)
    {
        return std::all_of(reports.begin(), reports.end(), [](const IdentityReport &r)
                           { return r.matches_expected(); });
    }

    // ---------------------------------------------------------------- oracle

    template <class T>
    const T &Oracle::Table<T>::at(SeqIndex n)
    {
        const auto size = static_cast<SeqIndex>(values_.size());
        const SeqIndex hi_now = lo_ + size - 1;
        if (values_.empty() || n < lo_ || n > hi_now)
        {
            // grow geometrically toward the requested index
            const SeqIndex span = std::max<SeqIndex>(16, size);
            SeqIndex lo = n - span;
            SeqIndex hi = n + span;
            if (!values_.empty())
            {
                lo = n < lo_ ? lo : lo_;
                hi = n > hi_now ? hi : hi_now;
            }
            values_ = fill_(lo, hi);
            lo_ = lo;
        }
        return values_[static_cast<std::size_t>(n - lo_)];
    }

    template class Oracle::Table<BigRational>;
    template class Oracle::Table<Mat3>;

    // ---------------------------------------------------------------- validation

    const IdentitySpec &find_identity(const std::string &id)
    {
        const auto &catalog = identity_catalog();
        const auto it = std::find_if(catalog.begin(), catalog.end(), [&](const IdentitySpec &s)
                                     { return s.id == id; });
        if (it == catalog.end())
            throw UnknownIdentity(id);
        return *it;
    }

    namespace
    {
        const ParamDecl *find_decl(const IdentitySpec &spec, const std::string &name)
        {
            for (const auto &d : spec.params)
                if (d.name == name)
                    return &d;
            return nullptr;
        }

        void check_declared(const IdentitySpec &spec, const ParamMap &params)
        {
            for (const auto &[name, value] : params)
                if (!find_decl(spec, name))
                    throw BadParams(spec.id + " has no parameter '" + name + "'");
        }

        void validate_value(const IdentitySpec &spec, const ParamDecl &decl, const BigRational &value)
        {
            const std::string where = spec.id + ": " + decl.name + "=" + value.to_string();
            if (decl.integral && !value.is_integer())
                throw BadParams(where + " must be an integer");
            if (decl.min && value < BigRational(static_cast<long>(*decl.min)))
                throw BadParams(where + " violates " + decl.name + " >= " + std::to_string(*decl.min));
            for (const auto &bad : decl.forbidden)
                if (value == bad)
                    throw BadParams(where + " is excluded" + (decl.doc.empty() ? "" : ": " + decl.doc));
        }

        std::optional<std::pair<int, int>> first_difference(const Value &a, const Value &b)
        {
            const auto *ma = std::get_if<Mat3>(&a);
            const auto *mb = std::get_if<Mat3>(&b);
            if (!ma || !mb)
                return std::nullopt;
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t c = 0; c < 3; ++c)
                    if ((*ma)(r, c) != (*mb)(r, c))
                        return std::pair<int, int>(static_cast<int>(r) + 1, static_cast<int>(c) + 1);
            return std::nullopt;
        }

        IndexRange clip(const IdentitySpec &spec, IndexRange range)
        {
            if (spec.min_index && range.lo < *spec.min_index)
                range.lo = *spec.min_index;
            return range;
        }

        // params must already be validated
        IdentityReport run(const IdentitySpec &spec, Oracle &oracle, IndexRange range, const ParamMap &params,
                           const VerifyOptions &options)
        {
            IdentityReport report;
            report.id = spec.id;
            report.expected = spec.expected;
            report.params = params;
            report.range = clip(spec, range);
            if (spec.degenerate)
                report.degenerate = spec.degenerate(params);
            if (report.degenerate || report.range.empty())
                return report;

            for (SeqIndex n = report.range.lo; n <= report.range.hi; ++n)
            {
                const std::vector<Value> chain = spec.evaluate(oracle, n, params);
                ++report.checked;
                for (std::size_t part = 1; part < chain.size(); ++part)
                {
                    if (chain[part] == chain[0])
                        continue;
                    ++report.failures;
                    if (report.counterexamples.size() < options.max_counterexamples)
                        report.counterexamples.push_back(
                            {n, params, part, chain[0], chain[part], first_difference(chain[0], chain[part])});
                    break;
                }
            }
            report.status = report.failures == 0 ? Status::Pass : Status::Fail;
            return report;
        }

        std::vector<ParamMap> expand_sweep(const IdentitySpec &spec, const ParamMap &pinned)
        {
            for (const auto &[name, value] : pinned)
                validate_value(spec, *find_decl(spec, name), value);

            std::vector<ParamMap> base = spec.default_sweep ? spec.default_sweep() : std::vector<ParamMap>{{}};
            std::set<ParamMap> combos;
            std::optional<std::string> last_violation;
            for (ParamMap p : base)
            {
                for (const auto &[name, value] : pinned)
                    p[name] = value;
                if (spec.constraint)
                    if (auto v = spec.constraint(p))
                    {
                        last_violation = v;
                        continue;
                    }
                combos.insert(std::move(p));
            }
            if (combos.empty())
                throw BadParams(spec.id + ": no admissible parameters" +
                                (last_violation ? " (" + *last_violation + ")" : std::string()));
            return {combos.begin(), combos.end()};
        }

        std::vector<IdentityReport> run_sweep(const IdentitySpec &spec, IndexRange range, const ParamMap &pinned,
                                              const VerifyOptions &options)
        {
            Oracle oracle;
            std::vector<IdentityReport> out;
            for (const ParamMap &p : expand_sweep(spec, pinned))
                out.push_back(run(spec, oracle, range, p, options));
            return out;
        }
    } // namespace

    void validate_params(const IdentitySpec &spec, const ParamMap &params)
    {
        check_declared(spec, params);
        for (const auto &decl : spec.params)
        {
            const auto it = params.find(decl.name);
            if (it == params.end())
                throw BadParams(spec.id + ": missing parameter " + decl.name);
            validate_value(spec, decl, it->second);
        }
        if (spec.constraint)
            if (auto violation = spec.constraint(params))
                throw BadParams(spec.id + ": " + *violation);
    }

    // ---------------------------------------------------------------- verify

    IdentityReport verify(const std::string &id, IndexRange range, const ParamMap &params,
                          const VerifyOptions &options)
    {
        const IdentitySpec &spec = find_identity(id);
        validate_params(spec, params);
        Oracle oracle;
        return run(spec, oracle, range, params, options);
    }

    std::vector<IdentityReport> verify_sweep(const std::string &id, IndexRange range, const ParamMap &pinned,
                                             const VerifyOptions &options)
    {
        const IdentitySpec &spec = find_identity(id);
        check_declared(spec, pinned);
        return run_sweep(spec, range, pinned, options);
    }

    std::vector<IdentityReport> verify_all(IndexRange range, const ParamMap &pinned, const VerifyOptions &options)
    {
        const auto &catalog = identity_catalog();
        std::vector<std::vector<IdentityReport>> results(catalog.size());
        std::vector<std::exception_ptr> errors(catalog.size());

        std::size_t workers = options.threads ? options.threads : std::thread::hardware_concurrency();
        workers = std::clamp<std::size_t>(workers, 1, catalog.size());

        std::atomic<std::size_t> next{0};
        auto work = [&]
        {
            for (std::size_t i = next++; i < catalog.size(); i = next++)
            {
                try
                {
                    const IdentitySpec &spec = catalog[i];
                    ParamMap mine;
                    for (const auto &[name, value] : pinned)
                        if (find_decl(spec, name))
                            mine[name] = value;
                    results[i] = run_sweep(spec, range, mine, options);
                }
                catch (...)
                {
                    errors[i] = std::current_exception();
                }
            }
        };

        {
            std::vector<std::jthread> pool;
            for (std::size_t t = 1; t < workers; ++t)
                pool.emplace_back(work);
            work();
        }

        std::vector<IdentityReport> out;
        for (std::size_t i = 0; i < catalog.size(); ++i)
        {
            if (errors[i])
                std::rethrow_exception(errors[i]);
            for (auto &r : results[i])
                out.push_back(std::move(r));
        }
        return out;
    }

    // ---------------------------------------------------------------- sums

    BigRational weighted_sum_delta(const BigRational &x)
    {
        return 2 + x + x * x - x * x * x;
    }

    WeightedSum weighted_sum(MatFamily family, const BigRational &x, SeqIndex n)
    {
        if (x.is_zero() || x == 2)
            throw BadParams("x=" + x.to_string() + " is excluded: x must be nonzero and not a root of x^3-x^2-x-2");
        if (n < 0)
            throw BadRange("weighted sum requires n >= 0, got " + std::to_string(n));
        const detail::TermLookup M = [family](SeqIndex k)
        { return matrix_term(family, k); };
        const Mat3 numerator = detail::weighted_numerator(M, x, n);
        const BigRational denom = x.pow(n) * weighted_sum_delta(x);
        return {detail::weighted_direct(M, x, n), numerator * denom.inverse(), numerator * (-denom).inverse()};
    }

    StridedSumConstants strided_sum_constants(SeqIndex m)
    {
        const CycloRational w = CycloRational::omega_pow(m) + CycloRational::omega_pow(-m);
        if (!w.is_rational())
            throw NonRationalResult("w^m + conj(w)^m");
        const BigRational two_m = BigRational::pow2(m);
        StridedSumConstants c;
        c.w = w.a();
        c.sigma = 2 * two_m + (1 - two_m) * c.w - 2;
        c.mu = two_m + c.w;
        return c;
    }

    StridedSum strided_sum(MatFamily family, SeqIndex m, SeqIndex r, SeqIndex n)
    {
        if (m < 1)
            throw BadParams("m=" + std::to_string(m) + " violates m >= 1");
        if (r < m)
            throw BadParams("r=" + std::to_string(r) + " violates r >= m");
        if (n < 0)
            throw BadRange("strided sum requires n >= 0, got " + std::to_string(n));
        const detail::TermLookup M = [family](SeqIndex k)
        { return matrix_term(family, k); };
        StridedSum out;
        out.constants = strided_sum_constants(m);
        out.direct = detail::strided_direct(M, m, r, n);
        if (!out.constants.sigma.is_zero())
            out.closed = detail::strided_closed(M, m, r, n, out.constants.sigma, out.constants.mu);
        return out;
    }

    std::pair<IdentityReport, IdentityReport> verify_weighted_sum(MatFamily family, const BigRational &x,
                                                                  IndexRange range)
    {
        const std::string id = std::string("thm2.4-") + std::string(to_string(family));
        const ParamMap params{{"x", x}};
        return {verify(id, range, params), verify(id + "-corrected", range, params)};
    }

    IdentityReport verify_strided_sum(MatFamily family, SeqIndex m, SeqIndex r, IndexRange range)
    {
        const std::string id = std::string("thm2.5-") + std::string(to_string(family));
        return verify(id, range, {{"m", BigRational(static_cast<long>(m))}, {"r", BigRational(static_cast<long>(r))}});
    }

    std::pair<IdentityReport, IdentityReport> verify_lucas_square_entry(IndexRange range)
    {
        return {verify("cor3.5", range), verify("cor3.5-corrected", range)};
    }

} // namespace jacobsthal
