#include <bit>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"

#include "bfile.hpp"
#include "cli.hpp"
#include "render.hpp"

#include "jacobsthal/identity.hpp"
#include "jacobsthal/matrix_seq.hpp"
#include "jacobsthal/scalar_seq.hpp"

namespace jacobsthal::cli
{

    namespace
    {
        using Clock = std::chrono::steady_clock;

        struct TermArgs
        {
            std::string seq;
            SeqIndex n = 0;
            std::string method = "recurrence";
        };

        struct MatrixArgs
        {
            std::string family;
            SeqIndex n = 0;
            std::string method;
        };

        struct VerifyArgs
        {
            std::vector<std::string> ids;
            bool all = false;
            SeqIndex lo = 0;
            SeqIndex hi = 50;
            std::string x, m, r;
            std::size_t threads = 0;
            std::size_t max_counterexamples = 8;
        };

        struct SumArgs
        {
            std::string kind;
            std::string family = "J";
            std::string x;
            SeqIndex m = 1;
            SeqIndex r = 1;
            SeqIndex n = 0;
        };

        struct BenchArgs
        {
            SeqIndex n = 0;
            int reps = 3;
            SeqIndex max_linear = 100000;
        };

        struct CrosscheckArgs
        {
            std::string file;
            std::string seq;
            SeqIndex offset = 0;
        };

        SeqId require_seq(const std::string &tag)
        {
            if (auto s = parse_seq_id(tag))
                return *s;
            throw DomainError("unknown sequence '" + tag + "' (expected J, j, J3, j3 or V3)");
        }

        MatFamily require_family(const std::string &tag)
        {
            if (auto f = parse_mat_family(tag))
                return *f;
            throw DomainError("unknown family '" + tag + "' (expected J or j)");
        }

        int cmd_term(const TermArgs &a, Format format, std::ostream &out)
        {
            const SeqId seq = require_seq(a.seq);
            BigRational value;
            if (a.method == "recurrence")
                value = term_recurrence(seq, a.n);
            else if (a.method == "binet")
                value = term_binet(seq, a.n);
            else
                value = term_binet_cyclotomic(seq, a.n);

            switch (format)
            {
            case Format::Text:
                out << value << '\n';
                break;
            case Format::Json:
                write_json(out, Json{{"seq", a.seq}, {"n", a.n}, {"method", a.method}, {"value", to_json(value)}});
                break;
            case Format::Csv:
                out << "seq,n,value\n"
                    << a.seq << ',' << a.n << ',' << value << '\n';
                break;
            }
            return kSuccess;
        }

        int cmd_matrix(const MatrixArgs &a, Format format, std::ostream &out)
        {
            const MatFamily family = require_family(a.family);
            MatMethod method = default_method(a.n);
            if (!a.method.empty())
                method = *parse_mat_method(a.method);
            const Mat3 m = matrix_term(family, a.n, method);

            switch (format)
            {
            case Format::Text:
                out << m << '\n';
                break;
            case Format::Json:
                write_json(out, Json{{"family", a.family},
                                     {"n", a.n},
                                     {"method", std::string(to_string(method))},
                                     {"matrix", to_json(m)}});
                break;
            case Format::Csv:
                out << "c1,c2,c3\n";
                write_csv_rows(out, m);
                break;
            }
            return kSuccess;
        }

        int cmd_verify(const VerifyArgs &a, Format format, std::ostream &out)
        {
            ParamMap pinned;
            if (!a.x.empty())
                pinned["x"] = BigRational::parse(a.x);
            if (!a.m.empty())
                pinned["m"] = BigRational::parse(a.m);
            if (!a.r.empty())
                pinned["r"] = BigRational::parse(a.r);

            VerifyOptions options;
            options.threads = a.threads;
            options.max_counterexamples = a.max_counterexamples;
            const IndexRange range{a.lo, a.hi};

            std::vector<IdentityReport> reports;
            if (a.all)
                reports = verify_all(range, pinned, options);
            else
                for (const auto &id : a.ids)
                {
                    auto part = verify_sweep(id, range, pinned, options);
                    reports.insert(reports.end(), std::make_move_iterator(part.begin()),
                                   std::make_move_iterator(part.end()));
                }

            switch (format)
            {
            case Format::Text:
            {
                std::size_t unexpected = 0;
                for (const auto &r : reports)
                {
                    write_text(out, r);
                    unexpected += !r.matches_expected();
                }
                out << reports.size() << " reports, " << unexpected << " not as expected\n";
                break;
            }
            case Format::Json:
            {
                Json doc = Json::array();
                for (const auto &r : reports)
                    doc.push_back(to_json(r));
                write_json(out, doc);
                break;
            }
            case Format::Csv:
                write_csv_header(out);
                for (const auto &r : reports)
                    write_csv(out, r);
                break;
            }
            return all_as_expected(reports) ? kSuccess : kMismatch;
        }

        int cmd_sum(const SumArgs &a, Format format, std::ostream &out)
        {
            const MatFamily family = require_family(a.family);
            std::vector<std::pair<std::string, Mat3>> forms;
            Json doc{{"kind", a.kind}, {"family", a.family}};
            bool agree = false;

            if (a.kind == "t3")
            {
                if (a.x.empty())
                    throw BadParams("--x is required for --kind t3");
                const BigRational x = BigRational::parse(a.x);
                const WeightedSum s = weighted_sum(family, x, a.n);
                forms = {{"direct", s.direct}, {"corrected", s.corrected}, {"printed", s.printed}};
                agree = s.direct == s.corrected;
                doc["x"] = x.to_string();
                doc["n"] = a.n;
            }
            else
            {
                const StridedSum s = strided_sum(family, a.m, a.r, a.n);
                if (!s.closed)
                    throw BadParams("sigma(m)=0 for m=" + std::to_string(a.m) + "; closed form undefined");
                forms = {{"direct", s.direct}, {"closed", *s.closed}};
                agree = s.direct == *s.closed;
                doc["m"] = a.m;
                doc["r"] = a.r;
                doc["n"] = a.n;
                doc["sigma"] = s.constants.sigma.to_string();
                doc["mu"] = s.constants.mu.to_string();
            }

            switch (format)
            {
            case Format::Text:
                for (const auto &[name, m] : forms)
                    out << std::left << std::setw(10) << name << m << '\n';
                out << (agree ? "agree" : "DISAGREE") << '\n';
                break;
            case Format::Json:
                for (const auto &[name, m] : forms)
                    doc[name] = to_json(m);
                doc["agree"] = agree;
                write_json(out, doc);
                break;
            case Format::Csv:
                out << "form,c1,c2,c3\n";
                for (const auto &[name, m] : forms)
                    write_csv_rows(out, m, name + ",");
                break;
            }
            return agree ? kSuccess : kMismatch;
        }

        template <class F>
        double best_seconds(int reps, F &&f)
        {
            double best = 0;
            for (int i = 0; i < reps; ++i)
            {
                const auto start = Clock::now();
                f();
                const double s = std::chrono::duration<double>(Clock::now() - start).count();
                best = i == 0 ? s : std::min(best, s);
            }
            return best;
        }

        int cmd_bench(const BenchArgs &a, Format format, std::ostream &out)
        {
            if (a.n < 0)
                throw BadRange("bench needs n >= 0");
            if (a.reps < 1)
                throw BadParams("--reps must be at least 1");

            PowerResult power;
            const double power_s = best_seconds(a.reps, [&]
                                                { power = pow_counted(jacobsthal_generator(), a.n); });
            BigRational binet;
            const double binet_s = best_seconds(a.reps, [&]
                                                { binet = term_binet(SeqId::Jacobsthal3, a.n + 1); });
            std::optional<double> recurrence_s;
            BigRational linear;
            if (a.n <= a.max_linear)
                recurrence_s = best_seconds(a.reps, [&]
                                            { linear = term_recurrence(SeqId::Jacobsthal3, a.n + 1); });

            const std::size_t bound = 2 * static_cast<std::size_t>(std::bit_width(static_cast<std::uint64_t>(a.n > 0 ? a.n - 1 : 0)));
            const bool agreement = power.value(0, 0) == binet && (!recurrence_s || linear == binet);
            const bool within_bound = power.multiplications <= bound;

            switch (format)
            {
            case Format::Text:
                out << std::fixed << std::setprecision(6);
                out << "n            " << a.n << '\n'
                    << "reps         " << a.reps << '\n'
                    << "power        " << power_s << " s  multiplications " << power.multiplications
                    << " (bound " << bound << ")\n"
                    << "binet        " << binet_s << " s\n";
                if (recurrence_s)
                    out << "recurrence   " << *recurrence_s << " s\n";
                else
                    out << "recurrence   skipped (n > max-linear " << a.max_linear << ")\n";
                out << "agreement    " << (agreement ? "true" : "false") << '\n';
                break;
            case Format::Json:
                write_json(out, Json{{"n", a.n},
                                     {"reps", a.reps},
                                     {"max_linear", a.max_linear},
                                     {"power", {{"seconds", power_s}, {"multiplications", power.multiplications}, {"bound", bound}}},
                                     {"binet", {{"seconds", binet_s}}},
                                     {"recurrence", {{"seconds", recurrence_s ? Json(*recurrence_s) : Json(nullptr)}, {"skipped", !recurrence_s}}},
                                     {"agreement", agreement}});
                break;
            case Format::Csv:
                out << "method,seconds,multiplications\n"
                    << "power," << power_s << ',' << power.multiplications << '\n'
                    << "binet," << binet_s << ",\n"
                    << "recurrence," << (recurrence_s ? std::to_string(*recurrence_s) : std::string()) << ",\n";
                break;
            }
            return agreement && within_bound ? kSuccess : kMismatch;
        }

        int cmd_crosscheck(const CrosscheckArgs &a, Format format, std::ostream &out)
        {
            const SeqId seq = require_seq(a.seq);
            std::ifstream in(a.file);
            if (!in)
                throw DomainError("cannot open '" + a.file + "'");
            const std::vector<BFileRow> rows = parse_bfile(in);

            std::vector<BigRational> computed;
            computed.reserve(rows.size());
            if (!rows.empty())
            {
                const SeqIndex lo = rows.front().index + a.offset, hi = rows.back().index + a.offset;
                if (hi - lo <= 4 * static_cast<SeqIndex>(rows.size()) + 1024)
                {
                    const auto window = term_range(seq, lo, hi);
                    for (const auto &row : rows)
                        computed.push_back(window[static_cast<std::size_t>(row.index + a.offset - lo)]);
                }
                else
                    for (const auto &row : rows)
                        computed.push_back(term_recurrence(seq, row.index + a.offset));
            }

            Json mismatches = Json::array();
            std::ostringstream text, csv;
            for (std::size_t i = 0; i < rows.size(); ++i)
            {
                const BigRational file(rows[i].value);
                if (file == computed[i])
                    continue;
                const SeqIndex n = rows[i].index + a.offset;
                mismatches.push_back(Json{{"n", n}, {"index", rows[i].index}, {"file", file.to_string()}, {"computed", computed[i].to_string()}});
                text << "  n=" << n << " file=" << file << " computed=" << computed[i] << '\n';
                csv << n << ',' << file << ',' << computed[i] << '\n';
            }

            switch (format)
            {
            case Format::Text:
                out << "compared " << rows.size() << " rows against " << a.seq << " (offset " << a.offset << "): "
                    << mismatches.size() << " mismatches\n"
                    << text.str();
                break;
            case Format::Json:
                write_json(out, Json{{"file", a.file},
                                     {"seq", a.seq},
                                     {"offset", a.offset},
                                     {"compared", rows.size()},
                                     {"mismatches", mismatches}});
                break;
            case Format::Csv:
                out << "n,file,computed\n"
                    << csv.str();
                break;
            }
            return mismatches.empty() ? kSuccess : kMismatch;
        }
    } // namespace

    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Exact third-order Jacobsthal numbers, matrix sequences and identity checks", "jacobsthal"};
        app.require_subcommand(1);
        app.fallthrough();

        std::string format_tag = "text";
        app.add_option("--format", format_tag, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));

        TermArgs term;
        auto *term_cmd = app.add_subcommand("term", "One scalar term");
        term_cmd->add_option("--seq", term.seq, "J, j, J3, j3 or V3")->required();
        term_cmd->add_option("--n", term.n, "Index (may be negative)")->required();
        term_cmd->add_option("--method", term.method, "recurrence, binet or cyclotomic")
            ->check(CLI::IsMember({"recurrence", "binet", "cyclotomic"}));

        MatrixArgs matrix;
        auto *matrix_cmd = app.add_subcommand("matrix", "One matrix term");
        matrix_cmd->add_option("--family", matrix.family, "J or j")->required();
        matrix_cmd->add_option("--n", matrix.n, "Index (may be negative)")->required();
        matrix_cmd->add_option("--method", matrix.method, "recurrence, explicit, power or binet")
            ->check(CLI::IsMember({"recurrence", "explicit", "power", "binet"}));

        VerifyArgs verify;
        auto *verify_cmd = app.add_subcommand("verify", "Check cataloged identities over an index range");
        auto *ids = verify_cmd->add_option("--id", verify.ids, "Identity id (repeatable)");
        auto *all = verify_cmd->add_flag("--all", verify.all, "Every cataloged identity");
        ids->excludes(all);
        verify_cmd->add_option("--min", verify.lo, "Lowest index")->capture_default_str();
        verify_cmd->add_option("--max", verify.hi, "Highest index")->capture_default_str();
        verify_cmd->add_option("--x", verify.x, "Pin rational parameter x");
        verify_cmd->add_option("--m", verify.m, "Pin parameter m");
        verify_cmd->add_option("--r", verify.r, "Pin parameter r");
        verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = hardware)");
        verify_cmd->add_option("--max-counterexamples", verify.max_counterexamples)->capture_default_str();

        SumArgs sum;
        auto *sum_cmd = app.add_subcommand("sum", "Evaluate a weighted (t3) or strided (t4) matrix sum");
        sum_cmd->add_option("--kind", sum.kind, "t3 or t4")->required()->check(CLI::IsMember({"t3", "t4"}));
        sum_cmd->add_option("--family", sum.family, "J or j")->capture_default_str();
        sum_cmd->add_option("--x", sum.x, "Weight base (t3)");
        sum_cmd->add_option("--m", sum.m, "Stride (t4)")->capture_default_str();
        sum_cmd->add_option("--r", sum.r, "Offset (t4)")->capture_default_str();
        sum_cmd->add_option("--n", sum.n, "Upper summation index")->required();

        BenchArgs bench;
        auto *bench_cmd = app.add_subcommand("bench", "Time POWER, BINET and RECURRENCE at one index");
        bench_cmd->add_option("--n", bench.n, "Index")->required();
        bench_cmd->add_option("--reps", bench.reps, "Repetitions (best time reported)")->capture_default_str();
        bench_cmd->add_option("--max-linear", bench.max_linear, "Skip RECURRENCE above this n")->capture_default_str();

        CrosscheckArgs cross;
        auto *cross_cmd = app.add_subcommand("crosscheck", "Compare a b-file against computed terms");
        cross_cmd->add_option("--file", cross.file, "b-file path")->required();
        cross_cmd->add_option("--seq", cross.seq, "J, j, J3, j3 or V3")->required();
        cross_cmd->add_option("--offset", cross.offset, "Added to each file index")->capture_default_str();

        try
        {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
            if (verify_cmd->parsed() && verify.ids.empty() && !verify.all)
                throw CLI::RequiredError("--id or --all");
        }
        catch (const CLI::ParseError &e)
        {
            return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
        }

        const Format format = *parse_format(format_tag);
        try
        {
            if (term_cmd->parsed())
                return cmd_term(term, format, out);
            if (matrix_cmd->parsed())
                return cmd_matrix(matrix, format, out);
            if (verify_cmd->parsed())
                return cmd_verify(verify, format, out);
            if (sum_cmd->parsed())
                return cmd_sum(sum, format, out);
            if (bench_cmd->parsed())
                return cmd_bench(bench, format, out);
            return cmd_crosscheck(cross, format, out);
        }
        catch (const DomainError &e)
        {
            err << "error: " << e.what() << '\n';
            return kUsage;
        }
        catch (const std::exception &e)
        {
            err << "internal error: " << e.what() << '\n';
            return kMismatch;
        }
    }

} // namespace jacobsthal::cli
