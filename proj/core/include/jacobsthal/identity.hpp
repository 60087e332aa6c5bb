#pragma once

// Executable catalog of the third-order Jacobsthal identities. Every entry
// evaluates a chain of expressions at an index n (and optional parameters);
// the identity holds at n iff every element of the chain equals the first.
// Evaluations draw sequence terms from an Oracle, which builds them only by
// direct recurrence, so closed forms are always checked against brute force.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "jacobsthal/exact.hpp"
#include "jacobsthal/matrix_seq.hpp"
#include "jacobsthal/scalar_seq.hpp"

namespace jacobsthal
{

    using Value = std::variant<BigRational, Mat3>;
    using ParamMap = std::map<std::string, BigRational>;

    std::string to_string(const Value &v);
    std::string to_string(const ParamMap &params);

    enum class Expectation
    {
        Holds,
        FailsAsPrinted,
    };

    enum class Status
    {
        Pass,
        Fail,
    };

    std::string_view to_string(Expectation e);
    std::string_view to_string(Status s);

    /// Inclusive index range; lo > hi means empty.
    struct IndexRange
    {
        SeqIndex lo = 0;
        SeqIndex hi = -1;

        bool empty() const { return lo > hi; }
        friend bool operator==(const IndexRange &, const IndexRange &) = default;
    };

    /// Terms computed by the defining recurrences only, cached over a growing window.
    /// Returns copies, since a lookup may regrow the cache. Not thread-safe; use one per worker.
    class Oracle
    {
    public:
        BigRational J(SeqIndex n) { return jacobsthal_.at(n); }
        BigRational j(SeqIndex n) { return lucas_.at(n); }
        Mat3 MJ(SeqIndex n) { return mat_jacobsthal_.at(n); }
        Mat3 Mj(SeqIndex n) { return mat_lucas_.at(n); }
        Mat3 M(MatFamily family, SeqIndex n)
        {
            return family == MatFamily::Jacobsthal ? MJ(n) : Mj(n);
        }

    private:
        template <class T>
        class Table
        {
        public:
            using Fill = std::function<std::vector<T>(SeqIndex, SeqIndex)>;
            explicit Table(Fill fill) : fill_(std::move(fill)) {}
            const T &at(SeqIndex n);

        private:
            Fill fill_;
            SeqIndex lo_ = 0;
            std::vector<T> values_;
        };

        Table<BigRational> jacobsthal_{[](SeqIndex lo, SeqIndex hi)
                                       { return term_range(SeqId::Jacobsthal3, lo, hi); }};
        Table<BigRational> lucas_{[](SeqIndex lo, SeqIndex hi)
                                  { return term_range(SeqId::JacobsthalLucas3, lo, hi); }};
        Table<Mat3> mat_jacobsthal_{[](SeqIndex lo, SeqIndex hi)
                                    { return matrix_range(MatFamily::Jacobsthal, lo, hi); }};
        Table<Mat3> mat_lucas_{[](SeqIndex lo, SeqIndex hi)
                               { return matrix_range(MatFamily::JacobsthalLucas, lo, hi); }};
    };

    struct ParamDecl
    {
        std::string name;
        bool integral = true;
        std::optional<SeqIndex> min;
        std::vector<BigRational> forbidden; ///< e.g. roots of a denominator
        std::string doc;
    };

    struct IdentitySpec
    {
        std::string id;
        std::string statement;
        Expectation expected = Expectation::Holds;
        std::vector<ParamDecl> params;
        std::optional<SeqIndex> min_index; ///< indices below are outside the identity's domain

        /// Cross-parameter constraint; returns the violated constraint, if any.
        std::function<std::optional<std::string>(const ParamMap &)> constraint;
        /// Parameter sets where the closed form divides by zero; returns the reason.
        std::function<std::optional<std::string>(const ParamMap &)> degenerate;
        /// Parameter sets run when the caller does not pin them.
        std::function<std::vector<ParamMap>()> default_sweep;
        /// The chain of equal expressions at index n.
        std::function<std::vector<Value>(Oracle &, SeqIndex, const ParamMap &)> evaluate;
    };

    struct Counterexample
    {
        SeqIndex n = 0;
        ParamMap params;
        std::size_t part = 1; ///< which chain element disagreed with element 0
        Value lhs;
        Value rhs;
        std::optional<std::pair<int, int>> entry; ///< first differing matrix entry, 1-based
    };

    struct IdentityReport
    {
        std::string id;
        IndexRange range; ///< after clipping to the identity's index domain
        ParamMap params;
        Status status = Status::Pass;
        Expectation expected = Expectation::Holds;
        std::size_t checked = 0;  ///< indices evaluated
        std::size_t failures = 0; ///< indices that failed (counterexamples may be truncated)
        std::vector<Counterexample> counterexamples;
        std::optional<std::string> degenerate;

        /// HOLDS specs must pass. FAILS_AS_PRINTED specs must fail wherever anything was checked.
        bool matches_expected() const;
    };

    struct VerifyOptions
    {
        std::size_t max_counterexamples = 8;
        /// Worker threads for verify_all; 0 picks hardware concurrency.
        std::size_t threads = 0;
    };

    /// Catalog sorted by id.
    const std::vector<IdentitySpec> &identity_catalog();

    /// Throws UnknownIdentity.
    const IdentitySpec &find_identity(const std::string &id);

    /// Throws BadParams naming the violated constraint; every declared parameter must be present.
    void validate_params(const IdentitySpec &spec, const ParamMap &params);

    /// Checks one identity with fully specified parameters.
    IdentityReport verify(const std::string &id, IndexRange range, const ParamMap &params = {},
                          const VerifyOptions &options = {});

    /// Checks one identity over its default parameter sweep. Entries in `pinned`
    /// replace the sweep for that parameter; pinning an undeclared parameter throws BadParams.
    std::vector<IdentityReport> verify_sweep(const std::string &id, IndexRange range, const ParamMap &pinned = {},
                                             const VerifyOptions &options = {});

    /// Every cataloged identity over its default sweep. `pinned` applies only to
    /// identities that declare the parameter. Output order: id, then params.
    std::vector<IdentityReport> verify_all(IndexRange range, const ParamMap &pinned = {},
                                           const VerifyOptions &options = {});

    /// True iff every report matches its expectation.
    bool all_as_expected(const std::vector<IdentityReport> &reports);

    // ---- Sums over the matrix sequences ------------------------------------

    /// delta(x) = 2 + x + x^2 - x^3, the negated characteristic polynomial.
    BigRational weighted_sum_delta(const BigRational &x);

    struct WeightedSum
    {
        Mat3 direct;    ///< sum_{k=0}^{n} M_k / x^k
        Mat3 corrected; ///< closed form over x^n delta(x)
        Mat3 printed;   ///< same numerator over x^n nu(x), nu = -delta
    };

    /// Throws BadParams for x in {0, 2}, BadRange for n < 0.
    WeightedSum weighted_sum(MatFamily family, const BigRational &x, SeqIndex n);

    /// W(m) = w^m + conj(w)^m, sigma(m) = 2^{m+1} + (1 - 2^m) W - 2, mu(m) = 2^m + W.
    struct StridedSumConstants
    {
        BigRational w;
        BigRational sigma;
        BigRational mu;
    };

    StridedSumConstants strided_sum_constants(SeqIndex m);

    struct StridedSum
    {
        StridedSumConstants constants;
        Mat3 direct;               ///< sum_{k=0}^{n} M_{mk+r}
        std::optional<Mat3> closed; ///< empty when sigma(m) = 0
    };

    /// Throws BadParams unless m >= 1 and r >= m; BadRange for n < 0.
    StridedSum strided_sum(MatFamily family, SeqIndex m, SeqIndex r, SeqIndex n);

    /// Printed and corrected weighted-sum identities for one family and x.
    std::pair<IdentityReport, IdentityReport> verify_weighted_sum(MatFamily family, const BigRational &x,
                                                                  IndexRange range);

    IdentityReport verify_strided_sum(MatFamily family, SeqIndex m, SeqIndex r, IndexRange range);

    /// Printed and index-corrected forms of the squared Lucas (1,1)-entry identity.
    std::pair<IdentityReport, IdentityReport> verify_lucas_square_entry(IndexRange range);

} // namespace jacobsthal
