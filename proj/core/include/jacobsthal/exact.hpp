#pragma once

// Exact arithmetic foundations: arbitrary-precision rationals, the quadratic
// cyclotomic field Q(w) with w a primitive cube root of unity, and 3x3 matrices
// over both.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "jacobsthal/errors.hpp"

namespace jacobsthal
{

    /// Signed sequence index. Values grow like 2^n, so memory runs out long before this overflows.
    using SeqIndex = std::int64_t;

    /// Nonnegative residue of n modulo 3.
    constexpr int mod3(SeqIndex n) noexcept
    {
        const auto r = static_cast<int>(n % 3);
        return r < 0 ? r + 3 : r;
    }

    // ------------------------------------------------------------------------
    // BigRational
    // ------------------------------------------------------------------------

    /**
     * Exact rational number. Always canonical: denominator positive and
     * coprime to the numerator, so equality is structural.
     */
    class BigRational
    {
    public:
        BigRational() = default;
        BigRational(long value) : q_(value) {}
        BigRational(int value) : q_(static_cast<long>(value)) {}
        explicit BigRational(const mpz_class &value) : q_(value) {}
        /// num/den; throws DivisionByZero when den == 0.
        BigRational(const mpz_class &num, const mpz_class &den);

        /// Parses "p", "p/q", "-p/q", "+p". No whitespace allowed.
        static BigRational parse(std::string_view text);

        /// Exact 2^e; dyadic fraction for e < 0.
        static BigRational pow2(SeqIndex e);

        mpz_class num() const { return q_.get_num(); }
        mpz_class den() const { return q_.get_den(); }

        bool is_zero() const { return sgn(q_) == 0; }
        bool is_integer() const { return q_.get_den() == 1; }
        int sign() const { return sgn(q_); }

        /// Multiplicative inverse; throws DivisionByZero on zero.
        BigRational inverse() const;

        /// x^e for any signed e; throws DivisionByZero for 0^e with e < 0.
        BigRational pow(SeqIndex e) const;

        /// "p/q", or "p" when q == 1.
        std::string to_string() const;

        BigRational operator-() const;
        BigRational &operator+=(const BigRational &rhs);
        BigRational &operator-=(const BigRational &rhs);
        BigRational &operator*=(const BigRational &rhs);
        BigRational &operator/=(const BigRational &rhs);

        friend BigRational operator+(BigRational lhs, const BigRational &rhs) { return lhs += rhs; }
        friend BigRational operator-(BigRational lhs, const BigRational &rhs) { return lhs -= rhs; }
        friend BigRational operator*(BigRational lhs, const BigRational &rhs) { return lhs *= rhs; }
        friend BigRational operator/(BigRational lhs, const BigRational &rhs) { return lhs /= rhs; }

        friend bool operator==(const BigRational &lhs, const BigRational &rhs) { return lhs.q_ == rhs.q_; }
        friend std::strong_ordering operator<=>(const BigRational &lhs, const BigRational &rhs)
        {
            const int c = cmp(lhs.q_, rhs.q_);
            return c < 0 ? std::strong_ordering::less
                         : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
        }

        friend std::ostream &operator<<(std::ostream &os, const BigRational &x);

    private:
        mpq_class q_;
    };

    inline BigRational inverse(const BigRational &x) { return x.inverse(); }

    // ------------------------------------------------------------------------
    // CycloRational: a + b*w, w^2 + w + 1 = 0
    // ------------------------------------------------------------------------

    class CycloRational
    {
    public:
        CycloRational() = default;
        CycloRational(BigRational a) : a_(std::move(a)) {}
        CycloRational(int a) : a_(a) {}
        CycloRational(BigRational a, BigRational b) : a_(std::move(a)), b_(std::move(b)) {}

        static CycloRational omega() { return {0, 1}; }

        /// w^n by reduction of n mod 3: {1, w, -1-w}.
        static CycloRational omega_pow(SeqIndex n);

        const BigRational &a() const { return a_; }
        const BigRational &b() const { return b_; }

        bool is_rational() const { return b_.is_zero(); }
        bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

        /// Complex conjugate; swaps w and w^2 = conj(w).
        CycloRational conj() const { return {a_ - b_, -b_}; }

        /// Field norm x * conj(x) = a^2 - ab + b^2.
        BigRational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

        CycloRational inverse() const;

        std::string to_string() const;

        CycloRational operator-() const { return {-a_, -b_}; }
        CycloRational &operator+=(const CycloRational &rhs);
        CycloRational &operator-=(const CycloRational &rhs);
        CycloRational &operator*=(const CycloRational &rhs);
        CycloRational &operator/=(const CycloRational &rhs) { return *this *= rhs.inverse(); }

        friend CycloRational operator+(CycloRational lhs, const CycloRational &rhs) { return lhs += rhs; }
        friend CycloRational operator-(CycloRational lhs, const CycloRational &rhs) { return lhs -= rhs; }
        friend CycloRational operator*(CycloRational lhs, const CycloRational &rhs) { return lhs *= rhs; }
        friend CycloRational operator/(CycloRational lhs, const CycloRational &rhs) { return lhs /= rhs; }

        friend bool operator==(const CycloRational &, const CycloRational &) = default;

        friend std::ostream &operator<<(std::ostream &os, const CycloRational &x);

    private:
        BigRational a_;
        BigRational b_;
    };

    // ------------------------------------------------------------------------
    // Mat3
    // ------------------------------------------------------------------------

    /// Row-major 3x3 matrix over BigRational.
    class Mat3
    {
    public:
        using Row = std::array<BigRational, 3>;

        Mat3() = default;
        explicit Mat3(const std::array<Row, 3> &rows);

        static Mat3 identity();
        static Mat3 zero() { return {}; }

        /// 0-based element access.
        const BigRational &operator()(std::size_t r, std::size_t c) const { return e_[3 * r + c]; }
        BigRational &operator()(std::size_t r, std::size_t c) { return e_[3 * r + c]; }

        Row row(std::size_t r) const { return {e_[3 * r], e_[3 * r + 1], e_[3 * r + 2]}; }

        bool is_integral() const;

        BigRational det() const;
        /// Adjugate over determinant; throws SingularMatrix when det == 0.
        Mat3 inverse() const;

        Mat3 &operator+=(const Mat3 &rhs);
        Mat3 &operator-=(const Mat3 &rhs);
        Mat3 &operator*=(const BigRational &c);

        friend Mat3 operator+(Mat3 lhs, const Mat3 &rhs) { return lhs += rhs; }
        friend Mat3 operator-(Mat3 lhs, const Mat3 &rhs) { return lhs -= rhs; }
        friend Mat3 operator*(Mat3 a, const BigRational &c) { return a *= c; }
        friend Mat3 operator*(const BigRational &c, Mat3 a) { return a *= c; }
        friend Mat3 operator*(const Mat3 &a, const Mat3 &b);

        friend bool operator==(const Mat3 &, const Mat3 &) = default;

        /// "[[a,b,c],[d,e,f],[g,h,i]]" with rationals as "p/q".
        std::string to_string() const;
        friend std::ostream &operator<<(std::ostream &os, const Mat3 &m);

    private:
        std::array<BigRational, 9> e_{};
    };

    struct PowerResult
    {
        Mat3 value;
        std::size_t multiplications = 0; ///< full 3x3 products performed
    };

    /// a^n by square-and-multiply; a^-n = (a^-1)^n. Throws SingularMatrix for n < 0, det(a) == 0.
    PowerResult pow_counted(const Mat3 &a, SeqIndex n);

    inline Mat3 pow(const Mat3 &a, SeqIndex n) { return pow_counted(a, n).value; }

    // ------------------------------------------------------------------------
    // CycloMat3
    // ------------------------------------------------------------------------

    class CycloMat3
    {
    public:
        CycloMat3() = default;
        explicit CycloMat3(const Mat3 &m);

        const CycloRational &operator()(std::size_t r, std::size_t c) const { return e_[3 * r + c]; }
        CycloRational &operator()(std::size_t r, std::size_t c) { return e_[3 * r + c]; }

        /// True iff every entry has zero omega component.
        bool is_rational() const;

        /// Lossless projection; throws NonRationalResult unless is_rational().
        Mat3 to_rational() const;

        CycloMat3 &operator+=(const CycloMat3 &rhs);
        CycloMat3 &operator-=(const CycloMat3 &rhs);
        CycloMat3 &operator*=(const CycloRational &c);

        friend CycloMat3 operator+(CycloMat3 lhs, const CycloMat3 &rhs) { return lhs += rhs; }
        friend CycloMat3 operator-(CycloMat3 lhs, const CycloMat3 &rhs) { return lhs -= rhs; }
        friend CycloMat3 operator*(CycloMat3 a, const CycloRational &c) { return a *= c; }
        friend CycloMat3 operator*(const CycloRational &c, CycloMat3 a) { return a *= c; }

        friend bool operator==(const CycloMat3 &, const CycloMat3 &) = default;

    private:
        std::array<CycloRational, 9> e_{};
    };

} // namespace jacobsthal
