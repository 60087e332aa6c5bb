#include "jacobsthal/exact.hpp"

#include <ostream>
#include <sstream>

namespace jacobsthal
{

    namespace
    {
        std::uint64_t magnitude(SeqIndex n)
        {
            return n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1u : static_cast<std::uint64_t>(n);
        }

        bool all_digits(std::string_view s)
        {
            if (s.empty())
                return false;
            for (char c : s)
                if (c < '0' || c > '9')
                    return false;
            return true;
        }
    } // namespace

    // ---------------------------------------------------------------- BigRational

    BigRational::BigRational(const mpz_class &num, const mpz_class &den)
    {
        if (den == 0)
            throw DivisionByZero();
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    BigRational BigRational::parse(std::string_view text)
    {
        std::string_view body = text;
        bool negative = false;
        if (!body.empty() && (body.front() == '+' || body.front() == '-'))
        {
            negative = body.front() == '-';
            body.remove_prefix(1);
        }
        const auto slash = body.find('/');
        const std::string_view num_text = body.substr(0, slash);
        const std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
        if (!all_digits(num_text) || !all_digits(den_text))
            throw DomainError("malformed rational: '" + std::string(text) + "'");
        mpz_class num(std::string(num_text), 10);
        mpz_class den(std::string(den_text), 10);
        if (negative)
            num = -num;
        return {num, den};
    }

    BigRational BigRational::pow2(SeqIndex e)
    {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(magnitude(e)));
        if (e >= 0)
            return BigRational(p);
        return {mpz_class(1), p};
    }

    BigRational BigRational::inverse() const
    {
        if (is_zero())
            throw DivisionByZero();
        BigRational r;
        mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
        return r;
    }

    BigRational BigRational::pow(SeqIndex e) const
    {
        if (e < 0 && is_zero())
            throw DivisionByZero();
        const auto k = static_cast<unsigned long>(magnitude(e));
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), k);
        mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), k);
        return e >= 0 ? BigRational(n, d) : BigRational(d, n);
    }

    std::string BigRational::to_string() const
    {
        if (is_integer())
            return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    BigRational BigRational::operator-() const
    {
        BigRational r;
        r.q_ = -q_;
        return r;
    }

    BigRational &BigRational::operator+=(const BigRational &rhs)
    {
        q_ += rhs.q_;
        return *this;
    }

    BigRational &BigRational::operator-=(const BigRational &rhs)
    {
        q_ -= rhs.q_;
        return *this;
    }

    BigRational &BigRational::operator*=(const BigRational &rhs)
    {
        q_ *= rhs.q_;
        return *this;
    }

    BigRational &BigRational::operator/=(const BigRational &rhs)
    {
        if (rhs.is_zero())
            throw DivisionByZero();
        q_ /= rhs.q_;
        return *this;
    }

    std::ostream &operator<<(std::ostream &os, const BigRational &x)
    {
        return os << x.to_string();
    }

    // ---------------------------------------------------------------- CycloRational

    CycloRational CycloRational::omega_pow(SeqIndex n)
    {
        switch (mod3(n))
        {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        default:
            return {-1, -1};
        }
    }

    CycloRational CycloRational::inverse() const
    {
        const BigRational n = norm();
        if (n.is_zero())
            throw DivisionByZero();
        const CycloRational c = conj();
        return {c.a_ / n, c.b_ / n};
    }

    // (a1 + b1 w)(a2 + b2 w) = a1a2 + (a1b2 + a2b1) w + b1b2 w^2, with w^2 = -1 - w.
    CycloRational &CycloRational::operator*=(const CycloRational &rhs)
    {
        const BigRational bb = b_ * rhs.b_;
        BigRational a = a_ * rhs.a_ - bb;
        BigRational b = a_ * rhs.b_ + rhs.a_ * b_ - bb;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }

    CycloRational &CycloRational::operator+=(const CycloRational &rhs)
    {
        a_ += rhs.a_;
        b_ += rhs.b_;
        return *this;
    }

    CycloRational &CycloRational::operator-=(const CycloRational &rhs)
    {
        a_ -= rhs.a_;
        b_ -= rhs.b_;
        return *this;
    }

    std::string CycloRational::to_string() const
    {
        if (is_rational())
            return a_.to_string();
        std::string s = a_.to_string();
        if (b_.sign() < 0)
            s += " - " + (-b_).to_string() + "w";
        else
            s += " + " + b_.to_string() + "w";
        return s;
    }

    std::ostream &operator<<(std::ostream &os, const CycloRational &x)
    {
        return os << x.to_string();
    }

    // ---------------------------------------------------------------- Mat3

    Mat3::Mat3(const std::array<Row, 3> &rows)
    {
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                e_[3 * r + c] = rows[r][c];
    }

    Mat3 Mat3::identity()
    {
        Mat3 m;
        m(0, 0) = 1;
        m(1, 1) = 1;
        m(2, 2) = 1;
        return m;
    }

    bool Mat3::is_integral() const
    {
        for (const auto &x : e_)
            if (!x.is_integer())
                return false;
        return true;
    }

    BigRational Mat3::det() const
    {
        const Mat3 &m = *this;
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }

    Mat3 Mat3::inverse() const
    {
        const BigRational d = det();
        if (d.is_zero())
            throw SingularMatrix();
        const Mat3 &m = *this;
        Mat3 adj;
        // adj(A)[c][r] = cofactor(A)[r][c]
        adj(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
        adj(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
        adj(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
        adj(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
        adj(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
        adj(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
        adj(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
        adj(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
        adj(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        return adj * d.inverse();
    }

    Mat3 &Mat3::operator+=(const Mat3 &rhs)
    {
        for (std::size_t i = 0; i < 9; ++i)
            e_[i] += rhs.e_[i];
        return *this;
    }

    Mat3 &Mat3::operator-=(const Mat3 &rhs)
    {
        for (std::size_t i = 0; i < 9; ++i)
            e_[i] -= rhs.e_[i];
        return *this;
    }

    Mat3 &Mat3::operator*=(const BigRational &c)
    {
        for (auto &x : e_)
            x *= c;
        return *this;
    }

    Mat3 operator*(const Mat3 &a, const Mat3 &b)
    {
        Mat3 p;
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                p(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
        return p;
    }

    std::string Mat3::to_string() const
    {
        std::string s = "[";
        for (std::size_t r = 0; r < 3; ++r)
        {
            s += r ? ",[" : "[";
            for (std::size_t c = 0; c < 3; ++c)
            {
                if (c)
                    s += ',';
                s += (*this)(r, c).to_string();
            }
            s += ']';
        }
        return s + "]";
    }

    std::ostream &operator<<(std::ostream &os, const Mat3 &m)
    {
        return os << m.to_string();
    }

    PowerResult pow_counted(const Mat3 &a, SeqIndex n)
    {
        PowerResult out{Mat3::identity(), 0};
        if (n == 0)
            return out;
        Mat3 base = n < 0 ? a.inverse() : a;
        std::uint64_t k = magnitude(n);

        // Right-to-left binary method; the lowest set bit is copied, not multiplied.
        bool have_result = false;
        while (true)
        {
            if (k & 1u)
            {
                if (have_result)
                {
                    out.value = out.value * base;
                    ++out.multiplications;
                }
                else
                {
                    out.value = base;
                    have_result = true;
                }
            }
            k >>= 1;
            if (k == 0)
                break;
            base = base * base;
            ++out.multiplications;
        }
        return out;
    }

    // ---------------------------------------------------------------- CycloMat3

    CycloMat3::CycloMat3(const Mat3 &m)
    {
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                (*this)(r, c) = CycloRational(m(r, c));
    }

    bool CycloMat3::is_rational() const
    {
        for (const auto &x : e_)
            if (!x.is_rational())
                return false;
        return true;
    }

    Mat3 CycloMat3::to_rational() const
    {
        if (!is_rational())
            throw NonRationalResult("CycloMat3 projection");
        Mat3 m;
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                m(r, c) = (*this)(r, c).a();
        return m;
    }

    CycloMat3 &CycloMat3::operator+=(const CycloMat3 &rhs)
    {
        for (std::size_t i = 0; i < 9; ++i)
            e_[i] += rhs.e_[i];
        return *this;
    }

    CycloMat3 &CycloMat3::operator-=(const CycloMat3 &rhs)
    {
        for (std::size_t i = 0; i < 9; ++i)
            e_[i] -= rhs.e_[i];
        return *this;
    }

    CycloMat3 &CycloMat3::operator*=(const CycloRational &c)
    {
        for (auto &x : e_)
            x *= c;
        return *this;
    }

} // namespace jacobsthal
