#include "jacobsthal/matrix_seq.hpp"

#include <cstdlib>
#include <string>

#include "jacobsthal/scalar_seq.hpp"

namespace jacobsthal
{

    namespace
    {
        using IntMat = std::array<mpz_class, 9>;

        Mat3 from_rows(std::initializer_list<std::initializer_list<int>> rows)
        {
            Mat3 m;
            std::size_t r = 0;
            for (const auto &row : rows)
            {
                std::size_t c = 0;
                for (int v : row)
                    m(r, c++) = v;
                ++r;
            }
            return m;
        }

        const std::array<Mat3, 3> &seeds(MatFamily family)
        {
            static const std::array<Mat3, 3> jacobsthal = {
                Mat3::identity(),
                from_rows({{1, 1, 2}, {1, 0, 0}, {0, 1, 0}}),
                from_rows({{2, 3, 2}, {1, 1, 2}, {1, 0, 0}}),
            };
            static const std::array<Mat3, 3> lucas = {
                from_rows({{1, 4, 4}, {2, -1, 2}, {1, 1, -2}}),
                from_rows({{5, 5, 2}, {1, 4, 4}, {2, -1, 2}}),
                from_rows({{10, 7, 10}, {5, 5, 2}, {1, 4, 4}}),
            };
            return family == MatFamily::Jacobsthal ? jacobsthal : lucas;
        }

        SeqId scalar_of(MatFamily family)
        {
            return family == MatFamily::Jacobsthal ? SeqId::Jacobsthal3 : SeqId::JacobsthalLucas3;
        }

        IntMat to_int(const Mat3 &m)
        {
            IntMat out;
            for (std::size_t i = 0; i < 9; ++i)
                out[i] = m(i / 3, i % 3).num();
            return out;
        }

        Mat3 from_int(const IntMat &m)
        {
            Mat3 out;
            for (std::size_t i = 0; i < 9; ++i)
                out(i / 3, i % 3) = BigRational(m[i]);
            return out;
        }

        void require_equal(const Mat3 &lhs, const Mat3 &rhs, const std::string &what)
        {
            if (lhs != rhs)
                throw InvariantViolation(what + ": " + lhs.to_string() + " != " + rhs.to_string());
        }

        Mat3 binet_term(MatFamily family, SeqIndex n)
        {
            const MatrixBinetCoefficients &c = matrix_binet_coefficients(family);
            CycloMat3 value = c.two * CycloRational(BigRational::pow2(n));
            value += c.omega * CycloRational::omega_pow(n);
            value += c.omega_bar * CycloRational::omega_pow(-n);
            if (!value.is_rational())
                throw NonRationalResult("matrix Binet evaluation of M_" + std::string(to_string(family)) +
                                        " at n=" + std::to_string(n));
            return value.to_rational();
        }

        Mat3 explicit_term(MatFamily family, SeqIndex n)
        {
            const std::vector<BigRational> s = term_range(scalar_of(family), n - 3, n + 1);
            return explicit_from_terms({s[0], s[1], s[2], s[3], s[4]});
        }

        Mat3 power_term(MatFamily family, SeqIndex n)
        {
            if (family == MatFamily::Jacobsthal)
                return pow(jacobsthal_generator(), n);
            return seed_matrix(MatFamily::JacobsthalLucas, 1) * pow(jacobsthal_generator(), n - 1);
        }

        MatrixBinetCoefficients solve_binet(MatFamily family)
        {
            const CycloMat3 m0(seed_matrix(family, 0));
            const CycloMat3 m1(seed_matrix(family, 1));
            const CycloMat3 m2(seed_matrix(family, 2));
            const CycloRational w1 = CycloRational::omega();
            const CycloRational w2 = w1.conj();
            const CycloRational two(2);

            // Elimination on M_k = c1 2^k + c2 w1^k + c3 w2^k, k = 0, 1, 2.
            MatrixBinetCoefficients c;
            c.two = (m2 - m1 * (w1 + w2) + m0 * (w1 * w2)) * ((two - w1) * (two - w2)).inverse();
            c.omega = (m2 - m1 * (two + w2) + m0 * (two * w2)) * ((w1 - two) * (w1 - w2)).inverse();
            c.omega_bar = (m2 - m1 * (two + w1) + m0 * (two * w1)) * ((two - w2) * (w1 - w2)).inverse();
            return c;
        }
    } // namespace

    std::string_view to_string(MatFamily family)
    {
        return family == MatFamily::Jacobsthal ? "J" : "j";
    }

    std::string_view to_string(MatMethod method)
    {
        switch (method)
        {
        case MatMethod::Recurrence:
            return "recurrence";
        case MatMethod::Explicit:
            return "explicit";
        case MatMethod::Power:
            return "power";
        case MatMethod::Binet:
            return "binet";
        }
        return "?";
    }

    std::optional<MatFamily> parse_mat_family(std::string_view tag)
    {
        if (tag == "J")
            return MatFamily::Jacobsthal;
        if (tag == "j")
            return MatFamily::JacobsthalLucas;
        return std::nullopt;
    }

    std::optional<MatMethod> parse_mat_method(std::string_view tag)
    {
        for (MatMethod m : {MatMethod::Recurrence, MatMethod::Explicit, MatMethod::Power, MatMethod::Binet})
            if (to_string(m) == tag)
                return m;
        return std::nullopt;
    }

    const Mat3 &seed_matrix(MatFamily family, int k)
    {
        return seeds(family).at(static_cast<std::size_t>(k));
    }

    const Mat3 &jacobsthal_generator()
    {
        return seed_matrix(MatFamily::Jacobsthal, 1);
    }

    Mat3 explicit_from_terms(const std::array<BigRational, 5> &t)
    {
        // t[k] = s(n - 3 + k)
        Mat3 m;
        for (std::size_t r = 0; r < 3; ++r)
        {
            const std::size_t top = 4 - r; // s(n+1-r)
            m(r, 0) = t[top];
            m(r, 1) = t[top - 1] + 2 * t[top - 2];
            m(r, 2) = 2 * t[top - 1];
        }
        return m;
    }

    MatMethod default_method(SeqIndex n)
    {
        return (n > 64 || n < -64) ? MatMethod::Power : MatMethod::Explicit;
    }

    std::vector<Mat3> matrix_range(MatFamily family, SeqIndex lo, SeqIndex hi)
    {
        if (lo > hi)
            throw BadRange("empty index range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        const auto &seed = seeds(family);
        std::vector<Mat3> out(static_cast<std::size_t>(hi - lo) + 1);

        if (lo < 0)
        {
            // window[i] = M_{k+i}; M_{k-1} = (M_{k+2} - M_{k+1} - M_k) / 2
            std::array<Mat3, 3> window = seed;
            const BigRational half(mpz_class(1), mpz_class(2));
            for (SeqIndex k = -1; k >= lo; --k)
            {
                Mat3 v = (window[2] - window[1] - window[0]) * half;
                window[2] = std::move(window[1]);
                window[1] = std::move(window[0]);
                window[0] = v;
                if (k <= hi)
                    out[static_cast<std::size_t>(k - lo)] = std::move(v);
            }
        }

        if (hi >= 0)
        {
            std::array<IntMat, 3> window = {to_int(seed[0]), to_int(seed[1]), to_int(seed[2])};
            const SeqIndex start = lo > 0 ? lo : 0;
            for (SeqIndex k = 0; k <= hi; ++k)
            {
                if (k >= 3)
                {
                    IntMat next;
                    for (std::size_t i = 0; i < 9; ++i)
                    {
                        next[i] = window[0][i] * 2;
                        next[i] += window[1][i];
                        next[i] += window[2][i];
                    }
                    window[0].swap(window[1]);
                    window[1].swap(window[2]);
                    window[2].swap(next);
                }
                if (k >= start)
                    out[static_cast<std::size_t>(k - lo)] = from_int(window[k < 3 ? k : 2]);
            }
        }
        return out;
    }

    const MatrixBinetCoefficients &matrix_binet_coefficients(MatFamily family)
    {
        static const MatrixBinetCoefficients jacobsthal = solve_binet(MatFamily::Jacobsthal);
        static const MatrixBinetCoefficients lucas = solve_binet(MatFamily::JacobsthalLucas);
        return family == MatFamily::Jacobsthal ? jacobsthal : lucas;
    }

    Mat3 matrix_term(MatFamily family, SeqIndex n, MatMethod method)
    {
        switch (method)
        {
        case MatMethod::Recurrence:
            return std::move(matrix_range(family, n, n).front());
        case MatMethod::Explicit:
            return explicit_term(family, n);
        case MatMethod::Power:
            return power_term(family, n);
        case MatMethod::Binet:
            return binet_term(family, n);
        }
        throw DomainError("unknown matrix method");
    }

    Mat3 semigroup_product(SeqIndex n, SeqIndex m)
    {
        const Mat3 a = matrix_term(MatFamily::Jacobsthal, n);
        const Mat3 b = matrix_term(MatFamily::Jacobsthal, m);
        const Mat3 product = a * b;
        const std::string where = "M_J(" + std::to_string(n) + ") M_J(" + std::to_string(m) + ")";
        require_equal(product, b * a, where + " commutativity");
        require_equal(product, matrix_term(MatFamily::Jacobsthal, n + m), where + " = M_J(n+m)");
        return product;
    }

    Mat3 mixed_product(SeqIndex n)
    {
        const Mat3 lucas_one = seed_matrix(MatFamily::JacobsthalLucas, 1);
        const Mat3 jac_n = matrix_term(MatFamily::Jacobsthal, n);
        const Mat3 lucas_n = matrix_term(MatFamily::JacobsthalLucas, n);
        const Mat3 target = matrix_term(MatFamily::JacobsthalLucas, n + 1);
        const std::string at = " at n=" + std::to_string(n);

        require_equal(lucas_one * jac_n, target, "M_j(1) M_J(n) = M_j(n+1)" + at);
        require_equal(jac_n * lucas_one, target, "M_J(n) M_j(1) = M_j(n+1)" + at);
        require_equal(lucas_n * jacobsthal_generator(), target, "M_j(n) M_J(1) = M_j(n+1)" + at);
        require_equal(jacobsthal_generator() * lucas_n, target, "M_J(1) M_j(n) = M_j(n+1)" + at);
        require_equal(jac_n * target, matrix_term(MatFamily::JacobsthalLucas, 2 * n + 1),
                      "M_J(n) M_j(n+1) = M_j(2n+1)" + at);
        return target;
    }

    Mat3 lucas_from_jacobsthal(SeqIndex n, LucasVariant variant)
    {
        const auto J = [](SeqIndex k)
        { return matrix_term(MatFamily::Jacobsthal, k); };
        Mat3 built;
        if (variant == LucasVariant::Shift4)
            built = J(n) + 4 * J(n - 1) + 4 * J(n - 2);
        else
            built = 2 * J(n + 1) - J(n) + 2 * J(n - 1);
        require_equal(built, matrix_term(MatFamily::JacobsthalLucas, n),
                      std::string(variant == LucasVariant::Shift4 ? "shift-4" : "shift-2") +
                          " Lucas combination at n=" + std::to_string(n));
        return built;
    }

    Mat3 lucas_power(SeqIndex n, SeqIndex m)
    {
        if (m < 0)
            throw BadParams("lucas_power exponent must be >= 0, got " + std::to_string(m));
        const Mat3 direct = pow(matrix_term(MatFamily::JacobsthalLucas, n + 1), m);
        const Mat3 factored = pow(seed_matrix(MatFamily::JacobsthalLucas, 1), m) *
                              matrix_term(MatFamily::Jacobsthal, m * n);
        require_equal(direct, factored,
                      "(M_j(n+1))^m = M_j(1)^m M_J(mn) at n=" + std::to_string(n) + ", m=" + std::to_string(m));
        return direct;
    }

} // namespace jacobsthal
