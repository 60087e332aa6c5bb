#pragma once

// Third-order Jacobsthal (M_J) and Jacobsthal-Lucas (M_j) 3x3 matrix
// sequences. Both obey M_{n+3} = M_{n+2} + M_{n+1} + 2 M_n; M_{J,n} is the
// n-th power of M_{J,1}, and M_{j,n} = M_{j,1} M_{J,n-1}.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "jacobsthal/exact.hpp"

namespace jacobsthal
{

    enum class MatFamily
    {
        Jacobsthal,      ///< M_{J,n}, tag "J"
        JacobsthalLucas, ///< M_{j,n}, tag "j"
    };

    enum class MatMethod
    {
        Recurrence, ///< iterate the order-3 matrix recurrence from the seed matrices
        Explicit,   ///< entry pattern assembled from scalar terms
        Power,      ///< M_{J,1}^n, and M_{j,1} M_{J,1}^{n-1} for the Lucas family
        Binet,      ///< c1 2^n + c2 w^n + c3 conj(w)^n evaluated in Q(w)
    };

    std::string_view to_string(MatFamily family);
    std::string_view to_string(MatMethod method);
    std::optional<MatFamily> parse_mat_family(std::string_view tag);
    std::optional<MatMethod> parse_mat_method(std::string_view tag);

    /// M_{family,k} for k in {0, 1, 2}.
    const Mat3 &seed_matrix(MatFamily family, int k);

    /// M_{J,1}, the companion matrix of x^3 - x^2 - x - 2.
    const Mat3 &jacobsthal_generator();

    /// The entry pattern
    ///   [ s(n+1)  s(n)+2s(n-1)    2s(n)   ]
    ///   [ s(n)    s(n-1)+2s(n-2)  2s(n-1) ]
    ///   [ s(n-1)  s(n-2)+2s(n-3)  2s(n-2) ]
    /// from terms = {s(n-3), s(n-2), s(n-1), s(n), s(n+1)}.
    Mat3 explicit_from_terms(const std::array<BigRational, 5> &terms);

    /// EXPLICIT for |n| <= 64, POWER above.
    MatMethod default_method(SeqIndex n);

    Mat3 matrix_term(MatFamily family, SeqIndex n, MatMethod method);

    inline Mat3 matrix_term(MatFamily family, SeqIndex n)
    {
        return matrix_term(family, n, default_method(n));
    }

    /// M_{family,lo..hi} by the matrix recurrence in a single pass. Throws BadRange if lo > hi.
    std::vector<Mat3> matrix_range(MatFamily family, SeqIndex lo, SeqIndex hi);

    struct MatrixBinetCoefficients
    {
        CycloMat3 two;
        CycloMat3 omega;
        CycloMat3 omega_bar;
    };

    /// Solved once per family from the three seed matrices, then cached.
    const MatrixBinetCoefficients &matrix_binet_coefficients(MatFamily family);

    // Product relations. Each computes every side of the relation it is named
    // after and throws InvariantViolation if any two disagree.

    /// M_{J,n} M_{J,m}; checked against M_{J,m} M_{J,n} and M_{J,n+m}.
    Mat3 semigroup_product(SeqIndex n, SeqIndex m);

    /// M_{j,n+1}, checked as M_{j,1}M_{J,n} = M_{J,n}M_{j,1} = M_{j,n}M_{J,1} = M_{J,1}M_{j,n};
    /// also checks M_{J,n} M_{j,n+1} = M_{j,2n+1}.
    Mat3 mixed_product(SeqIndex n);

    enum class LucasVariant
    {
        Shift4, ///< M_{J,n} + 4 M_{J,n-1} + 4 M_{J,n-2}
        Shift2, ///< 2 M_{J,n+1} - M_{J,n} + 2 M_{J,n-1}
    };

    /// M_{j,n} assembled from Jacobsthal matrices, checked against matrix_term.
    Mat3 lucas_from_jacobsthal(SeqIndex n, LucasVariant variant);

    /// (M_{j,n+1})^m, checked against (M_{j,1})^m M_{J,mn}. Throws BadParams for m < 0.
    Mat3 lucas_power(SeqIndex n, SeqIndex m);

} // namespace jacobsthal
