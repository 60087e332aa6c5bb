#pragma once

// Closed forms for weighted and strided sums over a matrix sequence, written
// against an arbitrary term lookup so the catalog can feed them oracle terms.

#include <functional>

#include "jacobsthal/exact.hpp"

namespace jacobsthal::detail
{

    using TermLookup = std::function<Mat3(SeqIndex)>;

    // sum_{k=0}^{n} M_k / x^k, accumulated term by term.
    inline Mat3 weighted_direct(const TermLookup &M, const BigRational &x, SeqIndex n)
    {
        const BigRational inv_x = x.inverse();
        BigRational scale = 1;
        Mat3 sum;
        for (SeqIndex k = 0; k <= n; ++k)
        {
            sum += M(k) * scale;
            scale *= inv_x;
        }
        return sum;
    }

    // 2 M_n + (M_{n+2} - M_{n+1}) x + M_{n+1} x^2
    //   - x^{n+1} (M_2 - M_1 - M_0 - (M_0 - M_1) x + M_0 x^2)
    inline Mat3 weighted_numerator(const TermLookup &M, const BigRational &x, SeqIndex n)
    {
        const Mat3 m0 = M(0), m1 = M(1), m2 = M(2);
        const Mat3 next = M(n + 1);
        const BigRational x2 = x * x;
        Mat3 head = 2 * M(n) + (M(n + 2) - next) * x + next * x2;
        Mat3 tail = m2 - m1 - m0 - (m0 - m1) * x + m0 * x2;
        return head - tail * x.pow(n + 1);
    }

    inline Mat3 strided_direct(const TermLookup &M, SeqIndex m, SeqIndex r, SeqIndex n)
    {
        Mat3 sum;
        for (SeqIndex k = 0; k <= n; ++k)
            sum += M(m * k + r);
        return sum;
    }

    // Requires sigma != 0.
    inline Mat3 strided_closed(const TermLookup &M, SeqIndex m, SeqIndex r, SeqIndex n,
                               const BigRational &sigma, const BigRational &mu)
    {
        const BigRational two_m = BigRational::pow2(m);
        const Mat3 outer = M(m * (n + 1) + r);
        const Mat3 base = M(r);
        Mat3 numerator = outer - base + two_m * M(m * n + r) - two_m * M(r - m) - outer * mu + base * mu +
                         M(m * (n + 2) + r) - M(r + m);
        return numerator * sigma.inverse();
    }

} // namespace jacobsthal::detail
