#include "sgh/linear_solve.hpp"

#include <utility>

namespace sgh {

std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw PreconditionError("solve_exact needs a square system");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw SingularSystem();
        if (pivot != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            std::swap(b[pivot], b[col]);
        }

        const Rational inv = a(col, col).reciprocal();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            const Rational factor = a(r, col) * inv;
            a(r, col) = Rational(0);
            for (std::size_t c = col + 1; c < n; ++c) {
                if (!a(col, c).is_zero()) a(r, c) -= factor * a(col, c);
            }
            b[r] -= factor * b[col];
        }
    }

    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = b[i];
        for (std::size_t c = i + 1; c < n; ++c) {
            if (!a(i, c).is_zero()) acc -= a(i, c) * x[c];
        }
        x[i] = acc / a(i, i);
    }
    return x;
}

}  // namespace sgh
