#pragma once

// Exact elimination kernels.
//
// Every kernel has a plain serial version and an OpenMP version that
// distributes the independent row (or column) updates of one elimination
// step across threads. The serial versions are the reference the tests
// compare against; the parallel ones are what the library uses for large
// matrices. Both produce bit-identical results.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "torcover/matrix.hpp"
#include "torcover/polynomial.hpp"

namespace torcover {

enum class Exec { serial, parallel };

/// Below this many entries in the active submatrix the parallel kernels
/// fall back to a single thread.
inline constexpr std::size_t kParallelMinEntries = 2048;

// ---------------------------------------------------------------------------
// Euclidean domains for Smith normal form.

struct IntegerDomain {
    using value_type = mpz_class;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    /// Strictly smaller Euclidean size.
    bool smaller(const value_type& a, const value_type& b) const { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
    bool is_unit(const value_type& a) const { return a == 1 || a == -1; }
    value_type quotient(const value_type& a, const value_type& b) const {
        value_type q;
        mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    bool divides(const value_type& d, const value_type& a) const {
        return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
    }
    void sub_mul(value_type& a, const value_type& q, const value_type& b) const { mpz_submul(a.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t()); }
    void add_to(value_type& a, const value_type& b) const { a += b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type normalize(const value_type& a) const { return abs(a); }
};

template <class Field>
struct PolynomialDomain {
    using value_type = Polynomial<Field>;

    Field field;

    value_type zero() const { return value_type(field); }
    value_type one() const { return value_type::constant(field, field.one()); }
    bool is_zero(const value_type& a) const { return a.is_zero(); }
    bool smaller(const value_type& a, const value_type& b) const { return a.degree() < b.degree(); }
    bool is_unit(const value_type& a) const { return a.degree() == 0; }
    value_type quotient(const value_type& a, const value_type& b) const { return a.divmod(b).first; }
    bool divides(const value_type& d, const value_type& a) const { return a.divmod(d).second.is_zero(); }
    void sub_mul(value_type& a, const value_type& q, const value_type& b) const { a -= q * b; }
    void add_to(value_type& a, const value_type& b) const { a += b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type normalize(const value_type& a) const { return a.monic(); }
};

// ---------------------------------------------------------------------------
// Row reduction over a field.

namespace detail {

template <class Field, class V = typename Field::value_type>
std::optional<std::size_t> find_pivot_row(const Matrix<V>& a, const Field& f, std::size_t from, std::size_t col) {
    for (std::size_t i = from; i < a.rows(); ++i)
        if (!f.is_zero(a(i, col)))
            return i;
    return std::nullopt;
}

template <class Field, class V = typename Field::value_type>
void normalize_pivot_row(Matrix<V>& a, const Field& f, std::size_t r, std::size_t col) {
    const V inv = f.inv(a(r, col));
    for (std::size_t c = col; c < a.cols(); ++c)
        a(r, c) = f.mul(a(r, c), inv);
}

} // namespace detail

/// Row echelon form in place (reduced when `reduced` is set, otherwise only
/// the rows below each pivot are cleared). Returns the pivot columns.
template <class Field>
std::vector<std::size_t> row_reduce_serial(Matrix<typename Field::value_type>& a, const Field& f, bool reduced = true) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        auto p = detail::find_pivot_row(a, f, r, col);
        if (!p)
            continue;
        a.swap_rows(r, *p);
        detail::normalize_pivot_row(a, f, r, col);
        for (std::size_t i = reduced ? 0 : r + 1; i < a.rows(); ++i) {
            if (i == r || f.is_zero(a(i, col)))
                continue;
            const auto q = a(i, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                f.sub_mul(a(i, c), q, a(r, c));
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

template <class Field>
std::vector<std::size_t> row_reduce_parallel(Matrix<typename Field::value_type>& a, const Field& f, bool reduced = true) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        auto p = detail::find_pivot_row(a, f, r, col);
        if (!p)
            continue;
        a.swap_rows(r, *p);
        detail::normalize_pivot_row(a, f, r, col);
        const std::ptrdiff_t first = reduced ? 0 : static_cast<std::ptrdiff_t>(r + 1);
        const bool wide = rows * (cols - col) >= kParallelMinEntries;
#pragma omp parallel for schedule(static) if (wide)
        for (std::ptrdiff_t ii = first; ii < static_cast<std::ptrdiff_t>(rows); ++ii) {
            const auto i = static_cast<std::size_t>(ii);
            if (i == r || f.is_zero(a(i, col)))
                continue;
            const auto q = a(i, col);
            auto target = a.row(i);
            auto source = a.row(r);
            for (std::size_t c = col; c < cols; ++c)
                f.sub_mul(target[c], q, source[c]);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

template <class Field>
std::vector<std::size_t> row_reduce(Matrix<typename Field::value_type>& a, const Field& f, Exec exec, bool reduced = true) {
    return exec == Exec::parallel ? row_reduce_parallel(a, f, reduced) : row_reduce_serial(a, f, reduced);
}

// ---------------------------------------------------------------------------
// Smith normal form over a Euclidean domain.

namespace detail {

/// Clears column t below the pivot using quotient steps. Returns false if a
/// nonzero remainder was left anywhere in the column.
template <class Domain, class V = typename Domain::value_type>
bool clear_column_serial(Matrix<V>& a, const Domain& d, std::size_t t, Matrix<V>* left) {
    bool clean = true;
    for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (d.is_zero(a(i, t)))
            continue;
        const V q = d.quotient(a(i, t), a(t, t));
        if (!d.is_zero(q)) {
            for (std::size_t c = t; c < a.cols(); ++c)
                d.sub_mul(a(i, c), q, a(t, c));
            if (left)
                for (std::size_t c = 0; c < left->cols(); ++c)
                    d.sub_mul((*left)(i, c), q, (*left)(t, c));
        }
        if (!d.is_zero(a(i, t)))
            clean = false;
    }
    return clean;
}

template <class Domain, class V = typename Domain::value_type>
bool clear_column_parallel(Matrix<V>& a, const Domain& d, std::size_t t, Matrix<V>* left) {
    bool clean = true;
    const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(a.rows());
    const bool wide = (a.rows() - t) * (a.cols() - t) >= kParallelMinEntries;
#pragma omp parallel for schedule(dynamic, 4) reduction(&& : clean) if (wide)
    for (std::ptrdiff_t ii = static_cast<std::ptrdiff_t>(t) + 1; ii < rows; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        if (d.is_zero(a(i, t)))
            continue;
        const V q = d.quotient(a(i, t), a(t, t));
        if (!d.is_zero(q)) {
            auto target = a.row(i);
            auto source = a.row(t);
            for (std::size_t c = t; c < a.cols(); ++c)
                d.sub_mul(target[c], q, source[c]);
            if (left) {
                auto lt = left->row(i);
                auto ls = left->row(t);
                for (std::size_t c = 0; c < left->cols(); ++c)
                    d.sub_mul(lt[c], q, ls[c]);
            }
        }
        clean = clean && d.is_zero(a(i, t));
    }
    return clean;
}

template <class Domain, class V = typename Domain::value_type>
bool clear_row_serial(Matrix<V>& a, const Domain& d, std::size_t t) {
    bool clean = true;
    for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (d.is_zero(a(t, j)))
            continue;
        const V q = d.quotient(a(t, j), a(t, t));
        if (!d.is_zero(q))
            for (std::size_t r = t; r < a.rows(); ++r)
                d.sub_mul(a(r, j), q, a(r, t));
        if (!d.is_zero(a(t, j)))
            clean = false;
    }
    return clean;
}

template <class Domain, class V = typename Domain::value_type>
bool clear_row_parallel(Matrix<V>& a, const Domain& d, std::size_t t) {
    bool clean = true;
    const std::ptrdiff_t cols = static_cast<std::ptrdiff_t>(a.cols());
    const bool wide = (a.rows() - t) * (a.cols() - t) >= kParallelMinEntries;
#pragma omp parallel for schedule(dynamic, 4) reduction(&& : clean) if (wide)
    for (std::ptrdiff_t jj = static_cast<std::ptrdiff_t>(t) + 1; jj < cols; ++jj) {
        const auto j = static_cast<std::size_t>(jj);
        if (d.is_zero(a(t, j)))
            continue;
        const V q = d.quotient(a(t, j), a(t, t));
        if (!d.is_zero(q))
            for (std::size_t r = t; r < a.rows(); ++r)
                d.sub_mul(a(r, j), q, a(r, t));
        clean = clean && d.is_zero(a(t, j));
    }
    return clean;
}

template <class Domain, class V = typename Domain::value_type>
void swap_rows_tracked(Matrix<V>& a, Matrix<V>* left, std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    if (left)
        left->swap_rows(x, y);
}

} // namespace detail

/// Diagonalizes `a` by unimodular row and column operations and returns the
/// nonzero invariant factors d_1 | d_2 | ... in normalized form (positive
/// over Z, monic over F[z]). When `left` is given it receives the row
/// transform U with U * a * V = diag(d_1, ..., d_r, 0, ...).
///
/// The pivot is always an entry of minimal Euclidean size in the active
/// block, which keeps coefficient growth down on boundary matrices.
template <class Domain>
std::vector<typename Domain::value_type> smith_diagonal(Matrix<typename Domain::value_type> a, const Domain& d, Exec exec,
                                                        Matrix<typename Domain::value_type>* left = nullptr) {
    using V = typename Domain::value_type;
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (left)
        *left = Matrix<V>::identity(m, d.zero(), d.one());

    auto clear_column = [&](std::size_t t) {
        return exec == Exec::parallel ? detail::clear_column_parallel(a, d, t, left)
                                      : detail::clear_column_serial(a, d, t, left);
    };
    auto clear_row = [&](std::size_t t) {
        return exec == Exec::parallel ? detail::clear_row_parallel(a, d, t) : detail::clear_row_serial(a, d, t);
    };

    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        // Smallest nonzero entry of the active block; a unit cannot be beaten.
        auto best = [&]() -> std::optional<std::pair<std::size_t, std::size_t>> {
            std::optional<std::pair<std::size_t, std::size_t>> found;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (!d.is_zero(a(i, j)) && (!found || d.smaller(a(i, j), a(found->first, found->second)))) {
                        found = {i, j};
                        if (d.is_unit(a(i, j)))
                            return found;
                    }
            return found;
        }();
        if (!best)
            break;
        detail::swap_rows_tracked<Domain>(a, left, t, best->first);
        a.swap_cols(t, best->second);

        for (;;) {
            const bool col_clean = clear_column(t);
            const bool row_clean = clear_row(t);
            if (!col_clean || !row_clean) {
                // A remainder survived: it is smaller than the pivot, move it in.
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (!d.is_zero(a(i, t)) && d.smaller(a(i, t), a(bi, bj))) {
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!d.is_zero(a(t, j)) && d.smaller(a(t, j), a(bi, bj))) {
                        bi = t;
                        bj = j;
                    }
                detail::swap_rows_tracked<Domain>(a, left, t, bi);
                a.swap_cols(t, bj);
                continue;
            }
            // Pivot must divide the whole remaining block.
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < m && !bad_row; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!d.divides(a(t, t), a(i, j))) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row)
                break;
            for (std::size_t c = t; c < n; ++c)
                d.add_to(a(t, c), a(*bad_row, c));
            if (left)
                for (std::size_t c = 0; c < m; ++c)
                    d.add_to((*left)(t, c), (*left)(*bad_row, c));
        }
    }

    std::vector<V> factors;
    factors.reserve(t);
    for (std::size_t k = 0; k < t; ++k) {
        if (left && !(d.normalize(a(k, k)) == a(k, k))) {
            // Fold the normalizing unit into U so that U * a * V stays diagonal.
            const V unit = d.quotient(d.normalize(a(k, k)), a(k, k));
            for (std::size_t c = 0; c < m; ++c)
                (*left)(k, c) = d.mul(unit, (*left)(k, c));
        }
        factors.push_back(d.normalize(a(k, k)));
    }
    return factors;
}

} // namespace torcover
