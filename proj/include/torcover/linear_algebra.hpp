#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "torcover/fields.hpp"
#include "torcover/kernels.hpp"
#include "torcover/matrix.hpp"
#include "torcover/polynomial.hpp"
#include "torcover/ring.hpp"

namespace torcover {

using IntMatrix = Matrix<mpz_class>;

/// Entry-wise lift of an integer matrix into a field.
template <class Field, class T>
Matrix<typename Field::value_type> lift(const Matrix<T>& m, const Field& f) {
    return m.map([&](const T& x) {
        if constexpr (std::is_same_v<T, mpz_class>)
            return f.from_mpz(x);
        else
            return f.from_int(static_cast<long>(x));
    });
}

template <class T>
IntMatrix to_int_matrix(const Matrix<T>& m) {
    return m.map([](const T& x) { return mpz_class(x); });
}

struct RankKernel {
    std::size_t rank = 0;
    /// Basis of the right kernel. Over a prime field the entries are the
    /// residues 0..p-1.
    std::vector<std::vector<mpq_class>> kernel_basis;
};

/// Rank and a kernel basis over a field (Rationals or PrimeField).
/// Throws std::invalid_argument for a non-field ring.
RankKernel rank_and_kernel(const IntMatrix& m, const RingSpec& field, Exec exec = Exec::parallel);

template <class Field>
std::size_t field_rank(Matrix<typename Field::value_type> m, const Field& f, Exec exec = Exec::parallel) {
    return row_reduce(m, f, exec, /*reduced=*/false).size();
}

/// Invariant factors of an integer matrix.
struct SmithForm {
    /// Nonzero factors d_1 | d_2 | ... | d_r, positive.
    std::vector<mpz_class> invariant_factors;
    std::size_t rank = 0;

    /// Factors that are not units, i.e. the torsion coefficients of the cokernel.
    std::vector<mpz_class> torsion() const;
};

SmithForm smith_normal_form(const IntMatrix& m, Exec exec = Exec::parallel);

/// Invariant factors of a matrix over F[z].
template <class Field>
struct PolynomialSmithForm {
    std::vector<Polynomial<Field>> invariant_factors; // monic
    std::size_t rank = 0;
};

template <class Field>
PolynomialSmithForm<Field> smith_normal_form(const Matrix<Polynomial<Field>>& m, const Field& f, Exec exec = Exec::parallel) {
    PolynomialSmithForm<Field> out;
    out.invariant_factors = smith_diagonal(m, PolynomialDomain<Field>{f}, exec);
    out.rank = out.invariant_factors.size();
    return out;
}

/// Replaces every factor by its largest divisor coprime to `primes`; the
/// result describes the same matrix over Z[1/p : p in primes].
SmithForm localize_invariant_factors(const SmithForm& form, const std::set<std::uint32_t>& primes);

/// Rank and cokernel torsion of an integer matrix over any supported ring.
struct MatrixInvariants {
    std::size_t rank = 0;
    /// Nontrivial invariant factors over the ring (empty over a field).
    std::vector<mpz_class> torsion;
};

MatrixInvariants matrix_invariants(const IntMatrix& m, const RingSpec& ring, Exec exec = Exec::parallel);
MatrixInvariants matrix_invariants(const Matrix<int>& m, const RingSpec& ring, Exec exec = Exec::parallel);

/// Decides membership of vectors in the R-span of the columns of a fixed
/// integer matrix, for any supported ring R.
class ColumnSpan {
public:
    ColumnSpan(const IntMatrix& generators, const RingSpec& ring);

    std::size_t ambient_dimension() const noexcept { return rows_; }
    /// `v` must have ring entries (see RingSpec::reduce).
    bool contains(std::span<const mpq_class> v) const;

private:
    RingSpec ring_;
    std::size_t rows_ = 0;
    // Z and Z[S^-1]: U from U * A * V = D and the diagonal.
    IntMatrix left_;
    std::vector<mpz_class> diagonal_;
    // Fields: reduced row echelon basis of the span.
    Matrix<mpq_class> rational_basis_;
    Matrix<std::uint32_t> modular_basis_;
    std::vector<std::size_t> pivots_;
};

} // namespace torcover
