#include "torcover/linear_algebra.hpp"

namespace torcover {

namespace {

template <class Field>
RankKernel rank_and_kernel_over(const IntMatrix& m, const Field& f, Exec exec) {
    auto a = lift(m, f);
    const auto pivots = row_reduce(a, f, exec, /*reduced=*/true);
    RankKernel out;
    out.rank = pivots.size();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<mpq_class> v(m.cols(), 0);
        v[free_col] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = f.to_rational(f.neg(a(k, free_col)));
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

} // namespace

RankKernel rank_and_kernel(const IntMatrix& m, const RingSpec& field, Exec exec) {
    switch (field.kind()) {
    case RingSpec::Kind::rationals:
        return rank_and_kernel_over(m, RationalField{}, exec);
    case RingSpec::Kind::prime_field:
        return rank_and_kernel_over(m, PrimeField(field.characteristic()), exec);
    default:
        throw std::invalid_argument("rank_and_kernel needs a field, got " + field.to_string());
    }
}

std::vector<mpz_class> SmithForm::torsion() const {
    std::vector<mpz_class> out;
    for (const auto& d : invariant_factors)
        if (d != 1)
            out.push_back(d);
    return out;
}

SmithForm smith_normal_form(const IntMatrix& m, Exec exec) {
    SmithForm out;
    out.invariant_factors = smith_diagonal(m, IntegerDomain{}, exec);
    out.rank = out.invariant_factors.size();
    return out;
}

SmithForm localize_invariant_factors(const SmithForm& form, const std::set<std::uint32_t>& primes) {
    const RingSpec ring = RingSpec::integers_inverted(primes);
    SmithForm out;
    out.rank = form.rank;
    for (const auto& d : form.invariant_factors)
        out.invariant_factors.push_back(ring.nonunit_part(d));
    return out;
}

namespace {

template <class T>
MatrixInvariants invariants_impl(const Matrix<T>& m, const RingSpec& ring, Exec exec) {
    MatrixInvariants out;
    if (m.empty())
        return out;
    switch (ring.kind()) {
    case RingSpec::Kind::rationals:
        out.rank = field_rank(lift(m, RationalField{}), RationalField{}, exec);
        return out;
    case RingSpec::Kind::prime_field: {
        PrimeField f(ring.characteristic());
        out.rank = field_rank(lift(m, f), f, exec);
        return out;
    }
    case RingSpec::Kind::integers:
    case RingSpec::Kind::integers_inverted: {
        SmithForm snf;
        if constexpr (std::is_same_v<T, mpz_class>)
            snf = smith_normal_form(m, exec);
        else
            snf = smith_normal_form(to_int_matrix(m), exec);
        out.rank = snf.rank;
        for (const auto& d : snf.invariant_factors) {
            mpz_class t = ring.nonunit_part(d);
            if (t != 1)
                out.torsion.push_back(t);
        }
        return out;
    }
    }
    return out;
}

} // namespace

MatrixInvariants matrix_invariants(const IntMatrix& m, const RingSpec& ring, Exec exec) {
    return invariants_impl(m, ring, exec);
}

MatrixInvariants matrix_invariants(const Matrix<int>& m, const RingSpec& ring, Exec exec) {
    return invariants_impl(m, ring, exec);
}

ColumnSpan::ColumnSpan(const IntMatrix& generators, const RingSpec& ring) : ring_(ring), rows_(generators.rows()) {
    switch (ring.kind()) {
    case RingSpec::Kind::rationals: {
        rational_basis_ = lift(generators.transposed(), RationalField{});
        pivots_ = row_reduce(rational_basis_, RationalField{}, Exec::serial, true);
        break;
    }
    case RingSpec::Kind::prime_field: {
        PrimeField f(ring.characteristic());
        modular_basis_ = lift(generators.transposed(), f);
        pivots_ = row_reduce(modular_basis_, f, Exec::serial, true);
        break;
    }
    case RingSpec::Kind::integers:
    case RingSpec::Kind::integers_inverted:
        diagonal_ = smith_diagonal(generators, IntegerDomain{}, Exec::serial, &left_);
        for (auto& d : diagonal_)
            d = ring.nonunit_part(d);
        break;
    }
}

namespace {

template <class Field>
bool reduces_to_zero(std::vector<typename Field::value_type> v, const Matrix<typename Field::value_type>& basis,
                     const std::vector<std::size_t>& pivots, const Field& f) {
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        const auto c = v[pivots[k]];
        if (f.is_zero(c))
            continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            f.sub_mul(v[j], c, basis(k, j));
    }
    for (const auto& x : v)
        if (!f.is_zero(x))
            return false;
    return true;
}

} // namespace

bool ColumnSpan::contains(std::span<const mpq_class> v) const {
    if (v.size() != rows_)
        throw std::invalid_argument("vector length does not match the ambient dimension");
    switch (ring_.kind()) {
    case RingSpec::Kind::rationals: {
        std::vector<mpq_class> w(v.begin(), v.end());
        return reduces_to_zero(std::move(w), rational_basis_, pivots_, RationalField{});
    }
    case RingSpec::Kind::prime_field: {
        PrimeField f(ring_.characteristic());
        std::vector<std::uint32_t> w;
        for (const auto& x : v) {
            const mpq_class r = ring_.reduce(x);
            w.push_back(f.from_mpz(r.get_num()));
        }
        return reduces_to_zero(std::move(w), modular_basis_, pivots_, f);
    }
    case RingSpec::Kind::integers:
    case RingSpec::Kind::integers_inverted: {
        // Clear denominators; over Z[S^-1] they are units and do not affect membership.
        mpz_class den = 1;
        for (const auto& x : v) {
            ring_.reduce(x);
            den = lcm(den, mpz_class(x.get_den()));
        }
        std::vector<mpz_class> w;
        for (const auto& x : v)
            w.push_back(mpz_class(x * den));
        for (std::size_t i = 0; i < rows_; ++i) {
            mpz_class y = 0;
            for (std::size_t j = 0; j < rows_; ++j)
                y += left_(i, j) * w[j];
            if (i < diagonal_.size()) {
                if (!mpz_divisible_p(y.get_mpz_t(), diagonal_[i].get_mpz_t()))
                    return false;
            } else if (y != 0) {
                return false;
            }
        }
        return true;
    }
    }
    return false;
}

} // namespace torcover
