#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

using torcover::Matrix;
using torcover::Simplex;
using torcover::SimplicialComplex;

namespace oracle {

mpz_class determinant(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);
    mpz_class total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0)
            continue;
        IntMatrix sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t k = 0, kk = 0; k < n; ++k)
                if (k != c)
                    sub(r - 1, kk++) = m(r, k);
        const mpz_class term = m(0, c) * determinant(sub);
        total += c % 2 == 0 ? term : mpz_class(-term);
    }
    return total;
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    if (k > n)
        return;
    for (;;) {
        f(pick);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

} // namespace

mpz_class minors_gcd(const IntMatrix& m, std::size_t k) {
    mpz_class g = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
        for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    sub(i, j) = m(rows[i], cols[j]);
            g = gcd(g, determinant(sub));
        });
    });
    return g;
}

std::size_t rank_q(const Matrix<int>& m) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r][c] = m(r, c);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && a[p][c] == 0)
            ++p;
        if (p == m.rows())
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (a[r][c] == 0)
                continue;
            const mpq_class q = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < m.cols(); ++k)
                a[r][k] -= q * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_mod(const Matrix<int>& m, std::uint32_t p) {
    const long P = p;
    std::vector<std::vector<long>> a(m.rows(), std::vector<long>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r][c] = ((m(r, c) % P) + P) % P;
    auto inverse = [&](long x) {
        long result = 1, base = x, e = P - 2;
        for (; e; e >>= 1, base = base * base % P)
            if (e & 1)
                result = result * base % P;
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && a[piv][c] == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        std::swap(a[piv], a[rank]);
        const long inv = inverse(a[rank][c]);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            const long q = a[r][c] * inv % P;
            for (std::size_t k = c; k < m.cols(); ++k)
                a[r][k] = ((a[r][k] - q * a[rank][k]) % P + P) % P;
        }
        ++rank;
    }
    return rank;
}

Matrix<int> coboundary(const SimplicialComplex& L, int n) {
    const auto& rows = L.simplices(n);
    const auto& cols = L.simplices(n - 1);
    Matrix<int> m(rows.size(), cols.size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const Simplex& s = rows[r];
            for (std::size_t j = 0; j < s.size(); ++j) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<long>(j));
                if (face == cols[c])
                    m(r, c) += j % 2 == 0 ? 1 : -1;
            }
        }
    return m;
}

std::vector<mpq_class> literal_shuffle(const torcover::ExteriorElement& f, const torcover::ExteriorElement& g) {
    const SimplicialComplex& L = f.complex();
    const std::size_t p = static_cast<std::size_t>(f.degree());
    const std::size_t q = static_cast<std::size_t>(g.degree());
    auto lookup = [&](const torcover::ExteriorElement& e, const Simplex& s) -> mpq_class {
        const auto& basis = L.simplices(static_cast<int>(s.size()) - 1);
        auto it = std::lower_bound(basis.begin(), basis.end(), s);
        if (it == basis.end() || *it != s)
            return 0;
        return e.values()[static_cast<std::size_t>(it - basis.begin())];
    };
    std::vector<mpq_class> out;
    for (const Simplex& tau : L.simplices(static_cast<int>(p + q) - 1)) {
        mpq_class sum = 0;
        // A shuffle is determined by which positions go to the first factor.
        std::vector<bool> first(p + q, false);
        std::fill(first.begin(), first.begin() + static_cast<long>(p), true);
        std::sort(first.begin(), first.end());
        do {
            std::vector<std::size_t> perm;
            Simplex a, b;
            for (std::size_t i = 0; i < p + q; ++i)
                if (first[i]) {
                    perm.push_back(i);
                    a.push_back(tau[i]);
                }
            for (std::size_t i = 0; i < p + q; ++i)
                if (!first[i]) {
                    perm.push_back(i);
                    b.push_back(tau[i]);
                }
            std::size_t inversions = 0;
            for (std::size_t i = 0; i < perm.size(); ++i)
                for (std::size_t j = i + 1; j < perm.size(); ++j)
                    if (perm[i] > perm[j])
                        ++inversions;
            const mpq_class term = lookup(f, a) * lookup(g, b);
            sum += inversions % 2 == 0 ? term : mpq_class(-term);
        } while (std::next_permutation(first.begin(), first.end()));
        out.push_back(f.ring().reduce(sum));
    }
    return out;
}

std::vector<std::size_t> cohomology_dims(const SimplicialComplex& L, std::uint32_t p) {
    auto rank = [&](int n) -> std::size_t {
        // Unreduced: no coboundary out of the empty simplex.
        if (n <= 0 || n > L.dimension())
            return 0;
        const auto m = coboundary(L, n);
        return p == 0 ? rank_q(m) : rank_mod(m, p);
    };
    std::vector<std::size_t> out;
    for (int n = 0; n <= L.dimension(); ++n)
        out.push_back(L.count(n) - rank(n + 1) - rank(n));
    return out;
}

int top_cohomology_degree(const SimplicialComplex& L, std::uint32_t p) {
    const auto dims = cohomology_dims(L, p);
    for (int n = static_cast<int>(dims.size()) - 1; n >= 0; --n)
        if (dims[static_cast<std::size_t>(n)] != 0)
            return n;
    return -1;
}

} // namespace oracle
