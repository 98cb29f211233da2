#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support/oracles.hpp"
#include "torcover/errors.hpp"
#include "torcover/homology.hpp"
#include "torcover/linear_algebra.hpp"
#include "torcover/simplicial_complex.hpp"

using namespace torcover;

namespace {

IntMatrix int_matrix(std::size_t rows, std::size_t cols, std::vector<long> values) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < values.size(); ++i)
        m(i / cols, i % cols) = values[i];
    return m;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, int bound) {
    const std::size_t rows = 1 + rng() % max_dim;
    const std::size_t cols = 1 + rng() % max_dim;
    IntMatrix m(rows, cols);
    std::uniform_int_distribution<int> entry(-bound, bound);
    const bool sparse = rng() % 3 == 0;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = sparse && rng() % 2 ? 0 : entry(rng);
    return m;
}

std::vector<mpz_class> factors(std::initializer_list<long> xs) {
    std::vector<mpz_class> out;
    for (long x : xs)
        out.push_back(x);
    return out;
}

// M * v = 0 over Q, or over F_p for residues.
bool in_kernel(const IntMatrix& m, const std::vector<mpq_class>& v, std::uint32_t p) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpq_class s = 0;
        for (std::size_t c = 0; c < m.cols(); ++c)
            s += m(r, c) * v[c];
        if (p == 0 ? s != 0 : mpz_class(s.get_num() % p) != 0)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("ring tokens", "[ring]") {
    CHECK(parse_ring("z") == RingSpec::integers());
    CHECK(parse_ring("Q") == RingSpec::rationals());
    CHECK(parse_ring("f3") == RingSpec::prime_field(3));
    CHECK(parse_ring("z-inv:2,3") == RingSpec::integers_inverted({2, 3}));
    CHECK(parse_ring("z-inv:3,2").to_string() == "z-inv:2,3");
    CHECK(RingSpec::integers_inverted({}) == RingSpec::integers());
    CHECK(parse_ring("f7").to_string() == "f7");
    for (const char* bad : {"", "r", "f", "f4", "f1", "z-inv:4", "z-inv:2,", "zz", "f2x", "z-inv:x"})
        CHECK_THROWS_AS(parse_ring(bad), ParseError);
    CHECK_THROWS_AS(RingSpec::prime_field(9), std::invalid_argument);
}

TEST_CASE("ring reduction and units", "[ring]") {
    const auto f5 = RingSpec::prime_field(5);
    CHECK(f5.reduce(-1) == 4);
    CHECK(f5.reduce(mpq_class(1, 2)) == 3);
    CHECK_THROWS_AS(f5.reduce(mpq_class(1, 5)), std::invalid_argument);
    CHECK_THROWS_AS(RingSpec::integers().reduce(mpq_class(1, 2)), std::invalid_argument);
    CHECK(RingSpec::integers_inverted({2}).reduce(mpq_class(3, 4)) == mpq_class(3, 4));
    CHECK(RingSpec::integers_inverted({2}).nonunit_part(12) == 3);
    CHECK(RingSpec::integers().nonunit_part(-6) == 6);
    CHECK(RingSpec::rationals().nonunit_part(6) == 1);
}

TEST_CASE("rank_and_kernel examples", "[linalg]") {
    const auto id = int_matrix(2, 2, {1, 0, 0, 1});
    const auto rk = rank_and_kernel(id, RingSpec::rationals());
    CHECK(rk.rank == 2);
    CHECK(rk.kernel_basis.empty());

    const auto ones = int_matrix(2, 2, {1, 1, 1, 1});
    const auto rk2 = rank_and_kernel(ones, RingSpec::prime_field(2));
    CHECK(rk2.rank == 1);
    REQUIRE(rk2.kernel_basis.size() == 1);
    CHECK(rk2.kernel_basis[0] == std::vector<mpq_class>{1, 1});

    const auto d1 = to_int_matrix(boundary_matrix(simplex_boundary(2), 1));
    const auto rk3 = rank_and_kernel(d1, RingSpec::rationals());
    CHECK(rk3.rank == 2);
    CHECK(rk3.kernel_basis.size() == 1);

    CHECK_THROWS_AS(rank_and_kernel(id, RingSpec::integers()), std::invalid_argument);
    CHECK_THROWS_AS(rank_and_kernel(id, RingSpec::integers_inverted({2})), std::invalid_argument);
}

TEST_CASE("smith_normal_form examples", "[linalg]") {
    CHECK(smith_normal_form(int_matrix(2, 2, {1, 0, 0, 1})).invariant_factors == factors({1, 1}));
    const auto s = smith_normal_form(int_matrix(2, 2, {2, 4, 6, 8}));
    CHECK(s.invariant_factors == factors({2, 4}));
    CHECK(s.torsion() == factors({2, 4}));
    CHECK(smith_normal_form(IntMatrix(3, 0)).rank == 0);
    CHECK(smith_normal_form(IntMatrix(2, 3, 0)).invariant_factors.empty());
    CHECK(smith_normal_form(int_matrix(1, 1, {-5})).invariant_factors == factors({5}));
}

TEST_CASE("polynomial Smith form of (1 - z) I", "[linalg]") {
    using Poly = Polynomial<RationalField>;
    const RationalField f;
    Matrix<Poly> m(2, 2, Poly(f));
    m(0, 0) = m(1, 1) = Poly::one_minus_z(f);
    const auto snf = smith_normal_form(m, f);
    REQUIRE(snf.rank == 2);
    const Poly monic = Poly::one_minus_z(f).monic();
    CHECK(snf.invariant_factors[0] == monic);
    CHECK(snf.invariant_factors[1] == monic);
    CHECK(monic.to_string() == "-1 + z");
}

TEST_CASE("polynomial Smith form: non-trivial chain", "[linalg]") {
    using Poly = Polynomial<PrimeField>;
    const PrimeField f(3);
    // diag(z, z^2 - 1) has invariant factors 1 and z(z^2 - 1).
    Matrix<Poly> m(2, 2, Poly(f));
    m(0, 0) = Poly::z(f);
    m(1, 1) = Poly(f, {f.neg(f.one()), 0, f.one()});
    const auto snf = smith_normal_form(m, f);
    REQUIRE(snf.rank == 2);
    CHECK(snf.invariant_factors[0] == Poly::constant(f, 1));
    CHECK(snf.invariant_factors[1] == Poly(f, {0, f.neg(f.one()), 0, f.one()}));
}

TEST_CASE("polynomial arithmetic", "[linalg]") {
    using Poly = Polynomial<RationalField>;
    const RationalField f;
    const Poly a(f, {1, 2, 1});  // (1 + z)^2
    const Poly b(f, {1, 1});
    const auto [q, r] = a.divmod(b);
    CHECK(q == b);
    CHECK(r.is_zero());
    CHECK(Poly(f, {0, 0, 3, 1}).without_z_powers() == Poly(f, {3, 1}));
    CHECK((a - a).degree() == -1);
    CHECK_THROWS_AS(a.divmod(Poly(f)), std::domain_error);
}

TEST_CASE("localize_invariant_factors", "[linalg]") {
    SmithForm s{factors({2, 4}), 2};
    CHECK(localize_invariant_factors(s, {2}).invariant_factors == factors({1, 1}));
    CHECK(localize_invariant_factors(s, {2}).torsion().empty());
    CHECK(localize_invariant_factors(SmithForm{factors({6}), 1}, {3}).invariant_factors == factors({2}));
    CHECK(localize_invariant_factors(SmithForm{factors({2}), 1}, {}).invariant_factors == factors({2}));
}

TEST_CASE("rp2 degree-2 boundary has a single factor 2", "[linalg]") {
    const auto d2 = to_int_matrix(boundary_matrix(rp2_six(), 2));
    REQUIRE(d2.rows() == 15);
    REQUIRE(d2.cols() == 10);
    const auto s = smith_normal_form(d2);
    CHECK(s.rank == 10);
    CHECK(std::count(s.invariant_factors.begin(), s.invariant_factors.end(), 2) == 1);
    CHECK(std::count(s.invariant_factors.begin(), s.invariant_factors.end(), 1) == 9);
}

TEST_CASE("SNF properties on random integer matrices", "[linalg][property]") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const auto m = random_matrix(rng, 8, 9);
        const auto snf = smith_normal_form(m);
        for (std::size_t i = 0; i + 1 < snf.invariant_factors.size(); ++i)
            REQUIRE(mpz_divisible_p(snf.invariant_factors[i + 1].get_mpz_t(), snf.invariant_factors[i].get_mpz_t()));
        for (const auto& d : snf.invariant_factors)
            REQUIRE(d > 0);
        REQUIRE(snf.rank <= std::min(m.rows(), m.cols()));
        REQUIRE(snf.rank == rank_and_kernel(m, RingSpec::rationals()).rank);
        for (std::uint32_t p : {2u, 3u, 5u}) {
            const auto rk = rank_and_kernel(m, RingSpec::prime_field(p));
            const auto prank = std::count_if(snf.invariant_factors.begin(), snf.invariant_factors.end(),
                                             [&](const mpz_class& d) { return !mpz_divisible_ui_p(d.get_mpz_t(), p); });
            REQUIRE(rk.rank == static_cast<std::size_t>(prank));
        }
    }
}

TEST_CASE("SNF products equal gcds of minors", "[linalg][property]") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        const auto m = random_matrix(rng, 5, 9);
        const auto snf = smith_normal_form(m);
        mpz_class product = 1;
        for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
            const mpz_class g = oracle::minors_gcd(m, k);
            if (k <= snf.rank) {
                product *= snf.invariant_factors[k - 1];
                REQUIRE(product == g);
            } else {
                REQUIRE(g == 0);
            }
        }
    }
}

TEST_CASE("kernel bases are valid", "[linalg][property]") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = random_matrix(rng, 7, 4);
        for (std::uint32_t p : {0u, 2u, 7u}) {
            const auto ring = p == 0 ? RingSpec::rationals() : RingSpec::prime_field(p);
            const auto rk = rank_and_kernel(m, ring);
            REQUIRE(rk.rank + rk.kernel_basis.size() == m.cols());
            for (const auto& v : rk.kernel_basis)
                REQUIRE(in_kernel(m, v, p));
            // Independence: the basis vectors have distinct free coordinates set to 1.
            IntMatrix basis(rk.kernel_basis.size(), m.cols());
            for (std::size_t i = 0; i < rk.kernel_basis.size(); ++i)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    basis(i, c) = mpz_class(rk.kernel_basis[i][c].get_num());
            REQUIRE(rank_and_kernel(basis, ring).rank == rk.kernel_basis.size());
        }
    }
}

TEST_CASE("matrix_invariants over each ring", "[linalg]") {
    const auto d2 = boundary_matrix(rp2_six(), 2);
    CHECK(matrix_invariants(d2, RingSpec::integers()).torsion == factors({2}));
    CHECK(matrix_invariants(d2, RingSpec::integers_inverted({2})).torsion.empty());
    CHECK(matrix_invariants(d2, RingSpec::integers_inverted({3})).torsion == factors({2}));
    CHECK(matrix_invariants(d2, RingSpec::prime_field(2)).rank == 9);
    CHECK(matrix_invariants(d2, RingSpec::prime_field(3)).rank == 10);
    CHECK(matrix_invariants(d2, RingSpec::rationals()).rank == 10);
}

TEST_CASE("ColumnSpan membership", "[linalg]") {
    // Columns (2, 0) and (0, 3).
    const auto g = int_matrix(2, 2, {2, 0, 0, 3});
    const ColumnSpan z(g, RingSpec::integers());
    CHECK(z.contains(std::vector<mpq_class>{4, 3}));
    CHECK_FALSE(z.contains(std::vector<mpq_class>{1, 0}));
    const ColumnSpan z2(g, RingSpec::integers_inverted({2}));
    CHECK(z2.contains(std::vector<mpq_class>{1, 0}));
    CHECK(z2.contains(std::vector<mpq_class>{mpq_class(1, 2), 0}));
    CHECK_FALSE(z2.contains(std::vector<mpq_class>{0, 1}));
    const ColumnSpan f3(g, RingSpec::prime_field(3));
    CHECK(f3.contains(std::vector<mpq_class>{1, 0}));
    CHECK_FALSE(f3.contains(std::vector<mpq_class>{0, 1}));
    const ColumnSpan q(int_matrix(2, 1, {1, 1}), RingSpec::rationals());
    CHECK(q.contains(std::vector<mpq_class>{mpq_class(1, 3), mpq_class(1, 3)}));
    CHECK_FALSE(q.contains(std::vector<mpq_class>{1, 0}));
    CHECK_THROWS_AS(q.contains(std::vector<mpq_class>{1}), std::invalid_argument);
}

TEST_CASE("ColumnSpan agrees with rank tests", "[linalg][property]") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        const auto m = random_matrix(rng, 5, 5);
        std::vector<mpq_class> v(m.rows());
        for (auto& x : v)
            x = static_cast<int>(rng() % 7) - 3;
        // v is in the Q-span iff appending it keeps the rank.
        IntMatrix wide(m.rows(), m.cols() + 1);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c)
                wide(r, c) = m(r, c);
            wide(r, m.cols()) = mpz_class(v[r].get_num());
        }
        const bool expected = smith_normal_form(wide).rank == smith_normal_form(m).rank;
        REQUIRE(ColumnSpan(m, RingSpec::rationals()).contains(v) == expected);
        // Over Z the span is smaller: membership needs the same invariant factors.
        const auto a = smith_normal_form(m).invariant_factors;
        const auto b = smith_normal_form(wide).invariant_factors;
        REQUIRE(ColumnSpan(m, RingSpec::integers()).contains(v) == (a == b));
    }
}

TEST_CASE("serial and parallel kernels agree", "[linalg][kernels]") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 6; ++trial) {
        // Large enough to take the threaded path.
        const std::size_t rows = 40 + rng() % 30, cols = 40 + rng() % 30;
        IntMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = rng() % 4 == 0 ? static_cast<int>(rng() % 7) - 3 : 0;
        REQUIRE(smith_diagonal(m, IntegerDomain{}, Exec::serial) == smith_diagonal(m, IntegerDomain{}, Exec::parallel));
        auto a = lift(m, RationalField{});
        auto b = a;
        REQUIRE(row_reduce(a, RationalField{}, Exec::serial) == row_reduce(b, RationalField{}, Exec::parallel));
        REQUIRE(a == b);
        const PrimeField f(5);
        auto c = lift(m, f);
        auto d = c;
        REQUIRE(row_reduce(c, f, Exec::serial) == row_reduce(d, f, Exec::parallel));
        REQUIRE(c == d);
    }
    const auto big = to_int_matrix(boundary_matrix(barycentric(rp2_six()), 2));
    REQUIRE(smith_diagonal(big, IntegerDomain{}, Exec::serial) == smith_diagonal(big, IntegerDomain{}, Exec::parallel));
}
