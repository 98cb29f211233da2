#include <catch2/catch_amalgamated.hpp>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "torcover/cohomological_dimension.hpp"
#include "torcover/errors.hpp"
#include "torcover/homology.hpp"

using namespace torcover;

TEST_CASE("tcd of the projective plane", "[cd]") {
    const auto rp2 = rp2_six();
    CHECK(tcd(rp2, RingSpec::integers()) == 2);
    CHECK(tcd(rp2, RingSpec::rationals()) == 0);
    CHECK(tcd(rp2, RingSpec::prime_field(2)) == 2);
    CHECK(tcd(rp2, RingSpec::prime_field(3)) == 0);
    CHECK(tcd(rp2, RingSpec::integers_inverted({2})) == 0);
    CHECK(tcd(rp2, RingSpec::integers_inverted({3})) == 2);
}

TEST_CASE("tcd examples", "[cd]") {
    CHECK(tcd(simplex(0), RingSpec::integers()) == 0);
    for (const auto& ring : {RingSpec::integers(), RingSpec::rationals(), RingSpec::prime_field(5),
                             RingSpec::integers_inverted({2, 3})})
        CHECK(tcd(simplex_boundary(2), ring) == 1);
    CHECK(tcd(points(3), RingSpec::integers()) == 0);
    CHECK_THROWS_AS(tcd(SimplicialComplex{}, RingSpec::integers()), PreconditionError);
}

TEST_CASE("tcd_cover", "[cd]") {
    for (const auto& ring : {RingSpec::integers(), RingSpec::rationals(), RingSpec::prime_field(2)})
        CHECK(tcd_cover(points(2), ring) == 1);
    CHECK(tcd_cover(simplex_boundary(2), RingSpec::rationals()) == 2);
    CHECK(tcd_cover(rp2_six(), RingSpec::integers()) == 3);
    CHECK_THROWS_AS(tcd_cover(simplex(0), RingSpec::integers()), PreconditionError);
    CHECK_THROWS_AS(tcd_cover(SimplicialComplex{}, RingSpec::integers()), PreconditionError);
}

TEST_CASE("cd_cover_bounds", "[cd]") {
    const auto tri = cd_cover_bounds(simplex(2), RingSpec::integers());
    CHECK(tri.exact == 2);
    CHECK(tri.lower == 2);
    CHECK(tri.upper == 2);
    CHECK(cd_cover_bounds(simplex_boundary(2), RingSpec::rationals()).exact == 2);
    CHECK(cd_cover_bounds(rp2_six(), RingSpec::prime_field(3)).exact == 2);
    CHECK(cd_cover_bounds(rp2_six(), RingSpec::integers()).exact == 3);
    // Two disjoint edges: dim 1, tcd 0, not acyclic; lower 1 and upper 2 stay open.
    const auto open = cd_cover_bounds(parse_complex("a b\nc d"), RingSpec::integers());
    CHECK_FALSE(open.exact.has_value());
    CHECK(open.lower == 1);
    CHECK(open.upper == 2);
    CHECK_THROWS_AS(cd_cover_bounds(simplex(0), RingSpec::integers()), PreconditionError);
}

TEST_CASE("cd of Bestvina-Brady groups", "[cd]") {
    const auto b = barycentric(rp2_six());
    CHECK(cd_bb_group(b, RingSpec::integers()).cd_exact == 3);
    CHECK(cd_bb_group(b, RingSpec::rationals()).cd_exact == 2);
    CHECK(cd_bb_group(simplex(1), RingSpec::integers()).cd_exact == 1);
    CHECK(cd_bb_group(cycle(4), RingSpec::rationals()).cd_exact == 2);
    const auto report = cd_bb_group(b, RingSpec::prime_field(2));
    CHECK(report.dim_L == 2);
    CHECK(report.tcd_L == 2);
    CHECK(report.cd_cover_lower == 3);
    CHECK(report.cd_cover_upper == 3);
    CHECK(report.is_flag);
    CHECK_FALSE(report.is_acyclic);
    CHECK(report.vertex_count == 31);

    try {
        cd_bb_group(simplex_boundary(2), RingSpec::integers());
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()) == "not a flag complex");
        CHECK(e.remedy().find("flag_completion") != std::string::npos);
    }
    CHECK_THROWS_AS(cd_bb_group(simplex(0), RingSpec::integers()), PreconditionError);
}

TEST_CASE("tcd properties on the corpus", "[cd][property]") {
    for (auto f : corpus::complex_classes(5)) {
        const auto L = corpus::to_complex(f, 5);
        if (L.is_empty())
            continue;
        // Over fields: top nonvanishing cohomology from cochain ranks.
        REQUIRE(tcd(L, RingSpec::rationals()) == oracle::top_cohomology_degree(L, 0));
        for (std::uint32_t p : {2u, 3u, 5u})
            REQUIRE(tcd(L, RingSpec::prime_field(p)) == oracle::top_cohomology_degree(L, p));
        // Over Z: some coefficient module sees degree n iff some prime field does.
        int over_primes = oracle::top_cohomology_degree(L, 0);
        for (std::uint32_t p : {2u, 3u, 5u, 7u})
            over_primes = std::max(over_primes, oracle::top_cohomology_degree(L, p));
        REQUIRE(tcd(L, RingSpec::integers()) == over_primes);
        REQUIRE(tcd(L, RingSpec::integers_inverted({2})) <= tcd(L, RingSpec::integers()));
        if (is_flag(L) && L.vertex_count() >= 2) {
            const int q = *cd_bb_group(L, RingSpec::rationals()).cd_exact;
            const int z = *cd_bb_group(L, RingSpec::integers()).cd_exact;
            REQUIRE(q <= z);
            if (is_acyclic(L, RingSpec::integers()))
                REQUIRE(z == L.dimension());
            if (is_acyclic(L, RingSpec::integers()))
                REQUIRE(cd_cover_bounds(L, RingSpec::integers()).exact == L.dimension());
        }
        if (L.vertex_count() >= 2) {
            const auto bounds = cd_cover_bounds(L, RingSpec::integers());
            REQUIRE(bounds.lower <= bounds.upper);
            REQUIRE(bounds.upper <= L.dimension() + 1);
        }
    }
}

TEST_CASE("barycentric subdivision preserves cd", "[cd][property]") {
    for (const char* spec : {"simplex_boundary(2)", "rp2_six", "cycle(3)", "simplex_boundary(3)", "points(3)"}) {
        const auto L = generate(spec);
        const auto B = barycentric(L);
        for (const auto& ring : {RingSpec::integers(), RingSpec::rationals(), RingSpec::prime_field(2)}) {
            INFO(spec << " " << ring.to_string());
            const int expected = std::max(L.dimension(), 1 + tcd(L, ring));
            REQUIRE(cd_bb_group(B, ring).cd_exact == expected);
        }
    }
}
