#include "torcover/cover.hpp"

#include <stdexcept>

#include "torcover/errors.hpp"
#include "torcover/linear_algebra.hpp"

namespace torcover {

CoverChainComplex cover_chain_complex(const SimplicialComplex& L, const RingSpec& ring) {
    CoverChainComplex out;
    out.ring = ring;
    for (int n = 0; n <= L.dimension() + 1; ++n)
        out.degrees.push_back({n, L.simplices(n - 1), boundary_matrix(L, n - 1)});
    return out;
}

std::vector<BBHomologyDegree> bb_homology(const SimplicialComplex& L, const RingSpec& ring) {
    const auto h = reduced_homology(L, ring);
    std::vector<BBHomologyDegree> out;
    for (int n = 0; n <= L.dimension() + 1; ++n) {
        BBHomologyDegree d;
        d.degree = n;
        d.htilde = h.at(n - 1);
        d.group_ring_rank = d.htilde.free_rank;
        d.trivial_sub_rank = d.htilde.b_rank;
        d.trivial_quot_rank = d.htilde.z_rank;
        d.finitely_generated = d.htilde.is_zero();
        out.push_back(std::move(d));
    }
    return out;
}

long bb_homology_ranks_acyclic(const SimplicialComplex& L, const RingSpec& ring, int i) {
    if (i < 0)
        throw std::invalid_argument("degree must be >= 0");
    const auto h = reduced_homology(L, ring);
    for (int j = -1; j < i; ++j)
        if (!h.at(j).is_zero())
            throw PreconditionError("H~_j(L;" + ring.to_string() + ") = 0 for all j < " + std::to_string(i),
                                    "H~_" + std::to_string(j) + "(L;" + ring.to_string() + ") is nonzero",
                                    "use a degree i <= " + std::to_string(j) + " or a ring over which L is acyclic");
    const FVector f = f_vector(L);
    long sum = 0;
    for (int j = 0; j <= i; ++j) {
        const long term = static_cast<long>(f.at(j - 1));
        sum += (i + j) % 2 == 0 ? term : -term;
    }
    const long cycles = static_cast<long>(h.at(i - 1).z_rank);
    if (sum != cycles)
        throw std::logic_error("alternating f-vector sum disagrees with the cycle rank");
    return sum;
}

long euler_characteristic_cover(const SimplicialComplex& L) {
    if (!is_acyclic(L, RingSpec::rationals()))
        throw PreconditionError("L is Q-acyclic", "L is not Q-acyclic, so the cover has infinitely generated homology",
                                "restrict to a Q-acyclic complex");
    long chi = 0;
    for (int i = 0; i <= L.dimension(); ++i) {
        const long term = static_cast<long>(i + 1) * static_cast<long>(L.count(i));
        chi += i % 2 == 0 ? term : -term;
    }
    long betti = 0;
    for (const auto& d : bb_homology(L, RingSpec::rationals())) {
        const long rank = static_cast<long>(d.trivial_sub_rank + d.group_ring_rank);
        betti += d.degree % 2 == 0 ? rank : -rank;
    }
    if (chi != betti)
        throw std::logic_error("Euler characteristic disagrees with the Betti numbers of the cover");
    return chi;
}

bool is_fg_homology(const SimplicialComplex& L, const RingSpec& ring) {
    return is_acyclic(L, ring);
}

namespace {

void require_field(const RingSpec& ring, const char* what) {
    if (!ring.is_field())
        throw std::invalid_argument(std::string(what) + " needs a field, got " + ring.to_string());
}

template <class Field>
FieldModuleDecomposition laurent_over(const SimplicialComplex& L, const RingSpec& ring, const Field& f) {
    using Poly = Polynomial<Field>;
    const Poly deck = Poly::one_minus_z(f);
    const Poly unit_minus = Poly(f, {f.neg(f.one()), f.one()}); // z - 1, the monic associate

    auto cover_differential = [&](int n) {
        // Out of cover degree n: (1 - z) * boundary_matrix(L, n - 1).
        const Matrix<int> b = boundary_matrix(L, n - 1);
        Matrix<Poly> m(b.rows(), b.cols(), Poly(f));
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (b(r, c) != 0)
                    m(r, c) = deck.scaled(f.from_int(b(r, c)));
        return m;
    };

    FieldModuleDecomposition out;
    out.ring = ring;
    for (int n = 0; n <= L.dimension() + 1; ++n) {
        const auto incoming = smith_normal_form(cover_differential(n + 1), f, Exec::serial);
        const auto outgoing = smith_normal_form(cover_differential(n), f, Exec::serial);
        const std::size_t cycles = L.count(n - 1) - outgoing.rank;
        FieldModuleDecomposition::Degree d;
        d.degree = n;
        d.a = cycles - incoming.rank;
        for (const auto& factor : incoming.invariant_factors) {
            const Poly p = factor.without_z_powers().monic();
            if (p.degree() == 0)
                continue;
            if (p == unit_minus)
                ++d.b;
            else
                d.other_torsion.push_back(p.to_string());
        }
        out.degrees.push_back(std::move(d));
    }
    return out;
}

} // namespace

FieldModuleDecomposition field_module_decomposition(const SimplicialComplex& L, const RingSpec& field) {
    require_field(field, "field_module_decomposition");
    const auto h = reduced_homology(L, field);
    FieldModuleDecomposition out;
    out.ring = field;
    for (int n = 0; n <= L.dimension() + 1; ++n) {
        const auto hd = h.at(n - 1);
        out.degrees.push_back({n, hd.free_rank, hd.b_rank, {}});
    }
    return out;
}

FieldModuleDecomposition laurent_snf_oracle(const SimplicialComplex& L, const RingSpec& field) {
    require_field(field, "laurent_snf_oracle");
    if (field.kind() == RingSpec::Kind::rationals)
        return laurent_over(L, field, RationalField{});
    return laurent_over(L, field, PrimeField(field.characteristic()));
}

CoverCohomologyReport cover_cohomology_report(const SimplicialComplex& L, const RingSpec& ring) {
    CoverCohomologyReport out;
    out.ring = ring;
    const auto cohomology = cohomology_summary(L, ring);
    out.ring_isomorphism = is_acyclic(L, ring);
    const QuotientByBeta quotient(ExteriorFaceRing(L, ring));
    for (int n = 0; n <= L.dimension() + 1; ++n) {
        CoverCohomologyDegree d;
        d.degree = n;
        d.fixed_subring = quotient.summary().degrees[static_cast<std::size_t>(n)];
        d.cokernel_factor = cohomology.at(n - 1);
        d.cokernel_vanishes = d.cokernel_factor.is_zero();
        out.degrees.push_back(std::move(d));
    }
    return out;
}

} // namespace torcover
