#include "torcover/cohomological_dimension.hpp"

#include <algorithm>
#include <string>

#include "torcover/errors.hpp"
#include "torcover/homology.hpp"

namespace torcover {

int tcd(const SimplicialComplex& L, const RingSpec& ring) {
    if (L.is_empty())
        throw PreconditionError("L is nonempty", "tcd is not defined for the empty complex", "add a vertex");
    const auto h = reduced_homology(L, ring);
    // Unreduced H_n differs from the reduced group only by a free summand in degree 0.
    auto nonzero = [&](int n) {
        return n == 0 || !h.at(n).is_zero() || !h.at(n - 1).torsion.empty();
    };
    for (int n = L.dimension() + 1; n > 0; --n)
        if (nonzero(n))
            return n;
    return 0;
}

namespace {

void require_two_vertices(const SimplicialComplex& L) {
    if (L.vertex_count() < 2)
        throw PreconditionError("L has at least two vertices",
                                L.is_empty() ? "L is empty" : "L is a single point, the excluded case",
                                "use a complex with at least two vertices");
}

} // namespace

int tcd_cover(const SimplicialComplex& L, const RingSpec& ring) {
    require_two_vertices(L);
    return std::max(L.dimension(), 1 + tcd(L, ring));
}

CdBounds cd_cover_bounds(const SimplicialComplex& L, const RingSpec& ring) {
    require_two_vertices(L);
    const int dim = L.dimension();
    const int t = tcd_cover(L, ring);
    CdBounds out{std::max(dim, t), dim + 1, std::nullopt};
    if (is_acyclic(L, ring))
        out.exact = dim;
    else if (t == dim + 1)
        out.exact = t;
    if (out.exact)
        out.lower = out.upper = *out.exact;
    return out;
}

CdReport cd_bb_group(const SimplicialComplex& L, const RingSpec& ring) {
    require_two_vertices(L);
    if (!is_flag(L))
        throw PreconditionError("L is a flag complex", "not a flag complex",
                                "apply flag_completion, or use barycentric subdivision to keep the homotopy type");
    CdReport out;
    out.ring = ring;
    out.dim_L = L.dimension();
    out.tcd_L = tcd(L, ring);
    out.tcd_cover = std::max(out.dim_L, 1 + out.tcd_L);
    out.cd_exact = out.tcd_cover;
    out.cd_cover_lower = out.cd_cover_upper = out.tcd_cover;
    out.is_flag = true;
    out.is_acyclic = is_acyclic(L, ring);
    out.vertex_count = L.vertex_count();
    return out;
}

} // namespace torcover
