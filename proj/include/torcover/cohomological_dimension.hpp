#pragma once

#include <cstddef>
#include <optional>

#include "torcover/ring.hpp"
#include "torcover/simplicial_complex.hpp"

namespace torcover {

/// Trivial cohomological dimension of nonempty L over R: the top degree n
/// with H^n(L; A) != 0 for some R-module A. Decided from unreduced homology:
/// H_n(L;R) != 0 (torsion included) or H_{n-1}(L;R) has torsion. Throws PreconditionError for
/// the empty complex.
int tcd(const SimplicialComplex& L, const RingSpec& ring);

/// max(dim L, 1 + tcd(L)). Needs at least two vertices.
int tcd_cover(const SimplicialComplex& L, const RingSpec& ring);

struct CdBounds {
    int lower = 0;
    int upper = 0;
    std::optional<int> exact;
};

/// Bounds on cd of the cover. Needs at least two vertices.
CdBounds cd_cover_bounds(const SimplicialComplex& L, const RingSpec& ring);

struct CdReport {
    RingSpec ring;
    int dim_L = -1;
    int tcd_L = -1;
    int tcd_cover = 0;
    int cd_cover_lower = 0;
    int cd_cover_upper = 0;
    std::optional<int> cd_exact;
    bool is_flag = false;
    bool is_acyclic = false;
    std::size_t vertex_count = 0;
};

/// cd_R of the Bestvina-Brady group of a flag complex with at least two
/// vertices: max(dim L, 1 + tcd(L)). Throws PreconditionError otherwise.
CdReport cd_bb_group(const SimplicialComplex& L, const RingSpec& ring);

} // namespace torcover
