#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "torcover/kernels.hpp"
#include "torcover/matrix.hpp"
#include "torcover/ring.hpp"
#include "torcover/simplicial_complex.hpp"

namespace torcover {

/// Boundary map from d-simplices to (d-1)-simplices of L, as an
/// f_{d-1} x f_d matrix with entries (-1)^j for the face missing the j-th
/// vertex. d = 0 is the augmentation (a row of ones). Out of range degrees
/// give a matrix with zero rows or columns.
Matrix<int> boundary_matrix(const SimplicialComplex& L, int d);

/// Augmented chain complex C^+_*(L; R).
struct ChainComplexData {
    RingSpec ring;
    /// bases[d + 1] = d-simplices, d = -1..dim.
    std::vector<std::vector<Simplex>> bases;
    /// boundaries[d] = boundary_matrix(L, d), d = 0..dim.
    std::vector<Matrix<int>> boundaries;

    int top_degree() const { return static_cast<int>(bases.size()) - 2; }
};

ChainComplexData augmented_chain_complex(const SimplicialComplex& L, const RingSpec& ring);

struct HomologyDegree {
    int degree = 0;
    std::size_t free_rank = 0;
    /// Nonunit invariant factors (empty over a field).
    std::vector<mpz_class> torsion;
    /// Rank of the cycles and of the boundaries in this degree.
    std::size_t z_rank = 0;
    std::size_t b_rank = 0;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
};

/// Reduced (co)homology in degrees -1..dim.
struct HomologySummary {
    RingSpec ring;
    std::vector<HomologyDegree> degrees;

    /// Entry for degree d; a zero entry outside the stored range.
    HomologyDegree at(int d) const;
    bool is_zero() const;
};

HomologySummary reduced_homology(const SimplicialComplex& L, const RingSpec& ring, Exec exec = Exec::parallel);
/// Every reduced homology group vanishes, degree -1 included.
bool is_acyclic(const SimplicialComplex& L, const RingSpec& ring);
/// Reduced cohomology from the transposed boundary matrices. For degree d,
/// z_rank is the rank of the cocycles and b_rank that of the coboundaries.
HomologySummary cohomology_summary(const SimplicialComplex& L, const RingSpec& ring, Exec exec = Exec::parallel);

} // namespace torcover
