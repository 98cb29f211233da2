#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "torcover/face_ring.hpp"
#include "torcover/homology.hpp"
#include "torcover/matrix.hpp"
#include "torcover/ring.hpp"
#include "torcover/simplicial_complex.hpp"

namespace torcover {

/// Chain complex of the infinite cyclic cover over the group ring of the
/// deck group: in degree n the free module on the (n-1)-simplices of L, with
/// differential (1 - z) tensor the boundary of L.
struct CoverChainComplex {
    struct Degree {
        int degree = 0;
        std::vector<Simplex> base;
        /// boundary_matrix(L, n - 1), the simplicial part of the differential
        /// out of degree n.
        Matrix<int> boundary;
    };
    RingSpec ring;
    std::string deck_generator = "z";
    std::vector<Degree> degrees; // n = 0..dim(L)+1
};

CoverChainComplex cover_chain_complex(const SimplicialComplex& L, const RingSpec& ring);

/// H_n of the cover, described by the two short exact sequences
///   0 -> B+_{n-1} -> H_n -> R[Z] (x) H~_{n-1} -> 0
///   0 -> R[Z] (x) H~_{n-1} -> H_n -> Z+_{n-1} -> 0
/// through their ranks. The extensions themselves are not resolved.
struct BBHomologyDegree {
    int degree = 0;
    std::size_t group_ring_rank = 0;
    /// H~_{n-1}(L; R).
    HomologyDegree htilde;
    std::size_t trivial_sub_rank = 0;
    std::size_t trivial_quot_rank = 0;
    bool finitely_generated = false;
};

/// Degrees 0..dim(L)+1.
std::vector<BBHomologyDegree> bb_homology(const SimplicialComplex& L, const RingSpec& ring);

/// Rank of H_i of the cover as a free R-module when H~_j(L;R) = 0 for all
/// j < i, from the alternating f-vector sum. Throws PreconditionError naming
/// the first nonvanishing group.
long bb_homology_ranks_acyclic(const SimplicialComplex& L, const RingSpec& ring, int i);

/// sum_{i>=0} (-1)^i (i+1) f_i. Requires L to be Q-acyclic.
long euler_characteristic_cover(const SimplicialComplex& L);

/// Homology of the cover is finitely generated over R exactly when L is R-acyclic.
bool is_fg_homology(const SimplicialComplex& L, const RingSpec& ring);

/// Over a field F: H_n(cover; F) = F[z,1/z]^a (+) (F[z,1/z]/(1-z))^b.
struct FieldModuleDecomposition {
    struct Degree {
        int degree = 0;
        std::size_t a = 0;
        std::size_t b = 0;
        /// Torsion factors other than (1 - z); always empty for a correct computation.
        std::vector<std::string> other_torsion;
        friend bool operator==(const Degree&, const Degree&) = default;
    };
    RingSpec ring;
    std::vector<Degree> degrees; // n = 0..dim(L)+1

    friend bool operator==(const FieldModuleDecomposition&, const FieldModuleDecomposition&) = default;
};

/// From the simplicial homology of L. Throws std::invalid_argument for a non-field.
FieldModuleDecomposition field_module_decomposition(const SimplicialComplex& L, const RingSpec& field);

/// Directly from the cover chain complex: Smith normal form over F[z] of the
/// incoming and outgoing differentials, with z inverted afterwards.
/// Throws std::invalid_argument for a non-field.
FieldModuleDecomposition laurent_snf_oracle(const SimplicialComplex& L, const RingSpec& field);

struct CoverCohomologyDegree {
    int degree = 0;
    /// Degree-n part of Lambda/(beta): the Z-fixed subring.
    GradedModuleSummary::Degree fixed_subring;
    /// H^{n-1}(L; R); the cokernel of the fixed part is a Z-indexed product of
    /// copies of it.
    HomologyDegree cokernel_factor;
    bool cokernel_vanishes = true;
};

struct CoverCohomologyReport {
    RingSpec ring;
    /// L is R-acyclic, so the whole cohomology ring is Lambda/(beta).
    bool ring_isomorphism = false;
    std::vector<CoverCohomologyDegree> degrees; // n = 0..dim(L)+1
};

CoverCohomologyReport cover_cohomology_report(const SimplicialComplex& L, const RingSpec& ring);

} // namespace torcover
