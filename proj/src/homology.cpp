#include "torcover/homology.hpp"

#include "torcover/linear_algebra.hpp"

namespace torcover {

Matrix<int> boundary_matrix(const SimplicialComplex& L, int d) {
    const auto& cols = L.simplices(d);
    Matrix<int> m(L.count(d - 1), cols.size(), 0);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Simplex& s = cols[c];
        for (std::size_t j = 0; j < s.size(); ++j) {
            Simplex face;
            face.reserve(s.size() - 1);
            for (std::size_t k = 0; k < s.size(); ++k)
                if (k != j)
                    face.push_back(s[k]);
            m(*L.index_of(face), c) = j % 2 == 0 ? 1 : -1;
        }
    }
    return m;
}

ChainComplexData augmented_chain_complex(const SimplicialComplex& L, const RingSpec& ring) {
    ChainComplexData out;
    out.ring = ring;
    for (int d = -1; d <= L.dimension(); ++d)
        out.bases.push_back(L.simplices(d));
    for (int d = 0; d <= L.dimension(); ++d)
        out.boundaries.push_back(boundary_matrix(L, d));
    return out;
}

HomologyDegree HomologySummary::at(int d) const {
    for (const auto& h : degrees)
        if (h.degree == d)
            return h;
    HomologyDegree zero;
    zero.degree = d;
    return zero;
}

bool HomologySummary::is_zero() const {
    for (const auto& h : degrees)
        if (!h.is_zero())
            return false;
    return true;
}

namespace {

// Entry d + 1 describes boundary_matrix(L, d), d = -1..dim+1.
std::vector<MatrixInvariants> boundary_invariants(const SimplicialComplex& L, const RingSpec& ring, Exec exec,
                                                  bool transpose) {
    std::vector<MatrixInvariants> out;
    for (int d = -1; d <= L.dimension() + 1; ++d) {
        Matrix<int> m = boundary_matrix(L, d);
        out.push_back(matrix_invariants(transpose ? m.transposed() : m, ring, exec));
    }
    return out;
}

} // namespace

HomologySummary reduced_homology(const SimplicialComplex& L, const RingSpec& ring, Exec exec) {
    const auto inv = boundary_invariants(L, ring, exec, false);
    auto rank_out = [&](int d) { return inv[static_cast<std::size_t>(d + 1)].rank; };
    HomologySummary out;
    out.ring = ring;
    for (int d = -1; d <= L.dimension(); ++d) {
        HomologyDegree h;
        h.degree = d;
        h.z_rank = L.count(d) - rank_out(d);
        h.b_rank = rank_out(d + 1);
        h.free_rank = h.z_rank - h.b_rank;
        h.torsion = inv[static_cast<std::size_t>(d + 2)].torsion;
        out.degrees.push_back(std::move(h));
    }
    return out;
}

bool is_acyclic(const SimplicialComplex& L, const RingSpec& ring) {
    return reduced_homology(L, ring).is_zero();
}

HomologySummary cohomology_summary(const SimplicialComplex& L, const RingSpec& ring, Exec exec) {
    // Coboundary out of degree d is the transpose of the boundary into d.
    const auto inv = boundary_invariants(L, ring, exec, true);
    auto coboundary = [&](int d) -> const MatrixInvariants& { return inv[static_cast<std::size_t>(d + 2)]; };
    HomologySummary out;
    out.ring = ring;
    for (int d = -1; d <= L.dimension(); ++d) {
        HomologyDegree h;
        h.degree = d;
        h.z_rank = L.count(d) - coboundary(d).rank;
        h.b_rank = d >= 0 ? coboundary(d - 1).rank : 0;
        h.free_rank = h.z_rank - h.b_rank;
        if (d >= 0)
            h.torsion = coboundary(d - 1).torsion;
        out.degrees.push_back(std::move(h));
    }
    return out;
}

} // namespace torcover
