#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "torcover/linear_algebra.hpp"
#include "torcover/matrix.hpp"
#include "torcover/ring.hpp"
#include "torcover/simplicial_complex.hpp"

namespace torcover {

namespace detail {
struct FaceRingData {
    SimplicialComplex complex;
    RingSpec ring;
};
} // namespace detail

/// Homogeneous element of the exterior face ring of L over R. A degree-n
/// element stores one value per (n-1)-simplex of L, read in increasing
/// vertex order; values on other tuples follow by the alternating rule and
/// vanish off L.
class ExteriorElement {
public:
    int degree() const noexcept { return degree_; }
    const SimplicialComplex& complex() const { return data_->complex; }
    const RingSpec& ring() const { return data_->ring; }
    /// Values indexed like complex().simplices(degree() - 1).
    const std::vector<mpq_class>& values() const noexcept { return values_; }

    /// Value on an arbitrary vertex tuple.
    mpq_class value_on(const std::vector<int>& tuple) const;
    bool is_zero() const;

    ExteriorElement operator+(const ExteriorElement& o) const;
    ExteriorElement operator-(const ExteriorElement& o) const;
    ExteriorElement operator-() const;
    ExteriorElement scaled(const mpq_class& c) const;
    friend bool operator==(const ExteriorElement& a, const ExteriorElement& b);

    bool same_ring(const ExteriorElement& o) const;

private:
    friend class ExteriorFaceRing;
    friend ExteriorElement shuffle_product(const ExteriorElement&, const ExteriorElement&);
    ExteriorElement(std::shared_ptr<const detail::FaceRingData> data, int degree, std::vector<mpq_class> values);

    std::shared_ptr<const detail::FaceRingData> data_;
    int degree_ = 0;
    std::vector<mpq_class> values_;
};

/// Product of alternating functions summed over shuffles. Throws
/// std::invalid_argument for elements of different rings.
ExteriorElement shuffle_product(const ExteriorElement& f, const ExteriorElement& g);
inline ExteriorElement operator*(const ExteriorElement& f, const ExteriorElement& g) { return shuffle_product(f, g); }

/// Per degree: free rank and nonunit invariant factors.
struct GradedModuleSummary {
    struct Degree {
        int degree = 0;
        std::size_t free_rank = 0;
        std::vector<mpz_class> torsion;
    };
    std::vector<Degree> degrees;

    std::vector<std::size_t> ranks() const;
};

class QuotientByBeta;

class ExteriorFaceRing {
public:
    ExteriorFaceRing(SimplicialComplex L, RingSpec ring);

    const SimplicialComplex& complex() const { return data_->complex; }
    const RingSpec& ring() const { return data_->ring; }

    ExteriorElement zero(int degree) const;
    /// Values are reduced into the ring; throws std::invalid_argument when
    /// the length is wrong or a value is not in the ring.
    ExteriorElement element(int degree, std::vector<mpq_class> values) const;
    /// Indicator of sigma, of degree |sigma|. Throws std::invalid_argument when sigma is not in L.
    ExteriorElement dual_basis_element(const Simplex& sigma) const;
    /// Degree 1, value 1 on every vertex.
    ExteriorElement beta() const;

    /// Matrix of f -> beta * f from degree n to degree n + 1 in the dual
    /// bases: f_n rows, f_{n-1} columns, entries in the ring.
    Matrix<mpq_class> beta_mult_matrix(int n) const;

    QuotientByBeta quotient_by_beta() const;

private:
    std::shared_ptr<const detail::FaceRingData> data_;
};

/// Lambda*_R(L) / (beta) as a graded module, with coset arithmetic.
class QuotientByBeta {
public:
    explicit QuotientByBeta(const ExteriorFaceRing& ring);

    /// Degrees 0..dim(L)+1; the module vanishes above.
    const GradedModuleSummary& summary() const noexcept { return summary_; }

    /// Representative of the coset of the product.
    ExteriorElement product(const ExteriorElement& a, const ExteriorElement& b) const;
    /// Whether x lies in beta * Lambda.
    bool is_zero(const ExteriorElement& x) const;
    bool equal(const ExteriorElement& x, const ExteriorElement& y) const;

private:
    ExteriorFaceRing ring_;
    GradedModuleSummary summary_;
    // image_[n] spans beta * Lambda^{n-1} inside Lambda^n.
    std::vector<std::optional<ColumnSpan>> image_;
};

/// H_i(T_L; R): free of rank f_{i-1}, degrees 0..dim(L)+1.
GradedModuleSummary torus_homology(const SimplicialComplex& L);

} // namespace torcover
