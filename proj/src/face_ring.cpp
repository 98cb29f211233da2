#include "torcover/face_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace torcover {

namespace {

// Number of pairs (a in s, b in t) with a > b; both sorted and disjoint.
std::size_t inversions(const Simplex& s, const Simplex& t) {
    std::size_t count = 0;
    std::size_t j = 0;
    for (int a : s) {
        while (j < t.size() && t[j] < a)
            ++j;
        count += j;
    }
    return count;
}

bool disjoint(const Simplex& s, const Simplex& t) {
    std::size_t i = 0, j = 0;
    while (i < s.size() && j < t.size()) {
        if (s[i] == t[j])
            return false;
        if (s[i] < t[j])
            ++i;
        else
            ++j;
    }
    return true;
}

} // namespace

ExteriorElement::ExteriorElement(std::shared_ptr<const detail::FaceRingData> data, int degree,
                                 std::vector<mpq_class> values)
    : data_(std::move(data)), degree_(degree), values_(std::move(values)) {}

mpq_class ExteriorElement::value_on(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != degree_)
        throw std::invalid_argument("tuple length does not match the degree");
    Simplex s = tuple;
    bool odd = false;
    // Insertion sort, tracking the permutation parity.
    for (std::size_t i = 1; i < s.size(); ++i)
        for (std::size_t k = i; k > 0 && s[k - 1] > s[k]; --k) {
            std::swap(s[k - 1], s[k]);
            odd = !odd;
        }
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        return 0;
    auto idx = complex().index_of(s);
    if (!idx)
        return 0;
    const mpq_class& v = values_[*idx];
    return odd ? ring().reduce(-v) : v;
}

bool ExteriorElement::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const mpq_class& v) { return sgn(v) == 0; });
}

bool ExteriorElement::same_ring(const ExteriorElement& o) const {
    if (data_ == o.data_)
        return true;
    return ring() == o.ring() && complex().vertices() == o.complex().vertices() &&
           same_complex(complex(), o.complex());
}

namespace {

void require_compatible(const ExteriorElement& a, const ExteriorElement& b, bool same_degree) {
    if (!a.same_ring(b))
        throw std::invalid_argument("elements belong to different face rings");
    if (same_degree && a.degree() != b.degree())
        throw std::invalid_argument("elements have different degrees");
}

} // namespace

ExteriorElement ExteriorElement::operator+(const ExteriorElement& o) const {
    require_compatible(*this, o, true);
    std::vector<mpq_class> v(values_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = ring().reduce(values_[i] + o.values_[i]);
    return {data_, degree_, std::move(v)};
}

ExteriorElement ExteriorElement::operator-(const ExteriorElement& o) const {
    return *this + (-o);
}

ExteriorElement ExteriorElement::operator-() const {
    return scaled(-1);
}

ExteriorElement ExteriorElement::scaled(const mpq_class& c) const {
    const mpq_class k = ring().reduce(c);
    std::vector<mpq_class> v(values_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = ring().reduce(values_[i] * k);
    return {data_, degree_, std::move(v)};
}

bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
    return a.same_ring(b) && a.degree_ == b.degree_ && a.values_ == b.values_;
}

ExteriorElement shuffle_product(const ExteriorElement& f, const ExteriorElement& g) {
    require_compatible(f, g, false);
    const SimplicialComplex& L = f.complex();
    const int degree = f.degree() + g.degree();
    std::vector<mpq_class> out(L.count(degree - 1), 0);
    const auto& left = L.simplices(f.degree() - 1);
    const auto& right = L.simplices(g.degree() - 1);
    if (!out.empty())
        for (std::size_t i = 0; i < left.size(); ++i) {
            if (sgn(f.values()[i]) == 0)
                continue;
            for (std::size_t j = 0; j < right.size(); ++j) {
                if (sgn(g.values()[j]) == 0 || !disjoint(left[i], right[j]))
                    continue;
                Simplex u;
                u.reserve(left[i].size() + right[j].size());
                std::merge(left[i].begin(), left[i].end(), right[j].begin(), right[j].end(), std::back_inserter(u));
                auto idx = L.index_of(u);
                if (!idx)
                    continue;
                const mpq_class term = f.values()[i] * g.values()[j];
                if (inversions(left[i], right[j]) % 2 == 0)
                    out[*idx] += term;
                else
                    out[*idx] -= term;
            }
        }
    for (auto& v : out)
        v = f.ring().reduce(v);
    return {f.data_, degree, std::move(out)};
}

std::vector<std::size_t> GradedModuleSummary::ranks() const {
    std::vector<std::size_t> out;
    for (const auto& d : degrees)
        out.push_back(d.free_rank);
    return out;
}

// ---------------------------------------------------------------------------

ExteriorFaceRing::ExteriorFaceRing(SimplicialComplex L, RingSpec ring)
    : data_(std::make_shared<const detail::FaceRingData>(detail::FaceRingData{std::move(L), std::move(ring)})) {}

ExteriorElement ExteriorFaceRing::zero(int degree) const {
    if (degree < 0)
        throw std::invalid_argument("negative degree");
    return {data_, degree, std::vector<mpq_class>(complex().count(degree - 1), 0)};
}

ExteriorElement ExteriorFaceRing::element(int degree, std::vector<mpq_class> values) const {
    if (degree < 0)
        throw std::invalid_argument("negative degree");
    if (values.size() != complex().count(degree - 1))
        throw std::invalid_argument("value count does not match the number of simplices");
    for (auto& v : values)
        v = ring().reduce(v);
    return {data_, degree, std::move(values)};
}

ExteriorElement ExteriorFaceRing::dual_basis_element(const Simplex& sigma) const {
    auto idx = complex().index_of(sigma);
    if (!idx)
        throw std::invalid_argument("dual basis element: not a simplex of L");
    auto out = zero(static_cast<int>(sigma.size()));
    out.values_[*idx] = 1;
    return out;
}

ExteriorElement ExteriorFaceRing::beta() const {
    return {data_, 1, std::vector<mpq_class>(complex().count(0), 1)};
}

Matrix<mpq_class> ExteriorFaceRing::beta_mult_matrix(int n) const {
    if (n < 0)
        return Matrix<mpq_class>(complex().count(n), 0);
    const auto b = beta();
    const auto& cols = complex().simplices(n - 1);
    Matrix<mpq_class> m(complex().count(n), cols.size(), 0);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto image = shuffle_product(b, dual_basis_element(cols[c]));
        for (std::size_t r = 0; r < m.rows(); ++r)
            m(r, c) = image.values()[r];
    }
    return m;
}

QuotientByBeta ExteriorFaceRing::quotient_by_beta() const {
    return QuotientByBeta(*this);
}

// ---------------------------------------------------------------------------

namespace {

IntMatrix integral(const Matrix<mpq_class>& m) {
    return m.map([](const mpq_class& x) {
        if (x.get_den() != 1)
            throw std::logic_error("non-integral entry");
        return mpz_class(x.get_num());
    });
}

} // namespace

QuotientByBeta::QuotientByBeta(const ExteriorFaceRing& ring) : ring_(ring) {
    const int top = ring.complex().dimension() + 1;
    for (int n = 0; n <= top; ++n) {
        const IntMatrix image = integral(ring.beta_mult_matrix(n - 1));
        const auto inv = matrix_invariants(image, ring.ring());
        GradedModuleSummary::Degree d;
        d.degree = n;
        d.free_rank = image.rows() - inv.rank;
        d.torsion = inv.torsion;
        summary_.degrees.push_back(std::move(d));
        image_.emplace_back(std::in_place, image, ring.ring());
    }
}

ExteriorElement QuotientByBeta::product(const ExteriorElement& a, const ExteriorElement& b) const {
    return shuffle_product(a, b);
}

bool QuotientByBeta::is_zero(const ExteriorElement& x) const {
    if (!x.same_ring(ring_.beta()))
        throw std::invalid_argument("element of a different face ring");
    if (x.degree() >= static_cast<int>(image_.size()))
        return true;
    return image_[static_cast<std::size_t>(x.degree())]->contains(x.values());
}

bool QuotientByBeta::equal(const ExteriorElement& x, const ExteriorElement& y) const {
    return is_zero(x - y);
}

GradedModuleSummary torus_homology(const SimplicialComplex& L) {
    GradedModuleSummary out;
    for (int i = 0; i <= L.dimension() + 1; ++i)
        out.degrees.push_back({i, L.count(i - 1), {}});
    return out;
}

} // namespace torcover
