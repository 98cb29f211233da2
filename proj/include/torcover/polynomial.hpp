#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace torcover {

/// Univariate polynomial in z over a field policy. Coefficients are stored
/// lowest degree first with no trailing zeros; the zero polynomial is empty.
template <class Field>
class Polynomial {
public:
    using coeff_type = typename Field::value_type;

    explicit Polynomial(Field field = Field{}) : field_(std::move(field)) {}
    Polynomial(Field field, std::vector<coeff_type> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        trim();
    }

    static Polynomial constant(const Field& f, const coeff_type& c) { return Polynomial(f, {c}); }
    /// 1 - z, the deck-transformation factor of the cover differential.
    static Polynomial one_minus_z(const Field& f) { return Polynomial(f, {f.one(), f.neg(f.one())}); }
    static Polynomial z(const Field& f) { return Polynomial(f, {f.zero(), f.one()}); }

    const Field& field() const noexcept { return field_; }
    const std::vector<coeff_type>& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const coeff_type& leading() const { return coeffs_.back(); }
    coeff_type coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : field_.zero(); }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), field_.zero());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] = field_.add(coeffs_[k], o.coeffs_[k]);
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), field_.zero());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] = field_.sub(coeffs_[k], o.coeffs_[k]);
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) { return Polynomial(a.field_) - a; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero())
            return Polynomial(a.field_);
        const Field& f = a.field_;
        std::vector<coeff_type> out(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (f.is_zero(a.coeffs_[i]))
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
        }
        return Polynomial(f, std::move(out));
    }

    Polynomial scaled(const coeff_type& c) const {
        std::vector<coeff_type> out(coeffs_.size());
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            out[k] = field_.mul(coeffs_[k], c);
        return Polynomial(field_, std::move(out));
    }

    /// Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero())
            throw std::domain_error("polynomial division by zero");
        const Field& f = field_;
        Polynomial r = *this;
        if (r.degree() < d.degree())
            return {Polynomial(f), std::move(r)};
        std::vector<coeff_type> q(static_cast<std::size_t>(r.degree() - d.degree() + 1), f.zero());
        const coeff_type lead_inv = f.inv(d.leading());
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
            const coeff_type c = f.mul(r.leading(), lead_inv);
            q[shift] = c;
            for (std::size_t k = 0; k < d.coeffs_.size(); ++k)
                f.sub_mul(r.coeffs_[k + shift], c, d.coeffs_[k]);
            r.trim();
        }
        return {Polynomial(f, std::move(q)), std::move(r)};
    }

    /// The monic associate (zero stays zero).
    Polynomial monic() const {
        if (is_zero())
            return *this;
        return scaled(field_.inv(leading()));
    }

    /// Removes factors of z, which are units in the Laurent ring F[z, 1/z].
    Polynomial without_z_powers() const {
        std::size_t k = 0;
        while (k < coeffs_.size() && field_.is_zero(coeffs_[k]))
            ++k;
        return Polynomial(field_, std::vector<coeff_type>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const {
        if (is_zero())
            return "0";
        std::string s;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (field_.is_zero(coeffs_[k]))
                continue;
            if (!s.empty())
                s += " + ";
            const bool unit = field_.is_one(coeffs_[k]);
            if (k == 0 || !unit)
                s += field_.to_string(coeffs_[k]);
            if (k > 0) {
                if (!unit)
                    s += '*';
                s += 'z';
                if (k > 1)
                    s += '^' + std::to_string(k);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && field_.is_zero(coeffs_.back()))
            coeffs_.pop_back();
    }

    Field field_;
    std::vector<coeff_type> coeffs_;
};

} // namespace torcover
