#include "torcover/ring.hpp"

#include <charconv>
#include <stdexcept>

#include "torcover/errors.hpp"

namespace torcover {

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

RingSpec RingSpec::rationals() {
    RingSpec r;
    r.kind_ = Kind::rationals;
    return r;
}

RingSpec RingSpec::prime_field(std::uint32_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("prime field characteristic " + std::to_string(p) + " is not prime");
    RingSpec r;
    r.kind_ = Kind::prime_field;
    r.prime_ = p;
    return r;
}

RingSpec RingSpec::integers_inverted(std::set<std::uint32_t> primes) {
    for (auto p : primes)
        if (!is_prime(p))
            throw std::invalid_argument("inverted element " + std::to_string(p) + " is not prime");
    if (primes.empty())
        return integers();
    RingSpec r;
    r.kind_ = Kind::integers_inverted;
    r.inverted_ = std::move(primes);
    return r;
}

std::string RingSpec::to_string() const {
    switch (kind_) {
    case Kind::integers:
        return "z";
    case Kind::rationals:
        return "q";
    case Kind::prime_field:
        return "f" + std::to_string(prime_);
    case Kind::integers_inverted: {
        std::string s = "z-inv:";
        bool first = true;
        for (auto p : inverted_) {
            if (!first)
                s += ',';
            s += std::to_string(p);
            first = false;
        }
        return s;
    }
    }
    return {};
}

namespace {

mpz_class strip_primes(mpz_class d, const std::set<std::uint32_t>& primes) {
    for (auto p : primes)
        while (d != 0 && mpz_divisible_ui_p(d.get_mpz_t(), p))
            d /= p;
    return d;
}

} // namespace

mpq_class RingSpec::reduce(const mpq_class& x) const {
    switch (kind_) {
    case Kind::rationals:
        return x;
    case Kind::integers:
        if (x.get_den() != 1)
            throw std::invalid_argument("value " + x.get_str() + " is not an integer");
        return x;
    case Kind::integers_inverted:
        if (strip_primes(x.get_den(), inverted_) != 1)
            throw std::invalid_argument("value " + x.get_str() + " does not lie in " + to_string());
        return x;
    case Kind::prime_field: {
        mpz_class p = prime_;
        mpz_class den = x.get_den();
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::invalid_argument("value " + x.get_str() + " has a denominator divisible by " + std::to_string(prime_));
        mpz_class v = (x.get_num() * inv) % p;
        if (v < 0)
            v += p;
        return mpq_class(v);
    }
    }
    return x;
}

mpz_class RingSpec::nonunit_part(const mpz_class& d) const {
    mpz_class a = abs(d);
    switch (kind_) {
    case Kind::integers:
        return a;
    case Kind::integers_inverted:
        return strip_primes(a, inverted_);
    case Kind::rationals:
    case Kind::prime_field:
        return 1;
    }
    return a;
}

namespace {

std::uint32_t parse_prime(std::string_view digits, std::string_view token) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
        throw ParseError("unknown ring '" + std::string(token) + "'");
    if (!is_prime(value))
        throw ParseError("ring '" + std::string(token) + "': " + std::to_string(value) + " is not prime");
    return value;
}

} // namespace

RingSpec parse_ring(std::string_view token) {
    if (token == "z" || token == "Z")
        return RingSpec::integers();
    if (token == "q" || token == "Q")
        return RingSpec::rationals();
    if (token.size() > 1 && (token[0] == 'f' || token[0] == 'F'))
        return RingSpec::prime_field(parse_prime(token.substr(1), token));
    constexpr std::string_view inv_prefix = "z-inv:";
    if (token.starts_with(inv_prefix)) {
        std::set<std::uint32_t> primes;
        std::string_view rest = token.substr(inv_prefix.size());
        while (!rest.empty()) {
            auto comma = rest.find(',');
            primes.insert(parse_prime(rest.substr(0, comma), token));
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
            if (rest.empty())
                throw ParseError("unknown ring '" + std::string(token) + "'");
        }
        return RingSpec::integers_inverted(std::move(primes));
    }
    throw ParseError("unknown ring '" + std::string(token) + "'");
}

} // namespace torcover
