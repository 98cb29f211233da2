#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace torcover {

/// Coefficient ring selector: the integers, the rationals, a prime field,
/// or the integers with a finite set of primes inverted.
///
/// IntegersInverted with an empty prime set is normalized to Integers.
class RingSpec {
public:
    enum class Kind { integers, rationals, prime_field, integers_inverted };

    RingSpec() = default;

    static RingSpec integers() { return RingSpec{}; }
    static RingSpec rationals();
    static RingSpec prime_field(std::uint32_t p);
    static RingSpec integers_inverted(std::set<std::uint32_t> primes);

    Kind kind() const noexcept { return kind_; }
    /// Characteristic of a prime field; 0 otherwise.
    std::uint32_t characteristic() const noexcept { return prime_; }
    const std::set<std::uint32_t>& inverted_primes() const noexcept { return inverted_; }

    bool is_field() const noexcept { return kind_ == Kind::rationals || kind_ == Kind::prime_field; }
    /// True for the rings handled by integer Smith normal form (Z and Z[S^-1]).
    bool is_integral_pid() const noexcept { return kind_ == Kind::integers || kind_ == Kind::integers_inverted; }

    /// Token form accepted by parse_ring: z, q, f<p>, z-inv:<p>,<p>...
    std::string to_string() const;

    /// Maps a rational to its canonical representative in this ring.
    /// Throws std::invalid_argument when the value does not lie in the ring.
    mpq_class reduce(const mpq_class& x) const;

    /// Part of a nonzero integer invariant factor that is not a unit in this ring
    /// (always 1 over a field).
    mpz_class nonunit_part(const mpz_class& d) const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

private:
    Kind kind_ = Kind::integers;
    std::uint32_t prime_ = 0;
    std::set<std::uint32_t> inverted_;
};

bool is_prime(std::uint64_t n);

/// Parses z, q, f2, f3, ..., z-inv:2,3. Throws ParseError on anything else.
RingSpec parse_ring(std::string_view token);

} // namespace torcover
