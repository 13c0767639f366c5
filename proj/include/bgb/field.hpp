#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bgb {

using Scalar = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrime = 65521;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// GF(p) for an odd prime p < 2^31.  Residues are plain uint32 in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
        if (p < 3 || p >= (1u << 31) || !is_prime(p))
            throw std::invalid_argument("field characteristic must be an odd prime below 2^31, got " +
                                        std::to_string(p));
    }

    std::uint32_t characteristic() const { return p_; }

    Scalar reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Scalar>(r < 0 ? r + p_ : r);
    }
    Scalar add(Scalar a, Scalar b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const {
        return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Scalar pow(Scalar a, std::uint64_t e) const {
        Scalar r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Scalar inv(Scalar a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        // extended Euclid; p is small enough for signed 64-bit
        std::int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        return reduce(t);
    }
    Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

    // Symmetric representative in (-p/2, p/2], used by the printer.
    std::int64_t signed_value(Scalar a) const {
        return a > (p_ - 1) / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

// Default characteristic, overridable through BGB_PRIME.
inline std::uint32_t default_prime_from_env() {
    const char* s = std::getenv("BGB_PRIME");
    if (!s || !*s) return kDefaultPrime;
    char* end = nullptr;
    unsigned long v = std::strtoul(s, &end, 10);
    if (*end != '\0') throw std::invalid_argument(std::string("BGB_PRIME is not an integer: ") + s);
    return static_cast<std::uint32_t>(v);
}

}  // namespace bgb
