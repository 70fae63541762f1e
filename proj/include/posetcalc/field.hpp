#pragma once

#include "posetcalc/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace posetcalc {

/// Arithmetic in F_p for a runtime prime p. The default prime is 2.
struct PrimeField {
    using Elem = std::uint32_t;
    std::uint32_t p = 2;

    PrimeField() = default;
    explicit PrimeField(std::uint32_t prime) : p(prime) {
        if (prime < 2) throw std::invalid_argument("field characteristic must be prime");
        for (std::uint32_t d = 2; d * d <= prime; ++d)
            if (prime % d == 0) throw std::invalid_argument("field characteristic must be prime");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        return static_cast<Elem>(r);
    }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p);
    }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("division by zero");
        // Fermat
        Elem r = 1, base = a;
        std::uint32_t e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    bool is_zero(Elem a) const { return a == 0; }

    std::string to_string(Elem a) const { return std::to_string(a); }
    Elem parse(const std::string& s) const { return from_int(std::stoll(s)); }
    std::string name() const { return "F" + std::to_string(p); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

/// Exact rational arithmetic.
struct RationalField {
    using Elem = Rat;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long long v) const { return Rat(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("division by zero");
        return 1 / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }

    std::string to_string(const Elem& a) const { return format_rational(a); }
    Elem parse(const std::string& s) const { return parse_rational(s); }
    std::string name() const { return "Q"; }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

} // namespace posetcalc
