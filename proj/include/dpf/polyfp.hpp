#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dpf {

/// Dense univariate polynomials over F_p, p = 2^61 - 1.  Used only for the
/// randomized generic-rank checks; degrees stay tiny.
namespace fp {

inline constexpr uint64_t P = 2305843009213693951ULL;  // 2^61 - 1

uint64_t add(uint64_t a, uint64_t b);
uint64_t sub(uint64_t a, uint64_t b);
uint64_t mul(uint64_t a, uint64_t b);
uint64_t inv(uint64_t a);

struct Poly {
    std::vector<uint64_t> c;  // c[i] is the t^i coefficient

    bool zero() const;
    int deg() const;  // -1 for the zero polynomial
    void trim();
};

Poly mul(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);

/// Dense polynomial of the given degree with uniform nonzero coefficients;
/// negative degree gives the zero polynomial.
Poly random_poly(int degree, std::mt19937_64& rng);

}  // namespace fp
}  // namespace dpf
