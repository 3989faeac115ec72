#include "dpf/polyfp.hpp"

#include <stdexcept>

namespace dpf::fp {

uint64_t add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    if (s >= P) s -= P;
    return s;
}

uint64_t sub(uint64_t a, uint64_t b) { return add(a, P - b); }

uint64_t mul(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % P);
}

uint64_t inv(uint64_t a) {
    if (a == 0) throw std::domain_error("fp::inv(0)");
    uint64_t r = 1, e = P - 2;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

bool Poly::zero() const {
    for (uint64_t v : c)
        if (v) return false;
    return true;
}

int Poly::deg() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (c[i]) return i;
    return -1;
}

void Poly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = add(r.c[i + j], mul(a.c[i], b.c[j]));
    }
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), 0);
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = fp::sub(r.c[i], b.c[i]);
    r.trim();
    return r;
}

Poly gcd(Poly a, Poly b) {
    a.trim();
    b.trim();
    while (!b.zero()) {
        // a mod b
        const int db = b.deg();
        const uint64_t lead = inv(b.c[db]);
        while (a.deg() >= db) {
            const int shift = a.deg() - db;
            const uint64_t f = mul(a.c[a.deg()], lead);
            for (int i = 0; i <= db; ++i)
                a.c[i + shift] = fp::sub(a.c[i + shift], mul(f, b.c[i]));
            a.trim();
        }
        std::swap(a, b);
    }
    return a;
}

Poly random_poly(int degree, std::mt19937_64& rng) {
    if (degree < 0) return {};
    std::uniform_int_distribution<uint64_t> dist(1, P - 1);
    Poly r;
    r.c.resize(degree + 1);
    for (auto& v : r.c) v = dist(rng);
    return r;
}

}  // namespace dpf::fp
