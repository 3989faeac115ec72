#include "dpf/chow.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dpf {

BundleSpec BundleSpec::from_upper(std::vector<int> upper) {
    std::sort(upper.begin(), upper.end());
    if (!upper.empty() && upper.front() < 0)
        throw std::invalid_argument("BundleSpec: negative weight");
    BundleSpec b;
    b.weights.reserve(upper.size() + 1);
    b.weights.push_back(0);
    b.weights.insert(b.weights.end(), upper.begin(), upper.end());
    return b;
}

long long BundleSpec::c1() const {
    return std::accumulate(weights.begin(), weights.end(), 0LL);
}

int BundleSpec::zero_multiplicity() const {
    return static_cast<int>(std::count(weights.begin(), weights.end(), 0));
}

bool ChowClass::is_zero() const {
    for (const Rat& v : c_)
        if (v != 0) return false;
    return true;
}

ChowClass ChowClass::operator+(const ChowClass& o) const {
    if (n_ != o.n_) throw std::invalid_argument("ChowClass: dimension mismatch in +");
    ChowClass r(n_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

ChowClass ChowClass::operator-(const ChowClass& o) const {
    if (n_ != o.n_) throw std::invalid_argument("ChowClass: dimension mismatch in -");
    ChowClass r(n_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

ChowClass ChowClass::operator*(const Rat& s) const {
    ChowClass r(n_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
    return r;
}

std::string ChowClass::str() const {
    std::ostringstream os;
    bool first = true;
    for (int p = n_; p >= 0; --p) {
        for (int q = 1; q >= 0; --q) {
            const Rat& v = coeff(p, q);
            if (v == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << to_frac_string(v);
            if (p > 0) os << "*H" << (p > 1 ? "^" + std::to_string(p) : "");
            if (q > 0) os << "*F";
        }
    }
    if (first) os << "0";
    return os.str();
}

ChowClass chow_zero(int n) { return ChowClass(n); }

ChowClass chow_one(int n) {
    ChowClass r(n);
    r.coeff(0, 0) = 1;
    return r;
}

ChowClass chow_monomial(int n, int p, int q) {
    if (p < 0 || p > n || q < 0 || q > 1)
        throw std::invalid_argument("chow_monomial: exponent out of range");
    ChowClass r(n);
    r.coeff(p, q) = 1;
    return r;
}

ChowClass mul(const ChowClass& x, const ChowClass& y, const BundleSpec& bundle) {
    const int n = bundle.n();
    if (x.n() != n || y.n() != n)
        throw std::invalid_argument("mul: class does not live on this bundle");
    // Raw convolution.  F^2 = 0 kills q >= 2 on the spot; overflowing
    // H-powers fold afterwards: H^{n+1} -> c1 H^n F, anything deeper dies.
    std::vector<Rat> raw(2 * (2 * n + 1), Rat(0));
    for (int p1 = 0; p1 <= n; ++p1)
        for (int q1 = 0; q1 <= 1; ++q1) {
            const Rat& a = x.coeff(p1, q1);
            if (a == 0) continue;
            for (int p2 = 0; p2 <= n; ++p2)
                for (int q2 = 0; q2 <= 1 - q1; ++q2) {
                    const Rat& b = y.coeff(p2, q2);
                    if (b == 0) continue;
                    raw[2 * (p1 + p2) + q1 + q2] += a * b;
                }
        }
    ChowClass r(n);
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= 1; ++q) r.coeff(p, q) = raw[2 * p + q];
    if (2 * (n + 1) < static_cast<int>(raw.size()))
        r.coeff(n, 1) += Rat(bundle.c1()) * raw[2 * (n + 1)];
    return r;
}

ChowClass reduce(const ChowClass& x, const BundleSpec& bundle) {
    return mul(x, chow_one(bundle.n()), bundle);
}

Rat degree(const ChowClass& x, const BundleSpec& bundle) {
    if (x.n() != bundle.n())
        throw std::invalid_argument("degree: class does not live on this bundle");
    return x.coeff(bundle.n(), 1);
}

ChowClass DivisorClass::to_chow(int n) const {
    ChowClass r(n);
    r.coeff(1, 0) = alpha;
    r.coeff(0, 1) = beta;
    return r;
}

namespace {

std::string linear_str(const Rat& a, const Rat& b, const char* x, const char* y) {
    std::ostringstream os;
    auto term = [&os](const Rat& v, const char* sym, bool lead) {
        if (v == 0) return false;
        if (!lead && v > 0) os << "+";
        if (v == -1)
            os << "-";
        else if (v != 1)
            os << to_frac_string(v) << "*";
        os << sym;
        return true;
    };
    bool wrote = term(a, x, true);
    wrote = term(b, y, !wrote) || wrote;
    if (!wrote) os << "0";
    return os.str();
}

}  // namespace

std::string DivisorClass::str() const { return linear_str(alpha, beta, "H", "F"); }
std::string CurveClass::str() const { return linear_str(lambda, sigma, "l", "s0"); }

Rat pair(const DivisorClass& d, const CurveClass& z) {
    return d.alpha * z.lambda + d.beta * z.sigma;
}

ChowClass line_class(const BundleSpec& bundle) {
    return chow_monomial(bundle.n(), bundle.n() - 1, 1);
}

ChowClass minimal_section_class(const BundleSpec& bundle) {
    std::vector<int> keep = {0};
    return subbundle_class(bundle, keep);
}

ChowClass subbundle_class(const BundleSpec& bundle, const std::vector<int>& keep) {
    const int n = bundle.n();
    std::vector<bool> kept(n + 1, false);
    for (int i : keep) kept.at(i) = true;
    ChowClass r = chow_one(n);
    for (int i = 0; i <= n; ++i) {
        if (kept[i]) continue;
        ChowClass f(n);
        f.coeff(1, 0) = 1;
        f.coeff(0, 1) = -bundle.weights[i];
        r = mul(r, f, bundle);
    }
    return r;
}

CurveClass curve_coordinates(const ChowClass& one_cycle, const BundleSpec& bundle) {
    const int n = bundle.n();
    CurveClass z;
    z.lambda = degree(mul(one_cycle, chow_monomial(n, 1, 0), bundle), bundle);
    z.sigma = degree(mul(one_cycle, chow_monomial(n, 0, 1), bundle), bundle);
    return z;
}

namespace {

// Walks all exponent vectors with |I| = a over the bundle's variables.
void for_each_monomial(const BundleSpec& bundle, int a,
                       const std::function<void(const std::vector<int>&, long long)>& fn) {
    const int nvars = bundle.n() + 1;
    std::vector<int> expo(nvars, 0);
    std::function<void(int, int, long long)> rec = [&](int var, int left, long long twist) {
        if (var == nvars - 1) {
            expo[var] = left;
            fn(expo, twist + static_cast<long long>(left) * bundle.weights[var]);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            expo[var] = e;
            rec(var + 1, left - e, twist + static_cast<long long>(e) * bundle.weights[var]);
        }
    };
    rec(0, a, 0);
}

}  // namespace

long long h0(const BundleSpec& bundle, long long a, long long b) {
    if (a < 0) throw std::invalid_argument("h0: negative H-power");
    long long total = 0;
    for_each_monomial(bundle, static_cast<int>(a), [&](const std::vector<int>&, long long tw) {
        total += std::max(0LL, tw + b + 1);
    });
    return total;
}

std::vector<std::vector<int>> admissible_monomials(const BundleSpec& bundle, int a, long long b) {
    if (a < 0) throw std::invalid_argument("admissible_monomials: negative H-power");
    std::vector<std::vector<int>> out;
    for_each_monomial(bundle, a, [&](const std::vector<int>& expo, long long tw) {
        if (tw + b >= 0) out.push_back(expo);
    });
    return out;
}

BundleSpec weighted_arena() {
    BundleSpec b;
    b.weights = {0, 0, 0, 0, 0};
    return b;
}

Rat weighted_degree(const ChowClass& x, const WeightedBundleSpec& wb) {
    if (x.n() != 4) throw std::invalid_argument("weighted_degree: expected a weighted_arena class");
    // deg(H^4) = (a + b/2 + c/3)/6, deg(H^3 F) = 1/6.
    const Rat degH4 = (Rat(wb.a) + Rat(wb.b) / 2 + Rat(wb.c) / 3) / 6;
    const Rat degH3F = Rat(1) / 6;
    return x.coeff(4, 0) * degH4 + x.coeff(3, 1) * degH3F;
}

}  // namespace dpf
