#include "modp.hpp"

#include <stdexcept>

namespace amz::detail {

uint64_t powm(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invm(uint64_t a, uint64_t p) {
    if (a % p == 0) throw std::domain_error("inverse of zero mod p");
    return powm(a, p - 2, p);
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % q == 0) return n == q;
    }
    // Deterministic Miller-Rabin for 64-bit inputs. Witness products stay in
    // range because callers only pass 31-bit candidates, but use __int128 to
    // keep the routine valid for any 64-bit n.
    auto mulm128 = [](uint64_t a, uint64_t b, uint64_t m) -> uint64_t {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
    };
    auto powm128 = [&](uint64_t a, uint64_t e, uint64_t m) {
        uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulm128(r, a, m);
            a = mulm128(a, a, m);
            e >>= 1;
        }
        return r;
    };
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powm128(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulm128(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

uint64_t engine_prime(size_t index) {
    static std::vector<uint64_t> cache;
    static uint64_t next_candidate = (1ull << 31) - 1;
    while (cache.size() <= index) {
        while (!is_prime_u64(next_candidate)) --next_candidate;
        cache.push_back(next_candidate);
        --next_candidate;
    }
    return cache[index];
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(r);
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, uint64_t p) {
    FpPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) r[i] = subm(r[i], b[i], p);
    fp_trim(r);
    return r;
}

FpPoly fp_derivative(const FpPoly& a, uint64_t p) {
    if (a.size() <= 1) return {};
    FpPoly r(a.size() - 1);
    for (size_t k = 1; k < a.size(); ++k) r[k - 1] = mulm(a[k], k % p, p);
    fp_trim(r);
    return r;
}

FpPoly fp_monic(FpPoly a, uint64_t p) {
    fp_trim(a);
    if (a.empty()) return a;
    const uint64_t u = invm(a.back(), p);
    for (uint64_t& c : a) c = mulm(c, u, p);
    return a;
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, uint64_t p) {
    fp_trim(a);
    if (b.empty()) throw std::domain_error("fp_rem by zero");
    const uint64_t linv = invm(b.back(), p);
    while (a.size() >= b.size()) {
        const uint64_t q = mulm(a.back(), linv, p);
        const size_t off = a.size() - b.size();
        if (q != 0) {
            for (size_t j = 0; j < b.size(); ++j) a[off + j] = subm(a[off + j], mulm(q, b[j], p), p);
        }
        a.pop_back();
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(std::move(a), p);
}

std::optional<FpPoly> fp_inverse_mod(const FpPoly& a, const FpPoly& m, uint64_t p) {
    // Half-extended Euclid: r0 = s0*a, r1 = s1*a (mod m).
    FpPoly r0 = m, r1 = fp_rem(a, m, p);
    FpPoly s0, s1{1};
    while (!r1.empty()) {
        // Quotient of r0 by r1.
        FpPoly q;
        FpPoly rem = r0;
        const uint64_t linv = invm(r1.back(), p);
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size()) {
            const uint64_t qc = mulm(rem.back(), linv, p);
            const size_t off = rem.size() - r1.size();
            q[off] = qc;
            if (qc != 0) {
                for (size_t j = 0; j < r1.size(); ++j) rem[off + j] = subm(rem[off + j], mulm(qc, r1[j], p), p);
            }
            rem.pop_back();
            fp_trim(rem);
            if (rem.empty()) break;
        }
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) return std::nullopt;
    const uint64_t scale = invm(r0[0], p);
    for (uint64_t& c : s0) c = mulm(c, scale, p);
    return fp_rem(std::move(s0), m, p);
}

FpPoly fp_from_zpoly(const ZPoly& a, uint64_t p) {
    FpPoly r(a.size());
    mpz_class t;
    for (size_t i = 0; i < a.size(); ++i) {
        t = a[i] % static_cast<long>(p);
        long v = t.get_si();
        if (v < 0) v += static_cast<long>(p);
        r[i] = static_cast<uint64_t>(v);
    }
    fp_trim(r);
    return r;
}

std::optional<FpPoly> fp_from_poly(const Poly& a, uint64_t p) {
    FpPoly r(a.coeffs().size());
    mpz_class t;
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        const Rat& c = a.coeffs()[i];
        t = c.get_den() % static_cast<long>(p);
        long den = t.get_si();
        if (den < 0) den += static_cast<long>(p);
        if (den == 0) return std::nullopt;
        t = c.get_num() % static_cast<long>(p);
        long num = t.get_si();
        if (num < 0) num += static_cast<long>(p);
        r[i] = mulm(static_cast<uint64_t>(num), invm(static_cast<uint64_t>(den), p), p);
    }
    fp_trim(r);
    return r;
}

} // namespace amz::detail
