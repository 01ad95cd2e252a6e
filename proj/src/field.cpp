#include "gpir/field.hpp"

namespace gpir {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
    // Largest multiple of bound representable in 64 bits; reject above it.
    std::uint64_t limit = bound * (UINT64_MAX / bound);
    for (;;) {
        std::uint64_t v = rng();
        if (v < limit) return v % bound;
    }
}

Field::Field(Elem q) : q_(q) {
    if (q < 3) throw std::invalid_argument("field modulus must be at least 3");
    if (!is_prime_u64(q)) throw std::invalid_argument("field modulus must be prime");
}

Field make_field(Elem q) { return Field(q); }

Elem Field::inv(Elem a) const {
    a %= q_;
    if (a == 0) throw std::domain_error("inverse of zero");
    // Extended Euclid on (q, a); q prime so gcd is 1.
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(q_), new_r = static_cast<long long>(a);
    while (new_r != 0) {
        long long quot = r / new_r;
        long long tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<long long>(q_);
    return static_cast<Elem>(t);
}

Elem Field::pow(Elem a, std::uint64_t e) const { return powmod(a % q_, e, q_); }

Elem Field::element(long long v) const {
    long long m = static_cast<long long>(q_);
    long long r = v % m;
    if (r < 0) r += m;
    return static_cast<Elem>(r);
}

} // namespace gpir
