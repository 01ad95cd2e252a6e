#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace gpir {

/// Canonical residue in [0, q). Elements are owned by the Field that
/// produced them; mixing fields is a caller error.
using Elem = std::uint64_t;

/// All randomness in the library flows through a seedable engine so that
/// every run is reproducible from its seed.
using Rng = std::mt19937_64;

bool is_prime_u64(std::uint64_t n);

/// Uniform draw from [0, bound) by rejection, deterministic for a fixed
/// engine state.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Arithmetic in the prime field F_q, q >= 3.
class Field {
public:
    explicit Field(Elem q);

    Elem modulus() const { return q_; }

    Elem add(Elem a, Elem b) const { return (a + b) % q_; }
    Elem sub(Elem a, Elem b) const { return (a + q_ - b % q_) % q_; }
    Elem neg(Elem a) const { return a % q_ == 0 ? 0 : q_ - a % q_; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % q_);
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    /// Reduces an arbitrary signed integer to its canonical residue.
    Elem element(long long v) const;

    /// Uniform on F_q.
    Elem sample_uniform(Rng& rng) const { return uniform_below(rng, q_); }
    /// Uniform on F_q \ {0}.
    Elem sample_nonzero(Rng& rng) const { return 1 + uniform_below(rng, q_ - 1); }
    /// Uniform on F_q \ {0, 1}.
    Elem sample_h(Rng& rng) const { return 2 + uniform_below(rng, q_ - 2); }

    bool operator==(const Field& other) const { return q_ == other.q_; }
    bool operator!=(const Field& other) const { return q_ != other.q_; }

private:
    Elem q_;
};

/// Field constructor with the validation errors spelled out.
Field make_field(Elem q);

} // namespace gpir
