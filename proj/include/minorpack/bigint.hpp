#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace minorpack {

// Arbitrary-precision integer. Threshold formulas blow past 64 bits almost
// immediately, so everything derived from them lives in BigInt.
using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

// 2^exp as a BigInt.
inline BigInt big_pow2(std::uint64_t exp) { return big_pow(BigInt(2), exp); }

// binomial(n, k) with BigInt n. Falls back to the iterative product since
// mpz_bin_ui needs an unsigned k only, which is all we ever use.
inline BigInt big_binom(const BigInt& n, std::uint64_t k) {
    BigInt out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// Checked narrowing for schedule values that must index real structures.
inline bool fits_u64(const BigInt& v) { return v >= 0 && v.fits_ulong_p(); }

inline std::uint64_t to_u64(const BigInt& v) { return v.get_ui(); }

}  // namespace minorpack
