#ifndef ASSOCFOLD_COMMON_HPP
#define ASSOCFOLD_COMMON_HPP

/**
 * Shared basics: exact rational arithmetic, error taxonomy, deterministic
 * pseudo-random sampling, and decimal formatting used by every module.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace assocfold {

using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

/** Failure categories, mapped to CLI exit codes (1, 2, 3 respectively). */
enum class ErrorKind {
    Verification,  ///< a mathematical check that should hold failed
    InvalidInput,  ///< caller- or user-supplied data is unusable
    Internal       ///< a structural invariant of the code itself broke
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Error verification_error(const std::string& m) { return Error(ErrorKind::Verification, m); }
inline Error invalid_input(const std::string& m)      { return Error(ErrorKind::InvalidInput, m); }
inline Error internal_error(const std::string& m)     { return Error(ErrorKind::Internal, m); }

/** Parse "p", "-p", or "p/q" into an exact rational.  Throws InvalidInput. */
Rational parse_rational(const std::string& text);

/** Canonical short form: "p" when the denominator is 1, else "p/q". */
std::string rational_to_string(const Rational& value);

/**
 * Decimal string with 12 significant digits, correctly rounded from the exact
 * value (used for the human-readable "approx" companion of exact scalars).
 */
std::string decimal12(const Rational& value);

/**
 * Deterministic 64-bit generator (splitmix64).  Used for all sampling so that
 * artifacts are byte-identical across runs and platforms for a fixed seed.
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /** Uniform value in [lo, hi] (inclusive); modulo bias is irrelevant here. */
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

}  // namespace assocfold

#endif  // ASSOCFOLD_COMMON_HPP
