#ifndef ASSOCFOLD_EXACTFIELD_HPP
#define ASSOCFOLD_EXACTFIELD_HPP

/**
 * Exact arithmetic in the real cyclotomic fields Q(theta_m), theta_m =
 * 2cos(pi/m).  These are the coefficient fields needed for non-crystallographic
 * reflection data: Q itself (m = 2, 3), Q(sqrt 2) (m = 4), Q(phi) (m = 5),
 * Q(sqrt 3) (m = 6), and so on up to degree phi(60)/2 = 8 for m = 30.
 *
 * A scalar is a dense rational coefficient vector in the power basis
 * 1, theta, ..., theta^{d-1}.  Products are reduced modulo the (monic) minimal
 * polynomial of theta_m, which is obtained by folding the cyclotomic
 * polynomial Phi_{2m}(x) through y = x + 1/x.  Signs are decided exactly:
 * zero short-circuits on the coefficient vector, and nonzero values are
 * separated from zero by interval evaluation over a bisected isolating
 * interval for theta_m (theta_m is the largest root of its minimal
 * polynomial, so the interval is found by Sturm-count bisection).
 */

#include <memory>
#include <string>
#include <vector>

#include "assocfold/common.hpp"

namespace assocfold::exactfield {

/** Immutable description of Q(theta_m); share via FieldPtr. */
struct FieldSpec {
    int m = 0;                         ///< theta = 2cos(pi/m), m >= 2
    int degree = 0;                    ///< = phi(2m)/2
    std::vector<Rational> min_poly;    ///< monic, ascending, size degree+1
    Rational iso_lo, iso_hi;           ///< isolating interval for theta
                                       ///< (sign change, no conjugate inside)

    bool is_rational() const { return degree == 1; }
    /** theta as an exact rational; only meaningful when degree == 1. */
    Rational rational_generator() const { return -min_poly[0]; }
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

/** Build (and cache) the field Q(2cos(pi/m)).  Requires m >= 2. */
FieldPtr make_field(int m);

/** The canonical degree-1 field used for plain rational computations. */
FieldPtr rational_field();

/** Exact element of one field; all arithmetic is closed over that field. */
class Scalar {
public:
    Scalar() = default;
    Scalar(FieldPtr field, std::vector<Rational> coeffs);

    static Scalar from_rational(const FieldPtr& field, const Rational& value);
    static Scalar from_int(const FieldPtr& field, long value);
    /** The generator theta of the field. */
    static Scalar generator(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /** True when all non-constant coefficients vanish. */
    bool is_rational_value() const;
    /** The value as a rational; throws unless is_rational_value(). */
    Rational rational_value() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    /** Exact division; throws on division by zero. */
    Scalar operator/(const Scalar& rhs) const;
    Scalar inverse() const;

    Scalar operator*(const Rational& rhs) const;
    Scalar operator/(const Rational& rhs) const;
    Scalar operator+(const Rational& rhs) const;
    Scalar operator-(const Rational& rhs) const;

    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
    /** In-place  this += other * factor  without temporaries (hot loops). */
    Scalar& add_scaled(const Scalar& other, const Rational& factor);

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }
    /** Coefficient-lexicographic order; used only as a canonical map key. */
    bool operator<(const Scalar& rhs) const;

    /** Exact sign: -1, 0, +1. */
    int sign() const;
    bool is_positive() const { return sign() > 0; }
    bool is_negative() const { return sign() < 0; }

    /** Rational approximation with |error| <= tolerance (tolerance > 0). */
    Rational approx(const Rational& tolerance) const;
    double approx_double() const;
    /** 12-significant-digit decimal string of the value. */
    std::string decimal() const;

private:
    FieldPtr field_;
    std::vector<Rational> coeffs_;

    void check_same_field(const Scalar& rhs, const char* op) const;
};

/** Embed a value into `target`; identity if fields match, Q embeds anywhere. */
Scalar embed(const Scalar& value, const FieldPtr& target);

/**
 * Chebyshev-recurrence values w_1 = 1, w_2 = theta, w_{k+1} = theta w_k -
 * w_{k-1} (so w_k = U_{k-1}(theta/2) = sin(k pi/m)/sin(pi/m) at theta_m).
 */
std::vector<Scalar> chebyshev_values(const FieldPtr& field, int count);

/** Cyclotomic polynomial Phi_n over Z, ascending coefficients. */
std::vector<Rational> cyclotomic(int n);

/** Euler's totient. */
int totient(int n);

}  // namespace assocfold::exactfield

#endif  // ASSOCFOLD_EXACTFIELD_HPP
