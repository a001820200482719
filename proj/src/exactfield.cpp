#include "assocfold/exactfield.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace assocfold::exactfield {

namespace {

using Poly = std::vector<Rational>;  // ascending coefficients

int poly_degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/** Exact polynomial division; requires the remainder to vanish. */
Poly poly_divide_exact(const Poly& num, const Poly& den) {
    Poly rem = num;
    poly_trim(rem);
    Poly d = den;
    poly_trim(d);
    if (d.empty()) throw internal_error("polynomial division by zero");
    const int dd = static_cast<int>(d.size()) - 1;
    Poly quot(rem.size() > d.size() - 1 ? rem.size() - d.size() + 1 : 1, Rational(0));
    while (static_cast<int>(rem.size()) - 1 >= dd && !rem.empty()) {
        const int shift = static_cast<int>(rem.size()) - 1 - dd;
        const Rational factor = rem.back() / d.back();
        quot[static_cast<std::size_t>(shift)] = factor;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<std::size_t>(shift + i)] -= factor * d[static_cast<std::size_t>(i)];
        poly_trim(rem);
    }
    if (!rem.empty()) throw internal_error("polynomial division left a remainder");
    return quot;
}

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc(0);
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        acc = acc * x + p[static_cast<std::size_t>(i)];
    return acc;
}

/** Interval Horner evaluation of p over [lo, hi]. */
std::pair<Rational, Rational> poly_eval_interval(const Poly& p, const Rational& lo,
                                                 const Rational& hi) {
    Rational vlo(0), vhi(0);
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
        const Rational a = vlo * lo, b = vlo * hi, c = vhi * lo, d = vhi * hi;
        Rational nlo = std::min(std::min(a, b), std::min(c, d));
        Rational nhi = std::max(std::max(a, b), std::max(c, d));
        const Rational& coeff = p[static_cast<std::size_t>(i)];
        vlo = nlo + coeff;
        vhi = nhi + coeff;
    }
    return {vlo, vhi};
}

/** Signed remainder sequence for root counting (all our roots are simple). */
std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    Poly p0 = p;
    poly_trim(p0);
    chain.push_back(p0);
    Poly p1(p0.size() > 1 ? p0.size() - 1 : 1, Rational(0));
    for (std::size_t i = 1; i < p0.size(); ++i)
        p1[i - 1] = p0[i] * static_cast<long>(i);
    poly_trim(p1);
    chain.push_back(p1);
    while (poly_degree(chain.back()) > 0) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain.back();
        // remainder of a by b, negated
        Poly rem = a;
        const int db = poly_degree(b);
        while (poly_degree(rem) >= db) {
            const int dr = poly_degree(rem);
            const Rational factor =
                rem[static_cast<std::size_t>(dr)] / b[static_cast<std::size_t>(db)];
            for (int i = 0; i <= db; ++i)
                rem[static_cast<std::size_t>(dr - db + i)] -=
                    factor * b[static_cast<std::size_t>(i)];
            poly_trim(rem);
            if (rem.empty()) break;
        }
        for (auto& c : rem) c = -c;
        if (rem.empty()) break;  // chain terminates at a constant gcd
        chain.push_back(rem);
    }
    return chain;
}

int sign_of(const Rational& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

int sturm_variations(const std::vector<Poly>& chain, const Rational& x) {
    int variations = 0;
    int last = 0;
    for (const auto& p : chain) {
        const int s = sign_of(poly_eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

/** Number of roots of the squarefree polynomial in the half-open (a, b]. */
int roots_in(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

std::vector<Rational> integer_poly(std::initializer_list<long> cs) {
    std::vector<Rational> out;
    for (long c : cs) out.emplace_back(c);
    return out;
}

}  // namespace

int totient(int n) {
    int result = n;
    int k = n;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            while (k % p == 0) k /= p;
            result -= result / p;
        }
    }
    if (k > 1) result -= result / k;
    return result;
}

std::vector<Rational> cyclotomic(int n) {
    if (n < 1) throw invalid_input("cyclotomic index must be positive");
    // x^n - 1 divided by the product of all lower cyclotomics at divisors of n.
    Poly result(static_cast<std::size_t>(n + 1), Rational(0));
    result[0] = -1;
    result[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        result = poly_divide_exact(result, cyclotomic(d));
    }
    return result;
}

namespace {

/**
 * Minimal polynomial of 2cos(pi/m): Phi_{2m} is palindromic of even degree
 * 2d, so Phi_{2m}(x)/x^d is a polynomial in y = x + 1/x of degree d; that
 * polynomial (monic, integer) is the minimal polynomial.
 */
Poly trace_min_poly(int m) {
    const Poly phi = cyclotomic(2 * m);
    const int n = poly_degree(phi);
    if (n % 2 != 0) throw internal_error("cyclotomic degree not even");
    const int d = n / 2;
    for (int i = 0; i <= n; ++i)
        if (phi[static_cast<std::size_t>(i)] != phi[static_cast<std::size_t>(n - i)])
            throw internal_error("cyclotomic polynomial not palindromic");

    // V_k(y) = x^k + x^{-k}:  V_0 = 2, V_1 = y, V_{k+1} = y V_k - V_{k-1}.
    Poly result(static_cast<std::size_t>(d + 1), Rational(0));
    result[0] = phi[static_cast<std::size_t>(d)];
    Poly v_prev = integer_poly({2});
    Poly v_cur = integer_poly({0, 1});
    for (int k = 1; k <= d; ++k) {
        const Rational& a = phi[static_cast<std::size_t>(d + k)];
        for (std::size_t i = 0; i < v_cur.size(); ++i) result[i] += a * v_cur[i];
        if (k < d) {
            Poly v_next(v_cur.size() + 1, Rational(0));
            for (std::size_t i = 0; i < v_cur.size(); ++i) v_next[i + 1] = v_cur[i];
            for (std::size_t i = 0; i < v_prev.size(); ++i) v_next[i] -= v_prev[i];
            v_prev = std::move(v_cur);
            v_cur = std::move(v_next);
        }
    }
    return result;
}

/**
 * Isolating interval [lo, hi] for the *largest* real root, with a strict sign
 * change at the endpoints.  All roots of the trace polynomial lie in (-2, 2).
 */
std::pair<Rational, Rational> isolate_largest_root(const Poly& p) {
    const auto chain = sturm_chain(p);
    Rational lo(-2), hi(2);
    while (roots_in(chain, lo, hi) > 1) {
        const Rational mid = (lo + hi) / 2;
        if (roots_in(chain, mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    if (roots_in(chain, lo, hi) != 1)
        throw internal_error("failed to isolate field generator");
    return {lo, hi};
}

}  // namespace

FieldPtr make_field(int m) {
    if (m < 2) throw invalid_input("field order must be at least 2");
    static std::map<int, FieldPtr> cache;
    const auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    auto spec = std::make_shared<FieldSpec>();
    spec->m = m;
    spec->min_poly = trace_min_poly(m);
    spec->degree = poly_degree(spec->min_poly);
    if (spec->degree != totient(2 * m) / 2)
        throw internal_error("unexpected minimal polynomial degree");
    if (spec->degree == 1) {
        const Rational root = -spec->min_poly[0];
        spec->iso_lo = root - Rational(1, 2);
        spec->iso_hi = root + Rational(1, 2);
    } else {
        auto [lo, hi] = isolate_largest_root(spec->min_poly);
        // One-time narrowing (to width 2^-64) so that sign determinations
        // almost always succeed on their first interval evaluation.
        const Rational width = Rational(1) / (Integer(1) << 64);
        while (hi - lo > width) {
            const Rational mid = (lo + hi) / 2;
            const Rational at_mid = poly_eval(spec->min_poly, mid);
            if (at_mid == 0) throw internal_error("rational midpoint hit an irrational root");
            if (at_mid < 0)
                lo = mid;
            else
                hi = mid;
        }
        spec->iso_lo = lo;
        spec->iso_hi = hi;
    }
    FieldPtr out = spec;
    cache.emplace(m, out);
    return out;
}

FieldPtr rational_field() {
    static FieldPtr field = make_field(3);  // theta = 2cos(pi/3) = 1, degree 1
    return field;
}

Scalar::Scalar(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw internal_error("scalar without a field");
    if (static_cast<int>(coeffs_.size()) != field_->degree)
        throw internal_error("scalar coefficient count does not match field degree");
}

Scalar Scalar::from_rational(const FieldPtr& field, const Rational& value) {
    std::vector<Rational> c(static_cast<std::size_t>(field->degree), Rational(0));
    c[0] = value;
    return Scalar(field, std::move(c));
}

Scalar Scalar::from_int(const FieldPtr& field, long value) {
    return from_rational(field, Rational(value));
}

Scalar Scalar::generator(const FieldPtr& field) {
    if (field->degree == 1) return from_rational(field, field->rational_generator());
    std::vector<Rational> c(static_cast<std::size_t>(field->degree), Rational(0));
    c[1] = 1;
    return Scalar(field, std::move(c));
}

bool Scalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_rational_value() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Scalar::rational_value() const {
    if (!is_rational_value())
        throw invalid_input("scalar is not a rational value");
    return coeffs_[0];
}

void Scalar::check_same_field(const Scalar& rhs, const char* op) const {
    if (field_.get() != rhs.field_.get())
        throw invalid_input(std::string("cross-field scalar operation: ") + op);
}

Scalar Scalar::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x = -x;
    return Scalar(field_, std::move(c));
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    check_same_field(rhs, "+");
    std::vector<Rational> c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += rhs.coeffs_[i];
    return Scalar(field_, std::move(c));
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    check_same_field(rhs, "-");
    std::vector<Rational> c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= rhs.coeffs_[i];
    return Scalar(field_, std::move(c));
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    check_same_field(rhs, "*");
    const int d = field_->degree;
    if (is_rational_value()) return rhs * coeffs_[0];
    if (rhs.is_rational_value()) return *this * rhs.coeffs_[0];

    std::vector<Rational> prod(static_cast<std::size_t>(2 * d - 1), Rational(0));
    for (int i = 0; i < d; ++i) {
        if (coeffs_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < d; ++j)
            prod[static_cast<std::size_t>(i + j)] +=
                coeffs_[static_cast<std::size_t>(i)] * rhs.coeffs_[static_cast<std::size_t>(j)];
    }
    // Reduce modulo the monic minimal polynomial.
    for (int i = 2 * d - 2; i >= d; --i) {
        const Rational top = prod[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        prod[static_cast<std::size_t>(i)] = 0;
        for (int j = 0; j < d; ++j)
            prod[static_cast<std::size_t>(i - d + j)] -=
                top * field_->min_poly[static_cast<std::size_t>(j)];
    }
    prod.resize(static_cast<std::size_t>(d));
    return Scalar(field_, std::move(prod));
}

Scalar Scalar::operator*(const Rational& rhs) const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x *= rhs;
    return Scalar(field_, std::move(c));
}

Scalar& Scalar::add_scaled(const Scalar& other, const Rational& factor) {
    check_same_field(other, "add_scaled");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i] * factor;
    return *this;
}

Scalar Scalar::operator/(const Rational& rhs) const {
    if (rhs == 0) throw invalid_input("scalar division by zero");
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x /= rhs;
    return Scalar(field_, std::move(c));
}

Scalar Scalar::operator+(const Rational& rhs) const {
    std::vector<Rational> c = coeffs_;
    c[0] += rhs;
    return Scalar(field_, std::move(c));
}

Scalar Scalar::operator-(const Rational& rhs) const {
    std::vector<Rational> c = coeffs_;
    c[0] -= rhs;
    return Scalar(field_, std::move(c));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw invalid_input("scalar division by zero");
    const int d = field_->degree;
    if (is_rational_value()) return from_rational(field_, Rational(1) / coeffs_[0]);

    // Solve (this * x) == 1 as a d x d rational linear system whose columns
    // are this * theta^j reduced modulo the minimal polynomial.
    std::vector<std::vector<Rational>> mat(
        static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d + 1), Rational(0)));
    Scalar column = *this;
    const Scalar theta = generator(field_);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i)
            mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                column.coeffs_[static_cast<std::size_t>(i)];
        if (j + 1 < d) column = column * theta;
    }
    mat[0][static_cast<std::size_t>(d)] = 1;

    // Gaussian elimination with exact pivoting.
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int row = col; row < d; ++row)
            if (mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw internal_error("scalar inverse hit a singular system");
        std::swap(mat[static_cast<std::size_t>(col)], mat[static_cast<std::size_t>(pivot)]);
        const Rational p = mat[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int j = col; j <= d; ++j) mat[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= p;
        for (int row = 0; row < d; ++row) {
            if (row == col) continue;
            const Rational f = mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j <= d; ++j)
                mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
                    f * mat[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        }
    }
    std::vector<Rational> x(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) x[static_cast<std::size_t>(i)] = mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)];
    return Scalar(field_, std::move(x));
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    check_same_field(rhs, "/");
    if (rhs.is_rational_value()) {
        if (rhs.coeffs_[0] == 0) throw invalid_input("scalar division by zero");
        return *this / rhs.coeffs_[0];
    }
    return *this * rhs.inverse();
}

bool Scalar::operator==(const Scalar& rhs) const {
    return field_.get() == rhs.field_.get() && coeffs_ == rhs.coeffs_;
}

bool Scalar::operator<(const Scalar& rhs) const {
    check_same_field(rhs, "<");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != rhs.coeffs_[i]) return coeffs_[i] < rhs.coeffs_[i];
    }
    return false;
}

int Scalar::sign() const {
    if (is_zero()) return 0;
    if (is_rational_value()) return sign_of(coeffs_[0]);

    Rational lo = field_->iso_lo, hi = field_->iso_hi;
    const Poly& mu = field_->min_poly;
    for (int iter = 0; iter < 4096; ++iter) {
        const auto box = poly_eval_interval(coeffs_, lo, hi);
        if (box.first > 0) return 1;
        if (box.second < 0) return -1;
        // Narrow the generator interval, preserving the sign change of mu.
        const Rational mid = (lo + hi) / 2;
        const int s = sign_of(poly_eval(mu, mid));
        if (s == 0) throw internal_error("rational midpoint hit an irrational root");
        if (s < 0)
            lo = mid;
        else
            hi = mid;
    }
    throw internal_error("sign determination did not converge");
}

Rational Scalar::approx(const Rational& tolerance) const {
    if (tolerance <= 0) throw invalid_input("approximation tolerance must be positive");
    if (is_rational_value()) return coeffs_[0];
    Rational lo = field_->iso_lo, hi = field_->iso_hi;
    const Poly& mu = field_->min_poly;
    for (int iter = 0; iter < 8192; ++iter) {
        const auto box = poly_eval_interval(coeffs_, lo, hi);
        if (box.second - box.first <= tolerance) return (box.first + box.second) / 2;
        const Rational mid = (lo + hi) / 2;
        const int s = sign_of(poly_eval(mu, mid));
        if (s == 0) throw internal_error("rational midpoint hit an irrational root");
        if (s < 0)
            lo = mid;
        else
            hi = mid;
    }
    throw internal_error("approximation did not converge");
}

double Scalar::approx_double() const {
    return approx(Rational(1, Integer("100000000000000000"))).convert_to<double>();
}

std::string Scalar::decimal() const {
    if (is_zero()) return "0";
    if (is_rational_value()) return decimal12(coeffs_[0]);
    // Absolute tolerance fine enough that 12 significant digits are stable
    // for every magnitude arising here; refine relative to a first estimate.
    Rational rough = approx(Rational(1, 1000));
    Rational scale = rough < 0 ? -rough : rough;
    if (scale < 1) scale = 1;
    return decimal12(approx(scale / Integer("1000000000000000")));
}

Scalar embed(const Scalar& value, const FieldPtr& target) {
    if (value.field().get() == target.get()) return value;
    if (value.field()->degree == 1)
        return Scalar::from_rational(target, value.coeffs()[0]);
    throw invalid_input("cannot embed a non-rational scalar into a different field");
}

std::vector<Scalar> chebyshev_values(const FieldPtr& field, int count) {
    std::vector<Scalar> w;
    if (count <= 0) return w;
    w.push_back(Scalar::from_int(field, 1));
    if (count == 1) return w;
    w.push_back(Scalar::generator(field));
    const Scalar theta = Scalar::generator(field);
    for (int k = 2; k < count; ++k) w.push_back(theta * w[static_cast<std::size_t>(k - 1)] - w[static_cast<std::size_t>(k - 2)]);
    return w;
}

}  // namespace assocfold::exactfield
