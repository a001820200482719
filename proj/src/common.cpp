#include "assocfold/common.hpp"

#include <cctype>

namespace assocfold {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw invalid_input("empty rational literal");
    const auto slash = text.find('/');
    const std::string num_part = text.substr(0, slash);
    const std::string den_part =
        (slash == std::string::npos) ? "1" : text.substr(slash + 1);

    auto check_integer = [&](const std::string& s) {
        if (s.empty()) throw invalid_input("malformed rational literal: " + text);
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw invalid_input("malformed rational literal: " + text);
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw invalid_input("malformed rational literal: " + text);
    };
    check_integer(num_part);
    check_integer(den_part);

    const Integer num(num_part);
    const Integer den(den_part);
    if (den == 0) throw invalid_input("zero denominator in rational literal: " + text);
    return Rational(num, den);
}

std::string rational_to_string(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

std::string decimal12(const Rational& value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    const Rational mag = negative ? Rational(-value) : value;

    // Decimal exponent e with 10^e <= mag < 10^{e+1}.  The digit-count
    // difference of numerator and denominator gives a guess off by at most 1.
    long e = static_cast<long>(numerator(mag).str().size()) -
             static_cast<long>(denominator(mag).str().size());
    auto pow10 = [](long k) {
        Integer p = 1;
        for (long i = 0; i < (k < 0 ? -k : k); ++i) p *= 10;
        return k >= 0 ? Rational(p) : Rational(1, p);
    };
    while (mag >= pow10(e + 1)) ++e;
    while (mag < pow10(e)) --e;

    // Round to 12 significant digits (half away from zero).
    const Rational scaled = mag * pow10(11 - e);
    const Rational doubled = scaled * 2 + 1;  // round(x) = floor((2x + 1) / 2)
    Integer digits = numerator(doubled) / (denominator(doubled) * 2);
    Integer limit("1000000000000");
    if (digits >= limit) {  // rounding carried into a 13th digit
        digits /= 10;
        ++e;
    }

    std::string ds = digits.str();
    std::string out;
    if (e >= 11) {
        out = ds + std::string(static_cast<std::size_t>(e - 11), '0');
    } else if (e >= 0) {
        out = ds.substr(0, static_cast<std::size_t>(e + 1)) + "." +
              ds.substr(static_cast<std::size_t>(e + 1));
    } else {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
    }
    return negative ? "-" + out : out;
}

}  // namespace assocfold
