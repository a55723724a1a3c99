#include "minpot/rational.hpp"

#include "minpot/errors.hpp"

#include <cctype>

namespace minpot {

namespace {

bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_token(text))
            throw ParseError("not a rational: '" + std::string(text) + "'");
        return Rational(BigInt(std::string(text)));
    }
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw ParseError("not a rational: '" + std::string(text) + "'");
    BigInt n{std::string(num)};
    BigInt d{std::string(den)};
    if (d == 0)
        throw ParseError("zero denominator: '" + std::string(text) + "'");
    if (d < 0) { // the backend wants a positive denominator
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

std::string to_string(const Rational& r) {
    if (denom(r) == 1) return numer(r).str();
    return numer(r).str() + "/" + denom(r).str();
}

std::string to_fixed(const Rational& r, int digits) {
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const bool negative = r < 0;
    const Rational mag = negative ? Rational(-r) : r;
    // round(mag * scale) with ties away from zero
    const BigInt scaled_num = numer(mag) * scale * 2 + denom(mag);
    const BigInt rounded = scaled_num / (denom(mag) * 2);
    const BigInt whole = rounded / scale;
    const BigInt frac = rounded % scale;
    std::string out = (negative && rounded != 0 ? "-" : "") + whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace minpot
