#include "semireflex/rational.hpp"

#include <cctype>

namespace semireflex {

Int floor_int(const Rational& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && numerator(r) % denominator(r) != 0) --q;
    return q;
}

Int ceil_int(const Rational& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) > 0 && numerator(r) % denominator(r) != 0) ++q;
    return q;
}

Int round_int(const Rational& r) { return floor_int(r + Rational(1, 2)); }

std::string to_string(const Rational& r) { return r.str(); }

std::string to_string(const Int& n) { return n.str(); }

Rational parse_rational(std::string_view text) {
    const auto fail = [&] { throw parse_error("malformed rational: \"" + std::string(text) + "\""); };
    std::size_t i = 0;
    const auto digits = [&] {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail();
        return std::string(text.substr(start, i - start));
    };

    bool negative = false;
    if (i < text.size() && text[i] == '-') {
        negative = true;
        ++i;
    }
    Int num(digits());
    Int den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = Int(digits());
        if (den == 0) fail();
    }
    if (i != text.size()) fail();
    if (negative) num = -num;
    return Rational(num, den);
}

Int isqrt(const Int& n) {
    if (n < 0) throw error("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

}  // namespace semireflex
