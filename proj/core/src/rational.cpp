#include "rbfhfd/rational.hpp"

#include <stdexcept>

namespace rbfhfd {

namespace {

BigInt parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer token");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("sign without digits");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("bad integer token: " + std::string(s));
    return BigInt(std::string(s));
}

}  // namespace

Rational rational_from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) {
        out += '/';
        out += denominator(r).str();
    }
    return out;
}

}  // namespace rbfhfd
