#include "sddlab/rational.hpp"

#include <cctype>

namespace sddlab {

std::string rational_to_string(const Rational& value) {
    return value.str();
}

std::optional<Rational> rational_from_string(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) return false;
        for (size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) return std::nullopt;
            return Rational(BigInt(text));
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        BigInt d(den);
        if (d == 0) return std::nullopt;
        return Rational(BigInt(num), d);
    } catch (...) {
        return std::nullopt;
    }
}

double rational_to_double(const Rational& value) {
    return value.convert_to<double>();
}

Rational rational_pow(const Rational& value, long long exponent) {
    using boost::multiprecision::pow;
    if (exponent == 0) return Rational(1);
    const auto mag = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
    BigInt num = pow(numerator(value), mag);
    BigInt den = pow(denominator(value), mag);
    if (exponent < 0) {
        if (num == 0) throw std::domain_error("zero to a negative power");
        return Rational(den, num);
    }
    return Rational(num, den);
}

} // namespace sddlab
