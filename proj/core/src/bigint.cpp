#include "finsum/bigint.hpp"

#include <cctype>

#include "finsum/error.hpp"

namespace finsum {

BigInt parse_decimal(const std::string& text) {
    if (text.empty()) throw Error("malformed-input", "empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw Error("malformed-input", "sign without digits: " + text);
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw Error("malformed-input", "not a decimal integer: " + text);
    }
    return BigInt(text, 10);
}

Rational parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_decimal(text));
    }
    BigInt num = parse_decimal(text.substr(0, slash));
    BigInt den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw Error("malformed-input", "zero denominator: " + text);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::vector<std::string> to_decimal_list(const std::vector<BigInt>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(to_decimal(x));
    return out;
}

}  // namespace finsum
