#include "roughspace/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace roughspace {

BigInt isqrt_floor(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const BigInt& n, BigInt* root) {
    if (n < 0) return false;
    BigInt s = boost::multiprecision::sqrt(n);
    if (s * s != n) return false;
    if (root) *root = s;
    return true;
}

BigInt isqrt_ratio_floor(const BigInt& num, const BigInt& den) {
    if (num < 0 || den <= 0) throw std::invalid_argument("isqrt_ratio_floor: bad arguments");
    const BigInt quotient = num / den;
    BigInt s = boost::multiprecision::sqrt(quotient);
    while ((s + 1) * (s + 1) * den <= num) ++s;
    while (s > 0 && s * s * den > num) --s;
    return s;
}

BigCount binomial(const BigInt& n, const BigInt& k) {
    if (k < 0 || k > n) return 0;
    BigInt kk = k;
    if (n - k < kk) kk = n - k;
    BigCount result = 1;
    for (BigInt i = 1; i <= kk; ++i) {
        result *= n - kk + i;
        result /= i;
    }
    return result;
}

ExactRatio parse_ratio(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) throw std::invalid_argument("parse_ratio: malformed rational '" + text + "'");
        return ExactRatio(BigInt(text));
    }
    std::string p = text.substr(0, slash);
    std::string q = text.substr(slash + 1);
    if (!is_int(p) || !is_int(q)) throw std::invalid_argument("parse_ratio: malformed rational '" + text + "'");
    BigInt den(q);
    if (den == 0) throw std::invalid_argument("parse_ratio: zero denominator in '" + text + "'");
    return ExactRatio(BigInt(p), den);
}

std::string format_ratio(const ExactRatio& r) {
    BigInt num = ratio_num(r);
    BigInt den = ratio_den(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace roughspace
