#include "treegrower/exact.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace treegrower {

namespace mp = boost::multiprecision;

BigInt pow_int(std::uint64_t base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

double log_big(const BigInt& value) {
    if (value <= 0) throw std::domain_error("log_big: value must be positive");
    const unsigned bits = mp::msb(value);
    if (bits < 900) return std::log(value.convert_to<double>());
    // keep the top 52 bits as mantissa, add the shifted-out bits back as ln2 each
    const unsigned shift = bits - 52;
    const BigInt top = value >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * 0.6931471805599453;
}

double log_big(const BigRat& value) {
    return log_big(BigInt(mp::numerator(value))) - log_big(BigInt(mp::denominator(value)));
}

namespace {

std::size_t decimal_digits(const BigInt& v) { return v.str().size(); }

} // namespace

std::string decimal_string(const BigRat& value, unsigned significant_digits) {
    if (significant_digits == 0) significant_digits = 1;
    BigInt num = mp::numerator(value);
    const BigInt den = mp::denominator(value);
    if (num == 0) return "0";

    const bool negative = num < 0;
    if (negative) num = -num;

    // decimal exponent e: largest e with 10^e <= num/den
    long long e = static_cast<long long>(decimal_digits(num)) -
                  static_cast<long long>(decimal_digits(den));
    auto scaled_cmp = [&](long long k) {
        // compare num/den against 10^k
        if (k >= 0) return num.compare(den * pow_int(10, static_cast<std::uint64_t>(k)));
        return (num * pow_int(10, static_cast<std::uint64_t>(-k))).compare(den);
    };
    while (scaled_cmp(e) < 0) --e;
    while (scaled_cmp(e + 1) >= 0) ++e;

    // first `significant_digits` digits, rounded half away from zero
    const long long shift = static_cast<long long>(significant_digits) - 1 - e;
    BigInt scaled_num = num;
    BigInt scaled_den = den;
    if (shift >= 0)
        scaled_num *= pow_int(10, static_cast<std::uint64_t>(shift));
    else
        scaled_den *= pow_int(10, static_cast<std::uint64_t>(-shift));
    BigInt q = scaled_num / scaled_den;
    const BigInt r = scaled_num - q * scaled_den;
    if (2 * r >= scaled_den) ++q;

    std::string digits = q.str();
    if (digits.size() > significant_digits) { // rounding carried into a new digit
        digits.pop_back();
        ++e;
    }

    auto strip_fraction = [](std::string s) {
        if (s.find('.') == std::string::npos) return s;
        std::size_t last = s.find_last_not_of('0');
        if (s[last] == '.') --last;
        s.erase(last + 1);
        return s;
    };

    std::string out;
    if (e >= -4 && e <= 17) {
        if (e >= 0) {
            const std::size_t int_len = static_cast<std::size_t>(e) + 1;
            if (digits.size() <= int_len) {
                out = digits + std::string(int_len - digits.size(), '0');
            } else {
                out = strip_fraction(digits.substr(0, int_len) + "." + digits.substr(int_len));
            }
        } else {
            out = strip_fraction("0." + std::string(static_cast<std::size_t>(-e - 1), '0') +
                                 digits);
        }
    } else {
        std::string mantissa = digits.substr(0, 1);
        if (digits.size() > 1) mantissa += "." + digits.substr(1);
        out = strip_fraction(mantissa) + (e < 0 ? "e-" : "e+") + std::to_string(std::llabs(e));
    }
    return negative ? "-" + out : out;
}

} // namespace treegrower
