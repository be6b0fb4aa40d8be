#include "gptlab/rational.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace gptlab {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void bad(std::string_view text) {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
}

// GMP reads a leading zero as an octal prefix; force base 10.
std::string decimal_digits(std::string_view s) {
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] == '0') ++i;
    return std::string(s.substr(i));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad(text);

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) bad(text);

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text);
        Integer d{decimal_digits(den)};
        if (d == 0) bad(text);
        Rational r{Integer{decimal_digits(num)}, d};
        return negative ? Rational(-r) : r;
    }

    // Decimal form: digits [. digits] [e [sign] digits]
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = s.substr(0, e);
        std::string_view exp = s.substr(e + 1);
        if (exp.empty()) bad(text);
        bool exp_neg = false;
        if (exp.front() == '+' || exp.front() == '-') {
            exp_neg = exp.front() == '-';
            exp.remove_prefix(1);
        }
        if (!all_digits(exp) || exp.size() > 6) bad(text);
        exponent = std::strtol(std::string(exp).c_str(), nullptr, 10);
        if (exp_neg) exponent = -exponent;
    }

    std::string digits;
    long frac_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        std::string_view ip = mantissa.substr(0, dot);
        std::string_view fp = mantissa.substr(dot + 1);
        if (ip.empty() && fp.empty()) bad(text);
        if (!ip.empty() && !all_digits(ip)) bad(text);
        if (!fp.empty() && !all_digits(fp)) bad(text);
        digits = std::string(ip) + std::string(fp);
        frac_digits = static_cast<long>(fp.size());
    } else {
        if (!all_digits(mantissa)) bad(text);
        digits = std::string(mantissa);
    }
    if (digits.empty()) bad(text);

    Rational r{Integer{decimal_digits(digits)}, 1};
    long net = exponent - frac_digits;
    if (net > 0) {
        r *= Rational(boost::multiprecision::pow(Integer(10), static_cast<unsigned>(net)));
    } else if (net < 0) {
        r /= Rational(boost::multiprecision::pow(Integer(10), static_cast<unsigned>(-net)));
    }
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
    return r.str();
}

std::string to_string(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(v[i]);
    }
    out += ")";
    return out;
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

Rational rational_from_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return parse_rational(std::string_view(buf, res.ptr - buf));
}

}  // namespace gptlab
