#include "posetcalc/rational.hpp"

#include <cctype>

namespace posetcalc {

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return Rat(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(BigInt(s));
    std::string head = s.substr(0, dot);
    std::string tail = s.substr(dot + 1);
    for (char c : tail)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bad decimal literal '" + s + "'");
    bool neg = !head.empty() && head[0] == '-';
    if (head == "-" || head.empty()) head = neg ? "-0" : "0";
    BigInt scale = 1;
    for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
    BigInt frac = tail.empty() ? BigInt(0) : BigInt(tail);
    BigInt num = BigInt(head) * scale + (neg ? -frac : frac);
    return Rat(num, scale);
}

std::string format_rational(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string format_ext_real(const ExtReal& r) {
    if (r.inf) return "inf";
    return format_rational(r.value);
}

std::optional<ExtReal> parse_ext_real(const std::string& s) {
    if (s == "inf") return ExtReal::infinity();
    try {
        return ExtReal(parse_rational(s));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

} // namespace posetcalc
