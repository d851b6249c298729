#include "ffdesign/rational.hpp"

#include <cctype>

namespace ffd {

namespace {

bool parse_integer(std::string_view s, Integer& out) {
    if (s.empty()) return false;
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = (s[pos] == '-');
        ++pos;
    }
    if (pos == s.size()) return false;
    Integer v = 0;
    for (; pos < s.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
        v = v * 10 + (s[pos] - '0');
    }
    out = neg ? -v : v;
    return true;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) return std::nullopt;
    const auto slash = s.find('/');
    Integer num, den;
    if (slash == std::string_view::npos) {
        if (!parse_integer(s, num)) return std::nullopt;
        return Rational(num);
    }
    if (!parse_integer(s.substr(0, slash), num)) return std::nullopt;
    if (!parse_integer(s.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
    return Rational(num, den);
}

} // namespace ffd
