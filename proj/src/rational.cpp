#include "coordmech/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace coordmech {

Rat make_rat(long long num, long long den) {
    if (den == 0) {
        throw std::invalid_argument("make_rat: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Rat q(static_cast<long>(num), static_cast<unsigned long>(den));
    q.canonicalize();
    return q;
}

Rat parse_rat(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("parse_rat: empty string");
    }
    // mpq accepts forms like "1/3"; validate characters first so that
    // garbage such as "1/3x" is rejected instead of silently truncated.
    bool seen_digit = false;
    bool seen_slash = false;
    for (size_t pos = 0; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            seen_digit = true;
            continue;
        }
        if (c == '-' && (pos == 0 || text[pos - 1] == '/')) continue;
        if (c == '/' && !seen_slash && seen_digit) {
            seen_slash = true;
            continue;
        }
        throw std::invalid_argument("parse_rat: malformed rational '" + text + "'");
    }
    if (!seen_digit || text.back() == '/') {
        throw std::invalid_argument("parse_rat: malformed rational '" + text + "'");
    }
    Rat q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("parse_rat: malformed rational '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("parse_rat: zero denominator in '" + text + "'");
    }
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

double to_double(const Rat& q) {
    return q.get_d();
}

}  // namespace coordmech
