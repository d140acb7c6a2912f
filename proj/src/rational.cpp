#include "conicbundle/rational.hpp"

#include "conicbundle/errors.hpp"

namespace conicbundle {

namespace {

bool is_integer_body(const std::string& s, std::size_t begin, std::size_t end) {
    if (begin >= end) return false;
    for (std::size_t i = begin; i < end; ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos) {
        throw InvalidInput("empty string is not a rational literal");
    }
    std::string s = text.substr(begin, end - begin + 1);

    std::size_t slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);

    auto check_part = [&](const std::string& part, bool sign_allowed) {
        std::size_t body = 0;
        if (sign_allowed && !part.empty() && (part[0] == '-' || part[0] == '+')) body = 1;
        if (!is_integer_body(part, body, part.size())) {
            throw InvalidInput("not an exact integer or rational literal: \"" + text +
                               "\" (decimal floats are not accepted)");
        }
    };
    check_part(num, true);
    check_part(den, false);

    Integer n(num);
    Integer d(den);
    if (d == 0) throw InvalidInput("zero denominator in rational literal: \"" + text + "\"");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

std::string SpecParseError::format(const std::vector<SchemaError>& errors) {
    std::string out = "spec document is invalid:";
    for (const auto& e : errors) {
        out += "\n  " + e.location + ": " + e.message;
    }
    return out;
}

}  // namespace conicbundle
