#include "mfb/numeric.hpp"

#include "mfb/error.hpp"

#include <cctype>
#include <numeric>

namespace mfb {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::IdenticalLines: return "IdenticalLines";
        case ErrorCode::InvalidSize: return "InvalidSize";
        case ErrorCode::InvalidIncidence: return "InvalidIncidence";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::NoSolution: return "NoSolution";
        case ErrorCode::UnsupportedCase: return "UnsupportedCase";
        case ErrorCode::NonIntegralEuler: return "NonIntegralEuler";
        case ErrorCode::UnsupportedLoop: return "UnsupportedLoop";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::NotBlowdownable: return "NotBlowdownable";
        case ErrorCode::NotAbsorbable: return "NotAbsorbable";
        case ErrorCode::NotSplittable: return "NotSplittable";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::NonSimpleGraph: return "NonSimpleGraph";
        case ErrorCode::MissingEuler: return "MissingEuler";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

long long gcd(long long a, long long b) { return std::gcd(a, b); }

namespace {

Int parse_integer(std::string_view text, std::string_view whole) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) {
        throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
    Int value = 0;
    for (; pos < text.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
        }
        value = value * 10 + (text[pos] - '0');
    }
    return negative ? Int(-value) : value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto whole = trim(text);
    const auto slash = whole.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(whole, whole));
    const Int num = parse_integer(trim(whole.substr(0, slash)), whole);
    const Int den = parse_integer(trim(whole.substr(slash + 1)), whole);
    if (den == 0) {
        throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(whole) + "'");
    }
    return Rational(num, den);
}

std::string to_string(const Int& value) { return value.str(); }

std::string to_string(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace mfb
