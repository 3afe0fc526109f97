#include "umet/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace umet {

Rat::Rat(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw std::invalid_argument("rational: zero denominator");
    if (numerator < 0 || denominator < 0)
        throw std::invalid_argument("rational: negative values are not representable");
    const std::int64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

std::string Rat::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::parse(const std::string& text) {
    const auto parse_int = [](const std::string& part) -> std::int64_t {
        if (part.empty()) throw std::invalid_argument("rational: empty number");
        for (char c : part)
            if (c < '0' || c > '9')
                throw std::invalid_argument("rational: invalid character in '" + part + "'");
        if (part.size() > 18) throw std::invalid_argument("rational: number too large");
        return std::stoll(part);
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_int(text));
    return Rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace umet
