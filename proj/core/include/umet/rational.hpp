#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace umet {

/// Exact non-negative rational scalar, always kept in reduced form.
/// Distances only ever need order, min and max, so there is no field
/// arithmetic here beyond the reduction done at construction.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(std::int64_t n) : Rat(n, 1) {}  // implicit: Rat(3) should read as a scalar
    Rat(std::int64_t numerator, std::int64_t denominator);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    friend bool operator==(const Rat&, const Rat&) = default;

    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const auto lhs = static_cast<__int128>(a.num_) * b.den_;
        const auto rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q", with "/q" omitted when the denominator is 1.
    std::string to_string() const;

    /// Accepts "p" or "p/q"; rejects negatives and zero denominators.
    static Rat parse(const std::string& text);

private:
    std::int64_t num_;
    std::int64_t den_;
};

inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline const Rat& rat_min(const Rat& a, const Rat& b) { return b < a ? b : a; }

}  // namespace umet
