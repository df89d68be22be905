#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace flowcent {

// Exact rational in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t numerator, std::int64_t denominator = 1);

    std::string numerator() const;
    std::string denominator() const;
    std::string str() const;  // "n/d"
    // Rounded half away from zero to `places` decimals.
    std::string decimal(int places = 6) const;

    Rational& operator+=(const Rational& other);
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    explicit Rational(boost::multiprecision::cpp_rational value) : value_(std::move(value)) {}

    boost::multiprecision::cpp_rational value_{0};
};

}  // namespace flowcent
