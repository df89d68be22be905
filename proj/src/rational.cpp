#include "flowcent/rational.hpp"

#include "flowcent/error.hpp"

namespace flowcent {

using boost::multiprecision::cpp_int;

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw Error(ErrorKind::InvalidSpec, "rational with zero denominator");
    value_ = boost::multiprecision::cpp_rational(cpp_int(numerator), cpp_int(denominator));
}

std::string Rational::numerator() const { return boost::multiprecision::numerator(value_).str(); }

std::string Rational::denominator() const { return boost::multiprecision::denominator(value_).str(); }

std::string Rational::str() const { return numerator() + "/" + denominator(); }

std::string Rational::decimal(int places) const {
    const cpp_int num = boost::multiprecision::numerator(value_);
    const cpp_int den = boost::multiprecision::denominator(value_);
    cpp_int scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    const bool negative = num < 0;
    const cpp_int mag = negative ? cpp_int(-num) : num;
    cpp_int scaled = (mag * scale * 2 + den) / (den * 2);
    const cpp_int whole = scaled / scale;
    std::string frac = cpp_int(scaled % scale).str();
    if (places > 0) frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
    std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
    if (places > 0) out += "." + frac;
    return out;
}

Rational& Rational::operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace flowcent
