#include <decount/bigint.hpp>
#include <decount/error.hpp>

namespace decount {

auto to_string(const Rational & value) -> std::string
{
    auto num = boost::multiprecision::numerator(value);
    auto den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

auto exact_divide(const BigInt & numerator, unsigned divisor, const char * what) -> BigInt
{
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(numerator, BigInt(divisor), quotient, remainder);
    if (remainder != 0)
        throw InvariantError(std::string(what) + ": " + numerator.str() + " is not divisible by " + std::to_string(divisor));
    return quotient;
}

auto to_integer(const Rational & value, const char * what) -> BigInt
{
    if (boost::multiprecision::denominator(value) != 1)
        throw InvariantError(std::string(what) + " is not an integer: " + to_string(value));
    return boost::multiprecision::numerator(value);
}

} // namespace decount
