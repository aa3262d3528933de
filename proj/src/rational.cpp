#include "mayer/rational.hpp"

#include <stdexcept>

namespace mayer {

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

std::string rational_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace mayer
