#include "grseries/rational.hpp"

#include <stdexcept>

namespace grseries {

Int factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::string rat_to_string(const Rat& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

}  // namespace grseries
