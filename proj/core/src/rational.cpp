#include "stdbases/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace stdbases {

Integer gcd(const Integer& a, const Integer& b) {
    Integer g = boost::multiprecision::gcd(a, b);
    return g < 0 ? Integer(-g) : g;
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    Integer l = boost::multiprecision::lcm(a, b);
    return l < 0 ? Integer(-l) : l;
}

Integer binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= Integer(n - k + i);
        result /= Integer(i);
    }
    return result;
}

}  // namespace stdbases
