#include "hanfkit/ints.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/random/mersenne_twister.hpp>

namespace hanfkit {

Int pow_int(const Int& base, unsigned exp) {
    Int result = 1;
    Int b = base;
    while (exp > 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    if (n < 1000000) {
        for (Int i = 3; i * i <= n; i += 2)
            if (n % i == 0) return false;
        return true;
    }
    // Deterministic seed so the oracle is a function.
    boost::random::mt19937 gen(0x9e3779b9u);
    return boost::multiprecision::miller_rabin_test(n, 40, gen);
}

} // namespace hanfkit
