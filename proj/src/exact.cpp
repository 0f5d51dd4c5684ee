#include "rigidity/exact.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace rigidity {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) {
    return make_rational(BigInt(num), BigInt(den));
}

BigInt binomial(long a, long b) {
    if (b < 0 || b > a) return 0;  // also covers a < 0
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

namespace {

struct FactorialCache {
    std::mutex mutex;
    std::vector<BigInt> values{BigInt(1)};  // values[k] = k!
    unsigned long digit_budget = 4'000'000;
    unsigned long digits_used = 0;
};

FactorialCache& factorial_cache() {
    static FactorialCache cache;
    return cache;
}

}  // namespace

void set_factorial_cache_digit_budget(unsigned long digits) {
    auto& cache = factorial_cache();
    std::lock_guard lock(cache.mutex);
    cache.digit_budget = digits;
}

BigInt factorial(unsigned long k) {
    auto& cache = factorial_cache();
    {
        std::lock_guard lock(cache.mutex);
        if (k < cache.values.size()) return cache.values[k];
        while (cache.digits_used < cache.digit_budget && cache.values.size() <= k) {
            const auto next = cache.values.size();
            BigInt v = cache.values.back() * static_cast<unsigned long>(next);
            cache.digits_used += mpz_sizeinbase(v.get_mpz_t(), 10);
            cache.values.push_back(std::move(v));
        }
        if (k < cache.values.size()) return cache.values[k];
    }
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

BigInt isqrt(const BigInt& v) {
    if (v < 0) throw std::invalid_argument("isqrt of negative value");
    if (v == 0) return 0;
    // Seed from the hardware sqrt where it is exact enough, otherwise from a
    // power of two above the root, then run the monotone Newton recurrence
    // x <- (x + v/x)/2 which converges from above.
    BigInt x;
    if (v.fits_ulong_p()) {
        x = static_cast<unsigned long>(std::sqrt(static_cast<double>(v.get_ui()))) + 1;
    } else {
        mpz_ui_pow_ui(x.get_mpz_t(), 2, (mpz_sizeinbase(v.get_mpz_t(), 2) + 1) / 2 + 1);
    }
    while (true) {
        BigInt next = (x + v / x) / 2;
        if (next >= x) break;
        x = next;
    }
    while (x * x > v) --x;
    while ((x + 1) * (x + 1) <= v) ++x;
    return x;
}

bool is_perfect_square(const BigInt& v, BigInt* root) {
    if (v < 0) return false;
    BigInt r = isqrt(v);
    if (r * r != v) return false;
    if (root) *root = r;
    return true;
}

std::string fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    BigInt num, den = 1;
    if (slash == std::string::npos) {
        if (num.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    } else {
        if (num.set_str(text.substr(0, slash), 10) != 0 ||
            den.set_str(text.substr(slash + 1), 10) != 0) {
            throw std::invalid_argument("bad rational: " + text);
        }
    }
    return make_rational(num, den);
}

int sign(const Rational& q) { return sgn(q); }

}  // namespace rigidity
