#include "latslice/rational.hpp"

namespace latslice {

Int floor_rat(const Rat& x) {
    Int n = numerator(x), d = denominator(x);
    Int q = n / d;          // truncates toward zero
    if (n % d != 0 && n < 0) q -= 1;
    return q;
}

Int ceil_rat(const Rat& x) { return -floor_rat(-x); }

Rat pow_rat(const Rat& x, long e) {
    if (e < 0) {
        if (x == 0) throw Error("pow_rat: zero base with negative exponent");
        return Rat(1) / pow_rat(x, -e);
    }
    Rat r(1), b = x;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

Int pow_int(const Int& x, unsigned long e) {
    Int r(1), b = x;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Int factorial(unsigned n) {
    Int r(1);
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return Int(0);
    if (k > n - k) k = n - k;
    Int r(1);
    for (unsigned i = 1; i <= k; ++i) {
        r *= Int(n - k + i);
        r /= Int(i);
    }
    return r;
}

Int cbrt_ceil(const Int& x) {
    if (x <= 0) return Int(0);
    Int lo(0), hi(1);
    while (hi * hi * hi < x) hi <<= 1;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (mid * mid * mid >= x)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

long log2_ceil(const Int& x) {
    if (x < 1) throw Error("log2_ceil: argument must be >= 1");
    long e = 0;
    Int p(1);
    while (p < x) {
        p <<= 1;
        ++e;
    }
    return e;
}

Rat parse_rat(const std::string& s) {
    auto bad = [&] { throw Error("malformed rational '" + s + "' (expected \"p/q\" or \"p\")"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw Error("rational '" + s + "' has zero denominator");
        return Rat(p, q);  // canonicalizes
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        bad();
    }
    return Rat(0);  // unreachable
}

std::string format_rat(const Rat& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

// pi = 3.141592653589793238462643383279502884...
const Rat& pi_lower() {
    static const Rat v(Int("3141592653589793238462643383279"), pow_int(Int(10), 30));
    return v;
}

const Rat& pi_upper() {
    static const Rat v(Int("3141592653589793238462643383280"), pow_int(Int(10), 30));
    return v;
}

}  // namespace latslice
