#include "frobflag/bottcalc.hpp"

#include "frobflag/errors.hpp"

#include <limits>

namespace frobflag {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

FrobeniusParams::FrobeniusParams(int p_, int n_) : p(p_), n(n_) {
    if (!is_prime(p)) throw InvalidParameter("p must be prime, got " + std::to_string(p));
    if (n < 1) throw InvalidParameter("n must be positive, got " + std::to_string(n));
    (void)q();
}

std::int64_t FrobeniusParams::q() const {
    std::int64_t out = 1;
    for (int k = 0; k < n; ++k) {
        if (out > std::numeric_limits<std::int32_t>::max() / p) {
            throw InvalidParameter("p^n too large");
        }
        out *= p;
    }
    return out;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < k) return 0;
    BigInt out = 1;
    for (long long j = 1; j <= k; ++j) {
        out *= n - k + j;
        out /= j;
    }
    return out;
}

BottResult bott_resolve(RootType t, Weight lambda) {
    const auto& rd = root_data(t);
    Weight shifted = lambda + kRho;
    int degree = 0;
    // Each step lowers the number of positive roots with negative pairing by
    // one, so the loop runs at most N times.
    for (;;) {
        for (const auto& f : rd.positive_coroots) {
            if (f(shifted) == 0) return Singular{};
        }
        int i = shifted.a < 0 ? 1 : (shifted.b < 0 ? 2 : 0);
        if (i == 0) return Concentrated{degree, shifted - kRho};
        shifted = reflect_simple(t, i, shifted);
        ++degree;
    }
}

BigInt weyl_dim(RootType t, Weight lambda, bool nondominant_as_zero) {
    if (!lambda.dominant()) {
        if (nondominant_as_zero) return 0;
        throw NondominantWeight("weyl_dim needs a dominant weight, got (" + to_string(lambda) + ")");
    }
    const auto& rd = root_data(t);
    const Weight shifted = lambda + kRho;
    Rational product = 1;
    for (std::size_t k = 0; k < rd.positive_coroots.size(); ++k) {
        product *= Rational(BigInt(rd.positive_coroots[k](shifted)), BigInt(rd.rho_pairings[k]));
    }
    if (boost::multiprecision::denominator(product) != 1) {
        throw std::logic_error("Weyl dimension formula produced a non-integer");
    }
    return boost::multiprecision::numerator(product);
}

BigInt euler_line(RootType t, Weight lambda) {
    const BottResult r = bott_resolve(t, lambda);
    if (std::holds_alternative<Singular>(r)) return 0;
    const auto& c = std::get<Concentrated>(r);
    BigInt d = weyl_dim(t, c.dominant);
    return c.degree % 2 == 0 ? d : BigInt(-d);
}

} // namespace frobflag
