#pragma once

// Characteristic-zero Bott resolution, Weyl dimensions and Euler
// characteristics of line bundles on G/B. Euler characteristics do not depend
// on the characteristic, so everything downstream builds on euler_line.

#include "frobflag/numeric.hpp"
#include "frobflag/rootdata.hpp"

#include <variant>

namespace frobflag {

struct Singular {
    bool operator==(const Singular&) const = default;
};

struct Concentrated {
    int degree = 0;
    Weight dominant;
    bool operator==(const Concentrated&) const = default;
};

using BottResult = std::variant<Singular, Concentrated>;

/// Characteristic p and Frobenius power n; q = p^n.
struct FrobeniusParams {
    int p = 2;
    int n = 1;

    FrobeniusParams() = default;
    FrobeniusParams(int p_, int n_);

    std::int64_t q() const;
};

bool is_prime(int p);

/// Reflects lambda + rho at the smallest-index simple root with negative
/// pairing until it is dominant regular or lands on a wall.
BottResult bott_resolve(RootType t, Weight lambda);

/// dim nabla_lambda. Nondominant weights give 0 when nondominant_as_zero is
/// set and throw NondominantWeight otherwise.
BigInt weyl_dim(RootType t, Weight lambda, bool nondominant_as_zero = false);

/// chi(G/B, L_lambda) = (-1)^l(w) dim nabla_{w.lambda}, or 0 on a wall.
BigInt euler_line(RootType t, Weight lambda);

} // namespace frobflag
