#pragma once

// What can be certified about H^*(G/B, L_chi) in characteristic p using
// Andersen's H^1 criterion, the two degree-shifting recursions, Kempf
// vanishing and Borel-Weil-Bott in the bottom alcove. Anything outside those
// certified regions is reported as Unknown.

#include "frobflag/bottcalc.hpp"

#include <optional>
#include <variant>

namespace frobflag {

struct Vanishes {
    bool operator==(const Vanishes&) const = default;
};

/// All cohomology sits in `degree` and has the dimension of nabla_dominant.
struct Known {
    int degree = 0;
    Weight dominant;
    bool operator==(const Known&) const = default;
};

struct H1Nonzero {
    bool operator==(const H1Nonzero&) const = default;
};

struct Unknown {
    bool operator==(const Unknown&) const = default;
};

using CharpStatus = std::variant<Vanishes, Known, H1Nonzero, Unknown>;

std::string to_string(const CharpStatus& s);

#ifdef FROBFLAG_ANDERSEN_ALLOW_M0
inline constexpr int kAndersenMinExponent = 0;
#else
inline constexpr int kAndersenMinExponent = 1;
#endif

bool h1_nonzero(RootType t, Weight chi, FrobeniusParams fp);

enum class Direction { up, down };

struct RecursionStep {
    Weight weight;
    int shift = 0;  // -1 for up (H^i = H^{i-1}), +1 for down (H^i = H^{i+1})
    bool operator==(const RecursionStep&) const = default;
};

std::optional<RecursionStep> recursion_step(RootType t, Weight chi, int i, FrobeniusParams fp,
                                            Direction dir);

/// 0 < <lambda + rho, gamma^vee> < p for every positive root. Uses p, not q.
bool bottom_alcove_interior(RootType t, Weight lambda, FrobeniusParams fp);

struct CharpOptions {
    int max_depth = 20;
};

CharpStatus resolve_charp(RootType t, Weight chi, FrobeniusParams fp, CharpOptions opts = {});

} // namespace frobflag
