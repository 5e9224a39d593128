#pragma once

// Rank-2 root data (A2, B2 = C2, G2) in fundamental-weight coordinates.
//
// A weight (a, b) means a*w1 + b*w2, so <lambda, alpha_i^vee> is read off as
// the i-th coordinate. Simple roots are stored as Cartan-matrix columns. For
// B2 and G2 the first simple root alpha is short and the second, beta, long.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace frobflag {

enum class RootType { A2, B2, G2 };

std::string_view to_string(RootType t);
RootType parse_root_type(std::string_view s);

struct Weight {
    std::int64_t a = 0;
    std::int64_t b = 0;

    constexpr auto operator<=>(const Weight&) const = default;

    constexpr Weight operator+(Weight o) const { return {a + o.a, b + o.b}; }
    constexpr Weight operator-(Weight o) const { return {a - o.a, b - o.b}; }
    constexpr Weight operator-() const { return {-a, -b}; }
    constexpr Weight operator*(std::int64_t k) const { return {k * a, k * b}; }

    constexpr bool dominant() const { return a >= 0 && b >= 0; }
    constexpr std::int64_t coordinate(int i) const { return i == 1 ? a : b; }
};

inline constexpr Weight kRho{1, 1};

// "a,b"; surrounding whitespace tolerated.
std::string to_string(Weight w);
Weight parse_weight(std::string_view s);

/// Coroot functional lambda -> <lambda, gamma^vee> = ca*a + cb*b.
struct CorootFunctional {
    std::int64_t ca = 0;
    std::int64_t cb = 0;
    constexpr std::int64_t operator()(Weight w) const { return ca * w.a + cb * w.b; }
};

struct RootData {
    RootType type;
    std::array<Weight, 2> simple_roots;
    std::vector<CorootFunctional> positive_coroots;
    std::vector<std::int64_t> rho_pairings;
    int weyl_order;

    int num_positive() const { return static_cast<int>(positive_coroots.size()); }
};

const RootData& root_data(RootType t);

/// <lambda, gamma^vee> for every positive root gamma, in table order.
std::vector<std::int64_t> pairing_all_positive(RootType t, Weight lambda);

/// Linear reflection s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
Weight reflect_simple(RootType t, int i, Weight lambda);

/// Dot action of a single simple reflection: s_i(lambda + rho) - rho.
Weight dot_simple(RootType t, int i, Weight lambda);

/// A Weyl group element as a word s_{i1} s_{i2} ... s_{ik}; the rightmost
/// letter acts first.
struct WeylWord {
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const WeylWord&) const = default;
};

WeylWord concat(const WeylWord& v, const WeylWord& w);
std::string to_string(const WeylWord& w);

Weight act(RootType t, const WeylWord& w, Weight lambda);
Weight dot_action(RootType t, const WeylWord& w, Weight lambda);

/// All |W| elements, each as its lexicographically smallest reduced word,
/// sorted by (length, word).
const std::vector<WeylWord>& weyl_group(RootType t);

} // namespace frobflag
