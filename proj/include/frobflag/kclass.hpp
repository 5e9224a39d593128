#pragma once

// Grothendieck-group classes on G/B as finite integer combinations of
// line-bundle symbols [L_lambda], plus the dictionary of named homogeneous
// bundles (stored through their line-bundle filtrations).

#include "frobflag/bottcalc.hpp"
#include "frobflag/numeric.hpp"
#include "frobflag/rootdata.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frobflag {

class KClass {
public:
    using Terms = std::map<Weight, BigInt>;

    KClass() = default;
    static KClass line(Weight w, BigInt coeff = 1);
    static KClass structure_sheaf() { return line({0, 0}); }

    const Terms& terms() const { return terms_; }
    BigInt coefficient(Weight w) const;
    bool is_zero() const { return terms_.empty(); }

    /// Sum of coefficients.
    BigInt rank() const;

    KClass& operator+=(const KClass& o);
    KClass& operator-=(const KClass& o);
    KClass& operator*=(const BigInt& k);

    friend KClass operator+(KClass a, const KClass& b) { return a += b; }
    friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
    friend KClass operator*(const BigInt& k, KClass a) { return a *= k; }
    KClass operator-() const;

    /// [L_lambda] -> [L_{-lambda}], extended additively.
    KClass dual() const;
    /// Convolution of coefficient maps.
    KClass tensor(const KClass& o) const;
    KClass twist(Weight w) const { return tensor(line(w)); }

    bool operator==(const KClass&) const = default;

    /// Literal grammar: terms `[k*](a,b)` joined by `+`/`-`, e.g.
    /// `3*(0,0) - (1,0)`. The zero class prints as `0`.
    std::string to_string() const;
    static KClass parse(std::string_view s);

private:
    void add_term(Weight w, const BigInt& c);
    Terms terms_;
};

/// F^{n*}: lambda -> q * lambda.
KClass frobenius_pullback(const KClass& c, FrobeniusParams fp);

BigInt euler_char(RootType t, const KClass& c);

/// chi(a, b) = sum_i (-1)^i dim Ext^i(a, b) = euler_char(dual(a) (x) b).
BigInt euler_pairing(RootType t, const KClass& a, const KClass& b);

struct NamedBundle {
    std::string name;
    KClass kclass;
    BigInt rank;
};

/// Named bundles for t. Generic line bundles are addressed as "L(a,b)".
/// Throws UnknownName.
NamedBundle bundle_dictionary(RootType t, std::string_view name);
std::vector<std::string> bundle_names(RootType t);

/// Blocks A_{-N}, ..., A_0 of the builtin full exceptional collection as
/// dictionary names, first block first. A2 and B2 only.
std::vector<std::vector<std::string>> builtin_collection_blocks(RootType t);
std::vector<NamedBundle> builtin_full_collection(RootType t);

/// Equality in K_0(G/B) tested by rank and Euler pairings against the builtin
/// full collection. Sound only because that collection generates the derived
/// category. Throws UnsupportedType for G2.
bool kclass_equal(RootType t, const KClass& a, const KClass& b);

} // namespace frobflag
