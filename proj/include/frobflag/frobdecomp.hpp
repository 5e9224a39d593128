#pragma once

// Decomposition of F^n_* O_{G/B} for A2 and B2.
//
// Multiplicities are computed twice: once from the Euler characteristic of
// F^{n*} E for the source object E of each summand (valid when its
// cohomology is concentrated in the block degree), and once by an exact
// rational solve of the Euler-pairing system against the full collection.
// Closed-form multiplicity formulas are evaluated separately and only
// compared.

#include "frobflag/mutation.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace frobflag {

struct Summand {
    std::string name;
    KClass kclass;
    BigInt rank;
    std::string source;  // collection member whose right dual is dual to this summand
    int block_degree = 0;
};

struct BuiltinData {
    ExcCollection collection;
    std::vector<Summand> summands;
};

/// Throws UnsupportedType for G2.
BuiltinData builtin_data(RootType t);

/// (-1)^i chi(F^{n*} E). Throws ConcentrationViolated when negative.
BigInt concentration_multiplicity(RootType t, const NamedBundle& e, int block_degree,
                                  FrobeniusParams fp);

/// Exact solution of sum_i m_i chi(T_j, S_i) = chi(F^{n*} T_j^vee) over the
/// builtin collection T. Throws SingularSystem.
std::vector<Rational> solve_multiplicities(RootType t, std::span<const KClass> summands,
                                           FrobeniusParams fp);

/// Solves A x = b exactly. Throws SingularSystem.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

struct FormulaComparison {
    std::string formula;
    BigInt value;
    bool match = false;
    std::string note;
};

struct SummandReport {
    Summand summand;
    BigInt multiplicity;           // concentration route
    Rational solver_multiplicity;  // linear-solve route
    bool zero_multiplicity = false;
    FormulaComparison closed_form;
};

struct DecompositionReport {
    RootType type = RootType::A2;
    FrobeniusParams fp;
    std::int64_t q = 0;
    int dimension = 0;
    std::vector<SummandReport> summands;
    BigInt total_rank;
    BigInt expected_rank;
    bool rank_identity_ok = false;
    bool routes_agree = false;
    bool pairing_identity_ok = false;

    bool verified() const { return rank_identity_ok && routes_agree && pairing_identity_ok; }
};

/// Throws ConcentrationViolated, SingularSystem, MultiplicityMismatch.
DecompositionReport decomposition_report(RootType t, FrobeniusParams fp);

enum class ProjectiveSpace { P3, Q3 };

std::string_view to_string(ProjectiveSpace s);
ProjectiveSpace parse_projective_space(std::string_view s);

struct PushforwardResult {
    ProjectiveSpace space;
    FrobeniusParams fp;
    std::vector<std::string> summand_names;
    std::vector<BigInt> ranks;
    std::vector<BigInt> multiplicities;
    BigInt total_rank;
};

/// F^n_* O on P^3 = G/P_beta or Q_3 = G/P_alpha, worked out on Sp4/B through
/// pullbacks. Throws SingularSystem or NegativeMultiplicity, and
/// std::logic_error if the rank sum is not q^3.
PushforwardResult projective_pushforward_solve(ProjectiveSpace space, FrobeniusParams fp);

} // namespace frobflag
