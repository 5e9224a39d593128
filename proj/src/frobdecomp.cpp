#include "frobflag/frobdecomp.hpp"

#include "frobflag/errors.hpp"

#include <functional>

namespace frobflag {

namespace {

struct SummandSpec {
    std::string_view name;
    std::string_view formula;
    std::function<BigInt(std::int64_t q, FrobeniusParams fp)> value;
    std::string_view note;
};

BigInt signed_frob_euler(RootType t, std::string_view bundle, int degree, FrobeniusParams fp) {
    BigInt chi = euler_char(t, frobenius_pullback(bundle_dictionary(t, bundle).kclass, fp));
    return degree % 2 == 0 ? chi : BigInt(-chi);
}

const std::vector<SummandSpec>& summand_specs(RootType t) {
    using Q = std::int64_t;
    static const std::vector<SummandSpec> a2 = {
        {"O", "k", [](Q, FrobeniusParams) { return BigInt(1); }, ""},
        {"L(-1,0)", "S^q V* / V^[n]*",
         [](Q q, FrobeniusParams) { return binomial(q + 2, 2) - 3; }, ""},
        {"L(0,-1)", "S^q V* / V^[n]*",
         [](Q q, FrobeniusParams) { return binomial(q + 2, 2) - 3; }, ""},
        {"T_P2(-2w1-w2)", "S^(q-3) V", [](Q q, FrobeniusParams) { return binomial(q - 1, 2); },
         "alternative reading nabla_{(q-2)w_k}*, dimension C(q,2)"},
        {"T_P2v(-w1-2w2)", "S^(q-3) V", [](Q q, FrobeniusParams) { return binomial(q - 1, 2); },
         "alternative reading nabla_{(q-2)w_k}*, dimension C(q,2)"},
        {"L(-1,-1)", "nabla_{(q-2)rho}",
         [](Q q, FrobeniusParams) { return weyl_dim(RootType::A2, {q - 2, q - 2}, true); }, ""},
    };
    static const std::vector<SummandSpec> b2 = {
        {"O", "k", [](Q, FrobeniusParams) { return BigInt(1); }, ""},
        {"L(-1,0)", "H^1(Q3, F^n* Psi1)",
         [](Q, FrobeniusParams fp) { return signed_frob_euler(RootType::B2, "Psi1", 1, fp); }, ""},
        {"L(0,-1)", "H^1(P3, F^n* (Omega1_P3 (x) L_wa))",
         [](Q, FrobeniusParams fp) {
             return signed_frob_euler(RootType::B2, "Omega1_P3(wa)", 1, fp);
         },
         ""},
        {"U2v(-rho)", "H^1(Q3, F^n* U2)",
         [](Q, FrobeniusParams fp) { return signed_frob_euler(RootType::B2, "U2", 1, fp); }, ""},
        {"Omega1_P3(wa-wb)", "H^2(P3, F^n* (Omega2_P3 (x) L_2wa))",
         [](Q, FrobeniusParams fp) {
             return signed_frob_euler(RootType::B2, "Omega2_P3(2wa)", 2, fp);
         },
         ""},
        {"Psi1v(-rho)", "nabla_{(q-3)wb}*",
         [](Q q, FrobeniusParams) { return weyl_dim(RootType::B2, {0, q - 3}, true); },
         "Euler route for source L_{-wa}: dim nabla_{(q-4)wa}"},
        {"T_P3(-wa-rho)", "nabla_{(q-3)wa}*",
         [](Q q, FrobeniusParams) { return weyl_dim(RootType::B2, {q - 3, 0}, true); },
         "Euler route for source L_{-wb}: dim nabla_{(q-3)wb}"},
        {"L(-1,-1)", "nabla_{(q-2)rho}*",
         [](Q q, FrobeniusParams) { return weyl_dim(RootType::B2, {q - 2, q - 2}, true); }, ""},
    };
    switch (t) {
    case RootType::A2: return a2;
    case RootType::B2: return b2;
    case RootType::G2: break;
    }
    throw UnsupportedType("no builtin decomposition for " + std::string(to_string(t)) +
                          "; only A2 and B2 are supported");
}

bool integral(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

} // namespace

BuiltinData builtin_data(RootType t) {
    const auto& specs = summand_specs(t);
    BuiltinData data{builtin_collection(t), {}};
    const auto duals = right_dual_collection_k(data.collection);
    for (const auto& spec : specs) {
        NamedBundle nb = bundle_dictionary(t, spec.name);
        const DualEntry* link = nullptr;
        for (const auto& d : duals) {
            if (kclass_equal(t, d.normalized.dual(), nb.kclass)) {
                if (link) throw std::logic_error("summand " + nb.name + " matches two sources");
                link = &d;
            }
        }
        if (!link) throw std::logic_error("summand " + nb.name + " matches no right dual");
        data.summands.push_back(
            {nb.name, nb.kclass, nb.rank, link->source, link->block_degree});
    }
    return data;
}

BigInt concentration_multiplicity(RootType t, const NamedBundle& e, int block_degree,
                                  FrobeniusParams fp) {
    BigInt chi = euler_char(t, frobenius_pullback(e.kclass, fp));
    BigInt m = block_degree % 2 == 0 ? chi : BigInt(-chi);
    if (m < 0) {
        throw ConcentrationViolated("chi(F^n* " + e.name + ") = " + chi.str() + " has the wrong sign for degree " +
                                    std::to_string(block_degree) + " at p=" + std::to_string(fp.p) +
                                    ", n=" + std::to_string(fp.n));
    }
    return m;
}

std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    if (a.size() != n) throw InvalidParameter("system is not square");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw SingularSystem("pairing matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
            b[row] -= factor * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

namespace {

std::vector<Rational> solve_against(RootType t, std::span<const KClass> tests,
                                    std::span<const KClass> summands, FrobeniusParams fp) {
    if (tests.size() != summands.size()) {
        throw InvalidParameter("need exactly " + std::to_string(tests.size()) + " summand classes");
    }
    std::vector<std::vector<Rational>> a(tests.size(), std::vector<Rational>(summands.size()));
    std::vector<Rational> rhs(tests.size());
    for (std::size_t j = 0; j < tests.size(); ++j) {
        for (std::size_t i = 0; i < summands.size(); ++i) {
            a[j][i] = Rational(euler_pairing(t, tests[j], summands[i]));
        }
        // chi(T, F_* O) = chi(F^* T^vee) by the projection formula.
        rhs[j] = Rational(euler_char(t, frobenius_pullback(tests[j].dual(), fp)));
    }
    return solve_exact(std::move(a), std::move(rhs));
}

} // namespace

std::vector<Rational> solve_multiplicities(RootType t, std::span<const KClass> summands,
                                           FrobeniusParams fp) {
    const auto tests = builtin_collection(t).flattened_classes();
    return solve_against(t, tests, summands, fp);
}

DecompositionReport decomposition_report(RootType t, FrobeniusParams fp) {
    const BuiltinData data = builtin_data(t);
    const auto& specs = summand_specs(t);
    DecompositionReport r;
    r.type = t;
    r.fp = fp;
    r.q = fp.q();
    r.dimension = root_data(t).num_positive();
    r.expected_rank = boost::multiprecision::pow(BigInt(r.q), static_cast<unsigned>(r.dimension));

    std::vector<KClass> classes;
    for (const auto& s : data.summands) classes.push_back(s.kclass);
    const auto solved = solve_multiplicities(t, classes, fp);

    const auto sources = data.collection.flattened();
    r.total_rank = 0;
    r.routes_agree = true;
    for (std::size_t k = 0; k < data.summands.size(); ++k) {
        const Summand& s = data.summands[k];
        const NamedBundle* source = nullptr;
        for (const auto& m : sources) {
            if (m.name == s.source) source = &m;
        }
        SummandReport sr;
        sr.summand = s;
        sr.multiplicity = concentration_multiplicity(t, *source, s.block_degree, fp);
        sr.solver_multiplicity = solved[k];
        sr.zero_multiplicity = sr.multiplicity == 0;
        const auto& spec = specs[k];
        sr.closed_form.formula = std::string(spec.formula);
        sr.closed_form.value = spec.value(r.q, fp);
        sr.closed_form.match = sr.closed_form.value == sr.multiplicity;
        sr.closed_form.note = std::string(spec.note);
        r.routes_agree = r.routes_agree && Rational(sr.multiplicity) == sr.solver_multiplicity;
        r.total_rank += sr.multiplicity * s.rank;
        r.summands.push_back(std::move(sr));
    }
    if (!r.routes_agree) {
        throw MultiplicityMismatch("concentration and solver multiplicities disagree for " +
                                   std::string(to_string(t)) + " at q=" + std::to_string(r.q));
    }
    r.rank_identity_ok = r.total_rank == r.expected_rank;

    // The concentration multiplicities must reproduce the pairing data of F_* O.
    KClass total;
    for (const auto& sr : r.summands) total += sr.multiplicity * sr.summand.kclass;
    r.pairing_identity_ok = total.rank() == r.expected_rank;
    for (const auto& member : data.collection.flattened_classes()) {
        const BigInt lhs = euler_pairing(t, member, total);
        const BigInt rhs = euler_char(t, frobenius_pullback(member.dual(), fp));
        r.pairing_identity_ok = r.pairing_identity_ok && lhs == rhs;
    }
    return r;
}

std::string_view to_string(ProjectiveSpace s) { return s == ProjectiveSpace::P3 ? "P3" : "Q3"; }

ProjectiveSpace parse_projective_space(std::string_view s) {
    if (s == "P3") return ProjectiveSpace::P3;
    if (s == "Q3") return ProjectiveSpace::Q3;
    throw ParseError("unknown space '" + std::string(s) + "', expected P3 or Q3");
}

PushforwardResult projective_pushforward_solve(ProjectiveSpace space, FrobeniusParams fp) {
    constexpr RootType t = RootType::B2;
    // Exceptional collections on the base and the candidate summands, all
    // pulled back to Sp4/B; pullback along a P^1-bundle preserves chi.
    const std::vector<std::string> tests =
        space == ProjectiveSpace::P3
            ? std::vector<std::string>{"L(-1,0)", "Omega2_P3(2wa)", "Omega1_P3(wa)", "O"}
            : std::vector<std::string>{"L(0,-1)", "U2", "Psi1", "O"};
    const std::vector<std::string> candidates =
        space == ProjectiveSpace::P3
            ? std::vector<std::string>{"O", "L(-1,0)", "L(-2,0)", "L(-3,0)"}
            : std::vector<std::string>{"O", "L(0,-1)", "U2(-wb)", "L(0,-2)"};

    PushforwardResult out{space, fp, {}, {}, {}, 0};
    std::vector<KClass> test_classes;
    std::vector<KClass> candidate_classes;
    for (const auto& n : tests) test_classes.push_back(bundle_dictionary(t, n).kclass);
    for (const auto& n : candidates) {
        auto nb = bundle_dictionary(t, n);
        out.summand_names.push_back(nb.name);
        out.ranks.push_back(nb.rank);
        candidate_classes.push_back(nb.kclass);
    }
    const auto solved = solve_against(t, test_classes, candidate_classes, fp);
    for (std::size_t k = 0; k < solved.size(); ++k) {
        if (!integral(solved[k])) {
            throw std::logic_error("non-integral multiplicity " + to_decimal(solved[k]) +
                                   " for " + out.summand_names[k]);
        }
        BigInt m = boost::multiprecision::numerator(solved[k]);
        if (m < 0) {
            throw NegativeMultiplicity("multiplicity " + m.str() + " for " + out.summand_names[k] +
                                       " on " + std::string(to_string(space)) + " at p=" +
                                       std::to_string(fp.p));
        }
        out.total_rank += m * out.ranks[k];
        out.multiplicities.push_back(std::move(m));
    }
    const BigInt expected = boost::multiprecision::pow(BigInt(fp.q()), 3);
    if (out.total_rank != expected) {
        throw std::logic_error("pushforward rank sum " + out.total_rank.str() + " != q^3");
    }
    return out;
}

} // namespace frobflag
