#include "frobflag/mutation.hpp"

#include "frobflag/errors.hpp"

namespace frobflag {

KClass mutate_k(MutationSide side, const KClass& e, const KClass& f, RootType t) {
    const BigInt chi = euler_pairing(t, e, f);
    if (side == MutationSide::left) return f - chi * e;
    return e - chi * f;
}

KClass mutate_through_block(MutationSide side, const KClass& e, std::span<const KClass> block,
                            RootType t) {
    for (std::size_t i = 0; i < block.size(); ++i) {
        for (std::size_t j = 0; j < block.size(); ++j) {
            if (i != j && euler_pairing(t, block[i], block[j]) != 0) {
                throw NonOrthogonalBlock("block members " + std::to_string(i) + " and " +
                                         std::to_string(j) + " are not Euler-orthogonal");
            }
        }
    }
    KClass out = e;
    for (const auto& member : block) {
        out = side == MutationSide::left ? mutate_k(side, member, out, t)
                                         : mutate_k(side, out, member, t);
    }
    return out;
}

std::vector<NamedBundle> ExcCollection::flattened() const {
    std::vector<NamedBundle> out;
    for (const auto& b : blocks) out.insert(out.end(), b.members.begin(), b.members.end());
    return out;
}

std::vector<KClass> ExcCollection::flattened_classes() const {
    std::vector<KClass> out;
    for (const auto& b : blocks) {
        for (const auto& m : b.members) out.push_back(m.kclass);
    }
    return out;
}

ExcCollection builtin_collection(RootType t) {
    auto names = builtin_collection_blocks(t);
    ExcCollection c{t, {}};
    const int top = static_cast<int>(names.size()) - 1;
    for (int k = 0; k <= top; ++k) {
        CollectionBlock block{top - k, {}};
        for (const auto& name : names[static_cast<std::size_t>(k)]) {
            block.members.push_back(bundle_dictionary(t, name));
        }
        c.blocks.push_back(std::move(block));
    }
    return c;
}

namespace {

std::vector<KClass> block_classes(const CollectionBlock& b) {
    std::vector<KClass> out;
    for (const auto& m : b.members) out.push_back(m.kclass);
    return out;
}

} // namespace

std::vector<DualEntry> right_dual_collection_k(const ExcCollection& c) {
    std::vector<DualEntry> out;
    for (std::size_t bi = 0; bi < c.blocks.size(); ++bi) {
        const auto& block = c.blocks[bi];
        for (const auto& member : block.members) {
            KClass x = member.kclass;
            for (std::size_t later = bi + 1; later < c.blocks.size(); ++later) {
                auto classes = block_classes(c.blocks[later]);
                x = mutate_through_block(MutationSide::right, x, classes, c.type);
            }
            const bool odd = block.degree % 2 != 0;
            DualEntry entry{member.name, block.degree, x, odd ? -x : x, odd ? 1 : 0};
            out.push_back(std::move(entry));
        }
    }
    return out;
}

std::vector<std::string> dual_reading_disagreements(const ExcCollection& c) {
    const auto blockwise = right_dual_collection_k(c);
    const auto flat = c.flattened_classes();
    std::vector<std::string> out;
    for (std::size_t k = 0; k < flat.size(); ++k) {
        KClass x = flat[k];
        for (std::size_t j = k + 1; j < flat.size(); ++j) {
            x = mutate_k(MutationSide::right, x, flat[j], c.type);
        }
        if (!kclass_equal(c.type, x, blockwise[k].raw)) out.push_back(blockwise[k].source);
    }
    return out;
}

std::vector<std::vector<std::string>> expected_dual_blocks(RootType t) {
    switch (t) {
    case RootType::A2:
        return {{"O"},
                {"L(1,0)", "L(0,1)"},
                {"Omega1_P2(2w1+w2)", "Omega1_P2v(w1+2w2)"},
                {"L(1,1)"}};
    case RootType::B2:
        return {{"O"},
                {"L(1,0)", "L(0,1)"},
                {"U2(rho)", "T_P3(wb-wa)"},
                {"Psi1(rho)", "Omega1_P3(wa+rho)"},
                {"L(1,1)"}};
    case RootType::G2: break;
    }
    throw UnsupportedType("no dual collection recorded for " + std::string(to_string(t)));
}

KClass serre_twist_full_k(const KClass& e, RootType t) {
    if (t == RootType::G2) throw UnsupportedType("helix twist is only used for A2 and B2");
    return e.twist(kRho * 2);
}

std::vector<HelixEntry> helix_check(const ExcCollection& c) {
    const auto flat = c.flattened();
    const int sign = root_data(c.type).num_positive() % 2 == 0 ? 1 : -1;
    std::vector<HelixEntry> out;
    for (std::size_t k = 0; k < flat.size(); ++k) {
        KClass x = flat[k].kclass;
        for (std::size_t j = k + 1; j < flat.size(); ++j) {
            x = mutate_k(MutationSide::right, x, flat[j].kclass, c.type);
        }
        for (std::size_t j = 0; j < k; ++j) {
            x = mutate_k(MutationSide::right, x, serre_twist_full_k(flat[j].kclass, c.type), c.type);
        }
        KClass twisted = serre_twist_full_k(flat[k].kclass, c.type);
        const bool ok = kclass_equal(c.type, x, BigInt(sign) * twisted);
        out.push_back({flat[k].name, std::move(x), std::move(twisted), sign, ok});
    }
    return out;
}

SodReport verify_sod_euler(const ExcCollection& c) {
    SodReport r;
    const auto flat = c.flattened();
    const std::size_t n = flat.size();
    std::vector<std::size_t> block_of;
    for (std::size_t bi = 0; bi < c.blocks.size(); ++bi) {
        block_of.insert(block_of.end(), c.blocks[bi].members.size(), bi);
    }
    r.gram.assign(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
        r.names.push_back(flat[i].name);
        for (std::size_t j = 0; j < n; ++j) {
            r.gram[i][j] = euler_pairing(c.type, flat[i].kclass, flat[j].kclass);
        }
    }
    r.ok = true;
    auto record = [&](std::vector<PairCheck>& into, std::size_t i, std::size_t j, int expected) {
        PairCheck pc{i, j, r.gram[i][j], expected, r.gram[i][j] == expected};
        r.ok = r.ok && pc.ok;
        into.push_back(std::move(pc));
    };
    for (std::size_t i = 0; i < n; ++i) {
        record(r.diagonal, i, i, 1);
        for (std::size_t j = 0; j < i; ++j) record(r.lower_triangular, i, j, 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && block_of[i] == block_of[j]) record(r.within_block, i, j, 0);
        }
    }
    return r;
}

} // namespace frobflag
