#pragma once

// Mutations, right dual collections and helix checks at the level of
// Grothendieck-group classes, with the convention [X[k]] = (-1)^k [X].
// Shifts themselves are never derived here.

#include "frobflag/kclass.hpp"

#include <span>
#include <string>
#include <vector>

namespace frobflag {

enum class MutationSide { left, right };

/// left:  L_e f = [f] - chi(e, f) [e]
/// right: R_f e = [e] - chi(e, f) [f]
KClass mutate_k(MutationSide side, const KClass& e, const KClass& f, RootType t);

/// Mutation of e through a block of pairwise Euler-orthogonal classes.
/// Throws NonOrthogonalBlock when the block members pair nontrivially.
KClass mutate_through_block(MutationSide side, const KClass& e, std::span<const KClass> block,
                            RootType t);

/// Block A_{-degree}: mutually orthogonal members whose Frobenius pullbacks
/// have cohomology only in degree `degree`.
struct CollectionBlock {
    int degree = 0;
    std::vector<NamedBundle> members;
};

struct ExcCollection {
    RootType type = RootType::A2;
    std::vector<CollectionBlock> blocks;  // A_{-N} first, A_0 last

    std::vector<NamedBundle> flattened() const;
    std::vector<KClass> flattened_classes() const;
};

ExcCollection builtin_collection(RootType t);

struct DualEntry {
    std::string source;
    int block_degree = 0;
    KClass raw;         // R_{<later blocks>} source, shift folded into the sign
    KClass normalized;  // (-1)^block_degree * raw
    int shift_parity = 0;
};

/// Right duals of every member, blockwise: each source is mutated to the
/// right through all strictly later blocks, nearest block first.
std::vector<DualEntry> right_dual_collection_k(const ExcCollection& c);

/// Sources for which mutating through every later object one at a time (the
/// flattened reading of the definition) differs from the blockwise reading.
std::vector<std::string> dual_reading_disagreements(const ExcCollection& c);

/// Names of the dual collection stated for the builtin collections, grouped
/// by dual block A^vee_0, A^vee_1, ...
std::vector<std::vector<std::string>> expected_dual_blocks(RootType t);

/// e (x) L_{2 rho}, i.e. the inverse canonical twist.
KClass serre_twist_full_k(const KClass& e, RootType t);

struct HelixEntry {
    std::string name;
    KClass mutated;
    KClass twisted;
    int sign = 1;
    bool ok = false;
};

/// For member k: right-mutate through members k+1..end, then through the
/// twisted members 0..k-1, and compare with sign * twist.
/// The expected sign is (-1)^N, N = dim G/B.
std::vector<HelixEntry> helix_check(const ExcCollection& c);

struct PairCheck {
    std::size_t row = 0;  // flattened index of the first argument
    std::size_t col = 0;
    BigInt value;
    BigInt expected;
    bool ok = false;
};

struct SodReport {
    std::vector<std::string> names;
    std::vector<PairCheck> diagonal;          // chi(E, E) = 1
    std::vector<PairCheck> lower_triangular;  // chi(later, earlier) = 0
    std::vector<PairCheck> within_block;      // chi(E, E') = 0 both ways
    std::vector<std::vector<BigInt>> gram;
    bool ok = false;
};

SodReport verify_sod_euler(const ExcCollection& c);

} // namespace frobflag
