#include "frobflag/charp.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace frobflag {

namespace {

// Exponents m with p^m <= |c| + 1; beyond that no clause can fire.
template <typename F>
bool any_power(int p, std::int64_t c, F&& pred) {
    const std::int64_t bound = (c < 0 ? -c : c) + 1;
    std::int64_t pm = 1;
    for (int m = 0; m < kAndersenMinExponent; ++m) pm *= p;
    for (; pm <= bound; pm *= p) {
        for (std::int64_t a = 1; a < p; ++a) {
            if (pred(a, pm)) return true;
        }
    }
    return false;
}

// A terminal fact about L_nu: all its cohomology is H^degree = nabla_mu.
std::optional<Known> terminal(RootType t, Weight nu, FrobeniusParams fp) {
    if (nu.dominant()) return Known{0, nu};
    const BottResult r = bott_resolve(t, nu);
    if (const auto* c = std::get_if<Concentrated>(&r)) {
        if (bottom_alcove_interior(t, c->dominant, fp)) return Known{c->degree, c->dominant};
    }
    return std::nullopt;
}

} // namespace

std::string to_string(const CharpStatus& s) {
    if (std::holds_alternative<Vanishes>(s)) return "Vanishes";
    if (std::holds_alternative<H1Nonzero>(s)) return "H1Nonzero";
    if (std::holds_alternative<Unknown>(s)) return "Unknown";
    const auto& k = std::get<Known>(s);
    return "Known{degree " + std::to_string(k.degree) + ", dominant (" + to_string(k.dominant) + ")}";
}

bool h1_nonzero(RootType t, Weight chi, FrobeniusParams fp) {
    const int p = fp.p;
    for (int i : {1, 2}) {
        const std::int64_t c = chi.coordinate(i);
        if (c > -2) continue;
        const bool dot_dominant = dot_simple(t, i, chi).dominant();
        if (dot_dominant && c >= -p) return true;
        const Weight alpha = root_data(t).simple_roots[static_cast<std::size_t>(i - 1)];
        const bool fires = any_power(p, c, [&](std::int64_t a, std::int64_t pm) {
            if (dot_dominant && c == -a * pm - 1) return true;
            return -(a + 1) * pm <= c && c <= -a * pm - 2 && (chi + alpha * (a * pm)).dominant();
        });
        if (fires) return true;
    }
    return false;
}

std::optional<RecursionStep> recursion_step(RootType t, Weight chi, int i, FrobeniusParams fp,
                                            Direction dir) {
    const std::int64_t c = chi.coordinate(i);
    bool holds = false;
    if (dir == Direction::up) {
        // Only meaningful below the wall; for c >= 0 the identity is false
        // (take chi = 0).
        holds = c <= -1 && (c >= -fp.p || any_power(fp.p, c, [&](std::int64_t a, std::int64_t pm) {
                                return c == -a * pm - 1;
                            }));
    } else {
        holds = 0 <= c + 1 && c + 1 <= fp.p;
    }
    if (!holds) return std::nullopt;
    return RecursionStep{dot_simple(t, i, chi), dir == Direction::up ? -1 : +1};
}

bool bottom_alcove_interior(RootType t, Weight lambda, FrobeniusParams fp) {
    for (std::int64_t v : pairing_all_positive(t, lambda + kRho)) {
        if (v <= 0 || v >= fp.p) return false;
    }
    return true;
}

CharpStatus resolve_charp(RootType t, Weight chi, FrobeniusParams fp, CharpOptions opts) {
    const int n_pos = root_data(t).num_positive();
    auto finish = [&](Known k, int offset) -> CharpStatus {
        // H^j(chi) = H^{j + offset}(nu) and nu lives in degree k.degree.
        Known out{k.degree - offset, k.dominant};
        if (out.degree < 0 || out.degree > n_pos) {
            throw std::logic_error("certified chain produced an out-of-range degree");
        }
        return out;
    };

    if (auto k = terminal(t, chi, fp)) return finish(*k, 0);

    struct Node {
        Weight weight;
        int offset;
        int depth;
    };
    std::set<std::pair<Weight, int>> seen{{chi, 0}};
    std::deque<Node> queue{{chi, 0, 0}};
    while (!queue.empty()) {
        const Node node = queue.front();
        queue.pop_front();
        if (node.depth >= opts.max_depth) continue;
        for (Direction dir : {Direction::up, Direction::down}) {
            for (int i : {1, 2}) {
                auto step = recursion_step(t, node.weight, i, fp, dir);
                if (!step) continue;
                // H^j(nu) = H^{j +- 1}(nu) for all j forces vanishing.
                if (step->weight == node.weight) return Vanishes{};
                const int offset = node.offset + step->shift;
                if (auto k = terminal(t, step->weight, fp)) return finish(*k, offset);
                if (seen.emplace(step->weight, offset).second) {
                    queue.push_back({step->weight, offset, node.depth + 1});
                }
            }
        }
    }
    if (h1_nonzero(t, chi, fp)) return H1Nonzero{};
    return Unknown{};
}

} // namespace frobflag
