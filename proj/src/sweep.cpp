#include "frobflag/sweep.hpp"

#include "frobflag/errors.hpp"

#include <algorithm>
#include <exception>

#include <omp.h>

namespace frobflag {

namespace {

std::vector<Weight> grid_weights(std::int64_t range) {
    if (range < 0) throw InvalidParameter("range must be nonnegative");
    std::vector<Weight> out;
    out.reserve(static_cast<std::size_t>((2 * range + 1) * (2 * range + 1)));
    for (std::int64_t a = -range; a <= range; ++a) {
        for (std::int64_t b = -range; b <= range; ++b) out.push_back({a, b});
    }
    return out;
}

WeightCell evaluate_weight(const WeightGridRequest& req, Weight w) {
    WeightCell cell{w, bott_resolve(req.type, w), euler_line(req.type, w), std::nullopt, std::nullopt};
    if (req.fp) {
        cell.charp = resolve_charp(req.type, w, *req.fp, req.charp);
        cell.h1_nonzero = h1_nonzero(req.type, w, *req.fp);
    }
    return cell;
}

struct PnKey {
    int p;
    int n;
};

std::vector<PnKey> pn_cells(std::span<const int> primes, std::span<const int> ns) {
    std::vector<PnKey> keys;
    for (int p : primes) {
        for (int n : ns) keys.push_back({p, n});
    }
    std::sort(keys.begin(), keys.end(),
              [](PnKey x, PnKey y) { return x.p != y.p ? x.p < y.p : x.n < y.n; });
    keys.erase(std::unique(keys.begin(), keys.end(),
                           [](PnKey x, PnKey y) { return x.p == y.p && x.n == y.n; }),
               keys.end());
    return keys;
}

FrobeniusCell evaluate_pn(RootType t, PnKey key) {
    FrobeniusCell cell{key.p, key.n, std::nullopt, {}, {}};
    try {
        cell.report = decomposition_report(t, FrobeniusParams(key.p, key.n));
    } catch (const Error& e) {
        cell.error_kind = e.kind();
        cell.error_message = e.what();
    }
    return cell;
}

} // namespace

std::vector<WeightCell> weight_grid_serial(const WeightGridRequest& req) {
    const auto weights = grid_weights(req.range);
    std::vector<WeightCell> out;
    out.reserve(weights.size());
    for (Weight w : weights) out.push_back(evaluate_weight(req, w));
    return out;
}

std::vector<WeightCell> weight_grid_parallel(const WeightGridRequest& req) {
    const auto weights = grid_weights(req.range);
    std::vector<std::optional<WeightCell>> slots(weights.size());
    const auto count = static_cast<std::int64_t>(weights.size());
    // Cells cost very different amounts (the char-p search), hence dynamic.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t k = 0; k < count; ++k) {
        try {
            slots[static_cast<std::size_t>(k)] = evaluate_weight(req, weights[static_cast<std::size_t>(k)]);
        } catch (...) {
#pragma omp critical(frobflag_sweep_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    std::vector<WeightCell> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

std::vector<WeightCell> weight_grid(const WeightGridRequest& req, Execution ex) {
    return ex == Execution::serial ? weight_grid_serial(req) : weight_grid_parallel(req);
}

std::vector<FrobeniusCell> frobenius_sweep_serial(RootType t, std::span<const int> primes,
                                                  std::span<const int> ns) {
    std::vector<FrobeniusCell> out;
    for (PnKey key : pn_cells(primes, ns)) out.push_back(evaluate_pn(t, key));
    return out;
}

std::vector<FrobeniusCell> frobenius_sweep_parallel(RootType t, std::span<const int> primes,
                                                    std::span<const int> ns) {
    const auto keys = pn_cells(primes, ns);
    std::vector<FrobeniusCell> out(keys.size());
    const auto count = static_cast<std::int64_t>(keys.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < count; ++k) {
        try {
            out[static_cast<std::size_t>(k)] = evaluate_pn(t, keys[static_cast<std::size_t>(k)]);
        } catch (...) {
#pragma omp critical(frobflag_sweep_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<FrobeniusCell> frobenius_sweep(RootType t, std::span<const int> primes,
                                           std::span<const int> ns, Execution ex) {
    return ex == Execution::serial ? frobenius_sweep_serial(t, primes, ns)
                                   : frobenius_sweep_parallel(t, primes, ns);
}

int max_threads() { return omp_get_max_threads(); }

} // namespace frobflag
