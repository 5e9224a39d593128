#pragma once

// Grid sweeps over weights and over (p, n) cells. Each sweep has a serial
// reference implementation and an OpenMP version; both return cells in the
// same canonical order (sorted by key), and the tests require them to agree.

#include "frobflag/charp.hpp"
#include "frobflag/frobdecomp.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace frobflag {

enum class Execution { serial, parallel };

struct WeightCell {
    Weight weight;
    BottResult bott;
    BigInt euler;
    std::optional<CharpStatus> charp;  // present when a characteristic was given
    std::optional<bool> h1_nonzero;
};

struct WeightGridRequest {
    RootType type = RootType::A2;
    std::int64_t range = 4;  // the square [-range, range]^2
    std::optional<FrobeniusParams> fp;
    CharpOptions charp;
};

std::vector<WeightCell> weight_grid_serial(const WeightGridRequest& req);
std::vector<WeightCell> weight_grid_parallel(const WeightGridRequest& req);
std::vector<WeightCell> weight_grid(const WeightGridRequest& req, Execution ex);

struct FrobeniusCell {
    int p = 0;
    int n = 0;
    std::optional<DecompositionReport> report;
    std::string error_kind;  // empty on success
    std::string error_message;
};

std::vector<FrobeniusCell> frobenius_sweep_serial(RootType t, std::span<const int> primes,
                                                  std::span<const int> ns);
std::vector<FrobeniusCell> frobenius_sweep_parallel(RootType t, std::span<const int> primes,
                                                    std::span<const int> ns);
std::vector<FrobeniusCell> frobenius_sweep(RootType t, std::span<const int> primes,
                                           std::span<const int> ns, Execution ex);

int max_threads();

} // namespace frobflag
