#include "frobflag/sweep.hpp"

#include <doctest.h>

using namespace frobflag;

namespace {

bool same(const WeightCell& x, const WeightCell& y) {
    return x.weight == y.weight && x.bott == y.bott && x.euler == y.euler && x.charp == y.charp &&
           x.h1_nonzero == y.h1_nonzero;
}

bool same(const FrobeniusCell& x, const FrobeniusCell& y) {
    if (x.p != y.p || x.n != y.n || x.error_kind != y.error_kind || x.report.has_value() != y.report.has_value())
        return false;
    if (!x.report) return true;
    if (x.report->summands.size() != y.report->summands.size()) return false;
    for (std::size_t k = 0; k < x.report->summands.size(); ++k) {
        if (x.report->summands[k].multiplicity != y.report->summands[k].multiplicity) return false;
    }
    return x.report->total_rank == y.report->total_rank;
}

} // namespace

TEST_CASE("weight grid: serial and parallel agree") {
    for (RootType t : {RootType::A2, RootType::B2, RootType::G2}) {
        for (std::optional<FrobeniusParams> fp : {std::optional<FrobeniusParams>{}, std::optional{FrobeniusParams(5, 1)}}) {
            WeightGridRequest req{t, 6, fp, {}};
            const auto s = weight_grid_serial(req);
            const auto p = weight_grid_parallel(req);
            REQUIRE(s.size() == 13 * 13);
            REQUIRE(p.size() == s.size());
            for (std::size_t k = 0; k < s.size(); ++k) CHECK(same(s[k], p[k]));
            CHECK(s.front().weight == Weight{-6, -6});
            CHECK(s.back().weight == Weight{6, 6});
        }
    }
}

TEST_CASE("(p, n) sweep: canonical order, errors recorded per cell") {
    const std::vector<int> primes{7, 2, 3, 2};
    const std::vector<int> ns{2, 1};
    const auto s = frobenius_sweep(RootType::B2, primes, ns, Execution::serial);
    const auto p = frobenius_sweep(RootType::B2, primes, ns, Execution::parallel);
    REQUIRE(s.size() == 6);
    REQUIRE(p.size() == 6);
    for (std::size_t k = 0; k < s.size(); ++k) CHECK(same(s[k], p[k]));
    CHECK(s[0].p == 2);
    CHECK(s[0].n == 1);
    CHECK(s[0].error_kind == "ConcentrationViolated");
    CHECK_FALSE(s[0].report);
    CHECK(s[1].report);
    CHECK(s[5].p == 7);
    CHECK(s[5].n == 2);
    CHECK(s[5].report->verified());
    CHECK(max_threads() >= 1);
}

TEST_CASE("invalid cells") {
    WeightGridRequest req{RootType::A2, -1, std::nullopt, {}};
    CHECK_THROWS(weight_grid_parallel(req));
    CHECK_THROWS(weight_grid_serial(req));
    const auto cells = frobenius_sweep(RootType::A2, std::vector<int>{4}, std::vector<int>{1}, Execution::parallel);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].error_kind == "InvalidParameter");
}
