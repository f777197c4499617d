#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ftk/signal.hpp"
#include "support.hpp"

using namespace ftk;

TEST_SUITE_BEGIN("signal");

TEST_CASE("remove_dc basics") {
    Signal s{{1.0, 1.0, 1.0, 1.0}, 8000.0};
    auto out = remove_dc(s);
    for (double v : out.samples)
        CHECK(v == 0.0);

    Signal alt{{1.0, -1.0, 1.0, -1.0}, 8000.0};
    auto out2 = remove_dc(alt);
    CHECK(out2.samples[0] == doctest::Approx(1.0));
    CHECK(out2.samples[1] == doctest::Approx(-1.0));

    Signal two{{2.0, 4.0}, 8000.0};
    auto out3 = remove_dc(two);
    CHECK(out3.samples[0] == doctest::Approx(-1.0));
    CHECK(out3.samples[1] == doctest::Approx(1.0));
}

TEST_CASE("remove_dc mean bound and idempotence") {
    auto gen = testsup::rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        Signal s;
        s.samples = testsup::random_vector(gen, 257, -100.0, 100.0);
        auto out = remove_dc(s);

        double mean = 0.0, maxabs = 0.0;
        for (double v : s.samples) maxabs = std::max(maxabs, std::abs(v));
        for (double v : out.samples) mean += v;
        mean /= static_cast<double>(out.samples.size());
        CHECK(std::abs(mean) <= 1e-12 * std::max(1.0, maxabs));

        auto again = remove_dc(out);
        for (std::size_t i = 0; i < out.samples.size(); ++i)
            CHECK(std::abs(again.samples[i] - out.samples[i]) <= 1e-12 * std::max(1.0, maxabs));
    }
}

TEST_CASE("remove_dc rejects empty input") {
    Signal empty;
    CHECK_THROWS_AS(remove_dc(empty), std::invalid_argument);
}

TEST_CASE("gen_sinusoid first sample and DC case") {
    const double a = std::sqrt(2.0);
    auto s = gen_sinusoid(a, std::numbers::pi / 9.0, 16);
    CHECK(s.samples[0] == doctest::Approx(a));

    auto dc = gen_sinusoid(1.0, 0.0, 8);
    for (double v : dc.samples)
        CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("gen_sinusoid three-term recurrence") {
    const double omega = 0.7311;
    auto s = gen_sinusoid(1.9, omega, 500, 0.31);
    const double c = 2.0 * std::cos(omega);
    for (std::size_t n = 2; n < s.samples.size(); ++n)
        CHECK(std::abs(s.samples[n] - (c * s.samples[n - 1] - s.samples[n - 2])) <= 1e-9);
}

TEST_CASE("gen_sinusoid long-run biased autocorrelation matches A^2/2 cos(w k)") {
    // For x(n) = A cos(w n) the lag-k autocorrelation tends to
    // (A^2/2) cos(w k); with A = sqrt(2), r(0) -> 1 and r(1) -> cos(w).
    const double omega = std::numbers::pi / 9.0;
    const std::size_t n = 100000;
    auto s = gen_sinusoid(std::sqrt(2.0), omega, n);
    double r0 = 0.0, r1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) r0 += s.samples[i] * s.samples[i];
    for (std::size_t i = 0; i + 1 < n; ++i) r1 += s.samples[i] * s.samples[i + 1];
    r0 /= static_cast<double>(n);
    r1 /= static_cast<double>(n);
    CHECK(std::abs(r0 - 1.0) < 1e-3);
    CHECK(std::abs(r1 - std::cos(omega)) < 1e-3);
}

TEST_SUITE_END();
