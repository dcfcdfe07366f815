#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "isoprofile/model_geometry.hpp"
#include "isoprofile/numerics.hpp"

using namespace isoprofile;

namespace {

// Independent oracle: 30-term power series for the initial value problems
// u'' + k u = 0.  cos branch: sum (-k)^n r^{2n} / (2n)!,
// sin branch: sum (-k)^n r^{2n+1} / (2n+1)!.
double series_cos_k(double k, double r) {
    double term = 1.0, sum = 1.0;
    for (int n = 1; n <= 30; ++n) {
        term *= -k * r * r / ((2 * n - 1) * (2 * n));
        sum += term;
    }
    return sum;
}

double series_sin_k(double k, double r) {
    double term = r, sum = r;
    for (int n = 1; n <= 30; ++n) {
        term *= -k * r * r / ((2 * n) * (2 * n + 1));
        sum += term;
    }
    return sum;
}

} // namespace

TEST_CASE("cos_k branches and series oracle") {
    CHECK(cos_k(0.0, 7.3) == 1.0);
    CHECK_THAT(cos_k(1.0, pi), Catch::Matchers::WithinAbs(-1.0, 1e-14));

    // frozen from the series oracle
    CHECK_THAT(cos_k(-1.0, 1.0), Catch::Matchers::WithinAbs(1.5430806348, 5e-11));
    CHECK_THAT(cos_k(-1.0, 1.0), Catch::Matchers::WithinRel(series_cos_k(-1.0, 1.0), 1e-14));
    CHECK_THAT(cos_k(2.0, 0.7), Catch::Matchers::WithinRel(series_cos_k(2.0, 0.7), 1e-14));
    CHECK_THAT(cos_k(-0.5, 1.3), Catch::Matchers::WithinRel(series_cos_k(-0.5, 1.3), 1e-14));
}

TEST_CASE("sin_k branches and series oracle") {
    CHECK(sin_k(0.0, 2.5) == 2.5);
    CHECK_THAT(sin_k(1.0, pi / 2), Catch::Matchers::WithinRel(1.0, 1e-14));

    CHECK_THAT(sin_k(-1.0, 1.0), Catch::Matchers::WithinAbs(1.1752011936, 5e-11));
    CHECK_THAT(sin_k(-1.0, 1.0), Catch::Matchers::WithinRel(series_sin_k(-1.0, 1.0), 1e-14));
    CHECK_THAT(sin_k(3.0, 0.9), Catch::Matchers::WithinRel(series_sin_k(3.0, 0.9), 1e-14));
    CHECK_THAT(sin_k(-2.0, 0.6), Catch::Matchers::WithinRel(series_sin_k(-2.0, 0.6), 1e-14));
}

TEST_CASE("s_lambda") {
    // k = 0 collapses to 1 - lambda r
    CHECK_THAT(s_lambda(0.0, 0.25, 3.0), Catch::Matchers::WithinAbs(1.0 - 0.25 * 3.0, 1e-15));
    // lambda = 0 keeps the cosine
    CHECK_THAT(s_lambda(1.0, 0.0, 0.8), Catch::Matchers::WithinRel(std::cos(0.8), 1e-15));
    // hyperbolic addition identity
    const double r0 = 0.9, t = 0.55;
    CHECK_THAT(s_lambda(-1.0, -1.0 / std::tanh(r0), t),
               Catch::Matchers::WithinRel(std::sinh(r0 + t) / std::sinh(r0), 1e-13));
}

TEST_CASE("wronskian conservation and derivative identities") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> ks(-2.0, 2.0), rs(0.01, 2.5);
    for (int i = 0; i < 200; ++i) {
        const double k = ks(rng), r = rs(rng);
        const double w = k * sin_k(k, r) * sin_k(k, r) + cos_k(k, r) * cos_k(k, r);
        CHECK_THAT(w, Catch::Matchers::WithinAbs(1.0, 1e-12));

        const double h = 1e-4;
        const double ds = (sin_k(k, r + h) - sin_k(k, r - h)) / (2 * h);
        const double dc = (cos_k(k, r + h) - cos_k(k, r - h)) / (2 * h);
        CHECK_THAT(ds, Catch::Matchers::WithinAbs(sin_k_prime(k, r), 1e-6));
        CHECK_THAT(dc, Catch::Matchers::WithinAbs(cos_k_prime(k, r), 1e-6));
    }
}

TEST_CASE("sphere_area on the three branches") {
    CHECK_THAT(sphere_area(curvature_dimension(0, 2), 1.0),
               Catch::Matchers::WithinRel(2 * pi, 1e-14));
    CHECK_THAT(sphere_area(curvature_dimension(1, 2), pi / 2),
               Catch::Matchers::WithinRel(2 * pi, 1e-14));
    CHECK_THAT(sphere_area(curvature_dimension(-1, 2), 1.0),
               Catch::Matchers::WithinRel(2 * pi * series_sin_k(-1.0, 1.0), 1e-13));

    CHECK_THROWS_AS(sphere_area(curvature_dimension(1, 2), pi + 1e-3), domain_exceeded);
    CHECK_THROWS_AS(sphere_area(curvature_dimension(1, 2), -0.1), domain_exceeded);
    // float noise past r_max is clamped
    CHECK_NOTHROW(sphere_area(curvature_dimension(1, 2), pi + 1e-10));
}

TEST_CASE("ball_volume closed forms and quadrature cross-check") {
    CHECK_THAT(ball_volume(curvature_dimension(0, 3), 1.0),
               Catch::Matchers::WithinRel(4 * pi / 3, 1e-14));
    CHECK_THAT(ball_volume(curvature_dimension(1, 2), pi),
               Catch::Matchers::WithinRel(4 * pi, 1e-14));
    CHECK_THAT(ball_volume(curvature_dimension(-1, 2), 1.0),
               Catch::Matchers::WithinRel(2 * pi * (std::cosh(1.0) - 1.0), 1e-13));

    // closed form against the quadrature route
    for (double K : {-1.0, 1.0}) {
        const curvature_dimension cd(K, 2);
        const double quad =
            adaptive_simpson([&](double t) { return sphere_area(cd, t); }, 0.0, 1.37, 1e-12, 40);
        CHECK_THAT(ball_volume(cd, 1.37), Catch::Matchers::WithinAbs(quad, 1e-11));
    }

    // S^3 as the K = 2, N = 3 model: total volume 2 pi^2
    const curvature_dimension s3(2.0, 3);
    CHECK_THAT(model_total_volume(s3), Catch::Matchers::WithinRel(2 * pi * pi, 1e-11));
}

TEST_CASE("invert_ball_volume") {
    CHECK_THAT(invert_ball_volume(curvature_dimension(0, 2), pi),
               Catch::Matchers::WithinAbs(1.0, 1e-12));
    CHECK_THAT(invert_ball_volume(curvature_dimension(1, 2), 2 * pi),
               Catch::Matchers::WithinAbs(pi / 2, 1e-12));
    CHECK_THAT(invert_ball_volume(curvature_dimension(0, 3), 4 * pi / 3),
               Catch::Matchers::WithinAbs(1.0, 1e-12));

    CHECK_THROWS_AS(invert_ball_volume(curvature_dimension(0, 2), -1.0), out_of_range);
    CHECK_THROWS_AS(invert_ball_volume(curvature_dimension(1, 2), 4 * pi + 0.1), out_of_range);
}

TEST_CASE("invert after ball_volume is the identity") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> u(0.02, 0.98);
    for (double K : {-1.0, 0.0, 1.0, 2.0}) {
        for (int N : {2, 3, 4}) {
            const curvature_dimension cd(K, N);
            const double r_hi = K > 0 ? cd.r_max : 3.0;
            for (int i = 0; i < 64; ++i) {
                const double r = u(rng) * r_hi;
                const double back = invert_ball_volume(cd, ball_volume(cd, r));
                CHECK_THAT(back, Catch::Matchers::WithinAbs(r, 1e-10));
            }
        }
    }
}

TEST_CASE("model_profile") {
    CHECK_THAT(model_profile(curvature_dimension(0, 2), pi),
               Catch::Matchers::WithinRel(2 * pi, 1e-12));
    CHECK_THAT(model_profile(curvature_dimension(0, 3), 4 * pi / 3),
               Catch::Matchers::WithinRel(4 * pi, 1e-12));

    // sphere: closed form sqrt(V (4 pi - V)) from the cap formulas
    const curvature_dimension s2(1, 2);
    CHECK_THAT(model_profile(s2, 2 * pi), Catch::Matchers::WithinRel(2 * pi, 1e-12));
    for (double V : {0.5, 2.0, 6.0, 11.0})
        CHECK_THAT(model_profile(s2, V),
                   Catch::Matchers::WithinRel(std::sqrt(V * (4 * pi - V)), 1e-11));

    // Euclidean power law N omega_N^{1/N} V^{(N-1)/N}
    for (int N : {2, 3, 4}) {
        const curvature_dimension cd(0, N);
        for (double V : {0.3, 1.0, 7.5}) {
            const double law = N * std::pow(unit_ball_volume(N), 1.0 / N) *
                               std::pow(V, double(N - 1) / N);
            CHECK_THAT(model_profile(cd, V), Catch::Matchers::WithinRel(law, 1e-10));
        }
    }
}

TEST_CASE("dv/dr equals sphere_area") {
    const double h = 1e-4;
    for (double K : {-1.0, 0.0, 1.0}) {
        for (int N : {2, 3}) {
            const curvature_dimension cd(K, N);
            const double r_hi = K > 0 ? 0.9 * cd.r_max : 2.0;
            for (int i = 1; i <= 64; ++i) {
                const double r = r_hi * i / 65.0;
                const double dv = (ball_volume(cd, r + h) - ball_volume(cd, r - h)) / (2 * h);
                CHECK_THAT(dv, Catch::Matchers::WithinAbs(sphere_area(cd, r), 1e-6));
            }
        }
    }
}

TEST_CASE("model psi solves the equality ODE on second differences") {
    // psi = model_profile^2 for N = 2 has centered second difference -2K.
    for (double K : {-1.0, 0.0, 1.0}) {
        const curvature_dimension cd(K, 2);
        const double v_hi = K > 0 ? model_total_volume(cd) : 4 * pi;
        const int n = 128;
        const double dv = v_hi / (n + 1);
        for (int i = 2; i + 2 < n; ++i) {
            const double V = dv * (i + 1);
            auto psi = [&](double v) { return std::pow(model_profile(cd, v), 2.0); };
            const double d2 = (psi(V + dv) + psi(V - dv) - 2 * psi(V)) / (dv * dv);
            CHECK_THAT(d2, Catch::Matchers::WithinAbs(-2.0 * K, 1e-4));
        }
    }
}

TEST_CASE("distance_sphere_mean_curvature") {
    const double r0 = 1.7;
    // Euclidean concentric spheres: 2/(r0 + r)
    const curvature_dimension e3(0, 3);
    for (double r : {0.0, 0.4, 2.2})
        CHECK_THAT(distance_sphere_mean_curvature(e3, 1.0 / r0, r),
                   Catch::Matchers::WithinRel(2.0 / (r0 + r), 1e-13));

    // circles parallel to the equator of S^2: -tan t
    const curvature_dimension s2(1, 2);
    for (double t : {0.2, 1.0})
        CHECK_THAT(distance_sphere_mean_curvature(s2, 0.0, t),
                   Catch::Matchers::WithinRel(-std::tan(t), 1e-13));

    // s'(0) = -lambda sin_k'(0) identity at the base sphere
    const curvature_dimension h2(-1, 2);
    CHECK_THAT(distance_sphere_mean_curvature(h2, 1.0 / std::tanh(r0), 0.0),
               Catch::Matchers::WithinRel(1.0 / std::tanh(r0), 1e-13));

    // focal point of the equator at distance pi/2
    CHECK_THROWS_AS(distance_sphere_mean_curvature(s2, 0.0, pi / 2), singular_point);
}

TEST_CASE("unit ball volumes") {
    CHECK_THAT(unit_ball_volume(2), Catch::Matchers::WithinRel(pi, 1e-15));
    CHECK_THAT(unit_ball_volume(3), Catch::Matchers::WithinRel(4 * pi / 3, 1e-14));
    CHECK_THAT(unit_ball_volume(4), Catch::Matchers::WithinRel(pi * pi / 2, 1e-14));
}
