#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <covsg/tensor.hpp>

#include "support/rng.hpp"

using namespace covsg;

TEST_CASE("lorentz factor known values") {
    CHECK(lorentz_factor(Vec3::Zero()) == 1.0);
    CHECK(lorentz_factor(Vec3(0.6, 0, 0)) == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(lorentz_factor(Vec3(0.8660254, 0, 0)) == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("lorentz factor rejects superluminal velocities") {
    CHECK_THROWS_AS(lorentz_factor(Vec3(1.0, 0, 0)), SuperluminalError);
    CHECK_THROWS_AS(lorentz_factor(Vec3(0.8, 0.8, 0)), SuperluminalError);
}

TEST_CASE("pure boost basics") {
    CHECK(max_abs(Mat4(pure_boost(Vec3::Zero()).matrix - Mat4::Identity())) == 0.0);

    const FourVector p = pure_boost(Vec3(0.6, 0, 0)).apply(FourVector(1, 0, 0, 0));
    CHECK(p[0] == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(p[1] == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(p[2] == 0.0);
    CHECK(p[3] == 0.0);
}

TEST_CASE("boost params") {
    const auto p = BoostParams::from_beta(Vec3(0.6, 0, 0));
    CHECK(p.gamma == doctest::Approx(1.25));
    CHECK(p.rapidity == doctest::Approx(std::atanh(0.6)));
    CHECK(p.direction.isApprox(Vec3::UnitX()));
    CHECK(BoostParams::from_beta(Vec3::Zero()).rapidity == 0.0);
}

TEST_CASE("pure boost properties over random velocities") {
    testing::Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const Vec3 beta = rng.beta(0.99);
        const LorentzBoost L = pure_boost(beta);

        CHECK(L.metric_defect() < 1e-10);
        CHECK(std::abs(L.matrix.determinant() - 1.0) < 1e-10);
        CHECK(L.matrix(0, 0) >= 1.0);

        // pure_boost(-beta) is the matrix inverse
        CHECK(max_abs(Mat4(pure_boost(-beta).matrix * L.matrix - Mat4::Identity())) < 1e-12);
        CHECK(max_abs(Mat4(L.inverse().matrix - pure_boost(-beta).matrix)) < 1e-12);

        // invariant mass
        const FourVector p = four_momentum(1.0, beta);
        CHECK(minkowski_inner(p, p) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("minkowski inner product") {
    const FourVector rest(2.0, 0, 0, 0);
    CHECK(minkowski_inner(rest, rest) == doctest::Approx(4.0));
    const FourVector null(1.0, 1.0, 0, 0);
    CHECK(minkowski_inner(null, null) == 0.0);
}

namespace {

Rank2Tensor random_antisymmetric(covsg::testing::Rng& rng, Variance v) {
    Mat4c m = Mat4c::Zero();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const cplx e(rng.uniform(-2, 2), rng.uniform(-2, 2));
            m(i, j) = e;
            m(j, i) = -e;
        }
    return Rank2Tensor{m, v};
}

}  // namespace

TEST_CASE("rank-2 transform basics") {
    testing::Rng rng(7);
    const Rank2Tensor T = random_antisymmetric(rng, Variance::contravariant);

    SUBCASE("identity boost leaves tensor unchanged") {
        const Rank2Tensor out = transform_rank2(pure_boost(Vec3::Zero()), T);
        CHECK(max_abs(Mat4c(out.matrix - T.matrix)) == 0.0);
    }

    SUBCASE("antisymmetry is preserved and round trips invert") {
        const LorentzBoost L = pure_boost(Vec3(0.3, -0.5, 0.2));
        const Rank2Tensor out = transform_rank2(L, T);
        CHECK(out.is_antisymmetric(1e-12));
        const Rank2Tensor back = transform_rank2(L, out, /*inverse=*/true);
        CHECK(max_abs(Mat4c(back.matrix - T.matrix)) < 1e-12);
    }

    SUBCASE("covariant components transform as lowered contravariant ones") {
        const LorentzBoost L = pure_boost(Vec3(0.4, 0.1, -0.3));
        const Mat4& g = minkowski_metric();
        Rank2Tensor lowered{g * T.matrix * g, Variance::covariant};
        const Rank2Tensor out_cov = transform_rank2(L, lowered);
        const Rank2Tensor out_con = transform_rank2(L, T);
        CHECK(max_abs(Mat4c(out_cov.matrix - g * out_con.matrix * g)) < 1e-12);
    }
}

TEST_CASE("operator-valued congruence agrees with the scalar transform") {
    testing::Rng rng(99);
    const Rank2Tensor T = random_antisymmetric(rng, Variance::covariant);
    const Vec3 beta(0.2, 0.5, -0.4);
    const LorentzBoost L = pure_boost(beta);

    // Embed the scalars as multiples of the 2x2 identity and push both routes.
    TensorOf<Mat2c> embedded = TensorOf<Mat2c>::zero();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) embedded.at[i][j] = T.matrix(i, j) * Mat2c::Identity();

    // congruence(A, .) realizes the covariant law with A = the inverse boost.
    const TensorOf<Mat2c> moved = congruence(L.inverse().matrix, embedded);
    const Rank2Tensor scalar = transform_rank2(L, T);
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            worst = std::max(worst,
                             max_abs(Mat2c(moved.at[i][j] - scalar.matrix(i, j) * Mat2c::Identity())));
    CHECK(worst < 1e-12);
}

TEST_CASE("axial-vector extraction inverts the spatial layout") {
    TensorOf<Mat2c> T = TensorOf<Mat2c>::zero();
    const Mat2c a = (Mat2c() << 1, 2, 3, 4).finished();
    T.at[1][2] = a;
    T.at[2][1] = -a;
    const auto v = extract_axial_vector(T);
    CHECK(max_abs(Mat2c(v[2] - a)) == 0.0);
    CHECK(max_abs(v[0]) == 0.0);
    CHECK(max_abs(v[1]) == 0.0);
}
