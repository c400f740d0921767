#include "covsg/tensor.hpp"

namespace covsg {

double lorentz_factor(const Vec3& beta) {
    const double b2 = beta.squaredNorm();
    if (b2 >= 1.0)
        throw SuperluminalError("|beta| = " + std::to_string(std::sqrt(b2)) +
                                " must be below 1");
    return 1.0 / std::sqrt(1.0 - b2);
}

BoostParams BoostParams::from_beta(const Vec3& beta) {
    BoostParams p;
    p.beta = beta;
    p.gamma = lorentz_factor(beta);
    const double b = beta.norm();
    p.rapidity = std::atanh(b);
    if (b > 0.0) p.direction = beta / b;
    return p;
}

LorentzBoost pure_boost(const Vec3& beta) {
    const double gamma = lorentz_factor(beta);
    Mat4 L = Mat4::Identity();
    L(0, 0) = gamma;
    const double b2 = beta.squaredNorm();
    for (int i = 0; i < 3; ++i) {
        L(0, i + 1) = L(i + 1, 0) = gamma * beta[i];
        for (int j = 0; j < 3; ++j)
            if (b2 > 0.0) L(i + 1, j + 1) += (gamma - 1.0) * beta[i] * beta[j] / b2;
    }
    return LorentzBoost{L};
}

FourVector four_momentum(double mass, const Vec3& beta) {
    return pure_boost(beta).apply(FourVector(mass, 0.0, 0.0, 0.0));
}

double minkowski_inner(const FourVector& u, const FourVector& v) {
    return u[0] * v[0] - u.spatial().dot(v.spatial());
}

Rank2Tensor transform_rank2(const LorentzBoost& L, const Rank2Tensor& T, bool inverse) {
    const Mat4 M = inverse ? L.inverse().matrix : L.matrix;
    const Mat4& g = minkowski_metric();
    Rank2Tensor out;
    out.variance = T.variance;
    switch (T.variance) {
        case Variance::contravariant:
            out.matrix = M * T.matrix * M.transpose();
            break;
        case Variance::covariant: {
            // Lower-index components ride along as g M g congruences.
            const Mat4 N = g * M * g;
            out.matrix = N * T.matrix * N.transpose();
            break;
        }
        case Variance::mixed:
            out.matrix = M * T.matrix * (g * M * g).transpose();
            break;
    }
    return out;
}

}  // namespace covsg
