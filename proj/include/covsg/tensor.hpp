// Minkowski space-time primitives: four-vectors, pure boosts, and rank-2
// tensor transformations (scalar-valued and operator-valued entries).
//
// Conventions, fixed once for the whole project:
//   * metric g = diag(+,-,-,-)
//   * pure_boost(beta) is the symmetric matrix L with L * (m,0,0,0) =
//     (gamma*m, gamma*m*beta), i.e. it carries rest-frame four-vector
//     components to the frame where the particle moves with velocity beta.
//   * contravariant rank-2 components transform by T' = L T L^T,
//     covariant ones by the inverse-transpose congruence (indices are
//     lowered with g, transformed, and raised back).
#pragma once

#include <array>
#include <cmath>

#include "covsg/errors.hpp"
#include "covsg/linalg.hpp"

namespace covsg {

struct FourVector {
    Vec4 components = Vec4::Zero();  // index 0 = time

    FourVector() = default;
    explicit FourVector(const Vec4& c) : components(c) {}
    FourVector(double t, double x, double y, double z) : components(t, x, y, z) {}

    double operator[](int i) const { return components[i]; }
    Vec3 spatial() const { return components.tail<3>(); }
};

double lorentz_factor(const Vec3& beta);

// Rapidity, Lorentz factor and direction of a boost velocity.
struct BoostParams {
    Vec3 beta = Vec3::Zero();
    double gamma = 1.0;
    double rapidity = 0.0;
    Vec3 direction = Vec3::Zero();  // unit vector when |beta| > 0

    static BoostParams from_beta(const Vec3& beta);
};

struct LorentzBoost {
    Mat4 matrix = Mat4::Identity();

    FourVector apply(const FourVector& v) const { return FourVector(matrix * v.components); }

    // Exact for any Lorentz transform: L^{-1} = g L^T g.
    LorentzBoost inverse() const {
        const Mat4& g = minkowski_metric();
        return LorentzBoost{g * matrix.transpose() * g};
    }

    // Max entrywise deviation from L^T g L = g.
    double metric_defect() const {
        const Mat4& g = minkowski_metric();
        return max_abs(matrix.transpose() * g * matrix - g);
    }
};

LorentzBoost pure_boost(const Vec3& beta);

FourVector four_momentum(double mass, const Vec3& beta);

double minkowski_inner(const FourVector& u, const FourVector& v);

enum class Variance { contravariant, covariant, mixed };

struct Rank2Tensor {
    Mat4c matrix = Mat4c::Zero();
    Variance variance = Variance::contravariant;

    double antisymmetry_defect() const { return max_abs(matrix + matrix.transpose()); }
    bool is_antisymmetric(double tol = kAbsTol) const { return antisymmetry_defect() <= tol; }
};

// Congruence transform of a rank-2 tensor. With inverse=false the boost L
// itself acts on the components; inverse=true substitutes L^{-1}.
Rank2Tensor transform_rank2(const LorentzBoost& L, const Rank2Tensor& T, bool inverse = false);

// ---------------------------------------------------------------------------
// Operator-valued rank-2 containers. Entries are small complex matrices (a
// scalar tensor is the special case of multiples of the identity); the
// congruence acts entrywise with real boost coefficients.

template <typename Entry>
struct TensorOf {
    std::array<std::array<Entry, 4>, 4> at{};

    static TensorOf zero() {
        TensorOf t;
        for (auto& row : t.at)
            for (auto& e : row) e = Entry::Zero();
        return t;
    }

    double antisymmetry_defect() const {
        double worst = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int k = 0; k < 4; ++k)
                worst = std::max(worst, max_abs(Entry(at[a][k] + at[k][a])));
        return worst;
    }
};

// out_{ak} = sum_{rl} A(r,a) A(l,k) T_{rl}  (the A^T T A pattern used by the
// covariant component law D_{ak} = L^r_a L^l_k D_{rl}).
template <typename Entry>
TensorOf<Entry> congruence(const Mat4& A, const TensorOf<Entry>& T) {
    TensorOf<Entry> out = TensorOf<Entry>::zero();
    for (int a = 0; a < 4; ++a)
        for (int k = 0; k < 4; ++k)
            for (int r = 0; r < 4; ++r)
                for (int l = 0; l < 4; ++l) {
                    const double c = A(r, a) * A(l, k);
                    if (c != 0.0) out.at[a][k] += c * T.at[r][l];
                }
    return out;
}

// Axial-vector extraction S^i = (1/2) eps^{ijk} T_{jk} from the spatial block.
template <typename Entry>
std::array<Entry, 3> extract_axial_vector(const TensorOf<Entry>& T) {
    return {Entry(0.5 * (T.at[2][3] - T.at[3][2])),
            Entry(0.5 * (T.at[3][1] - T.at[1][3])),
            Entry(0.5 * (T.at[1][2] - T.at[2][1]))};
}

template <typename Entry>
double max_entry_distance(const TensorOf<Entry>& a, const TensorOf<Entry>& b) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            worst = std::max(worst, max_abs(Entry(a.at[i][j] - b.at[i][j])));
    return worst;
}

}  // namespace covsg
