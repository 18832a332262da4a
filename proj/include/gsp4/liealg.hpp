#pragma once

// Explicit 4x4 models for sp(4): the symplectic form, compact Cartan,
// root vectors, the Cayley-type matrix J, and Weyl's construction of small
// algebraic representations inside tensor powers of the standard module.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsp4/exactnum.hpp"
#include "gsp4/linalg.hpp"

namespace gsp4 {

using LieMatrix = Matrix<QuadGaussian>;
using Matrix2 = std::array<std::array<QuadGaussian, 2>, 2>;

LieMatrix lie_zero();
LieMatrix bracket(const LieMatrix& a, const LieMatrix& b);
LieMatrix conj(const LieMatrix& m);
LieMatrix conj_transpose(const LieMatrix& m);

/// The symplectic form with blocks (0 I; -I 0).
LieMatrix symplectic_form();
/// True iff tX J + J X = 0.
bool in_sp4(const LieMatrix& x);
/// True iff tg J g = J.
bool in_Sp4(const LieMatrix& g);

/// Differential of the embedding U(2) -> Sp(4,R), extended complex-linearly to gl(2,C).
LieMatrix dkappa(const Matrix2& z);
/// p_+(Z) / p_-(Z) for a symmetric 2x2 Z.
LieMatrix p_plus(const Matrix2& z);
LieMatrix p_minus(const Matrix2& z);

/// Pair of integers (a1, a2) naming the root a1*e1 + a2*e2.
using RootLabel = std::pair<int, int>;

struct RootVectors {
    LieMatrix T1, T2;
    LieMatrix X20, Xm20, X11, Xm1m1, X02, X0m2;  // non-compact, scaled
    LieMatrix X1m1, Xm11;                        // compact, dkappa(E12), dkappa(E21)

    /// Non-compact and compact root vectors keyed by root.
    std::map<RootLabel, LieMatrix> by_root() const;
    /// All ten matrices keyed by display name ("T1", "X(2,0)", ...), sorted.
    std::map<std::string, LieMatrix> named() const;
};

/// Root vectors with the non-compact ones multiplied by `scale` (the invariant-measure
/// normalisation; 1 matches dX dY / det(Y)^3). Throws std::invalid_argument on scale = 0.
RootVectors build_root_vectors(const BigRational& scale = 1);

/// [h, x] == alpha(h) x where alpha(a T1 + b T2) = i (alpha1 a + alpha2 b).
/// Throws std::invalid_argument if h is not in span{T1, T2}.
bool verify_root_vector(const LieMatrix& h, const LieMatrix& x, RootLabel alpha);

struct CartanReport {
    std::size_t dim_sp4 = 0;       // dimension of the solution space of tX J + J X = 0
    std::size_t dim_k = 0;
    std::size_t dim_p_plus = 0;
    std::size_t dim_p_minus = 0;
    std::size_t dim_total = 0;     // rank of k + p+ + p- together
    bool k_preserves_p_plus = false;
    bool k_preserves_p_minus = false;
    bool p_plus_minus_in_k = false;
    bool p_plus_abelian = false;
    bool p_minus_abelian = false;

    bool ok() const;
};

CartanReport cartan_report(const RootVectors& rv = build_root_vectors());
bool cartan_decomposition_check();

// ---------------------------------------------------------------------------
// Weights

struct AlgebraicWeight {
    long k = 0, kprime = 0, c = 0;

    AlgebraicWeight() = default;
    /// Throws std::invalid_argument unless k + kprime = c (mod 2).
    AlgebraicWeight(long k_, long kprime_, long c_);

    bool dominant() const { return k >= kprime && kprime >= 0; }
    auto operator<=>(const AlgebraicWeight&) const = default;
};

struct AnalyticWeight {
    long n = 0, nprime = 0, c = 0;

    AnalyticWeight() = default;
    AnalyticWeight(long n_, long nprime_, long c_);
    auto operator<=>(const AnalyticWeight&) const = default;
};

std::string to_string(const AlgebraicWeight& w);
std::string to_string(const AnalyticWeight& w);

/// Tensor in Std^{(x) d}, coordinates indexed by base-4 digit strings (first factor most significant).
using Tensor = std::vector<BigRational>;

struct WeylModule {
    AlgebraicWeight weight;
    std::size_t degree = 0;           // d = k + k'
    std::size_t dimension = 0;
    std::vector<Tensor> basis;        // T-weight vectors
    std::vector<AlgebraicWeight> weights;  // weights[j] is the weight of basis[j]
};

/// Std^<d> intersected with the image of the Young symmetriser of shape (k, k'),
/// twisted by nu^t. Needs k >= k' >= 0 and k + k' <= 4.
WeylModule weyl_construct(const AlgebraicWeight& weight);

/// Contraction Psi_{p,q}: Std^{(x) d} -> Std^{(x) d-2}, 0-based positions p < q.
Tensor contract(const Tensor& t, std::size_t degree, std::size_t p, std::size_t q);

/// Weight of a tensor when it is a T-weight vector (all nonzero coordinates share it).
std::optional<AlgebraicWeight> tensor_weight(const Tensor& t, std::size_t degree, long c);

// ---------------------------------------------------------------------------
// The compact torus T' and the matrix J

/// (1/sqrt2) (I iI; iI I).
LieMatrix cayley_J();

/// Element of T' with x = (1-t^2)/(1+t^2), y = 2t/(1+t^2) in each block.
LieMatrix compact_torus_point(const BigRational& t, const BigRational& tprime);

/// conj(J)^{-1} t conj(J) == diag(x - iy, x' - iy', x + iy, x' + iy').
bool verify_torus_conjugation(const BigRational& t, const BigRational& tprime);

enum class Transport { J, ConjJ };

/// Weight for R_+ T' of J w (or conj(J) w), found by acting with explicit rational
/// points of T'. Throws std::invalid_argument when w is not a weight vector of `module`.
AnalyticWeight weight_of_transported_vector(const WeylModule& module, const Tensor& w, Transport transport);

/// The bilinear pairing on Std^{(x) d} induced by the symplectic form, evaluated on
/// J w and conj(J) w for the weight vector of weight (-k, k', c) in V_lambda.
QuadGaussian transported_pairing(const WeylModule& module);

}  // namespace gsp4
