#pragma once

// K-types tau_(k,k') of U(2) with their standard bases, the 9-dimensional
// k_C-module  Lambda^2 p+ (x) p-, its decomposition, and the projection onto
// the tau_(3,-1) summand.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gsp4/exactnum.hpp"
#include "gsp4/liealg.hpp"
#include "gsp4/linalg.hpp"

namespace gsp4 {

enum class TauGenerator { H1, H2, Raise, Lower };

std::string to_string(TauGenerator g);

/// tau_(k,k') with standard basis v_0..v_d, d = k - k'.
class TauModule {
public:
    /// Throws std::invalid_argument unless k >= kprime.
    TauModule(long k, long kprime);

    long k() const { return k_; }
    long kprime() const { return kprime_; }
    std::size_t d() const { return static_cast<std::size_t>(k_ - kprime_); }
    std::size_t dimension() const { return d() + 1; }

    /// Applies a generator to a coordinate vector of length d+1.
    std::vector<BigRational> apply(TauGenerator g, const std::vector<BigRational>& v) const;

private:
    long k_, kprime_;
};

/// Image of v_s under a generator, as coordinates over v_0..v_d.
/// Throws std::out_of_range when s > d.
std::vector<BigRational> tau_action(const TauModule& module, TauGenerator g, std::size_t s);

// ---------------------------------------------------------------------------
// Lambda^2 p+ (x) p-

/// Coordinates over b_1..b_9 = (X(2,0)^X(1,1), X(2,0)^X(0,2), X(1,1)^X(0,2))
///   (x) (X(0,-2), X(-1,-1), X(-2,0)), wedge pair major.
using TensorVector = std::array<QuadGaussian, 9>;
using Matrix9 = Matrix<QuadGaussian>;

/// Human-readable name of b_{j+1}.
std::string tensor_basis_label(std::size_t j);
/// Torus weight of b_{j+1}.
std::pair<long, long> tensor_basis_weight(std::size_t j);

TensorVector tensor_basis_vector(std::size_t j);

/// 9x9 matrix (column convention) of ad(g) on Lambda^2 p+ (x) p-.
/// Throws std::invalid_argument unless g lies in k_C.
Matrix9 adjoint_matrix(const LieMatrix& g);

TensorVector adjoint_action_on_tensor(const LieMatrix& g, const TensorVector& v);

/// The four generators of k_C in the roles H1, H2, RAISE, LOWER.
LieMatrix k_generator(TauGenerator g);

/// A copy of tau_(k,k') inside the 9-space; basis[s] is the image of v_s.
struct TauEmbedding {
    long k = 0, kprime = 0;
    std::vector<TensorVector> basis;

    std::size_t d() const { return static_cast<std::size_t>(k - kprime); }
};

/// Highest-weight vectors (normalised to leading coordinate 1) and their
/// lowering strings, ordered by decreasing k.
std::vector<TauEmbedding> decompose_tensor_space();

/// Equivariant idempotent onto the summand tau_(k,k'), column convention.
Matrix<BigRational> equivariant_projection(long k, long kprime);
Matrix<BigRational> projection_onto_31();

/// Reference matrix of the projection onto tau_(3,-1), entered by hand.
Matrix<BigRational> reference_projection_31();

struct LoweringTerm {
    BigRational coeff;
    unsigned power = 0;  // p(b_j) = coeff * ad(X(-1,1))^power (b_1)
};

std::vector<LoweringTerm> projection_as_lowering_combinations();

/// (-1)^i i! d! / (d-i)!, cross-checked against RAISE^i LOWER^i on the top vector
/// of a string of length d. Throws std::invalid_argument when i > d.
BigRational pairing_coefficient(unsigned long d, unsigned long i);

/// The eigenvalue of RAISE^i LOWER^i on v_d in tau_(d,0), by explicit action.
BigRational raise_lower_eigenvalue(unsigned long d, unsigned long i);

// ---------------------------------------------------------------------------

/// Minimal K-types of the four discrete series with Harish-Chandra parameter
/// (k+2, k'+1), in the order (3,0), (2,1), (1,2), (0,3).
std::array<std::pair<long, long>, 4> minimal_k_types(long k, long kprime);

}  // namespace gsp4
