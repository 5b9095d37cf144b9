#pragma once

// e-periodic fat point modules as block data, and their correspondence with
// block-cyclic simple representations.
//
// Block M(x_i)_l maps V_{l-1} to V_l (indices mod e), so it has shape
// m_l x m_{l-1}. Assembling at t0 places M(x_i)_l at block (l, l-1) for
// l = 1..e-1 and t0 * M(x_i)_0 at the corner block (0, e-1).

#include <optional>
#include <vector>

#include "ncrep/representation.hpp"

namespace ncrep {

class FatPoint {
public:
    enum class Check { Full, ShapesOnly };

    /// blocks[i][l] is M(x_i)_l. With Check::Full the assembled representation
    /// must satisfy the relations and be simple.
    FatPoint(Presentation algebra, std::vector<int> multiplicities, std::vector<std::vector<Matrix>> blocks,
             Check check = Check::Full, double tol = 1e-8);

    const Presentation& algebra() const { return algebra_; }
    int period() const { return static_cast<int>(mult_.size()); }
    const std::vector<int>& multiplicities() const { return mult_; }
    int dimension() const;
    const std::vector<std::vector<Matrix>>& blocks() const { return blocks_; }
    const Matrix& block(int generator, int position) const { return blocks_[generator][position]; }

    /// Largest relation residual of the assembled representation at t0 = 1.
    double residual() const;

private:
    Presentation algebra_;
    std::vector<int> mult_;
    std::vector<std::vector<Matrix>> blocks_;
};

/// The stabilizer of a simple representation in PGL_k x C^*.
struct Stabilizer {
    bool infinite = false;  ///< the trivial representation, fixed by every scaling
    int order = 1;
    Scalar zeta = 1.0;      ///< exp(2 pi i / order)
    /// Conjugator g with g psi(x_i) g^{-1} = zeta psi(x_i) and g^order = 1.
    Matrix conjugator;
    /// Dimensions of the eigenspaces of g for eigenvalues zeta^0, zeta^1, ...
    std::vector<int> block_sizes;
};

/// Block-cyclic representation for t -> t0.
Representation assemble(const FatPoint& f, Scalar t0 = 1.0);

/// Throws NotSimpleError for non-simple input. Labels eigenspaces so that the
/// multiplicity vector is lexicographically largest among its rotations.
Stabilizer stabilizer_of(const Representation& r, double tol = 1e-7);

/// Conjugates r into block-cyclic form using its stabilizer and reads off the
/// blocks. Throws NotSimpleError, or NumericalError if the off-cycle blocks do
/// not vanish.
FatPoint disassemble(const Representation& r, double tol = 1e-7);

/// M[1]: rotates multiplicities and block positions by one.
FatPoint shift(const FatPoint& f, int times = 1);

/// Graded module isomorphism: invertible g_l with g_l M^F_l = M^G_l g_{l-1}
/// around the cycle, allowing a scalar c on the corner block (the modules do
/// not see t0, which is absorbed by rescaling V_j by c^{floor(j/e)}).
bool is_isomorphic(const FatPoint& f, const FatPoint& g, double tol = 1e-7);

/// is_isomorphic(shift(f, s), g) for some s in [0, e).
bool is_shift_equivalent(const FatPoint& f, const FatPoint& g, double tol = 1e-7);

/// Number of pairwise non-isomorphic shifts of f (the size of its shift orbit).
int shift_orbit_size(const FatPoint& f, double tol = 1e-7);

}  // namespace ncrep
