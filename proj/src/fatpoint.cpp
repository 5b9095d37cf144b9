#include "ncrep/fatpoint.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "ncrep/linalg.hpp"

namespace ncrep {

namespace {

std::vector<int> offsets_of(const std::vector<int>& mult) {
    std::vector<int> off(mult.size() + 1, 0);
    for (std::size_t l = 0; l < mult.size(); ++l) off[l + 1] = off[l] + mult[l];
    return off;
}

Scalar root_of_unity(int e, int power = 1) {
    const double angle = 2.0 * std::numbers::pi * power / e;
    return {std::cos(angle), std::sin(angle)};
}

Matrix block_cyclic(const std::vector<int>& mult, const std::vector<Matrix>& blocks, Scalar t0) {
    const int e = static_cast<int>(mult.size());
    const auto off = offsets_of(mult);
    Matrix out = Matrix::Zero(off[e], off[e]);
    out.block(off[0], off[e - 1], mult[0], mult[e - 1]) = t0 * blocks[0];
    for (int l = 1; l < e; ++l) out.block(off[l], off[l - 1], mult[l], mult[l - 1]) = blocks[l];
    return out;
}

double relative_residual(const Representation& r) {
    double scale = 1.0;
    for (const auto& m : r.mats()) scale = std::max(scale, m.squaredNorm());
    return r.residual() / scale;
}

}  // namespace

FatPoint::FatPoint(Presentation algebra, std::vector<int> multiplicities, std::vector<std::vector<Matrix>> blocks,
                   Check check, double tol)
    : algebra_(std::move(algebra)), mult_(std::move(multiplicities)), blocks_(std::move(blocks)) {
    const int e = period();
    if (e < 1) throw InvalidArgument("FatPoint: period must be at least 1");
    for (int m : mult_)
        if (m < 1) throw InvalidArgument("FatPoint: multiplicities must be positive");
    if (static_cast<int>(blocks_.size()) != algebra_.generator_count())
        throw InvalidArgument("FatPoint: need blocks for every generator");
    for (const auto& per_gen : blocks_) {
        if (static_cast<int>(per_gen.size()) != e) throw InvalidArgument("FatPoint: need one block per position");
        for (int l = 0; l < e; ++l) {
            const int prev = (l + e - 1) % e;
            if (per_gen[l].rows() != mult_[l] || per_gen[l].cols() != mult_[prev])
                throw InvalidArgument("FatPoint: block " + std::to_string(l) + " must be m_l x m_{l-1}");
            if (!per_gen[l].allFinite()) throw InvalidArgument("FatPoint: non-finite block entry");
        }
    }
    if (check == Check::Full) {
        const Representation r = assemble(*this, 1.0);
        const double res = relative_residual(r);
        if (res > tol)
            throw NumericalError("FatPoint: relations fail on the assembled representation (residual " +
                                 std::to_string(res) + ")");
        if (!is_simple(r)) throw NotSimpleError("FatPoint: assembled representation is not simple");
    }
}

int FatPoint::dimension() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }

double FatPoint::residual() const { return assemble(*this, 1.0).residual(); }

Representation assemble(const FatPoint& f, Scalar t0) {
    if (std::abs(t0) == 0.0) throw InvalidArgument("assemble: t0 must be nonzero");
    std::vector<Matrix> mats;
    for (const auto& per_gen : f.blocks()) mats.push_back(block_cyclic(f.multiplicities(), per_gen, t0));
    return Representation(f.algebra(), std::move(mats));
}

Stabilizer stabilizer_of(const Representation& r, double tol) {
    const int k = r.dimension();
    if (!is_simple(r)) throw NotSimpleError("stabilizer_of: representation is not simple");

    double scale = 0.0;
    for (const auto& m : r.mats()) scale = std::max(scale, m.norm());
    Stabilizer st;
    if (scale == 0.0) {
        st.infinite = true;
        st.order = 0;
        st.zeta = 1.0;
        st.conjugator = Matrix::Identity(k, k);
        st.block_sizes = {k};
        return st;
    }
    std::vector<Matrix> psi;
    for (const auto& m : r.mats()) psi.push_back(m / scale);

    const Matrix id = Matrix::Identity(k, k);
    Matrix g = id;
    int order = 1;
    for (int e = k; e >= 2; --e) {
        const Scalar zeta = root_of_unity(e);
        Matrix sys(static_cast<Eigen::Index>(psi.size()) * k * k, k * k);
        for (std::size_t i = 0; i < psi.size(); ++i)
            sys.middleRows(static_cast<Eigen::Index>(i) * k * k, k * k) =
                linalg::kron(psi[i].transpose(), id) - zeta * linalg::kron(id, psi[i]);
        const Matrix ker = linalg::kernel(sys, tol);
        if (ker.cols() == 0) continue;
        if (ker.cols() > 1) throw NotSimpleError("stabilizer_of: conjugator is not unique up to scalars");
        const Matrix cand = Eigen::Map<const Matrix>(ker.col(0).data(), k, k);
        if (linalg::inverse_condition(cand) < 1e-8) continue;
        g = cand;
        order = e;
        break;
    }

    st.order = order;
    st.zeta = root_of_unity(order);
    if (order == 1) {
        st.conjugator = id;
        st.block_sizes = {k};
        return st;
    }

    // g^e commutes with everything, hence is a scalar c; rescale so g^e = 1.
    Matrix ge = id;
    for (int s = 0; s < order; ++s) ge = ge * g;
    const Scalar c = ge.trace() / static_cast<double>(k);
    if ((ge - c * id).norm() > 1e-6 * std::abs(c) * std::sqrt(static_cast<double>(k)))
        throw NumericalError("stabilizer_of: g^e is not scalar");
    g *= std::pow(c, -1.0 / order);

    // Eigenspace dimensions via the spectral projectors.
    std::vector<Matrix> powers{id};
    for (int s = 1; s < order; ++s) powers.push_back(powers.back() * g);
    std::vector<int> raw(order);
    for (int l = 0; l < order; ++l) {
        Matrix p = Matrix::Zero(k, k);
        for (int s = 0; s < order; ++s) p += root_of_unity(order, -l * s) * powers[s];
        p /= static_cast<double>(order);
        raw[l] = static_cast<int>(std::lround(p.trace().real()));
    }
    if (std::accumulate(raw.begin(), raw.end(), 0) != k ||
        std::any_of(raw.begin(), raw.end(), [](int m) { return m <= 0; }))
        throw NumericalError("stabilizer_of: eigenspaces of the conjugator do not form a cycle");

    // Relabel eigenvalue zeta^{l+s} as zeta^l, choosing s for the lexicographically largest vector.
    int best_shift = 0;
    std::vector<int> best;
    for (int s = 0; s < order; ++s) {
        std::vector<int> rot(order);
        for (int l = 0; l < order; ++l) rot[l] = raw[(l + s) % order];
        if (best.empty() || rot > best) {
            best = rot;
            best_shift = s;
        }
    }
    st.conjugator = root_of_unity(order, -best_shift) * g;
    st.block_sizes = best;
    return st;
}

FatPoint disassemble(const Representation& r, double tol) {
    const Stabilizer st = stabilizer_of(r, tol);
    const int k = r.dimension();
    const int g_count = r.algebra().generator_count();
    if (st.infinite) {
        std::vector<std::vector<Matrix>> blocks;
        for (const auto& m : r.mats()) blocks.push_back({m});
        return FatPoint(r.algebra(), {k}, std::move(blocks));
    }
    const int e = st.order;
    const std::vector<int>& mult = st.block_sizes;
    const auto off = offsets_of(mult);

    Matrix basis(k, k);
    if (e == 1) {
        basis = Matrix::Identity(k, k);
    } else {
        std::vector<Matrix> powers{Matrix::Identity(k, k)};
        for (int s = 1; s < e; ++s) powers.push_back(powers.back() * st.conjugator);
        for (int l = 0; l < e; ++l) {
            Matrix p = Matrix::Zero(k, k);
            for (int s = 0; s < e; ++s) p += root_of_unity(e, -l * s) * powers[s];
            p /= static_cast<double>(e);
            const Matrix b = linalg::range(p, 1e-6);
            if (b.cols() != mult[l]) throw NumericalError("disassemble: eigenspace dimension mismatch");
            basis.middleCols(off[l], mult[l]) = b;
        }
    }
    const Matrix inv = basis.inverse();

    std::vector<std::vector<Matrix>> blocks(g_count);
    double worst = 0.0;
    for (int i = 0; i < g_count; ++i) {
        const Matrix m = inv * r[i] * basis;
        for (int l = 0; l < e; ++l) {
            const int prev = (l + e - 1) % e;
            blocks[i].push_back(m.block(off[l], off[prev], mult[l], mult[prev]));
        }
        const double stray = (m - block_cyclic(mult, blocks[i], 1.0)).norm();
        worst = std::max(worst, stray / std::max(1.0, m.norm()));
    }
    if (worst > tol) throw NumericalError("disassemble: representation is not block-cyclic in the eigenbasis");
    return FatPoint(r.algebra(), mult, std::move(blocks), FatPoint::Check::Full, 1e-6);
}

FatPoint shift(const FatPoint& f, int times) {
    const int e = f.period();
    const int s = ((times % e) + e) % e;
    std::vector<int> mult(e);
    for (int l = 0; l < e; ++l) mult[l] = f.multiplicities()[(l + s) % e];
    std::vector<std::vector<Matrix>> blocks;
    for (const auto& per_gen : f.blocks()) {
        std::vector<Matrix> b(e);
        for (int l = 0; l < e; ++l) b[l] = per_gen[(l + s) % e];
        blocks.push_back(std::move(b));
    }
    return FatPoint(f.algebra(), std::move(mult), std::move(blocks), FatPoint::Check::ShapesOnly);
}

namespace {

// Cycle operator X_0 X_{e-1} .. X_1 on V_0 of a fixed generic combination of generators.
Matrix cycle_operator(const FatPoint& f) {
    const int e = f.period();
    const int g = f.algebra().generator_count();
    auto combo = [&](int l) {
        Matrix x = Matrix::Zero(f.block(0, l).rows(), f.block(0, l).cols());
        for (int i = 0; i < g; ++i) x += Scalar(1.0 + 0.31 * i, 0.17 + 0.29 * i) * f.block(i, l);
        return x;
    };
    Matrix c = Matrix::Identity(f.multiplicities()[0], f.multiplicities()[0]);
    for (int l = 1; l < e; ++l) c = combo(l) * c;
    return combo(0) * c;
}

bool isomorphic_with_twist(const FatPoint& f, const FatPoint& h, Scalar c, double tol) {
    const int e = f.period();
    const auto& m = f.multiplicities();
    std::vector<int> off(e + 1, 0);
    for (int l = 0; l < e; ++l) off[l + 1] = off[l] + m[l] * m[l];
    const int g = f.algebra().generator_count();

    // Unknowns vec(g_0), .., vec(g_{e-1}); equations g_l F_l - H_l g_{l-1} = 0
    // with the corner equation scaled by c.
    int rows = 0;
    for (int l = 0; l < e; ++l) rows += m[l] * m[(l + e - 1) % e];
    Matrix sys = Matrix::Zero(static_cast<Eigen::Index>(g) * rows, off[e]);
    int row = 0;
    for (int i = 0; i < g; ++i)
        for (int l = 0; l < e; ++l) {
            const int prev = (l + e - 1) % e;
            const int n = m[l] * m[prev];
            const Scalar w = (l == 0) ? c : Scalar(1.0);
            sys.block(row, off[l], n, m[l] * m[l]) +=
                w * linalg::kron(f.block(i, l).transpose(), Matrix::Identity(m[l], m[l]));
            sys.block(row, off[prev], n, m[prev] * m[prev]) -=
                linalg::kron(Matrix::Identity(m[prev], m[prev]), h.block(i, l));
            row += n;
        }
    const Matrix ker = linalg::kernel(sys, tol);
    if (ker.cols() == 0) return false;
    Vector coeffs(ker.cols());
    for (Eigen::Index j = 0; j < ker.cols(); ++j) coeffs(j) = Scalar(0.8 + 0.23 * j, 0.41 - 0.19 * j);
    const Vector v = ker * coeffs;
    for (int l = 0; l < e; ++l) {
        const Matrix gl = Eigen::Map<const Matrix>(v.data() + off[l], m[l], m[l]);
        if (linalg::inverse_condition(gl) < 1e-8) return false;
    }
    return true;
}

}  // namespace

bool is_isomorphic(const FatPoint& f, const FatPoint& h, double tol) {
    if (f.period() != h.period() || f.multiplicities() != h.multiplicities()) return false;
    if (f.algebra().generator_count() != h.algebra().generator_count()) return false;

    // Twisting the corner by c multiplies the cycle operator by c, so its power
    // traces determine c^j for the first j with a nonzero trace.
    const Matrix cf = cycle_operator(f), ch = cycle_operator(h);
    const int m0 = f.multiplicities()[0];
    const double scale = std::max({1.0, cf.norm(), ch.norm()});
    std::vector<Scalar> candidates{1.0};
    Matrix pf = Matrix::Identity(m0, m0), ph = Matrix::Identity(m0, m0);
    for (int j = 1; j <= m0; ++j) {
        pf = pf * cf;
        ph = ph * ch;
        const Scalar tf = pf.trace(), th = ph.trace();
        const double floor = 1e-9 * std::pow(scale, j);
        if (std::abs(tf) <= floor && std::abs(th) <= floor) continue;
        if (std::abs(tf) <= floor || std::abs(th) <= floor) return false;
        const Scalar cj = th / tf;
        candidates.clear();
        const double r = std::pow(std::abs(cj), 1.0 / j);
        const double phase = std::arg(cj) / j;
        for (int s = 0; s < j; ++s) candidates.push_back(std::polar(r, phase + 2.0 * std::numbers::pi * s / j));
        break;
    }
    for (const Scalar c : candidates)
        if (isomorphic_with_twist(f, h, c, tol)) return true;
    return false;
}

bool is_shift_equivalent(const FatPoint& f, const FatPoint& g, double tol) {
    for (int s = 0; s < f.period(); ++s)
        if (is_isomorphic(shift(f, s), g, tol)) return true;
    return false;
}

int shift_orbit_size(const FatPoint& f, double tol) {
    for (int s = 1; s < f.period(); ++s)
        if (is_isomorphic(shift(f, s), f, tol)) return s;
    return f.period();
}

}  // namespace ncrep
