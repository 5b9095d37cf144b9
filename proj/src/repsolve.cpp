#include "ncrep/repsolve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <thread>

#include "ncrep/linalg.hpp"

namespace ncrep {

EntryPattern EntryPattern::full(int generators, int k) {
    EntryPattern p;
    p.dimension = k;
    for (int i = 0; i < generators; ++i)
        for (int c = 0; c < k; ++c)
            for (int r = 0; r < k; ++r) {
                p.generator.push_back(i);
                p.row.push_back(r);
                p.col.push_back(c);
            }
    return p;
}

EntryPattern EntryPattern::block_cyclic(int generators, const std::vector<int>& mult) {
    const int e = static_cast<int>(mult.size());
    std::vector<int> off(e + 1, 0);
    for (int l = 0; l < e; ++l) off[l + 1] = off[l] + mult[l];
    EntryPattern p;
    p.dimension = off[e];
    for (int i = 0; i < generators; ++i)
        for (int l = 0; l < e; ++l) {
            const int prev = (l + e - 1) % e;
            for (int c = 0; c < mult[prev]; ++c)
                for (int r = 0; r < mult[l]; ++r) {
                    p.generator.push_back(i);
                    p.row.push_back(off[l] + r);
                    p.col.push_back(off[prev] + c);
                }
        }
    return p;
}

namespace {

struct Equation {
    const NCPoly* poly;
    Scalar target;
};

std::vector<Equation> equations_of(const Presentation& pres, const CentralCharacter& chi) {
    std::vector<Equation> eqs;
    for (const auto& r : pres.relations()) eqs.push_back({&r, 0.0});
    for (std::size_t j = 0; j < chi.size(); ++j) eqs.push_back({&chi.elements[j], chi.values[j]});
    return eqs;
}

std::vector<Matrix> to_mats(const EntryPattern& pat, int generators, const Vector& x) {
    std::vector<Matrix> mats(generators, Matrix::Zero(pat.dimension, pat.dimension));
    for (int u = 0; u < pat.size(); ++u) mats[pat.generator[u]](pat.row[u], pat.col[u]) = x(u);
    return mats;
}

// Stacked residual vector (column-major k x k block per equation) and the
// largest per-equation Frobenius norm.
struct Evaluation {
    Vector f;
    double worst = 0.0;
};

Evaluation evaluate_system(const std::vector<Equation>& eqs, const std::vector<Matrix>& mats, int k) {
    Evaluation ev;
    ev.f.resize(static_cast<Eigen::Index>(eqs.size()) * k * k);
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        Matrix v = evaluate(*eqs[e].poly, mats);
        v.diagonal().array() -= eqs[e].target;
        ev.worst = std::max(ev.worst, v.norm());
        ev.f.segment(static_cast<Eigen::Index>(e) * k * k, k * k) = Eigen::Map<const Vector>(v.data(), k * k);
    }
    return ev;
}

// d/dX_gen(r, s) of a word w = X_{w0} .. X_{w(L-1)} is sum over positions t
// with w_t = gen of P_t E_rs S_{t+1}, with prefix P_t and suffix S_{t+1}.
Matrix jacobian(const std::vector<Equation>& eqs, const std::vector<Matrix>& mats, const EntryPattern& pat,
                const std::vector<std::vector<int>>& unknowns_of_gen) {
    const int k = pat.dimension;
    Matrix jac = Matrix::Zero(static_cast<Eigen::Index>(eqs.size()) * k * k, pat.size());
    std::vector<Matrix> prefix, suffix;
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        const Eigen::Index base = static_cast<Eigen::Index>(e) * k * k;
        for (const auto& [m, c] : eqs[e].poly->terms()) {
            const int len = m.degree();
            if (len == 0) continue;
            prefix.assign(len + 1, Matrix::Identity(k, k));
            suffix.assign(len + 1, Matrix::Identity(k, k));
            for (int t = 0; t < len; ++t) prefix[t + 1] = prefix[t] * mats[m[t]];
            for (int t = len - 1; t >= 0; --t) suffix[t] = mats[m[t]] * suffix[t + 1];
            for (int t = 0; t < len; ++t) {
                const Matrix& pre = prefix[t];
                const Matrix& suf = suffix[t + 1];
                for (int u : unknowns_of_gen[m[t]]) {
                    const int r = pat.row[u], s = pat.col[u];
                    for (int b = 0; b < k; ++b) {
                        const Scalar w = c * suf(s, b);
                        if (w == Scalar(0.0)) continue;
                        jac.col(u).segment(base + static_cast<Eigen::Index>(b) * k, k) += w * pre.col(r);
                    }
                }
            }
        }
    }
    return jac;
}

}  // namespace

double system_residual(const Presentation& pres, const CentralCharacter& chi, const std::vector<Matrix>& mats) {
    const auto eqs = equations_of(pres, chi);
    return evaluate_system(eqs, mats, static_cast<int>(mats.front().rows())).worst;
}

double relative_system_residual(const Presentation& pres, const CentralCharacter& chi,
                                const std::vector<Matrix>& mats) {
    const auto eqs = equations_of(pres, chi);
    const int k = static_cast<int>(mats.front().rows());
    double s = 0.0;
    for (const auto& m : mats) s = std::max(s, m.norm());
    double worst = 0.0;
    for (const auto& e : eqs) {
        Matrix v = evaluate(*e.poly, mats);
        v.diagonal().array() -= e.target;
        const double r = v.norm();
        if (r == 0.0) continue;
        const int d = e.poly->max_degree();
        const double scale = std::max(std::abs(e.target) * std::sqrt(static_cast<double>(k)), std::pow(s, d));
        worst = std::max(worst, scale > 0.0 ? r / scale : std::numeric_limits<double>::infinity());
    }
    return worst;
}

bool levenberg_marquardt(const Presentation& pres, const CentralCharacter& chi, const EntryPattern& pat,
                         const Vector& start, int max_iterations, double residual_tol, std::vector<Matrix>& mats) {
    const int g = pres.generator_count();
    const int k = pat.dimension;
    const auto eqs = equations_of(pres, chi);
    std::vector<std::vector<int>> unknowns_of_gen(g);
    for (int u = 0; u < pat.size(); ++u) unknowns_of_gen[pat.generator[u]].push_back(u);

    Vector x = start;
    mats = to_mats(pat, g, x);
    Evaluation cur = evaluate_system(eqs, mats, k);
    double cost = cur.f.squaredNorm();
    double lambda = -1.0;
    double checkpoint = cost;
    int polish = 0;
    for (int it = 0; it < max_iterations; ++it) {
        if (cur.worst < residual_tol) {
            // Keep going while the residual still drops fast: degenerate roots
            // (the zero representation, say) converge only linearly.
            if (cur.worst < 1e-15 || ++polish > 60) break;
        } else if (it > 0 && it % 25 == 0) {
            if (cost > 0.5 * checkpoint) return false;  // stagnating far from a solution
            checkpoint = cost;
        }
        const Matrix jac = jacobian(eqs, mats, pat, unknowns_of_gen);
        const Matrix a = jac.adjoint() * jac;
        const Vector grad = jac.adjoint() * cur.f;
        if (lambda < 0.0) lambda = 1e-3 * std::max(1e-12, a.diagonal().real().maxCoeff());
        bool improved = false;
        for (int tries = 0; tries < 12; ++tries) {
            Matrix damped = a;
            damped.diagonal().array() += lambda;
            const Vector step = damped.ldlt().solve(-grad);
            if (!step.allFinite()) {
                lambda *= 10.0;
                continue;
            }
            const Vector trial = x + step;
            std::vector<Matrix> trial_mats = to_mats(pat, g, trial);
            Evaluation ev = evaluate_system(eqs, trial_mats, k);
            const double trial_cost = ev.f.squaredNorm();
            if (std::isfinite(trial_cost) && trial_cost < cost) {
                x = trial;
                mats = std::move(trial_mats);
                cur = std::move(ev);
                cost = trial_cost;
                lambda = std::max(lambda / 3.0, 1e-15);
                improved = true;
                break;
            }
            lambda *= 4.0;
        }
        if (!improved) break;
        if (x.norm() > 1e6 * (1.0 + start.norm())) return false;
    }
    if (cur.worst >= residual_tol) return false;
    // Snap negligible entries to zero when the snapped point is still a solution.
    const double cut = 1e-4 * std::max(1.0, x.cwiseAbs().maxCoeff());
    Vector snapped = x;
    for (Eigen::Index u = 0; u < snapped.size(); ++u)
        if (std::abs(snapped(u)) < cut) snapped(u) = 0.0;
    if (snapped != x) {
        std::vector<Matrix> snapped_mats = to_mats(pat, g, snapped);
        if (evaluate_system(eqs, snapped_mats, k).worst < residual_tol) mats = std::move(snapped_mats);
    }
    return true;
}

namespace {

bool fingerprint_close(const std::vector<Scalar>& a, const std::vector<Scalar>& b, double tol) {
    double scale = 1.0;
    for (const auto& x : a) scale = std::max(scale, std::abs(x));
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol * scale) return false;
    return true;
}

bool fingerprint_less(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    double scale = 1.0;
    for (const auto& x : a) scale = std::max(scale, std::abs(x));
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Scalar d = a[i] - b[i];
        if (std::abs(d.real()) > 1e-6 * scale) return a[i].real() < b[i].real();
        if (std::abs(d.imag()) > 1e-6 * scale) return a[i].imag() < b[i].imag();
    }
    return false;
}

bool invertible_intertwiner(const Representation& a, const Representation& b) {
    const Matrix ker = intertwiners(a.mats(), b.mats(), 1e-7);
    if (ker.cols() == 0) return false;
    Vector coeffs(ker.cols());
    for (Eigen::Index j = 0; j < ker.cols(); ++j) coeffs(j) = Scalar(1.0 + 0.37 * j, 0.11 * j - 0.5);
    const Vector t = ker * coeffs;
    const int k = a.dimension();
    return linalg::inverse_condition(Eigen::Map<const Matrix>(t.data(), k, k)) > 1e-8;
}

struct Attempt {
    std::optional<Representation> rep;
    bool converged = false;
    bool simple = false;
    double residual = 0.0;
};

SolveResult run_attempts(const Presentation& pres, const CentralCharacter& chi, const EntryPattern& pat,
                         const SolveOptions& opts) {
    if (opts.attempts < 0) throw InvalidArgument("solve: attempts must be nonnegative");
    for (const auto& v : chi.values)
        if (!is_finite(v)) throw InvalidArgument("solve: non-finite character value");
    for (const auto& c : chi.elements)
        if (!c.homogeneous_degree() || *c.homogeneous_degree() < 1)
            throw InvalidArgument("solve: central elements must be homogeneous of positive degree");

    std::vector<Attempt> results(opts.attempts);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int idx = next++; idx < opts.attempts; idx = next++) {
            std::seed_seq seq{static_cast<std::uint32_t>(opts.seed & 0xffffffffu),
                              static_cast<std::uint32_t>(opts.seed >> 32), static_cast<std::uint32_t>(idx),
                              static_cast<std::uint32_t>(pat.dimension)};
            std::mt19937_64 rng(seq);
            std::normal_distribution<double> nd(0.0, opts.start_scale / std::sqrt(2.0));
            Vector start(pat.size());
            for (int u = 0; u < pat.size(); ++u) {
                const double re = nd(rng);
                const double im = nd(rng);
                start(u) = Scalar(re, im);
            }
            std::vector<Matrix> mats;
            Attempt& a = results[idx];
            a.converged =
                levenberg_marquardt(pres, chi, pat, start, opts.max_iterations, opts.residual_tol, mats);
            if (!a.converged) continue;
            a.residual = system_residual(pres, chi, mats);  // independent re-check
            // The relative test rejects near-zero approximate roots of the
            // homogeneous equations, which pass any absolute tolerance.
            if (a.residual >= opts.residual_tol || relative_system_residual(pres, chi, mats) > 1e-6) {
                a.converged = false;
                continue;
            }
            // Tuples near a nilpotent, non-semisimple one can pass the test above
            // while being far from any exact solution; their balanced conjugate
            // collapses and exposes the defect.
            if (relative_system_residual(pres, chi, balanced(mats)) > 1e-6) {
                a.converged = false;
                continue;
            }
            Representation r(pres, std::move(mats));
            a.simple = is_simple(r);
            a.rep = std::move(r);
        }
    };
    int threads = opts.threads > 0 ? opts.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, std::max(1, opts.attempts));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    SolveResult res;
    res.attempts = opts.attempts;
    std::vector<Representation> found;
    std::vector<int> first_index;
    std::vector<std::vector<Scalar>> prints;
    for (int idx = 0; idx < opts.attempts; ++idx) {
        Attempt& a = results[idx];
        if (!a.converged) continue;
        ++res.converged;
        if (!a.simple) {
            ++res.non_simple;
            continue;
        }
        res.worst_residual = std::max(res.worst_residual, a.residual);
        auto fp = trace_fingerprint(*a.rep);
        bool matched = false;
        for (std::size_t c = 0; c < found.size(); ++c)
            if (fingerprint_close(fp, prints[c], 1e-6) && invertible_intertwiner(found[c], *a.rep)) {
                ++res.hits[c];
                matched = true;
                break;
            }
        if (!matched) {
            found.push_back(std::move(*a.rep));
            prints.push_back(std::move(fp));
            res.hits.push_back(1);
            first_index.push_back(idx);
        }
    }
    res.saturated = !found.empty() && std::all_of(first_index.begin(), first_index.end(),
                                                  [&](int i) { return 2 * i < opts.attempts; });

    std::vector<std::size_t> order(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fingerprint_less(prints[a], prints[b]); });
    std::vector<int> hits;
    for (auto i : order) {
        res.classes.push_back(found[i]);
        hits.push_back(res.hits[i]);
    }
    res.hits = std::move(hits);
    return res;
}

}  // namespace

SolveResult solve(const Presentation& pres, int k, const CentralCharacter& chi, const SolveOptions& opts) {
    if (k < 1) throw InvalidArgument("solve: dimension must be positive");
    return run_attempts(pres, chi, EntryPattern::full(pres.generator_count(), k), opts);
}

SolveResult solve_fatpoint(const Presentation& pres, const std::vector<int>& multiplicities,
                           const CentralCharacter& chi, const SolveOptions& opts) {
    if (multiplicities.empty()) throw InvalidArgument("solve_fatpoint: empty multiplicity vector");
    for (int m : multiplicities)
        if (m < 1) throw InvalidArgument("solve_fatpoint: multiplicities must be positive");
    return run_attempts(pres, chi, EntryPattern::block_cyclic(pres.generator_count(), multiplicities), opts);
}

void deduplicate(std::vector<Representation>& reps, std::vector<int>* hits) {
    std::vector<Representation> out;
    std::vector<std::vector<Scalar>> prints;
    std::vector<int> counts;
    for (auto& r : reps) {
        auto fp = trace_fingerprint(r);
        bool matched = false;
        for (std::size_t c = 0; c < out.size(); ++c)
            if (out[c].dimension() == r.dimension() && fingerprint_close(fp, prints[c], 1e-6) &&
                invertible_intertwiner(out[c], r)) {
                ++counts[c];
                matched = true;
                break;
            }
        if (!matched) {
            out.push_back(std::move(r));
            prints.push_back(std::move(fp));
            counts.push_back(1);
        }
    }
    std::vector<std::size_t> order(out.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (out[a].dimension() != out[b].dimension()) return out[a].dimension() < out[b].dimension();
        return fingerprint_less(prints[a], prints[b]);
    });
    std::vector<Representation> sorted;
    std::vector<int> sorted_counts;
    for (auto i : order) {
        sorted.push_back(std::move(out[i]));
        sorted_counts.push_back(counts[i]);
    }
    reps = std::move(sorted);
    if (hits) *hits = std::move(sorted_counts);
}

}  // namespace ncrep
