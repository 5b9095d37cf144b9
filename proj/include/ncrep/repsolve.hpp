#pragma once

// Numerical solution of {f(X) = 0 for every relation f, c(X) = chi(c) * 1 for
// every prescribed central element c} over tuples of k x k matrices, by
// complex Levenberg-Marquardt from random starts.

#include <cstdint>
#include <vector>

#include "ncrep/fatpoint.hpp"
#include "ncrep/representation.hpp"

namespace ncrep {

struct SolveOptions {
    int attempts = 200;
    std::uint64_t seed = 0;
    int max_iterations = 300;
    double residual_tol = 1e-9;  ///< required max Frobenius norm of every equation
    double start_scale = 1.0;    ///< standard deviation of random start entries
    int threads = 0;             ///< 0: hardware concurrency
};

struct SolveResult {
    std::vector<Representation> classes;  ///< simple, pairwise inequivalent, fingerprint-sorted
    std::vector<int> hits;                ///< converged attempts landing in each class
    int attempts = 0;
    int converged = 0;
    int non_simple = 0;
    /// Every class was first found in the first half of the attempts, a
    /// heuristic sign that more attempts would not add classes.
    bool saturated = false;
    double worst_residual = 0.0;
};

/// Which matrix entries are unknowns: (generator, row, column) triples.
struct EntryPattern {
    int dimension = 0;
    std::vector<int> generator, row, col;

    static EntryPattern full(int generators, int k);
    /// Entries of the blocks of a block-cyclic matrix with the given multiplicities.
    static EntryPattern block_cyclic(int generators, const std::vector<int>& multiplicities);
    int size() const { return static_cast<int>(generator.size()); }
};

/// Residuals of the stacked system (relations then central conditions).
double system_residual(const Presentation& pres, const CentralCharacter& chi, const std::vector<Matrix>& mats);

/// Largest equation residual divided by max(|target| sqrt(k), s^deg), s the
/// largest generator norm: small only for genuine solutions, not for tuples
/// that are merely close to zero.
double relative_system_residual(const Presentation& pres, const CentralCharacter& chi,
                                const std::vector<Matrix>& mats);

/// One Levenberg-Marquardt run from `start` (values of the pattern's unknowns).
/// Returns true on convergence; mats receives the final point.
bool levenberg_marquardt(const Presentation& pres, const CentralCharacter& chi, const EntryPattern& pattern,
                         const Vector& start, int max_iterations, double residual_tol, std::vector<Matrix>& mats);

SolveResult solve(const Presentation& pres, int k, const CentralCharacter& chi, const SolveOptions& opts = {});

/// Solves in fat-point block coordinates: the unknowns are the blocks of a
/// block-cyclic tuple with the given multiplicities (corner t0 = 1).
SolveResult solve_fatpoint(const Presentation& pres, const std::vector<int>& multiplicities,
                           const CentralCharacter& chi, const SolveOptions& opts = {});

/// Merges representations into equivalence classes, keeping the first of each
/// (in input order), then sorts classes by trace fingerprint.
void deduplicate(std::vector<Representation>& reps, std::vector<int>* hits = nullptr);

}  // namespace ncrep
