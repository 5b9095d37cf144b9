#pragma once

// Classification experiments for Sklyanin algebras at a torsion point of
// order n: dimension and stabilizer census, the s-dimensional cover over the
// three-lines locus (s = n/3), fixed fat points and the generic fiber degree.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ncrep/repsolve.hpp"

namespace ncrep {

/// Basis of the center of A in each degree 1..max_degree (empty where trivial).
struct CenterData {
    std::map<int, std::vector<NCPoly>> by_degree;
    /// Degrees in which the center needs generators beyond products of lower-degree central elements.
    std::vector<int> generator_degrees;

    /// All basis elements, degree ascending.
    std::vector<NCPoly> elements() const;
    /// The first basis element of the lowest nonzero degree.
    const NCPoly& lowest() const;
};

CenterData center_data(const Presentation& pres, int max_degree);

int gcd_of(const std::vector<int>& values);

struct CensusRow {
    std::string character_id;
    int dimension = 0;
    int class_count = 0;
    int stabilizer_order = 0;  ///< 0 encodes the infinite stabilizer of the trivial representation
    double residual = 0.0;
    Scalar g_value = 0.0;
    bool saturated = true;
};

struct CensusEntry {
    int count = 0;
    std::set<int> stabilizer_orders;
};

struct Census {
    std::vector<CensusRow> rows;
    std::map<int, CensusEntry> histogram;  ///< dimension -> classes and stabilizer orders seen
    std::set<int> dimensions() const;
};

struct CensusOptions {
    int samples = 2;              ///< generic characters (random nonzero values of g)
    int point_orbits = 3;         ///< variety points turned into g = 0 representations
    int max_dimension = 0;        ///< 0: probe dimensions 1..n
    SolveOptions solve;
};

/// n is the torsion order of the shift. The degree-3 central element g is taken
/// from the center; each generic sample fixes g to a random nonzero value and
/// searches every dimension 1..n for simple classes.
Census census(const Presentation& pres, int n, const CensusOptions& opts = {});

struct FiberCount {
    int count = 0;
    bool saturated = false;
    double worst_residual = 0.0;
    std::vector<int> stabilizer_orders;
};

/// Number of inequivalent s-dimensional simple classes at chi, s = n/3.
FiberCount cover_fiber_count(const Presentation& pres, int n, const CentralCharacter& chi,
                             const SolveOptions& opts = {});

/// Full central characters (all central basis elements up to degree n) of
/// s-dimensional simples found at random nonzero values of g.
std::vector<CentralCharacter> sample_three_lines_characters(const Presentation& pres, int n, int count,
                                                            const SolveOptions& opts = {});

struct FixedFatPoints {
    int families = 0;  ///< C^*-families of s-dimensional simples with trivial stabilizer
    int classes = 0;   ///< classes found at g -> 1 before grouping into families
    std::vector<int> stabilizer_orders;
    bool saturated = false;
};

FixedFatPoints fixed_fatpoint_count(const Presentation& pres, int n, const SolveOptions& opts = {});

struct FiberDegree {
    int value = 0;                 ///< common shift-orbit size, 0 if samples disagree or none found
    std::vector<int> per_sample;
    bool consistent = false;
};

/// For `samples` random values of the lowest-degree central element, solves
/// for n-dimensional simples, disassembles one per sample and reports the
/// size of its shift orbit.
FiberDegree fiber_degree_estimate(const Presentation& pres, int n, int samples, const SolveOptions& opts = {});

}  // namespace ncrep
