#pragma once

// Bounded-degree semi-invariants of the symmetric algebra S(q): joint
// eigenvectors of the basis derivations on the subspace annihilated by the
// derived algebra. Weights are linear functionals recorded by their values
// on the basis; products of earlier generators are filtered out so each
// degree only reports new generators.

#include <vector>

#include <lie/coadjoint.hpp>
#include <lie/lie_algebra.hpp>
#include <lie/mpoly.hpp>
#include <lie/rat.hpp>

namespace lie {

struct SemiInvariant {
    MPoly poly;     // canonically scaled
    Vec weight;     // chi(x_i) per basis vector
    int degree = 0;
};

// Throws std::domain_error("irrational weight unsupported: ...") when a
// derivation eigenvalue fails to be rational on the candidate space.
std::vector<SemiInvariant> semi_invariants_up_to_degree(const LieAlgebra& q, int max_degree);

struct WeightRelation {
    std::vector<Int> coeffs;         // primitive integer relation per generator
    std::vector<int> numerator;      // positions with positive coefficient
    std::vector<int> denominator;    // positions with negative coefficient
    MPoly num_poly, den_poly;        // products with multiplicities
    bool invariant_product = false;  // all coefficients one-sided
};

// The one-dimensional relation lattice between the generator weights,
// normalised so the numerator side has the larger total degree. Throws
// std::domain_error("weight relation is not one-dimensional").
WeightRelation weight_relation_and_generator(const std::vector<SemiInvariant>& gens);

struct TruncationResult {
    Subspace space;
    LieAlgebra algebra;
    int generator_count = 0;
};

// Common kernel of the weights of all generators up to max_degree; verified
// to be an ideal containing [q,q].
TruncationResult canonical_truncation(const LieAlgebra& q, int max_degree = 4);

// Exact Jacobian rank at random rational points.
bool algebraic_independence(const std::vector<SemiInvariant>& gens, const SampleCfg& cfg = {});

}  // namespace lie
