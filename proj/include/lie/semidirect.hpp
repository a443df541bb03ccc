#pragma once

// Semidirect sums q = l x| V with V an abelian ideal, acted on by l.
// A decomposition is either declared on an existing algebra via a basis
// partition (Splitting) or assembled from an algebra and representation
// matrices. The analysis entry point decides contactness of index-1 sums
// by reduction to the stabiliser of a generic point of V*.

#include <optional>
#include <string>
#include <vector>

#include <lie/coadjoint.hpp>
#include <lie/lie_algebra.hpp>
#include <lie/linalg.hpp>
#include <lie/rat.hpp>

namespace lie {

// Basis partition declaring a semidirect structure: levi spans a
// subalgebra, ideal spans an abelian ideal.
struct Splitting {
    std::vector<int> levi;
    std::vector<int> ideal;
};

struct SemidirectDecomposition {
    LieAlgebra q;
    Splitting split;
    LieAlgebra levi;                // extracted on the levi part
    std::vector<RatMat> action;     // per levi basis vector, matrix on ideal coords
};

// Validate a declared splitting on q and extract the pieces. Throws
// std::domain_error: "splitting does not partition the basis",
// "levi is not a subalgebra", "ideal is not an ideal", "ideal is not abelian".
SemidirectDecomposition make_semidirect(const LieAlgebra& q, const Splitting& s);

// Assemble l x| V from representation matrices rho[i] (the action of the
// i-th basis vector of l on V). Throws std::domain_error
// "not a representation at (i,j)" when rho fails to respect the bracket.
SemidirectDecomposition build_semidirect(const LieAlgebra& l, const std::vector<RatMat>& rho,
                                         const std::vector<std::string>& ideal_labels);

// Restrict a decomposition's levi to a subalgebra spanned by rows of s
// (levi coordinates); the action matrices restrict along. Labels optional.
SemidirectDecomposition restrict_levi(const SemidirectDecomposition& d, const Subspace& s,
                                      std::vector<std::string> labels = {});

// coadjoint action of a levi element (levi coords) on gamma in V*
Vec levi_on_dual(const SemidirectDecomposition& d, const Vec& x, const Vec& gamma);

// rows i: action of the i-th levi basis vector on gamma
RatMat orbit_matrix(const SemidirectDecomposition& d, const Vec& gamma);

// index additivity check for the sum: ind q == ind l_gamma + dim V - dim L.gamma
// at a generic gamma (both sides computed independently).
struct RaisResult {
    int lhs = 0;            // ind q
    int ind_stab = 0;       // ind l_gamma
    int dim_orbit = 0;      // dim L.gamma
    int dim_v = 0;
    int rhs = 0;            // ind_stab + dim_v - dim_orbit
    bool ok = false;
    Vec gamma;
};
RaisResult rais_check(const SemidirectDecomposition& d, const SampleCfg& cfg);

// l_<gamma> = {x in l : x.gamma in k gamma}, as a subspace of levi coords.
// Throws std::domain_error("line normaliser of zero") when gamma == 0.
Subspace line_normaliser(const SemidirectDecomposition& d, const Vec& gamma);

// Unique s with B(beta) s = beta, equivalently (ad* s) beta = beta.
// Throws std::domain_error("not a Frobenius point") when B(beta) is singular.
Vec principal_element(const LieAlgebra& h, const Vec& beta);

struct SemidirectAnalysis {
    Vec gamma;                       // sampled generic point of V*
    char case_tag = '?';             // 'A' or 'B'
    int dim_orbit = 0;               // dim L.gamma
    int ind_stab = 0;                // ind l_gamma
    int ind_line = -1;               // ind l_<gamma> (case B only)
    bool contact = false;
    std::string route;               // which branch decided
    std::optional<Vec> principal;    // levi coords, when the tight subcase ran
};

// Contactness of an index-1 semidirect sum through the generic stabiliser.
// Case A: dim L.gamma = dim V - 1 and ind l_gamma = 0; contact iff the
// generic orbit is not conical (gamma not tangent to its own orbit).
// Case B: dim L.gamma = dim V and ind l_gamma = 1; decided through the
// line normaliser and, in the tight subcase, a principal element.
// Throws std::domain_error("semidirect analysis requires index 1") and
// "semidirect analysis: orbit shape matches neither case".
SemidirectAnalysis analyze_semidirect(const SemidirectDecomposition& d, const SampleCfg& cfg);

}  // namespace lie
