#pragma once

// Coadjoint geometry of a finite-dimensional Lie algebra over Q: index,
// stabilisers, contact forms and the two semi-invariants attached to the
// Poisson structure matrix. Generic questions are decided either exactly
// (symbolic rank / Pfaffian over the polynomial ring) or probabilistically
// at random rational points with an explicit failure bound.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <lie/lie_algebra.hpp>
#include <lie/linalg.hpp>
#include <lie/mpoly.hpp>
#include <lie/rat.hpp>

namespace lie {

enum class Mode { automatic, probabilistic, symbolic };

struct SampleCfg {
    std::uint64_t seed = 1;
    int trials = 4;
    long bound = 1L << 20;           // coordinates drawn from [-bound, bound]
    Mode mode = Mode::automatic;
    int symbolic_index_dim = 20;     // symbolic rank threshold for index
    int symbolic_poly_dim = 11;      // symbolic Pfaffian/semi-invariant threshold
    int auto_symbolic_dim = 12;      // automatic mode goes symbolic up to here
};

struct IndexResult {
    int index = 0;
    int max_rank = 0;
    bool symbolic = false;           // rank certified over the polynomial ring
    Vec witness;                     // attains max_rank; regular when symbolic
    double failure_bound = 0.0;      // P[max_rank underestimates], 0 when symbolic
};

// ind q = dim q - max rank B(alpha). Probabilistic mode evaluates B at
// cfg.trials random points; symbolic mode computes the rank of B(x) exactly
// and resamples until the witness attains it.
IndexResult index(const LieAlgebra& q, const SampleCfg& cfg = {});

// ker B(alpha) = stabiliser of alpha in q
Subspace stabiliser(const LieAlgebra& q, const Vec& alpha);

// alpha vanishes on its own stabiliser iff the orbit of alpha is conical
bool is_conical_orbit(const LieAlgebra& q, const Vec& alpha);

// alpha is a contact form: rank B(alpha) = dim - 1 and alpha nonzero on the
// kernel line. Decided by the Pfaffian of B bordered with alpha; throws
// std::domain_error("contact undefined in even dimension").
bool is_contact_form(const LieAlgebra& q, const Vec& alpha);

struct ContactResult {
    bool contact = false;
    bool certified = false;          // exact witness or symbolic vanishing
    Vec witness;                     // contact form when contact
    Rat certificate;                 // bordered Pfaffian at the witness
    double failure_bound = 0.0;      // when declared not contact by sampling
    std::string detail;
};

// Does q admit a contact form? Positive answers carry an exact certificate.
// Negative answers are certified symbolically when the dimension allows,
// otherwise probabilistic with the recorded failure bound.
ContactResult is_contact_algebra(const LieAlgebra& q, const SampleCfg& cfg = {});

// q_alpha intersects [q, q_alpha] trivially (Tauvel-Yu stability criterion)
bool is_stable_point(const LieAlgebra& q, const Vec& alpha);

struct StabiliserClass {
    std::string kind;                // "nilpotent", "semisimple" or "mixed"
    bool central = false;            // stabiliser inside the center
    std::string minimal_polynomial;  // of ad(u) on the generator u
};

// Classification of the one-dimensional generic stabiliser through the
// minimal polynomial of ad(u). Throws std::domain_error
// ("classification requires index 1") otherwise.
StabiliserClass classify_generic_stabiliser(const LieAlgebra& q, const SampleCfg& cfg = {});

// Fundamental semi-invariant: gcd of the principal 2d x 2d sub-Pfaffians of
// B(x), d = (dim - ind)/2, canonically scaled. Throws
// std::domain_error("symbolic size limit") past the thresholds.
MPoly fundamental_semi_invariant(const LieAlgebra& q, const SampleCfg& cfg = {});

// Contact semi-invariant: Pfaffian of B(x) bordered with the coordinate
// column (x_0 ... x_{n-1}); identically zero iff q has no contact form.
// Odd dimension required, same errors as above.
MPoly contact_semi_invariant(const LieAlgebra& q, const SampleCfg& cfg = {});

struct CoadjointReport {
    int dim = 0;
    IndexResult index;
    ContactResult contact;
    bool generic_conical = false;
    bool stable = false;
    std::optional<StabiliserClass> stabiliser_class;  // when index == 1
    std::optional<MPoly> p;          // fundamental semi-invariant, small dims
    std::optional<MPoly> f;          // contact semi-invariant, small odd dims
    std::optional<bool> codim2;      // p == 1, the singular locus has codim >= 2
};

CoadjointReport analyze(const LieAlgebra& q, const SampleCfg& cfg = {});

}  // namespace lie
