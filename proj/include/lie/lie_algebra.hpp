#ifndef LIE_LIE_ALGEBRA_HPP
#define LIE_LIE_ALGEBRA_HPP

// Finite-dimensional Lie algebras over Q given by structure constants.
// Brackets are stored for i < j only; the Jacobi identity is checked on
// construction (every triple, exact arithmetic).

#include <lie/linalg.hpp>
#include <lie/mpoly.hpp>

#include <string>
#include <vector>

namespace lie {

struct Term {
    int k;
    Rat c;
    bool operator==(const Term&) const = default;
};

using TermList = std::vector<Term>;  // sorted by k, no zero coefficients

struct BracketEntry {
    int i, j;  // i < j
    TermList c;
};

class LieAlgebra {
    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<TermList> table_;  // index pair_index(i,j), i < j

    std::size_t pair_index(int i, int j) const {  // pre: i < j
        return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i + 1) / 2 +
               (j - i - 1);
    }

  public:
    LieAlgebra() = default;
    // validate: run the full Jacobi sweep (throws std::domain_error
    // "jacobi violation at (i,j,k)" naming the first triple).
    LieAlgebra(std::vector<std::string> labels, const std::vector<BracketEntry>& brackets,
               bool validate = true);

    int dim() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // [x_i, x_j] for any i, j (sign handled, empty when i == j)
    TermList bracket_basis(int i, int j) const;
    const std::vector<TermList>& raw_table() const { return table_; }

    Vec bracket(const Vec& x, const Vec& y) const;

    // B(alpha)_{ij} = alpha([x_i, x_j])
    RatMat structure_matrix(const Vec& alpha) const;
    // B(x)_{ij} = sum_k c_{ij}^k x_k, linear entries
    SymMat structure_matrix_symbolic() const;

    RatMat ad_matrix(const Vec& u) const;
    // (ad* u) alpha, i.e. the functional x_j -> -alpha([u, x_j])
    Vec coadjoint(const Vec& u, const Vec& alpha) const;

    Subspace derived_subalgebra() const;
    Subspace center() const;

    void check_jacobi() const;
};

// Induced algebra on a bracket-closed subspace; labels default to the
// original label when a basis vector is a standard basis vector, else u<i>.
// Throws std::domain_error("not closed under bracket") otherwise.
LieAlgebra subalgebra(const LieAlgebra& q, const Subspace& s,
                      std::vector<std::string> labels = {});

// Structure constants from a list of linearly independent matrices closed
// under commutator.
LieAlgebra from_matrices(const std::vector<RatMat>& mats, std::vector<std::string> labels);

// Flatten helper shared by from_matrices and tests.
Vec flatten(const RatMat& m);

}  // namespace lie

#endif
