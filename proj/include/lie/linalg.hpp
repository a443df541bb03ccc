#ifndef LIE_LINALG_HPP
#define LIE_LINALG_HPP

// Dense exact linear algebra over the rationals. Rank, kernel and echelon
// forms run fraction-free (Bareiss) on an integer copy obtained by clearing
// row denominators; only the final back-substitution divides.

#include <lie/rat.hpp>

#include <optional>
#include <vector>

namespace lie {

class RatMat {
    std::size_t r_ = 0, c_ = 0;
    Vec a_;

  public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static RatMat identity(std::size_t n) {
        RatMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Vec row(std::size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
    bool operator==(const RatMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
};

Vec mat_vec(const RatMat& m, const Vec& v);
RatMat transpose(const RatMat& m);
bool is_skew_symmetric(const RatMat& m);

// Row echelon data of the denominator-cleared integer copy.
struct Echelon {
    std::vector<std::vector<Int>> m;  // rows 0..rank-1 hold the echelon rows
    std::vector<int> pivot_cols;      // strictly increasing
    int rank = 0;
    int swap_sign = 1;                // parity of row swaps
    Rat scale = 1;                    // product of the row-clearing factors
};

// use_parallel selects the OpenMP row-update kernel for large eliminations;
// both paths compute identical output.
Echelon bareiss_echelon(const RatMat& m, bool use_parallel = true);

int rank(const RatMat& m);

struct RankKernel {
    int rank = 0;
    std::vector<Vec> kernel;  // reduced echelon basis, free columns ascending
};
RankKernel rank_kernel(const RatMat& m);

Rat det(const RatMat& m);

// Reference implementation: plain rational Gauss-Jordan, no Bareiss, no
// threading. Tests compare the production engine against this.
struct RrefResult {
    RatMat m;
    std::vector<int> pivot_cols;
    int rank = 0;
};
RrefResult rref_reference(const RatMat& m);

// One solution of A x = b with free variables set to zero, or nullopt.
std::optional<Vec> solve(const RatMat& a, const Vec& b);

// Row space in reduced echelon form; equality of subspaces is literal
// equality of the stored bases.
struct Subspace {
    int ambient = 0;
    std::vector<Vec> basis;

    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(const Vec& v) const;
    bool operator==(const Subspace& o) const = default;
};

Subspace span_of(int ambient, const std::vector<Vec>& gens);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
bool subspace_le(const Subspace& a, const Subspace& b);

// Coordinates of v in the given reduced-echelon basis (read off at pivot
// columns, then verified); throws std::domain_error when v is outside.
Vec coords_in_rref(const std::vector<Vec>& rref_basis, const Vec& v);

bool is_zero_vec(const Vec& v);
Vec scaled(const Vec& v, const Rat& c);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Rat dot(const Vec& a, const Vec& b);

}  // namespace lie

#endif
