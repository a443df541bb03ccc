#ifndef LIE_MPOLY_HPP
#define LIE_MPOLY_HPP

// Sparse multivariate polynomials over the rationals with graded
// lexicographic term order. Enough for structure matrices with linear
// entries, Pfaffians of those, and gcds of the resulting forms.

#include <lie/rat.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lie {

using Exp = std::vector<int>;

inline int total_degree(const Exp& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

struct GradedLexLess {
    bool operator()(const Exp& a, const Exp& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

class MPoly {
    int nv_ = 0;
    std::map<Exp, Rat, GradedLexLess> t_;  // invariant: no zero coefficients

  public:
    MPoly() = default;
    explicit MPoly(int nvars) : nv_(nvars) {}

    static MPoly constant(int nvars, const Rat& c) {
        MPoly p(nvars);
        if (c != 0) p.t_[Exp(nvars, 0)] = c;
        return p;
    }
    static MPoly var(int nvars, int i, const Rat& coeff = Rat(1)) {
        MPoly p(nvars);
        if (coeff != 0) {
            Exp e(nvars, 0);
            e[i] = 1;
            p.t_[e] = coeff;
        }
        return p;
    }

    int nvars() const { return nv_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && degree() == 0); }
    int degree() const { return t_.empty() ? -1 : total_degree(t_.rbegin()->first); }
    std::size_t term_count() const { return t_.size(); }
    const std::map<Exp, Rat, GradedLexLess>& terms() const { return t_; }

    Rat coeff(const Exp& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? Rat(0) : it->second;
    }
    std::pair<Exp, Rat> leading() const;  // max term; throws on zero

    void add_term(const Exp& e, const Rat& c);

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rat& c) const;
    bool operator==(const MPoly& o) const { return nv_ == o.nv_ && t_ == o.t_; }

    MPoly derivative(int i) const;
    Rat eval(const Vec& point) const;
    bool is_homogeneous() const;
};

// Quotient f/g when the division is exact, nullopt otherwise.
std::optional<MPoly> exact_div(const MPoly& f, const MPoly& g);

// Integer content 1 and positive leading coefficient. Zero stays zero.
MPoly canonical_scale(MPoly f);

// Canonical gcd of all nonzero entries; throws std::domain_error("zero gcd")
// when every input is zero (or the list is empty).
MPoly poly_gcd(const std::vector<MPoly>& fs);

std::string poly_str(const MPoly& f, const std::vector<std::string>& names);

using SymMat = std::vector<std::vector<MPoly>>;

// Pfaffian by first-row expansion memoized over index subsets; sign fixed by
// Pf [[0,1],[-1,0]] = +1. Throws std::domain_error("odd-size Pfaffian").
MPoly symbolic_pfaffian(const SymMat& m, std::size_t max_size = 16);

// Rank over the rational function field (fraction-free elimination with
// exact polynomial division).
int symbolic_rank(const SymMat& m);

}  // namespace lie

#endif
