#include <lie/linalg.hpp>

#include <algorithm>
#include <stdexcept>

namespace lie {

Vec mat_vec(const RatMat& m, const Vec& v) {
    if (v.size() != m.cols()) throw std::domain_error("mat_vec: size mismatch");
    Vec out(m.rows(), Rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) out[i] += m.at(i, j) * v[j];
    return out;
}

RatMat transpose(const RatMat& m) {
    RatMat t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    return t;
}

bool is_skew_symmetric(const RatMat& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (m.at(i, j) != -m.at(j, i)) return false;
    return true;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

Vec scaled(const Vec& v, const Rat& c) {
    Vec out(v);
    for (auto& x : out) x *= c;
    return out;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Rat dot(const Vec& a, const Vec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

// Integer copy of m with each row scaled by the lcm of its denominators.
// Returns the product of the scaling factors (for determinants).
Rat clear_denominators(const RatMat& m, std::vector<std::vector<Int>>& out) {
    out.assign(m.rows(), std::vector<Int>(m.cols()));
    Rat scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Int& d = m.at(i, j).get_den();
            if (d != 1) l = lcm(l, d);
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rat v = m.at(i, j) * l;
            out[i][j] = v.get_num();
        }
        scale *= Rat(l);
    }
    return scale;
}

}  // namespace

Echelon bareiss_echelon(const RatMat& mat, bool use_parallel) {
    Echelon e;
    e.scale = clear_denominators(mat, e.m);
    auto& m = e.m;
    const long rows = static_cast<long>(mat.rows());
    const long cols = static_cast<long>(mat.cols());

    Int prev = 1;
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long piv = -1;
        for (long i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) {
            std::swap(m[piv], m[r]);
            e.swap_sign = -e.swap_sign;
        }
        const Int& p = m[r][c];
        const bool big = use_parallel && (rows - r - 1) * (cols - c) > 4096;
#pragma omp parallel for schedule(dynamic) if (big)
        for (long i = r + 1; i < rows; ++i) {
            Int t;
            for (long j = c + 1; j < cols; ++j) {
                // m[i][j] = (m[i][j]*p - m[i][c]*m[r][j]) / prev, division exact
                t = m[i][j] * p;
                if (m[i][c] != 0 && m[r][j] != 0) t -= m[i][c] * m[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
            m[i][c] = 0;
        }
        prev = p;
        e.pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    e.rank = static_cast<int>(e.pivot_cols.size());
    return e;
}

int rank(const RatMat& m) { return bareiss_echelon(m).rank; }

RankKernel rank_kernel(const RatMat& mat) {
    Echelon e = bareiss_echelon(mat);
    RankKernel rk;
    rk.rank = e.rank;
    const std::size_t n = mat.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;

    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n, Rat(0));
        v[f] = 1;
        for (int row = e.rank - 1; row >= 0; --row) {
            int pc = e.pivot_cols[row];
            Rat s = 0;
            for (std::size_t j = pc + 1; j < n; ++j)
                if (e.m[row][j] != 0 && v[j] != 0) s += Rat(e.m[row][j]) * v[j];
            v[pc] = -s / Rat(e.m[row][pc]);
        }
        rk.kernel.push_back(std::move(v));
    }
    return rk;
}

Rat det(const RatMat& m) {
    if (m.rows() != m.cols()) throw std::domain_error("det: not square");
    if (m.rows() == 0) return 1;
    Echelon e = bareiss_echelon(m);
    if (e.rank < static_cast<int>(m.rows())) return 0;
    Rat d(e.m[m.rows() - 1][m.cols() - 1]);
    d *= e.swap_sign;
    return d / e.scale;
}

RrefResult rref_reference(const RatMat& mat) {
    RrefResult res;
    res.m = mat;
    auto& m = res.m;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Rat inv = m.at(r, c);
        for (std::size_t j = c; j < cols; ++j) m.at(r, j) /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        res.pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    res.rank = static_cast<int>(res.pivot_cols.size());
    return res;
}

std::optional<Vec> solve(const RatMat& a, const Vec& b) {
    if (b.size() != a.rows()) throw std::domain_error("solve: size mismatch");
    RatMat aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    RrefResult r = rref_reference(aug);
    Vec x(a.cols(), Rat(0));
    for (int row = 0; row < r.rank; ++row) {
        int pc = r.pivot_cols[row];
        if (pc == static_cast<int>(a.cols())) return std::nullopt;  // 0 = 1 row
        x[pc] = r.m.at(row, a.cols());
    }
    return x;
}

namespace {

// Reduced echelon basis from generators (rational back-substitution on the
// fraction-free echelon rows).
std::vector<Vec> rref_rows(const RatMat& mat) {
    Echelon e = bareiss_echelon(mat);
    std::vector<Vec> rows;
    const std::size_t n = mat.cols();
    for (int i = e.rank - 1; i >= 0; --i) {
        Vec v(n, Rat(0));
        int pc = e.pivot_cols[i];
        Rat p(e.m[i][pc]);
        for (std::size_t j = pc; j < n; ++j) v[j] = Rat(e.m[i][j]) / p;
        // eliminate later pivots from this row
        for (std::size_t k = 0; k < rows.size(); ++k) {
            int later_pc = e.pivot_cols[e.rank - 1 - k];
            if (v[later_pc] != 0) {
                Rat f = v[later_pc];
                for (std::size_t j = later_pc; j < n; ++j) v[j] -= f * rows[k][j];
            }
        }
        rows.push_back(std::move(v));
    }
    std::reverse(rows.begin(), rows.end());
    return rows;
}

}  // namespace

Subspace span_of(int ambient, const std::vector<Vec>& gens) {
    Subspace s;
    s.ambient = ambient;
    if (gens.empty()) return s;
    RatMat m(gens.size(), ambient);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (static_cast<int>(gens[i].size()) != ambient)
            throw std::domain_error("span_of: ambient mismatch");
        for (int j = 0; j < ambient; ++j) m.at(i, j) = gens[i][j];
    }
    s.basis = rref_rows(m);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    Vec w = v;
    for (const Vec& row : basis) {
        std::size_t pc = 0;
        while (pc < row.size() && row[pc] == 0) ++pc;
        if (pc < w.size() && w[pc] != 0) {
            Rat f = w[pc];
            for (std::size_t j = pc; j < w.size(); ++j) w[j] -= f * row[j];
        }
    }
    return is_zero_vec(w);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) throw std::domain_error("intersect: ambient mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace{a.ambient, {}};
    // kernel of [A^T | B^T]: a-part coefficients give the intersection
    RatMat m(a.ambient, a.dim() + b.dim());
    for (int j = 0; j < a.dim(); ++j)
        for (int i = 0; i < a.ambient; ++i) m.at(i, j) = a.basis[j][i];
    for (int j = 0; j < b.dim(); ++j)
        for (int i = 0; i < a.ambient; ++i) m.at(i, a.dim() + j) = b.basis[j][i];
    RankKernel rk = rank_kernel(m);
    std::vector<Vec> gens;
    for (const Vec& k : rk.kernel) {
        Vec v(a.ambient, Rat(0));
        for (int j = 0; j < a.dim(); ++j)
            if (k[j] != 0) v = vec_add(v, scaled(a.basis[j], k[j]));
        if (!is_zero_vec(v)) gens.push_back(std::move(v));
    }
    return span_of(a.ambient, gens);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    std::vector<Vec> gens = a.basis;
    gens.insert(gens.end(), b.basis.begin(), b.basis.end());
    return span_of(a.ambient, gens);
}

bool subspace_le(const Subspace& a, const Subspace& b) {
    return std::all_of(a.basis.begin(), a.basis.end(),
                       [&](const Vec& v) { return b.contains(v); });
}

Vec coords_in_rref(const std::vector<Vec>& rref_basis, const Vec& v) {
    Vec coords(rref_basis.size(), Rat(0));
    Vec w = v;
    for (std::size_t i = 0; i < rref_basis.size(); ++i) {
        std::size_t pc = 0;
        while (pc < rref_basis[i].size() && rref_basis[i][pc] == 0) ++pc;
        coords[i] = w[pc];
        if (coords[i] != 0)
            for (std::size_t j = pc; j < w.size(); ++j) w[j] -= coords[i] * rref_basis[i][j];
    }
    if (!is_zero_vec(w)) throw std::domain_error("coords_in_rref: vector outside span");
    return coords;
}

}  // namespace lie
