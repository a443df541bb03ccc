#include <lie/lie_algebra.hpp>

#include <algorithm>
#include <stdexcept>

namespace lie {

namespace {

// merge-accumulate (k, c) pairs, dropping zeros
TermList combine(std::vector<Term> acc) {
    std::sort(acc.begin(), acc.end(), [](const Term& a, const Term& b) { return a.k < b.k; });
    TermList out;
    for (auto& t : acc) {
        if (!out.empty() && out.back().k == t.k)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c == 0) out.pop_back();
    }
    return out;
}

TermList scale_terms(const TermList& t, const Rat& f) {
    if (f == 0) return {};
    TermList out;
    out.reserve(t.size());
    for (const Term& x : t) out.push_back({x.k, x.c * f});
    return out;
}

}  // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> labels, const std::vector<BracketEntry>& brackets,
                       bool validate)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)) {
    table_.assign(static_cast<std::size_t>(n_) * (n_ - 1) / 2, {});
    for (const auto& b : brackets) {
        if (b.i < 0 || b.j >= n_ || b.i >= b.j)
            throw std::domain_error("bracket indices out of range or not i<j");
        for (const Term& t : b.c)
            if (t.k < 0 || t.k >= n_) throw std::domain_error("bracket target out of range");
        auto& slot = table_[pair_index(b.i, b.j)];
        if (!slot.empty()) throw std::domain_error("duplicate bracket entry");
        slot = combine(b.c);
    }
    if (validate) check_jacobi();
}

TermList LieAlgebra::bracket_basis(int i, int j) const {
    if (i == j) return {};
    if (i < j) return table_[pair_index(i, j)];
    return scale_terms(table_[pair_index(j, i)], Rat(-1));
}

void LieAlgebra::check_jacobi() const {
    long bad = -1;
#pragma omp parallel
    {
        long local = -1;
        std::vector<Term> acc;
#pragma omp for schedule(dynamic, 4)
        for (int i = 0; i < n_; ++i) {
            if (local != -1) continue;
            for (int j = i + 1; j < n_ && local == -1; ++j) {
                for (int k = j + 1; k < n_; ++k) {
                    acc.clear();
                    // [[xi,xj],xk] + [[xj,xk],xi] + [[xk,xi],xj]
                    for (const Term& t : table_[pair_index(i, j)])
                        for (const Term& u : bracket_basis(t.k, k))
                            acc.push_back({u.k, t.c * u.c});
                    for (const Term& t : table_[pair_index(j, k)])
                        for (const Term& u : bracket_basis(t.k, i))
                            acc.push_back({u.k, t.c * u.c});
                    for (const Term& t : scale_terms(table_[pair_index(i, k)], Rat(-1)))
                        for (const Term& u : bracket_basis(t.k, j))
                            acc.push_back({u.k, t.c * u.c});
                    if (!combine(acc).empty()) {
                        local = (static_cast<long>(i) * n_ + j) * n_ + k;
                        break;
                    }
                }
            }
        }
#pragma omp critical
        if (local != -1 && (bad == -1 || local < bad)) bad = local;
    }
    if (bad != -1) {
        int k = static_cast<int>(bad % n_);
        int j = static_cast<int>(bad / n_ % n_);
        int i = static_cast<int>(bad / n_ / n_);
        throw std::domain_error("jacobi violation at (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) + ")");
    }
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
        throw std::domain_error("bracket: size mismatch");
    Vec out(n_, Rat(0));
    for (int i = 0; i < n_; ++i) {
        if (x[i] == 0 && y[i] == 0) continue;
        for (int j = i + 1; j < n_; ++j) {
            Rat f = x[i] * y[j] - x[j] * y[i];
            if (f == 0) continue;
            for (const Term& t : table_[pair_index(i, j)]) out[t.k] += f * t.c;
        }
    }
    return out;
}

RatMat LieAlgebra::structure_matrix(const Vec& alpha) const {
    RatMat b(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            Rat v = 0;
            for (const Term& t : table_[pair_index(i, j)]) v += t.c * alpha[t.k];
            b.at(i, j) = v;
            b.at(j, i) = -v;
        }
    return b;
}

SymMat LieAlgebra::structure_matrix_symbolic() const {
    SymMat b(n_, std::vector<MPoly>(n_, MPoly(n_)));
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            MPoly p(n_);
            for (const Term& t : table_[pair_index(i, j)]) p += MPoly::var(n_, t.k, t.c);
            b[i][j] = p;
            b[j][i] = -p;
        }
    return b;
}

RatMat LieAlgebra::ad_matrix(const Vec& u) const {
    RatMat m(n_, n_);
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i) {
            if (u[i] == 0 || i == j) continue;
            for (const Term& t : bracket_basis(i, j)) m.at(t.k, j) += u[i] * t.c;
        }
    return m;
}

Vec LieAlgebra::coadjoint(const Vec& u, const Vec& alpha) const {
    Vec out(n_, Rat(0));
    for (int j = 0; j < n_; ++j) {
        Rat v = 0;
        for (int i = 0; i < n_; ++i) {
            if (u[i] == 0 || i == j) continue;
            for (const Term& t : bracket_basis(i, j)) v += u[i] * t.c * alpha[t.k];
        }
        out[j] = -v;
    }
    return out;
}

Subspace LieAlgebra::derived_subalgebra() const {
    std::vector<Vec> gens;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            const TermList& t = table_[pair_index(i, j)];
            if (t.empty()) continue;
            Vec v(n_, Rat(0));
            for (const Term& x : t) v[x.k] = x.c;
            gens.push_back(std::move(v));
        }
    return span_of(n_, gens);
}

Subspace LieAlgebra::center() const {
    // xi central iff for all j, k: sum_i xi_i c_{ij}^k = 0
    RatMat m(static_cast<std::size_t>(n_) * n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j) continue;
            for (const Term& t : bracket_basis(i, j))
                m.at(static_cast<std::size_t>(j) * n_ + t.k, i) = t.c;
        }
    RankKernel rk = rank_kernel(m);
    Subspace s;
    s.ambient = n_;
    s.basis = std::move(rk.kernel);
    return s;
}

LieAlgebra subalgebra(const LieAlgebra& q, const Subspace& s, std::vector<std::string> labels) {
    const int m = s.dim();
    if (labels.empty()) {
        labels.reserve(m);
        for (int i = 0; i < m; ++i) {
            // reuse the ambient label when the basis vector is a standard one
            int hit = -1, nonzero = 0;
            for (int j = 0; j < s.ambient; ++j)
                if (s.basis[i][j] != 0) {
                    ++nonzero;
                    hit = j;
                }
            if (nonzero == 1 && s.basis[i][hit] == 1)
                labels.push_back(q.labels()[hit]);
            else
                labels.push_back("u" + std::to_string(i));
        }
    }
    std::vector<BracketEntry> entries;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Vec w = q.bracket(s.basis[i], s.basis[j]);
            Vec coords;
            try {
                coords = coords_in_rref(s.basis, w);
            } catch (const std::domain_error&) {
                throw std::domain_error("not closed under bracket");
            }
            TermList terms;
            for (int k = 0; k < m; ++k)
                if (coords[k] != 0) terms.push_back({k, coords[k]});
            if (!terms.empty()) entries.push_back({i, j, std::move(terms)});
        }
    return LieAlgebra(std::move(labels), entries);
}

Vec flatten(const RatMat& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

LieAlgebra from_matrices(const std::vector<RatMat>& mats, std::vector<std::string> labels) {
    const int m = static_cast<int>(mats.size());
    std::vector<Vec> flat;
    flat.reserve(m);
    for (const RatMat& x : mats) flat.push_back(flatten(x));
    const int amb = static_cast<int>(flat.empty() ? 0 : flat[0].size());
    Subspace sp = span_of(amb, flat);
    if (sp.dim() != m) throw std::domain_error("from_matrices: dependent basis");

    // solve every commutator against the original (non-echelon) basis
    RatMat sys(amb, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < amb; ++i) sys.at(i, j) = flat[j][i];

    std::vector<BracketEntry> entries;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            RatMat comm(mats[i].rows(), mats[i].cols());
            for (std::size_t a = 0; a < comm.rows(); ++a)
                for (std::size_t b = 0; b < comm.cols(); ++b) {
                    Rat v = 0;
                    for (std::size_t k = 0; k < comm.cols(); ++k)
                        v += mats[i].at(a, k) * mats[j].at(k, b) -
                             mats[j].at(a, k) * mats[i].at(k, b);
                    comm.at(a, b) = v;
                }
            auto coords = solve(sys, flatten(comm));
            if (!coords) throw std::domain_error("from_matrices: not closed under commutator");
            TermList terms;
            for (int k = 0; k < m; ++k)
                if ((*coords)[k] != 0) terms.push_back({k, (*coords)[k]});
            if (!terms.empty()) entries.push_back({i, j, std::move(terms)});
        }
    return LieAlgebra(std::move(labels), entries);
}

}  // namespace lie
