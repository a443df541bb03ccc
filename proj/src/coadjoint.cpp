#include <lie/coadjoint.hpp>

#include <lie/pfaffian.hpp>
#include <lie/upoly.hpp>

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lie {

namespace {

// decoupled deterministic streams per question, all derived from cfg.seed
Rng sub_rng(const SampleCfg& cfg, std::uint64_t salt) { return Rng(cfg.seed).fork(salt); }

constexpr std::uint64_t kSaltIndex = 0;
constexpr std::uint64_t kSaltContact = 1;

bool auto_symbolic(const LieAlgebra& q, const SampleCfg& cfg) {
    return cfg.mode == Mode::symbolic ||
           (cfg.mode == Mode::automatic && q.dim() <= cfg.auto_symbolic_dim);
}

// P[t independent points all hit a fixed hypersurface of this degree],
// coordinates uniform over 2*bound+1 integers (Schwartz-Zippel per trial)
double miss_bound(int degree, const SampleCfg& cfg) {
    if (degree <= 0) return 0.0;
    double per = static_cast<double>(degree) / (2.0 * static_cast<double>(cfg.bound) + 1.0);
    if (per > 1.0) per = 1.0;
    return std::pow(per, cfg.trials);
}

}  // namespace

IndexResult index(const LieAlgebra& q, const SampleCfg& cfg) {
    const int n = q.dim();
    IndexResult res;
    if (n == 0) {
        res.symbolic = true;
        return res;
    }

    Rng rng = sub_rng(cfg, kSaltIndex);
    int best = -1;
    Vec bestw;
    for (int t = 0; t < cfg.trials; ++t) {
        Vec a = rng.rational_point(n, cfg.bound);
        int r = rank(q.structure_matrix(a));
        if (r > best) {
            best = r;
            bestw = std::move(a);
        }
    }

    if (auto_symbolic(q, cfg)) {
        if (n > cfg.symbolic_index_dim) throw std::domain_error("symbolic size limit");
        const int sr = symbolic_rank(q.structure_matrix_symbolic());
        // witness must attain the certified rank; a random point misses the
        // regular locus with probability O(n/bound), so this ends fast
        int guard = 0;
        while (best < sr) {
            if (++guard > 4096) throw std::logic_error("index: cannot sample a regular point");
            Vec a = rng.rational_point(n, cfg.bound);
            int r = rank(q.structure_matrix(a));
            if (r > best) {
                best = r;
                bestw = std::move(a);
            }
        }
        res.symbolic = true;
        res.max_rank = sr;
        res.witness = std::move(bestw);
        res.index = n - sr;
        return res;
    }

    res.max_rank = best;
    res.witness = std::move(bestw);
    res.index = n - best;
    // the generic-rank locus is the complement of one nonzero minor of B(x),
    // a polynomial of degree <= n
    res.failure_bound = miss_bound(n, cfg);
    return res;
}

Subspace stabiliser(const LieAlgebra& q, const Vec& alpha) {
    RankKernel rk = rank_kernel(q.structure_matrix(alpha));
    return span_of(q.dim(), rk.kernel);
}

bool is_conical_orbit(const LieAlgebra& q, const Vec& alpha) {
    // the orbit is conical iff alpha lies in its own tangent space im B(alpha),
    // which for skew B is the orthogonal of ker B(alpha)
    for (const Vec& u : stabiliser(q, alpha).basis) {
        Rat pairing(0);
        for (std::size_t i = 0; i < u.size(); ++i) pairing += alpha[i] * u[i];
        if (pairing != 0) return false;
    }
    return true;
}

namespace {

RatMat bordered_structure_matrix(const LieAlgebra& q, const Vec& alpha) {
    const std::size_t n = alpha.size();
    RatMat b = q.structure_matrix(alpha);
    RatMat m(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = b.at(i, j);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, n) = alpha[i];
        m.at(n, i) = -alpha[i];
    }
    return m;
}

}  // namespace

bool is_contact_form(const LieAlgebra& q, const Vec& alpha) {
    const int n = q.dim();
    if (n % 2 == 0) throw std::domain_error("contact undefined in even dimension");
    const Rat pf = pfaffian(bordered_structure_matrix(q, alpha));

    // cross-check against the direct characterisation when rank is maximal:
    // alpha is contact iff it does not vanish on the kernel line of B(alpha)
    RankKernel rk = rank_kernel(q.structure_matrix(alpha));
    if (rk.rank == n - 1) {
        Rat pairing(0);
        for (int i = 0; i < n; ++i) pairing += alpha[i] * rk.kernel[0][i];
        if ((pairing != 0) != (pf != 0))
            throw std::logic_error("contact form: Pfaffian and kernel tests disagree");
    }
    return pf != 0;
}

ContactResult is_contact_algebra(const LieAlgebra& q, const SampleCfg& cfg) {
    const int n = q.dim();
    if (n % 2 == 0) throw std::domain_error("contact undefined in even dimension");

    ContactResult res;
    Rng rng = sub_rng(cfg, kSaltContact);
    for (int t = 0; t < cfg.trials; ++t) {
        Vec a = rng.rational_point(n, cfg.bound);
        Rat pf = pfaffian(bordered_structure_matrix(q, a));
        if (pf != 0) {
            res.contact = true;
            res.certified = true;
            res.witness = std::move(a);
            res.certificate = std::move(pf);
            res.detail = "contact form found";
            return res;
        }
    }

    const bool symbolic_ok = n <= cfg.symbolic_poly_dim;
    if (cfg.mode == Mode::symbolic && !symbolic_ok) throw std::domain_error("symbolic size limit");
    if (cfg.mode != Mode::probabilistic && symbolic_ok) {
        MPoly f = contact_semi_invariant(q, cfg);
        if (f.is_zero()) {
            res.contact = false;
            res.certified = true;
            res.detail = "contact semi-invariant is identically zero";
            return res;
        }
        // nonzero semi-invariant: a contact form exists, keep sampling
        int guard = 0;
        for (;;) {
            if (++guard > 4096) throw std::logic_error("contact: cannot hit nonzero Pfaffian");
            Vec a = rng.rational_point(n, cfg.bound);
            Rat pf = pfaffian(bordered_structure_matrix(q, a));
            if (pf != 0) {
                res.contact = true;
                res.certified = true;
                res.witness = std::move(a);
                res.certificate = std::move(pf);
                res.detail = "contact form found after symbolic certificate";
                return res;
            }
        }
    }

    res.contact = false;
    res.certified = false;
    // the bordered Pfaffian has degree (dim+1)/2
    res.failure_bound = miss_bound((n + 1) / 2, cfg);
    res.detail = "no contact form found in " + std::to_string(cfg.trials) + " trials";
    return res;
}

bool is_stable_point(const LieAlgebra& q, const Vec& alpha) {
    const Subspace st = stabiliser(q, alpha);
    std::vector<Vec> gens;
    for (int i = 0; i < q.dim(); ++i) {
        Vec e(q.dim(), Rat(0));
        e[i] = 1;
        for (const Vec& u : st.basis) gens.push_back(q.bracket(e, u));
    }
    const Subspace bracket_span = span_of(q.dim(), gens);
    return intersect(st, bracket_span).dim() == 0;
}

StabiliserClass classify_generic_stabiliser(const LieAlgebra& q, const SampleCfg& cfg) {
    IndexResult ir = index(q, cfg);
    if (ir.index != 1) throw std::domain_error("classification requires index 1");
    const Subspace st = stabiliser(q, ir.witness);
    if (st.dim() != 1) throw std::logic_error("classification: witness is not regular");

    const Vec& u = st.basis[0];
    const RatMat ad = q.ad_matrix(u);
    const UPoly m = minimal_polynomial(ad);

    StabiliserClass out;
    out.minimal_polynomial = upoly_str(m);
    bool zero_map = true;
    for (std::size_t i = 0; i < ad.rows() && zero_map; ++i)
        for (std::size_t j = 0; j < ad.cols(); ++j)
            if (ad.at(i, j) != 0) {
                zero_map = false;
                break;
            }
    out.central = zero_map;
    if (upoly_is_power_of_t(m) && upoly_deg(m) >= 2)
        out.kind = "nilpotent";
    else if (upoly_is_squarefree(m))
        out.kind = "semisimple";
    else
        out.kind = "mixed";
    return out;
}

namespace {

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    for (;;) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

}  // namespace

MPoly fundamental_semi_invariant(const LieAlgebra& q, const SampleCfg& cfg) {
    const int n = q.dim();
    if (n > cfg.symbolic_poly_dim) throw std::domain_error("symbolic size limit");
    const SymMat b = q.structure_matrix_symbolic();
    const int generic_rank = symbolic_rank(b);
    if (generic_rank == 0) return MPoly::constant(n, 1);

    const auto subsets = combinations(n, generic_rank);
    if (subsets.size() > 500) throw std::domain_error("symbolic size limit");

    std::vector<MPoly> pfs(subsets.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t s = 0; s < subsets.size(); ++s) {
        const auto& idx = subsets[s];
        SymMat sub(idx.size(), std::vector<MPoly>(idx.size()));
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = b[idx[i]][idx[j]];
        pfs[s] = symbolic_pfaffian(sub);
    }
    return canonical_scale(poly_gcd(pfs));
}

MPoly contact_semi_invariant(const LieAlgebra& q, const SampleCfg& cfg) {
    const int n = q.dim();
    if (n % 2 == 0) throw std::domain_error("contact undefined in even dimension");
    if (n > cfg.symbolic_poly_dim) throw std::domain_error("symbolic size limit");

    const SymMat b = q.structure_matrix_symbolic();
    SymMat m(n + 1, std::vector<MPoly>(n + 1, MPoly(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = b[i][j];
    for (int i = 0; i < n; ++i) {
        m[i][n] = MPoly::var(n, i);
        m[n][i] = MPoly::var(n, i, Rat(-1));
    }
    return canonical_scale(symbolic_pfaffian(m));
}

CoadjointReport analyze(const LieAlgebra& q, const SampleCfg& cfg) {
    CoadjointReport rep;
    rep.dim = q.dim();
    rep.index = index(q, cfg);

    if (q.dim() % 2 == 1) {
        rep.contact = is_contact_algebra(q, cfg);
    } else {
        rep.contact.contact = false;
        rep.contact.certified = true;
        rep.contact.detail = "even dimension";
    }

    if (q.dim() > 0) {
        rep.generic_conical = is_conical_orbit(q, rep.index.witness);
        rep.stable = is_stable_point(q, rep.index.witness);
    }
    if (rep.index.index == 1) rep.stabiliser_class = classify_generic_stabiliser(q, cfg);

    if (cfg.mode != Mode::probabilistic && q.dim() <= cfg.symbolic_poly_dim && q.dim() > 0) {
        rep.p = fundamental_semi_invariant(q, cfg);
        rep.codim2 = rep.p->is_constant();
        if (q.dim() % 2 == 1) rep.f = contact_semi_invariant(q, cfg);
    }
    return rep;
}

}  // namespace lie
