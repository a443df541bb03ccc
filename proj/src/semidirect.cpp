#include <lie/semidirect.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lie {

namespace {

constexpr std::uint64_t kSaltGamma = 2;
constexpr std::uint64_t kSaltBeta = 3;

Rng sub_rng(const SampleCfg& cfg, std::uint64_t salt) { return Rng(cfg.seed).fork(salt); }

// sparse row-major view of a matrix with mostly zero entries
using SparseRows = std::vector<std::vector<std::pair<std::size_t, Rat>>>;

SparseRows sparse_rows(const RatMat& m) {
    SparseRows rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) rows[i].push_back({j, m.at(i, j)});
    return rows;
}

// acc += c * a*b for sparse a, b; acc dense
void add_sparse_product(RatMat& acc, const SparseRows& a, const SparseRows& b, const Rat& c) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (const auto& [k, ca] : a[i])
            for (const auto& [j, cb] : b[k]) acc.at(i, j) += c * ca * cb;
}

}  // namespace

SemidirectDecomposition make_semidirect(const LieAlgebra& q, const Splitting& s) {
    const int n = q.dim();
    Splitting sp = s;
    std::sort(sp.levi.begin(), sp.levi.end());
    std::sort(sp.ideal.begin(), sp.ideal.end());

    std::vector<int> all = sp.levi;
    all.insert(all.end(), sp.ideal.begin(), sp.ideal.end());
    std::sort(all.begin(), all.end());
    bool partition = static_cast<int>(all.size()) == n;
    for (int i = 0; i < static_cast<int>(all.size()) && partition; ++i) partition = all[i] == i;
    if (!partition) throw std::domain_error("splitting does not partition the basis");

    std::vector<char> in_ideal(n, 0);
    for (int v : sp.ideal) in_ideal[v] = 1;

    for (std::size_t a = 0; a < sp.levi.size(); ++a)
        for (std::size_t b = a + 1; b < sp.levi.size(); ++b)
            for (const Term& t : q.bracket_basis(sp.levi[a], sp.levi[b]))
                if (in_ideal[t.k]) throw std::domain_error("levi is not a subalgebra");

    for (std::size_t a = 0; a < sp.ideal.size(); ++a)
        for (std::size_t b = a + 1; b < sp.ideal.size(); ++b)
            if (!q.bracket_basis(sp.ideal[a], sp.ideal[b]).empty())
                throw std::domain_error("ideal is not abelian");

    for (int l : sp.levi)
        for (int v : sp.ideal)
            for (const Term& t : q.bracket_basis(l, v))
                if (!in_ideal[t.k]) throw std::domain_error("ideal is not an ideal");

    SemidirectDecomposition d;
    d.q = q;
    d.split = sp;

    std::vector<Vec> levi_gens;
    for (int l : sp.levi) {
        Vec e(n, Rat(0));
        e[l] = 1;
        levi_gens.push_back(std::move(e));
    }
    d.levi = subalgebra(q, span_of(n, levi_gens));

    std::vector<int> ideal_pos(n, -1);
    for (std::size_t b = 0; b < sp.ideal.size(); ++b) ideal_pos[sp.ideal[b]] = static_cast<int>(b);
    const std::size_t nv = sp.ideal.size();
    for (int l : sp.levi) {
        RatMat rho(nv, nv);
        for (std::size_t b = 0; b < nv; ++b)
            for (const Term& t : q.bracket_basis(l, sp.ideal[b]))
                rho.at(ideal_pos[t.k], b) = t.c;
        d.action.push_back(std::move(rho));
    }
    return d;
}

SemidirectDecomposition build_semidirect(const LieAlgebra& l, const std::vector<RatMat>& rho,
                                         const std::vector<std::string>& ideal_labels) {
    const int nl = l.dim();
    const std::size_t nv = ideal_labels.size();
    if (rho.size() != static_cast<std::size_t>(nl))
        throw std::domain_error("one action matrix per levi basis vector required");
    for (const RatMat& r : rho)
        if (r.rows() != nv || r.cols() != nv) throw std::domain_error("action matrix shape mismatch");

    std::vector<SparseRows> srho;
    srho.reserve(rho.size());
    for (const RatMat& r : rho) srho.push_back(sparse_rows(r));

    for (int i = 0; i < nl; ++i) {
        for (int j = i + 1; j < nl; ++j) {
            RatMat want(nv, nv);
            for (const Term& t : l.bracket_basis(i, j))
                for (std::size_t a = 0; a < nv; ++a)
                    for (const auto& [b, c] : srho[t.k][a]) want.at(a, b) += t.c * c;
            add_sparse_product(want, srho[j], srho[i], Rat(1));
            add_sparse_product(want, srho[i], srho[j], Rat(-1));
            for (std::size_t a = 0; a < nv; ++a)
                for (std::size_t b = 0; b < nv; ++b)
                    if (want.at(a, b) != 0)
                        throw std::domain_error("not a representation at (" + std::to_string(i) +
                                                "," + std::to_string(j) + ")");
        }
    }

    std::vector<std::string> labels = l.labels();
    labels.insert(labels.end(), ideal_labels.begin(), ideal_labels.end());

    std::vector<BracketEntry> entries;
    for (int i = 0; i < nl; ++i)
        for (int j = i + 1; j < nl; ++j) {
            TermList ts = l.bracket_basis(i, j);
            if (!ts.empty()) entries.push_back({i, j, std::move(ts)});
        }
    for (int i = 0; i < nl; ++i)
        for (std::size_t b = 0; b < nv; ++b) {
            TermList ts;
            for (std::size_t a = 0; a < nv; ++a)
                if (rho[i].at(a, b) != 0)
                    ts.push_back({nl + static_cast<int>(a), rho[i].at(a, b)});
            if (!ts.empty()) entries.push_back({i, nl + static_cast<int>(b), std::move(ts)});
        }

    SemidirectDecomposition d;
    d.q = LieAlgebra(std::move(labels), entries);
    for (int i = 0; i < nl; ++i) d.split.levi.push_back(i);
    for (std::size_t b = 0; b < nv; ++b) d.split.ideal.push_back(nl + static_cast<int>(b));
    d.levi = l;
    d.action = rho;
    return d;
}

SemidirectDecomposition restrict_levi(const SemidirectDecomposition& d, const Subspace& s,
                                      std::vector<std::string> labels) {
    LieAlgebra sub = subalgebra(d.levi, s, std::move(labels));
    const std::size_t nv = d.split.ideal.size();
    std::vector<RatMat> rho;
    for (const Vec& w : s.basis) {
        RatMat m(nv, nv);
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == 0) continue;
            for (std::size_t a = 0; a < nv; ++a)
                for (std::size_t b = 0; b < nv; ++b) m.at(a, b) += w[i] * d.action[i].at(a, b);
        }
        rho.push_back(std::move(m));
    }
    std::vector<std::string> ideal_labels;
    for (int v : d.split.ideal) ideal_labels.push_back(d.q.labels()[v]);
    return build_semidirect(sub, rho, ideal_labels);
}

Vec levi_on_dual(const SemidirectDecomposition& d, const Vec& x, const Vec& gamma) {
    const std::size_t nv = gamma.size();
    Vec out(nv, Rat(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        const RatMat& r = d.action[i];
        for (std::size_t a = 0; a < nv; ++a) {
            if (gamma[a] == 0) continue;
            for (std::size_t b = 0; b < nv; ++b) out[b] -= x[i] * r.at(a, b) * gamma[a];
        }
    }
    return out;
}

RatMat orbit_matrix(const SemidirectDecomposition& d, const Vec& gamma) {
    const std::size_t nl = d.split.levi.size();
    const std::size_t nv = gamma.size();
    RatMat m(nl, nv);
    for (std::size_t i = 0; i < nl; ++i) {
        Vec x(nl, Rat(0));
        x[i] = 1;
        Vec row = levi_on_dual(d, x, gamma);
        for (std::size_t b = 0; b < nv; ++b) m.at(i, b) = row[b];
    }
    return m;
}

namespace {

// generic point of V*: maximize the orbit rank over cfg.trials samples
std::pair<Vec, int> generic_dual_point(const SemidirectDecomposition& d, const SampleCfg& cfg) {
    Rng rng = sub_rng(cfg, kSaltGamma);
    const std::size_t nv = d.split.ideal.size();
    Vec best;
    int best_rank = -1;
    for (int t = 0; t < cfg.trials; ++t) {
        Vec g = rng.rational_point(nv, cfg.bound);
        int r = rank(orbit_matrix(d, g));
        if (r > best_rank) {
            best_rank = r;
            best = std::move(g);
        }
    }
    return {best, best_rank};
}

Subspace dual_stabiliser_space(const SemidirectDecomposition& d, const Vec& gamma) {
    RankKernel rk = rank_kernel(transpose(orbit_matrix(d, gamma)));
    return span_of(static_cast<int>(d.split.levi.size()), rk.kernel);
}

}  // namespace

RaisResult rais_check(const SemidirectDecomposition& d, const SampleCfg& cfg) {
    RaisResult res;
    res.lhs = index(d.q, cfg).index;
    res.dim_v = static_cast<int>(d.split.ideal.size());

    auto [gamma, orbit_rank] = generic_dual_point(d, cfg);
    res.gamma = gamma;
    res.dim_orbit = orbit_rank;

    LieAlgebra stab = subalgebra(d.levi, dual_stabiliser_space(d, gamma));
    res.ind_stab = index(stab, cfg).index;
    res.rhs = res.ind_stab + res.dim_v - res.dim_orbit;
    res.ok = res.lhs == res.rhs;
    return res;
}

Subspace line_normaliser(const SemidirectDecomposition& d, const Vec& gamma) {
    if (is_zero_vec(gamma)) throw std::domain_error("line normaliser of zero");
    std::size_t k = 0;
    while (gamma[k] == 0) ++k;

    RatMat m = orbit_matrix(d, gamma);
    // project each orbit row along gamma onto {v[k] = 0}; x normalises the
    // line iff the projected row combination vanishes
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Rat f = m.at(i, k) / gamma[k];
        if (f == 0) continue;
        for (std::size_t b = 0; b < m.cols(); ++b) m.at(i, b) -= f * gamma[b];
    }
    RankKernel rk = rank_kernel(transpose(m));
    return span_of(static_cast<int>(d.split.levi.size()), rk.kernel);
}

Vec principal_element(const LieAlgebra& h, const Vec& beta) {
    const RatMat b = h.structure_matrix(beta);
    if (rank(b) != h.dim()) throw std::domain_error("not a Frobenius point");
    Vec s = *solve(b, beta);
    if (h.coadjoint(s, beta) != beta)
        throw std::logic_error("principal element does not fix beta");
    return s;
}

SemidirectAnalysis analyze_semidirect(const SemidirectDecomposition& d, const SampleCfg& cfg) {
    if (index(d.q, cfg).index != 1)
        throw std::domain_error("semidirect analysis requires index 1");

    SemidirectAnalysis res;
    const int nv = static_cast<int>(d.split.ideal.size());
    auto [gamma, orbit_rank] = generic_dual_point(d, cfg);
    res.gamma = gamma;
    res.dim_orbit = orbit_rank;

    const Subspace stab_space = dual_stabiliser_space(d, gamma);
    LieAlgebra stab = subalgebra(d.levi, stab_space);
    res.ind_stab = index(stab, cfg).index;

    if (orbit_rank == nv - 1 && res.ind_stab == 0) {
        res.case_tag = 'A';
        // the orbit of gamma is conical iff gamma is tangent to it
        const RatMat om = orbit_matrix(d, gamma);
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < om.rows(); ++i) {
            Vec r(om.cols());
            for (std::size_t b = 0; b < om.cols(); ++b) r[b] = om.at(i, b);
            rows.push_back(std::move(r));
        }
        const bool conical = span_of(nv, rows).contains(gamma);
        res.contact = !conical;
        res.route = conical ? "codim-1 orbit is conical" : "codim-1 orbit is not conical";
        return res;
    }

    if (orbit_rank == nv && res.ind_stab == 1) {
        res.case_tag = 'B';
        const Subspace line_space = line_normaliser(d, gamma);
        if (!subspace_le(stab_space, line_space))
            throw std::logic_error("line normaliser does not contain the stabiliser");
        LieAlgebra line_alg = subalgebra(d.levi, line_space);
        res.ind_line = index(line_alg, cfg).index;

        const ContactResult stab_contact = is_contact_algebra(stab, cfg);
        if (!stab_contact.contact) {
            res.contact = res.ind_line == 0;
            res.route = res.contact ? "stabiliser not contact, line normaliser Frobenius"
                                    : "stabiliser not contact, line normaliser not Frobenius";
            return res;
        }
        if (res.ind_line != 0) {
            res.contact = true;
            res.route = "stabiliser contact, line normaliser not Frobenius";
            return res;
        }

        // tight case: extend a generic point of the stabiliser dual by zero,
        // take the principal element of the line normaliser at it and test
        // whether it fixes gamma
        const int dim_lg = stab.dim();
        const int dim_line = line_alg.dim();
        RatMat ct(dim_lg, dim_line);  // row r: coords of stab basis r in line basis
        for (int r = 0; r < dim_lg; ++r) {
            Vec coords = coords_in_rref(line_space.basis, stab_space.basis[r]);
            for (int c = 0; c < dim_line; ++c) ct.at(r, c) = coords[c];
        }
        const std::vector<Vec> ext_kernel = rank_kernel(ct).kernel;

        Rng rng = sub_rng(cfg, kSaltBeta);
        Vec s_line;
        bool have_s = false;
        for (int attempt = 0; attempt < 64 && !have_s; ++attempt) {
            Vec beta = rng.rational_point(dim_lg, cfg.bound);
            std::optional<Vec> ext = solve(ct, beta);
            if (!ext) throw std::logic_error("stabiliser dual point has no extension");
            Vec bt = *ext;
            if (attempt > 0) {
                for (const Vec& kv : ext_kernel) {
                    const Rat c(rng.int_in(cfg.bound));
                    for (int i = 0; i < dim_line; ++i) bt[i] += c * kv[i];
                }
            }
            if (rank(line_alg.structure_matrix(bt)) == dim_line) {
                s_line = principal_element(line_alg, bt);
                have_s = true;
            }
        }
        if (!have_s) throw std::logic_error("no Frobenius extension found");

        Vec s_levi(d.split.levi.size(), Rat(0));
        for (int j = 0; j < dim_line; ++j)
            for (std::size_t i = 0; i < s_levi.size(); ++i)
                s_levi[i] += s_line[j] * line_space.basis[j][i];
        res.principal = s_levi;

        const Vec moved = levi_on_dual(d, s_levi, gamma);
        res.contact = moved != gamma;
        res.route = res.contact ? "principal element moves gamma"
                                : "principal element fixes gamma";
        return res;
    }

    throw std::domain_error("semidirect analysis: orbit shape matches neither case");
}

}  // namespace lie
