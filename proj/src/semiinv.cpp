#include <lie/semiinv.hpp>

#include <lie/upoly.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lie {

namespace {

constexpr std::uint64_t kSaltJacobian = 5;

// exponent vectors of total degree d, lexicographically descending in the
// first differing variable; the enumeration order fixes coefficient layouts
void enumerate_monomials(int nvars, int d, int var, Exp& cur, std::vector<Exp>& out) {
    if (var == nvars - 1) {
        cur[var] = d;
        out.push_back(cur);
        cur[var] = 0;
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[var] = e;
        enumerate_monomials(nvars, d - e, var + 1, cur, out);
        cur[var] = 0;
    }
}

struct DegreeBasis {
    std::vector<Exp> monos;
    std::map<Exp, int, GradedLexLess> pos;
};

DegreeBasis monomial_basis(int nvars, int d) {
    DegreeBasis b;
    Exp cur(nvars, 0);
    enumerate_monomials(nvars, d, 0, cur, b.monos);
    for (std::size_t i = 0; i < b.monos.size(); ++i) b.pos[b.monos[i]] = static_cast<int>(i);
    return b;
}

// matrix of the derivation extending x -> [x_i, x] on the degree-d monomials
RatMat derivation_matrix(const LieAlgebra& q, int i, const DegreeBasis& basis) {
    const std::size_t n = basis.monos.size();
    RatMat a(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const Exp& m = basis.monos[col];
        for (int v = 0; v < q.dim(); ++v) {
            if (m[v] == 0) continue;
            for (const Term& t : q.bracket_basis(i, v)) {
                Exp target = m;
                --target[v];
                ++target[t.k];
                a.at(basis.pos.at(target), col) += Rat(m[v]) * t.c;
            }
        }
    }
    return a;
}

MPoly poly_from_vec(const Vec& coeffs, const DegreeBasis& basis, int nvars) {
    MPoly p(nvars);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) p.add_term(basis.monos[i], coeffs[i]);
    return p;
}

Vec vec_from_poly(const MPoly& p, const DegreeBasis& basis) {
    Vec v(basis.monos.size(), Rat(0));
    for (const auto& [e, c] : p.terms()) v[basis.pos.at(e)] = c;
    return v;
}

struct WeightedSpace {
    std::vector<Vec> basis;  // reduced echelon rows in monomial coordinates
    Vec weight;
};

// all products of the given generators with total degree exactly d
void degree_d_products(const std::vector<SemiInvariant>& gens, int d, std::size_t from, MPoly cur,
                       int cur_deg, std::vector<MPoly>& out) {
    if (cur_deg == d) {
        out.push_back(cur);
        return;
    }
    for (std::size_t g = from; g < gens.size(); ++g)
        if (cur_deg + gens[g].degree <= d)
            degree_d_products(gens, d, g, cur * gens[g].poly, cur_deg + gens[g].degree, out);
}

}  // namespace

std::vector<SemiInvariant> semi_invariants_up_to_degree(const LieAlgebra& q, int max_degree) {
    if (max_degree < 1) throw std::domain_error("positive degree bound required");
    const int n = q.dim();
    std::vector<SemiInvariant> found;
    const std::vector<Vec> derived = q.derived_subalgebra().basis;

    for (int d = 1; d <= max_degree; ++d) {
        const DegreeBasis basis = monomial_basis(n, d);
        const std::size_t nm = basis.monos.size();

        std::vector<RatMat> act;
        act.reserve(n);
        for (int i = 0; i < n; ++i) act.push_back(derivation_matrix(q, i, basis));

        // common kernel of the derived algebra's derivations
        std::vector<Vec> start;
        if (derived.empty()) {
            for (std::size_t i = 0; i < nm; ++i) {
                Vec e(nm, Rat(0));
                e[i] = 1;
                start.push_back(std::move(e));
            }
        } else {
            RatMat stacked(derived.size() * nm, nm);
            for (std::size_t w = 0; w < derived.size(); ++w) {
                RatMat aw(nm, nm);
                for (int i = 0; i < n; ++i) {
                    if (derived[w][i] == 0) continue;
                    for (std::size_t r = 0; r < nm; ++r)
                        for (std::size_t c = 0; c < nm; ++c)
                            aw.at(r, c) += derived[w][i] * act[i].at(r, c);
                }
                for (std::size_t r = 0; r < nm; ++r)
                    for (std::size_t c = 0; c < nm; ++c) stacked.at(w * nm + r, c) = aw.at(r, c);
            }
            start = rank_kernel(stacked).kernel;
        }
        if (start.empty()) continue;

        // split into joint eigenspaces, one basis derivation at a time
        std::vector<WeightedSpace> spaces = {{start, Vec(n, Rat(0))}};
        for (int i = 0; i < n; ++i) {
            std::vector<WeightedSpace> next;
            for (WeightedSpace& sp : spaces) {
                const int k = static_cast<int>(sp.basis.size());
                // restriction of the i-th derivation to the invariant space
                RatMat rest(k, k);
                bool inside = true;
                for (int r = 0; r < k && inside; ++r) {
                    Vec img = mat_vec(act[i], sp.basis[r]);
                    try {
                        Vec coords = coords_in_rref(sp.basis, img);
                        for (int c = 0; c < k; ++c) rest.at(c, r) = coords[c];
                    } catch (const std::domain_error&) {
                        inside = false;
                    }
                }
                if (!inside)
                    throw std::logic_error("derivation does not preserve the candidate space");

                UPoly mp = minimal_polynomial(rest);
                RootReport roots = rational_roots(mp);
                if (upoly_deg(roots.leftover) >= 1)
                    throw std::domain_error("irrational weight unsupported: " +
                                            upoly_str(roots.leftover));
                for (const auto& [root, mult] : roots.roots) {
                    RatMat shifted = rest;
                    for (int t = 0; t < k; ++t) shifted.at(t, t) -= root;
                    std::vector<Vec> eig = rank_kernel(shifted).kernel;
                    if (eig.empty()) continue;
                    WeightedSpace ws;
                    ws.weight = sp.weight;
                    ws.weight[i] = root;
                    for (const Vec& ev : eig) {
                        Vec ambient(nm, Rat(0));
                        for (int c = 0; c < k; ++c)
                            if (ev[c] != 0)
                                for (std::size_t mpos = 0; mpos < nm; ++mpos)
                                    ambient[mpos] += ev[c] * sp.basis[c][mpos];
                        ws.basis.push_back(std::move(ambient));
                    }
                    ws.basis = span_of(static_cast<int>(nm), ws.basis).basis;
                    next.push_back(std::move(ws));
                }
            }
            spaces = std::move(next);
            if (spaces.empty()) break;
        }

        // filter out products of earlier generators
        std::vector<MPoly> prods;
        degree_d_products(found, d, 0, MPoly::constant(n, Rat(1)), 0, prods);
        std::vector<Vec> prod_vecs;
        for (const MPoly& p : prods)
            if (!p.is_zero() && p.degree() == d) prod_vecs.push_back(vec_from_poly(p, basis));
        Subspace known = span_of(static_cast<int>(nm), prod_vecs);

        for (const WeightedSpace& sp : spaces) {
            for (const Vec& v : sp.basis) {
                if (known.contains(v)) continue;
                SemiInvariant si;
                si.poly = canonical_scale(poly_from_vec(v, basis, n));
                si.weight = sp.weight;
                si.degree = d;
                found.push_back(std::move(si));
                known = subspace_sum(known, span_of(static_cast<int>(nm), {v}));
            }
        }
    }
    return found;
}

WeightRelation weight_relation_and_generator(const std::vector<SemiInvariant>& gens) {
    const std::size_t m = gens.size();
    if (m == 0) throw std::domain_error("weight relation is not one-dimensional");
    const std::size_t n = gens[0].weight.size();

    RatMat cols(n, m);  // columns are the weights
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t i = 0; i < n; ++i) cols.at(i, g) = gens[g].weight[i];
    std::vector<Vec> kern = rank_kernel(cols).kernel;
    if (kern.size() != 1) throw std::domain_error("weight relation is not one-dimensional");

    Vec rel = kern[0];
    Int den(1);
    for (const Rat& c : rel) den = lcm(den, c.get_den());
    std::vector<Int> ic;
    Int content(0);
    for (const Rat& c : rel) {
        Rat t = c * Rat(den);
        ic.push_back(t.get_num());
        content = gcd(content, ic.back());
    }
    for (Int& c : ic) c /= content;

    // orient so the numerator side carries the larger total degree
    long pos_deg = 0, neg_deg = 0;
    for (std::size_t g = 0; g < m; ++g) {
        const long w = static_cast<long>(gens[g].degree) * ic[g].get_si();
        if (ic[g] > 0)
            pos_deg += w;
        else
            neg_deg -= w;
    }
    if (neg_deg > pos_deg)
        for (Int& c : ic) c = -c;

    WeightRelation out;
    out.coeffs = ic;
    const int nv = gens[0].poly.nvars();
    out.num_poly = MPoly::constant(nv, Rat(1));
    out.den_poly = MPoly::constant(nv, Rat(1));
    for (std::size_t g = 0; g < m; ++g) {
        if (ic[g] == 0) continue;
        const long e = std::abs(ic[g].get_si());
        if (ic[g] > 0) {
            out.numerator.push_back(static_cast<int>(g));
            for (long t = 0; t < e; ++t) out.num_poly = out.num_poly * gens[g].poly;
        } else {
            out.denominator.push_back(static_cast<int>(g));
            for (long t = 0; t < e; ++t) out.den_poly = out.den_poly * gens[g].poly;
        }
    }
    out.invariant_product = out.numerator.empty() || out.denominator.empty();
    return out;
}

TruncationResult canonical_truncation(const LieAlgebra& q, int max_degree) {
    const std::vector<SemiInvariant> gens = semi_invariants_up_to_degree(q, max_degree);
    const int n = q.dim();
    std::vector<Vec> weights;
    for (const SemiInvariant& s : gens)
        if (std::find(weights.begin(), weights.end(), s.weight) == weights.end())
            weights.push_back(s.weight);

    TruncationResult out;
    out.generator_count = static_cast<int>(gens.size());
    if (weights.empty()) {
        std::vector<Vec> id_rows;
        for (int i = 0; i < n; ++i) {
            Vec e(n, Rat(0));
            e[i] = 1;
            id_rows.push_back(std::move(e));
        }
        out.space = span_of(n, id_rows);
    } else {
        RatMat w(weights.size(), n);
        for (std::size_t r = 0; r < weights.size(); ++r)
            for (int c = 0; c < n; ++c) w.at(r, c) = weights[r][c];
        out.space = span_of(n, rank_kernel(w).kernel);
    }
    out.algebra = subalgebra(q, out.space);

    // the truncation must be an ideal with abelian quotient
    for (int i = 0; i < n; ++i) {
        Vec e(n, Rat(0));
        e[i] = 1;
        for (const Vec& u : out.space.basis)
            if (!out.space.contains(q.bracket(e, u)))
                throw std::logic_error("truncation is not an ideal");
    }
    for (const Vec& v : q.derived_subalgebra().basis)
        if (!out.space.contains(v)) throw std::logic_error("truncation quotient is not abelian");
    return out;
}

bool algebraic_independence(const std::vector<SemiInvariant>& gens, const SampleCfg& cfg) {
    if (gens.empty()) return true;
    const std::size_t m = gens.size();
    const std::size_t n = gens[0].poly.nvars();
    if (m > n) return false;

    Rng rng = Rng(cfg.seed).fork(kSaltJacobian);
    std::vector<std::vector<MPoly>> jac(m);
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t v = 0; v < n; ++v)
            jac[g].push_back(gens[g].poly.derivative(static_cast<int>(v)));

    for (int t = 0; t < cfg.trials; ++t) {
        const Vec pt = rng.rational_point(n, cfg.bound);
        RatMat j(m, n);
        for (std::size_t g = 0; g < m; ++g)
            for (std::size_t v = 0; v < n; ++v) j.at(g, v) = jac[g][v].eval(pt);
        if (rank(j) == static_cast<int>(m)) return true;
    }
    return false;
}

}  // namespace lie
