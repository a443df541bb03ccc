#include <lie/families.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace lie {

namespace {

void append_term(std::map<int, Rat>& acc, int k, const Rat& c) {
    acc[k] += c;
}

TermList to_terms(const std::map<int, Rat>& acc) {
    TermList out;
    for (const auto& [k, c] : acc)
        if (c != 0) out.push_back({k, c});
    return out;
}

std::string num_label(const std::string& prefix, int i, int j) {
    return prefix + std::to_string(i + 1) + std::to_string(j + 1);
}

}  // namespace

LieAlgebra heisenberg(int n) {
    if (n < 1) throw std::domain_error("heisenberg: n >= 1 required");
    std::vector<std::string> labels;
    if (n == 1) {
        labels = {"x", "y", "z"};
    } else {
        for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
        for (int i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
        labels.push_back("z");
    }
    std::vector<BracketEntry> entries;
    for (int i = 0; i < n; ++i) entries.push_back({i, n + i, {{2 * n, Rat(1)}}});
    return LieAlgebra(std::move(labels), entries);
}

LieAlgebra sl2() {
    std::vector<BracketEntry> entries = {
        {0, 1, {{1, Rat(2)}}},    // [h,e] = 2e
        {0, 2, {{2, Rat(-2)}}},   // [h,f] = -2f
        {1, 2, {{0, Rat(1)}}},    // [e,f] = h
    };
    return LieAlgebra({"h", "e", "f"}, entries);
}

namespace {

std::vector<RatMat> gl_basis_matrices(int n) {
    std::vector<RatMat> mats;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RatMat m(n, n);
            m.at(i, j) = 1;
            mats.push_back(std::move(m));
        }
    return mats;
}

std::vector<RatMat> sl_basis_matrices(int n) {
    std::vector<RatMat> mats;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            RatMat m(n, n);
            m.at(i, j) = 1;
            mats.push_back(std::move(m));
        }
    for (int k = 0; k + 1 < n; ++k) {
        RatMat m(n, n);
        m.at(k, k) = 1;
        m.at(k + 1, k + 1) = -1;
        mats.push_back(std::move(m));
    }
    return mats;
}

std::vector<std::string> sl_basis_labels(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) labels.push_back(num_label("E", i, j));
    for (int k = 0; k + 1 < n; ++k) labels.push_back("d" + std::to_string(k + 1));
    return labels;
}

}  // namespace

LieAlgebra gl(int n) {
    if (n < 1) throw std::domain_error("gl: n >= 1 required");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) labels.push_back(num_label("E", i, j));
    return from_matrices(gl_basis_matrices(n), labels);
}

LieAlgebra sl(int n) {
    if (n < 2) throw std::domain_error("sl: n >= 2 required");
    return from_matrices(sl_basis_matrices(n), sl_basis_labels(n));
}

LieAlgebra borel_sl3() {
    auto E = [](int i, int j) {
        RatMat m(3, 3);
        m.at(i, j) = 1;
        return m;
    };
    RatMat h(3, 3), h1(3, 3);
    h.at(0, 0) = 1;
    h.at(1, 1) = -2;
    h.at(2, 2) = 1;
    h1.at(0, 0) = 1;
    h1.at(2, 2) = -1;
    return from_matrices({h, h1, E(0, 1), E(1, 2), E(0, 2)}, {"h", "h1", "x", "y", "z"});
}

LieAlgebra sp4_parabolic() {
    auto E = [](int i, int j) {
        RatMat m(4, 4);
        m.at(i, j) = 1;
        return m;
    };
    RatMat t1(4, 4), t2(4, 4);
    t1.at(0, 0) = 1;
    t1.at(3, 3) = -1;
    t2.at(1, 1) = 1;
    t2.at(2, 2) = -1;
    RatMat n1 = E(0, 2), n2 = E(0, 1), z = E(0, 3);
    n1.at(1, 3) = 1;   // n1 = E13 + E24
    n2.at(2, 3) = -1;  // n2 = E12 - E34
    return from_matrices({t1, t2, E(1, 2), E(2, 1), n1, n2, z},
                         {"t1", "t2", "e23", "e32", "n1", "n2", "z"});
}

LieAlgebra seaweed_sl(int n, const std::vector<int>& top, const std::vector<int>& bottom) {
    auto check = [n](const std::vector<int>& comp) {
        int s = 0;
        for (int c : comp) {
            if (c <= 0) throw std::domain_error("composition parts must be positive");
            s += c;
        }
        if (s != n) throw std::domain_error("composition does not sum to n");
    };
    check(top);
    check(bottom);
    auto block_of = [](const std::vector<int>& comp, int i) {
        int acc = 0, blk = 0;
        for (int c : comp) {
            acc += c;
            if (i < acc) return blk;
            ++blk;
        }
        return blk;
    };

    std::vector<RatMat> mats;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (block_of(top, i) <= block_of(top, j) && block_of(bottom, i) >= block_of(bottom, j)) {
                RatMat m(n, n);
                m.at(i, j) = 1;
                mats.push_back(std::move(m));
                labels.push_back(num_label("E", i, j));
            }
        }
    for (int k = 0; k + 1 < n; ++k) {
        RatMat m(n, n);
        m.at(k, k) = 1;
        m.at(k + 1, k + 1) = -1;
        mats.push_back(std::move(m));
        labels.push_back("d" + std::to_string(k + 1));
    }
    return from_matrices(mats, labels);
}

LieAlgebra takiff(const LieAlgebra& base, int k) {
    if (k < 1) throw std::domain_error("takiff: k >= 1 required");
    const int n = base.dim();
    std::vector<std::string> labels;
    for (int p = 0; p < k; ++p)
        for (int i = 0; i < n; ++i) {
            std::string l = base.labels()[i];
            if (p > 0) l += "." + std::to_string(p);
            labels.push_back(l);
        }
    std::vector<BracketEntry> entries;
    for (int p = 0; p < k; ++p)
        for (int q = p; q < k; ++q) {
            if (p + q >= k) continue;
            for (int i = 0; i < n; ++i) {
                const int jstart = (p == q) ? i + 1 : 0;
                for (int j = jstart; j < n; ++j) {
                    TermList ts = base.bracket_basis(i, j);
                    if (ts.empty()) continue;
                    TermList shifted;
                    for (const Term& t : ts) shifted.push_back({(p + q) * n + t.k, t.c});
                    entries.push_back({p * n + i, q * n + j, std::move(shifted)});
                }
            }
        }
    return LieAlgebra(std::move(labels), entries);
}

LieAlgebra k_two_characters(const Rat& lambda, const Rat& mu) {
    std::vector<BracketEntry> entries;
    if (lambda != 0) entries.push_back({0, 1, {{1, lambda}}});
    if (mu != 0) entries.push_back({0, 2, {{2, mu}}});
    return LieAlgebra({"t", "x", "y"}, entries);
}

namespace {

std::vector<std::string> copy_labels(const std::string& stem, int copies, int dim_each,
                                     bool xy_style) {
    std::vector<std::string> out;
    for (int c = 1; c <= copies; ++c)
        for (int i = 0; i < dim_each; ++i) {
            if (xy_style) {
                std::string base = (i == 0) ? "x" : "y";
                out.push_back(copies == 1 ? base : base + std::to_string(c));
            } else {
                out.push_back(stem + std::to_string(c) + "_" + std::to_string(i + 1));
            }
        }
    return out;
}

// rho for each basis matrix acting block-diagonally on `copies` copies
std::vector<RatMat> diagonal_action(const std::vector<RatMat>& mats, int copies) {
    std::vector<RatMat> rho;
    const std::size_t n = mats.empty() ? 0 : mats[0].rows();
    for (const RatMat& m : mats) {
        RatMat r(copies * n, copies * n);
        for (int c = 0; c < copies; ++c)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) r.at(c * n + i, c * n + j) = m.at(i, j);
        rho.push_back(std::move(r));
    }
    return rho;
}

}  // namespace

SemidirectDecomposition sl2_natural_copies(int m) {
    if (m < 1) throw std::domain_error("at least one copy required");
    // natural representation in the (h,e,f) basis
    RatMat h(2, 2), e(2, 2), f(2, 2);
    h.at(0, 0) = 1;
    h.at(1, 1) = -1;
    e.at(0, 1) = 1;
    f.at(1, 0) = 1;
    return build_semidirect(sl2(), diagonal_action({h, e, f}, m), copy_labels("v", m, 2, true));
}

SemidirectDecomposition sl_copies(int n, int m) {
    if (n == 2) return sl2_natural_copies(m);
    if (m < 1) throw std::domain_error("at least one copy required");
    return build_semidirect(sl(n), diagonal_action(sl_basis_matrices(n), m),
                            copy_labels("v", m, n, false));
}

SemidirectDecomposition sl_plus_torus_4copies(int n) {
    if (n < 0) throw std::domain_error("n >= 0 required");
    const int N = 2 * n + 2;
    // sl_N plus a 4-dimensional torus, assembled as one abstract table
    LieAlgebra s = sl(N);
    std::vector<std::string> labels = s.labels();
    for (int i = 1; i <= 4; ++i) labels.push_back("c" + std::to_string(i));
    std::vector<BracketEntry> entries;
    for (int i = 0; i < s.dim(); ++i)
        for (int j = i + 1; j < s.dim(); ++j) {
            TermList ts = s.bracket_basis(i, j);
            if (!ts.empty()) entries.push_back({i, j, std::move(ts)});
        }
    LieAlgebra levi(labels, entries);

    std::vector<RatMat> rho = diagonal_action(sl_basis_matrices(N), 4);
    for (int c = 0; c < 4; ++c) {
        RatMat scale(4 * N, 4 * N);
        for (int i = 0; i < N; ++i) scale.at(c * N + i, c * N + i) = 1;
        rho.push_back(std::move(scale));
    }
    return build_semidirect(levi, rho, copy_labels("v", 4, N, false));
}

namespace {

// gl_a + gl_b as an abstract table; coordinates: A_pq at p*a+q,
// B_pq at a*a + p*b+q
LieAlgebra gl_gl(int a, int b) {
    std::vector<std::string> labels;
    for (int p = 0; p < a; ++p)
        for (int q = 0; q < a; ++q) labels.push_back(num_label("A", p, q));
    for (int p = 0; p < b; ++p)
        for (int q = 0; q < b; ++q) labels.push_back(num_label("B", p, q));

    auto block_entries = [](int m, int base, std::vector<BracketEntry>& out) {
        auto idx = [m, base](int p, int q) { return base + p * m + q; };
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q)
                for (int r = 0; r < m; ++r)
                    for (int s = 0; s < m; ++s) {
                        const int i = idx(p, q), j = idx(r, s);
                        if (i >= j) continue;
                        std::map<int, Rat> acc;
                        if (q == r) append_term(acc, idx(p, s), Rat(1));
                        if (s == p) append_term(acc, idx(r, q), Rat(-1));
                        TermList ts = to_terms(acc);
                        if (!ts.empty()) out.push_back({i, j, std::move(ts)});
                    }
    };
    std::vector<BracketEntry> entries;
    block_entries(a, 0, entries);
    block_entries(b, a * a, entries);
    return LieAlgebra(std::move(labels), entries);
}

// (X,Y).w = Xw - wY on one copy of k^a tensor k^b laid out row-major
void tensor_action_into(RatMat& rho, int a, int b, int offset, bool left, int p, int q) {
    if (left) {
        // A_pq: w_{qj} -> w_{pj}
        for (int j = 0; j < b; ++j) rho.at(offset + p * b + j, offset + q * b + j) += 1;
    } else {
        // B_pq: w -> -w B_pq, w_{ip} -> -w_{iq}
        for (int i = 0; i < a; ++i) rho.at(offset + i * b + q, offset + i * b + p) += -1;
    }
}

// traceless subspace of gl_a + gl_b (off-diagonals and consecutive diagonal
// differences), as a subspace of gl_gl coordinates
Subspace s_levi_space(int a, int b) {
    const int n = a * a + b * b;
    std::vector<Vec> gens;
    for (int p = 0; p < a; ++p)
        for (int q = 0; q < a; ++q)
            if (p != q) {
                Vec v(n, Rat(0));
                v[p * a + q] = 1;
                gens.push_back(std::move(v));
            }
    for (int p = 0; p < b; ++p)
        for (int q = 0; q < b; ++q)
            if (p != q) {
                Vec v(n, Rat(0));
                v[a * a + p * b + q] = 1;
                gens.push_back(std::move(v));
            }
    std::vector<int> diag;
    for (int i = 0; i < a; ++i) diag.push_back(i * a + i);
    for (int i = 0; i < b; ++i) diag.push_back(a * a + i * b + i);
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        Vec v(n, Rat(0));
        v[diag[i]] = 1;
        v[diag[i + 1]] = -1;
        gens.push_back(std::move(v));
    }
    return span_of(n, gens);
}

// labels for a subalgebra whose reduced basis mixes standard vectors with
// difference vectors
std::vector<std::string> mixed_labels(const LieAlgebra& parent, const std::vector<Vec>& basis,
                                      const std::string& prefix) {
    std::vector<std::string> out;
    int counter = 0;
    for (const Vec& v : basis) {
        int nz = 0, pos = -1;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) {
                ++nz;
                pos = static_cast<int>(i);
            }
        if (nz == 1 && v[pos] == 1)
            out.push_back(parent.labels()[pos]);
        else
            out.push_back(prefix + std::to_string(++counter));
    }
    return out;
}

}  // namespace

SemidirectDecomposition q_family(int a, int b) {
    if (a < 0 || b < 0 || (a == 0 && b == 0)) throw std::domain_error("empty family parameters");
    LieAlgebra levi = gl_gl(a, b);
    const int nv = 2 * a * b;
    std::vector<RatMat> rho;
    for (int p = 0; p < a; ++p)
        for (int q = 0; q < a; ++q) {
            RatMat r(nv, nv);
            tensor_action_into(r, a, b, 0, true, p, q);
            tensor_action_into(r, a, b, a * b, true, p, q);
            rho.push_back(std::move(r));
        }
    for (int p = 0; p < b; ++p)
        for (int q = 0; q < b; ++q) {
            RatMat r(nv, nv);
            tensor_action_into(r, a, b, 0, false, p, q);
            tensor_action_into(r, a, b, a * b, false, p, q);
            rho.push_back(std::move(r));
        }
    std::vector<std::string> ideal_labels;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) ideal_labels.push_back(num_label("u", i, j));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) ideal_labels.push_back(num_label("v", i, j));
    return build_semidirect(levi, rho, ideal_labels);
}

SemidirectDecomposition q_bar(int a, int b) {
    SemidirectDecomposition full = q_family(a, b);
    const Subspace s = s_levi_space(a, b);
    return restrict_levi(full, s, mixed_labels(full.levi, s.basis, "d"));
}

namespace {

// step 1 of the r model: levi x| gl_a^ab with the adjoint action of the
// gl_a block and trivial gl_b action; levi passed in gl_gl coordinates
SemidirectDecomposition r_step1(const LieAlgebra& levi, const std::vector<Vec>& levi_basis, int a,
                                int b) {
    const int nm = a * a;
    std::vector<RatMat> rho;
    for (const Vec& w : levi_basis) {
        RatMat r(nm, nm);
        // adjoint action of the A component: [A_pq, E_rs] = d_qr E_ps - d_sp E_rq
        for (int p = 0; p < a; ++p)
            for (int q = 0; q < a; ++q) {
                const Rat& c = w[p * a + q];
                if (c == 0) continue;
                for (int s = 0; s < a; ++s) r.at(p * a + s, q * a + s) += c;
                for (int rr = 0; rr < a; ++rr) r.at(rr * a + q, rr * a + p) -= c;
            }
        rho.push_back(std::move(r));
    }
    std::vector<std::string> m_labels;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j) m_labels.push_back(num_label("m", i, j));
    return build_semidirect(levi, rho, m_labels);
}

// step 2: the result of step 1 acting on W + V; rows of levi_basis give the
// gl_gl coordinates of the levi part, m occupies the tail of step1's basis
SemidirectDecomposition r_step2(const SemidirectDecomposition& step1,
                                const std::vector<Vec>& levi_basis, int a, int b) {
    const int nl = step1.q.dim();
    const int nlevi = static_cast<int>(levi_basis.size());
    const int nv = 2 * a * b;
    std::vector<RatMat> rho;
    for (int i = 0; i < nl; ++i) {
        RatMat r(nv, nv);
        if (i < nlevi) {
            const Vec& w = levi_basis[i];
            for (int p = 0; p < a; ++p)
                for (int q = 0; q < a; ++q) {
                    const Rat& c = w[p * a + q];
                    if (c == 0) continue;
                    for (int j = 0; j < b; ++j) {
                        r.at(p * b + j, q * b + j) += c;                      // on W
                        r.at(a * b + p * b + j, a * b + q * b + j) += c;      // on V
                    }
                }
            for (int p = 0; p < b; ++p)
                for (int q = 0; q < b; ++q) {
                    const Rat& c = w[a * a + p * b + q];
                    if (c == 0) continue;
                    for (int ii = 0; ii < a; ++ii) {
                        r.at(ii * b + q, ii * b + p) -= c;
                        r.at(a * b + ii * b + q, a * b + ii * b + p) -= c;
                    }
                }
        } else {
            // m_rs: [m, w] = m w maps W into V
            const int m_idx = i - nlevi;
            const int rr = m_idx / a, s = m_idx % a;
            for (int j = 0; j < b; ++j) r.at(a * b + rr * b + j, s * b + j) += 1;
        }
        rho.push_back(std::move(r));
    }
    std::vector<std::string> labels;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) labels.push_back(num_label("w", i, j));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) labels.push_back(num_label("v", i, j));
    return build_semidirect(step1.q, rho, labels);
}

std::vector<Vec> standard_basis(int n) {
    std::vector<Vec> out;
    for (int i = 0; i < n; ++i) {
        Vec e(n, Rat(0));
        e[i] = 1;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

SemidirectDecomposition r_family(int a, int b) {
    if (a < 0 || b < 0 || (a == 0 && b == 0)) throw std::domain_error("empty family parameters");
    LieAlgebra levi = gl_gl(a, b);
    const std::vector<Vec> basis = standard_basis(levi.dim());
    SemidirectDecomposition step1 = r_step1(levi, basis, a, b);
    return r_step2(step1, basis, a, b);
}

SemidirectDecomposition r_bar(int a, int b) {
    if (a < 0 || b < 0 || (a == 0 && b == 0)) throw std::domain_error("empty family parameters");
    LieAlgebra full = gl_gl(a, b);
    const Subspace s = s_levi_space(a, b);
    LieAlgebra levi = subalgebra(full, s, mixed_labels(full, s.basis, "d"));
    SemidirectDecomposition step1 = r_step1(levi, s.basis, a, b);
    return r_step2(step1, s.basis, a, b);
}

int expected_index_q(int a, int b) { return std::gcd(2 * a, a + b); }
int expected_index_r(int a, int b) { return std::gcd(2 * a, b); }

Splitting analysis_splitting_q_bar(int a, int b) {
    const int s_dim = a * a + b * b - 1;
    const int ab = a * b;
    Splitting sp;
    for (int i = 0; i < s_dim + ab; ++i) sp.levi.push_back(i);
    for (int i = 0; i < ab; ++i) sp.ideal.push_back(s_dim + ab + i);
    return sp;
}

Splitting analysis_splitting_r_bar(int a, int b) {
    const int s_dim = a * a + b * b - 1;
    const int m_dim = a * a;
    const int ab = a * b;
    Splitting sp;
    if (a <= b) {
        // levi s + W, ideal m + V
        for (int i = 0; i < s_dim; ++i) sp.levi.push_back(i);
        for (int i = 0; i < ab; ++i) sp.levi.push_back(s_dim + m_dim + i);
        for (int i = 0; i < m_dim; ++i) sp.ideal.push_back(s_dim + i);
        for (int i = 0; i < ab; ++i) sp.ideal.push_back(s_dim + m_dim + ab + i);
    } else {
        // levi s + m, ideal W + V
        for (int i = 0; i < s_dim + m_dim; ++i) sp.levi.push_back(i);
        for (int i = 0; i < 2 * ab; ++i) sp.ideal.push_back(s_dim + m_dim + i);
    }
    return sp;
}

std::vector<std::string> reduction_chain(bool bar_q, int a, int b) {
    std::vector<std::string> chain;
    bool is_q = bar_q;
    for (int guard = 0; guard < 64; ++guard) {
        chain.push_back((is_q ? std::string("qbar(") : std::string("rbar(")) + std::to_string(a) +
                        "," + std::to_string(b) + ")");
        if (a == 0 || b == 0) break;
        if (is_q) {
            if (a > b) std::swap(a, b);  // qbar(a,b) ~ qbar(b,a)
            b -= a;
            is_q = false;
        } else {
            if (a <= b) {
                b -= a;
                is_q = true;
            } else {
                a -= b;
            }
        }
    }
    return chain;
}

std::vector<Vec> stabiliser_embedding(int a, int b) {
    if (a > b) throw std::domain_error("embedding requires a <= b");
    const int dim_q = a * a + b * b + 2 * a * b;
    const int c = b - a;
    auto A = [a](int p, int q) { return p * a + q; };
    auto B = [a, b](int p, int q) { return a * a + p * b + q; };
    auto U = [a, b](int i, int j) { return a * a + b * b + i * b + j; };

    std::vector<Vec> img;
    auto push = [&](Vec v) { img.push_back(std::move(v)); };
    // gl_a: X + diag(X, 0) in the Y block
    for (int p = 0; p < a; ++p)
        for (int q = 0; q < a; ++q) {
            Vec v(dim_q, Rat(0));
            v[A(p, q)] = 1;
            v[B(p, q)] = 1;
            push(std::move(v));
        }
    // gl_{b-a}: lower right Y block
    for (int p = 0; p < c; ++p)
        for (int q = 0; q < c; ++q) {
            Vec v(dim_q, Rat(0));
            v[B(a + p, a + q)] = 1;
            push(std::move(v));
        }
    // abelian gl_a copy: left a x a block of the first tensor copy
    for (int p = 0; p < a; ++p)
        for (int q = 0; q < a; ++q) {
            Vec v(dim_q, Rat(0));
            v[U(p, q)] = 1;
            push(std::move(v));
        }
    // W: the Y12 block
    for (int p = 0; p < a; ++p)
        for (int q = 0; q < c; ++q) {
            Vec v(dim_q, Rat(0));
            v[B(p, a + q)] = 1;
            push(std::move(v));
        }
    // V: right a x (b-a) block of the first tensor copy
    for (int p = 0; p < a; ++p)
        for (int q = 0; q < c; ++q) {
            Vec v(dim_q, Rat(0));
            v[U(p, a + q)] = 1;
            push(std::move(v));
        }
    return img;
}

}  // namespace lie
