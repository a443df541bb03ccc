#include <lie/mpoly.hpp>

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace lie {

std::pair<Exp, Rat> MPoly::leading() const {
    if (t_.empty()) throw std::domain_error("leading term of zero polynomial");
    return *t_.rbegin();
}

void MPoly::add_term(const Exp& e, const Rat& c) {
    if (c == 0) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    r += o;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    r -= o;
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r(nv_);
    Exp e(nv_);
    for (const auto& [ea, ca] : t_)
        for (const auto& [eb, cb] : o.t_) {
            for (int i = 0; i < nv_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly MPoly::operator*(const Rat& c) const {
    MPoly r(nv_);
    if (c == 0) return r;
    r.t_ = t_;
    for (auto& [e, v] : r.t_) v *= c;
    return r;
}

MPoly MPoly::derivative(int i) const {
    MPoly r(nv_);
    for (const auto& [e, c] : t_) {
        if (e[i] == 0) continue;
        Exp d = e;
        d[i] -= 1;
        r.t_[d] = c * e[i];
    }
    return r;
}

static Rat rat_pow(const Rat& x, int k) {
    Rat r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

Rat MPoly::eval(const Vec& point) const {
    if (static_cast<int>(point.size()) != nv_) throw std::domain_error("eval: arity mismatch");
    Rat s = 0;
    for (const auto& [e, c] : t_) {
        Rat m = c;
        for (int i = 0; i < nv_; ++i)
            if (e[i] != 0) m *= rat_pow(point[i], e[i]);
        s += m;
    }
    return s;
}

bool MPoly::is_homogeneous() const {
    if (t_.empty()) return true;
    int d = total_degree(t_.begin()->first);
    for (const auto& [e, c] : t_)
        if (total_degree(e) != d) return false;
    return true;
}

std::optional<MPoly> exact_div(const MPoly& f, const MPoly& g) {
    if (g.is_zero()) throw std::domain_error("exact_div: division by zero");
    MPoly q(f.nvars());
    MPoly r = f;
    const auto [eg, cg] = g.leading();
    Exp m(f.nvars());
    while (!r.is_zero()) {
        const auto [er, cr] = r.leading();
        for (int i = 0; i < f.nvars(); ++i) {
            if (er[i] < eg[i]) return std::nullopt;
            m[i] = er[i] - eg[i];
        }
        MPoly t(f.nvars());
        t.add_term(m, cr / cg);
        q += t;
        r -= t * g;
    }
    return q;
}

MPoly canonical_scale(MPoly f) {
    if (f.is_zero()) return f;
    Int l = 1, g = 0;
    for (const auto& [e, c] : f.terms()) {
        l = lcm(l, c.get_den());
    }
    for (const auto& [e, c] : f.terms()) {
        Rat v = c * l;
        g = gcd(g, v.get_num());
    }
    Rat s = make_rat(l, g);
    if (f.leading().second < 0) s = -s;
    return f * s;
}

namespace {

int deg_in(const MPoly& f, int v) {
    int d = 0;
    for (const auto& [e, c] : f.terms()) d = std::max(d, e[v]);
    return d;
}

// Coefficient of x_v^k as a polynomial with the x_v exponent removed.
MPoly coeff_in(const MPoly& f, int v, int k) {
    MPoly r(f.nvars());
    for (const auto& [e, c] : f.terms())
        if (e[v] == k) {
            Exp d = e;
            d[v] = 0;
            r.add_term(d, c);
        }
    return r;
}

MPoly shift_var(const MPoly& f, int v, int k) {  // multiply by x_v^k
    MPoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Exp d = e;
        d[v] += k;
        r.add_term(d, c);
    }
    return r;
}

Int int_content(const MPoly& f) {  // assumes integer coefficients
    Int g = 0;
    for (const auto& [e, c] : f.terms()) g = gcd(g, c.get_num());
    return g;
}

MPoly gcd_rec(const MPoly& f, const MPoly& g);

MPoly content_in(const MPoly& f, int v) {
    MPoly c(f.nvars());
    for (int k = 0; k <= deg_in(f, v); ++k) {
        MPoly ck = coeff_in(f, v, k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? ck : gcd_rec(c, ck);
        if (c.is_constant()) break;
    }
    return c;
}

MPoly pseudo_rem(MPoly a, const MPoly& b, int v) {
    const int db = deg_in(b, v);
    const MPoly lb = coeff_in(b, v, db);
    while (!a.is_zero()) {
        int da = deg_in(a, v);
        if (da < db) break;
        MPoly la = coeff_in(a, v, da);
        a = a * lb - shift_var(la * b, v, da - db);
        // the x_v^da terms cancel; strictly decreasing degree ends the loop
    }
    return a;
}

// gcd of polynomials with integer coefficients, up to sign.
MPoly gcd_rec(const MPoly& f, const MPoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.is_constant() || g.is_constant())
        return MPoly::constant(f.nvars(), Rat(gcd(int_content(f), int_content(g))));

    int v = -1;  // highest variable occurring in either
    for (int i = f.nvars() - 1; i >= 0 && v < 0; --i)
        if (deg_in(f, i) > 0 || deg_in(g, i) > 0) v = i;

    if (deg_in(f, v) == 0) return gcd_rec(f, content_in(g, v));
    if (deg_in(g, v) == 0) return gcd_rec(g, content_in(f, v));

    MPoly cf = content_in(f, v), cg = content_in(g, v);
    MPoly c = gcd_rec(cf, cg);
    MPoly a = *exact_div(f, cf), b = *exact_div(g, cg);
    if (deg_in(a, v) < deg_in(b, v)) std::swap(a, b);
    while (true) {
        MPoly r = pseudo_rem(a, b, v);
        if (r.is_zero()) break;
        if (deg_in(r, v) == 0) {
            b = MPoly::constant(f.nvars(), 1);
            break;
        }
        a = b;
        b = *exact_div(r, content_in(r, v));
    }
    return c * b;
}

MPoly to_integer_coeffs(const MPoly& f) {
    Int l = 1;
    for (const auto& [e, c] : f.terms()) l = lcm(l, c.get_den());
    return f * Rat(l);
}

}  // namespace

MPoly poly_gcd(const std::vector<MPoly>& fs) {
    MPoly g;
    bool seen = false;
    for (const MPoly& f : fs) {
        if (f.is_zero()) continue;
        MPoly fi = to_integer_coeffs(f);
        g = seen ? gcd_rec(g, fi) : fi;
        seen = true;
        if (g.is_constant()) {
            g = MPoly::constant(g.nvars(), 1);
            break;
        }
    }
    if (!seen) throw std::domain_error("zero gcd");
    return canonical_scale(g);
}

std::string poly_str(const MPoly& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto& t = f.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += rat_str(a);
        } else {
            if (a != 1) out += rat_str(a) + "*";
            out += mono;
        }
    }
    return out;
}

MPoly symbolic_pfaffian(const SymMat& m, std::size_t max_size) {
    const std::size_t n = m.size();
    if (n % 2 != 0) throw std::domain_error("odd-size Pfaffian");
    if (n > max_size) throw std::domain_error("symbolic size limit");
    const int nv = n == 0 ? 0 : m[0][0].nvars();
    if (n == 0) return MPoly::constant(nv, 1);

    std::unordered_map<std::uint32_t, MPoly> memo;
    // pf over the rows/cols in mask, |mask| even
    auto pf = [&](auto&& self, std::uint32_t mask) -> MPoly {
        if (mask == 0) return MPoly::constant(nv, 1);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int first = __builtin_ctz(mask);
        MPoly acc(nv);
        int pos = 0;  // position of j within mask after the first element
        for (std::size_t j = first + 1; j < n; ++j) {
            if (!(mask >> j & 1)) continue;
            ++pos;
            if (!m[first][j].is_zero()) {
                MPoly sub = self(self, mask & ~(1u << first) & ~(1u << j));
                MPoly term = m[first][j] * sub;
                // expansion along the first row: signs alternate +,-,+,...
                acc += (pos % 2 == 1) ? term : -term;
            }
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return pf(pf, (1u << n) - 1);
}

int symbolic_rank(const SymMat& mat) {
    SymMat m = mat;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    MPoly prev;  // previous pivot; empty degree -1 means "1"
    bool have_prev = false;
    std::size_t r = 0;
    // column pivoting with free row choice: prefer small entries to keep the
    // fraction-free intermediate polynomials short
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            if (piv == rows || m[i][c].degree() < m[piv][c].degree() ||
                (m[i][c].degree() == m[piv][c].degree() &&
                 m[i][c].term_count() < m[piv][c].term_count()))
                piv = i;
        }
        if (piv == rows) continue;
        if (piv != r) std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                MPoly t = m[i][j] * m[r][c] - m[i][c] * m[r][j];
                if (have_prev && !t.is_zero()) {
                    auto q = exact_div(t, prev);
                    if (!q) throw std::logic_error("symbolic_rank: inexact division");
                    t = *q;
                }
                m[i][j] = std::move(t);
            }
            m[i][c] = MPoly(m[i][c].nvars());
        }
        prev = m[r][c];
        have_prev = true;
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace lie
