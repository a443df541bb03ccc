#include <lie/upoly.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lie {

UPoly upoly_trim(UPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int upoly_deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly upoly_add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return upoly_trim(std::move(r));
}

UPoly upoly_sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return upoly_trim(std::move(r));
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return upoly_trim(std::move(r));
}

UPoly upoly_scale(const UPoly& a, const Rat& c) {
    if (c == 0) return {};
    UPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

UPoly upoly_monic(const UPoly& a) {
    if (a.empty()) return a;
    return upoly_scale(a, Rat(1) / a.back());
}

std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b) {
    if (b.empty()) throw std::domain_error("upoly division by zero");
    UPoly rem = a;
    if (a.size() < b.size()) return {{}, std::move(rem)};
    UPoly quot(a.size() - b.size() + 1, Rat(0));
    const Rat lead = b.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        if (rem.size() < b.size() + k || rem[b.size() - 1 + k] == 0) continue;
        Rat c = rem[b.size() - 1 + k] / lead;
        quot[k] = c;
        for (std::size_t j = 0; j < b.size(); ++j) rem[j + k] -= c * b[j];
    }
    return {upoly_trim(std::move(quot)), upoly_trim(std::move(rem))};
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    a = upoly_trim(std::move(a));
    b = upoly_trim(std::move(b));
    while (!b.empty()) {
        UPoly r = upoly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return upoly_monic(a);
}

UPoly upoly_derivative(const UPoly& p) {
    if (p.size() <= 1) return {};
    UPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat(static_cast<long>(i));
    return upoly_trim(std::move(r));
}

Rat upoly_eval(const UPoly& p, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

bool upoly_is_squarefree(const UPoly& p) {
    if (p.empty()) return false;
    if (p.size() <= 2) return true;
    return upoly_deg(upoly_gcd(p, upoly_derivative(p))) == 0;
}

bool upoly_is_power_of_t(const UPoly& p) {
    if (upoly_deg(p) < 1) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] != 0) return false;
    return true;
}

std::string upoly_str(const UPoly& p) {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) continue;
        Rat c = p[i];
        if (out.empty()) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        if (i == 0) {
            out += rat_str(c);
        } else {
            if (c != 1) out += rat_str(c) + "*";
            out += i == 1 ? "T" : "T^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

// positive divisors of |n|, bounded enumeration: divisors found by trial
// division up to 10^6 plus their cofactors; complete whenever |n| <= 10^12
std::vector<Int> bounded_divisors(const Int& n) {
    std::vector<Int> out;
    Int m = abs(n);
    if (m == 0) return out;
    Int d(1);
    const Int cap(1000000);
    for (; d <= cap && d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            out.push_back(m / d);
        }
    }
    if (d <= cap) return out;  // enumeration complete (d*d > m)
    // m > 10^12: also try cofactors of small divisors, may be incomplete
    return out;
}

}  // namespace

RootReport rational_roots(const UPoly& p) {
    RootReport rep;
    rep.leftover = upoly_trim(p);
    if (rep.leftover.empty()) return rep;

    // strip the root 0 first
    int zero_mult = 0;
    while (!rep.leftover.empty() && rep.leftover.front() == 0) {
        rep.leftover.erase(rep.leftover.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) rep.roots.push_back({Rat(0), zero_mult});

    // clear denominators: roots p/q have p | a0, q | lead (integer coeffs)
    Int den(1);
    for (const Rat& c : rep.leftover) den = lcm(den, c.get_den());
    std::vector<Int> ic;
    for (const Rat& c : rep.leftover) {
        Rat t = c * Rat(den);
        ic.push_back(t.get_num());
    }

    while (upoly_deg(rep.leftover) >= 1) {
        const std::vector<Int> nums = bounded_divisors(ic.front());
        const std::vector<Int> dens = bounded_divisors(ic.back());
        bool found = false;
        Rat root;
        for (const Int& pn : nums) {
            for (const Int& qd : dens) {
                for (int sign : {1, -1}) {
                    Rat cand = make_rat(sign * pn, qd);
                    if (upoly_eval(rep.leftover, cand) == 0) {
                        root = cand;
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
        int mult = 0;
        UPoly lin = {-root, Rat(1)};
        for (;;) {
            auto [q, r] = upoly_divmod(rep.leftover, lin);
            if (!r.empty()) break;
            rep.leftover = std::move(q);
            ++mult;
        }
        rep.roots.push_back({root, mult});
        ic.clear();
        Int d2(1);
        for (const Rat& c : rep.leftover) d2 = lcm(d2, c.get_den());
        for (const Rat& c : rep.leftover) {
            Rat t = c * Rat(d2);
            ic.push_back(t.get_num());
        }
    }
    std::sort(rep.roots.begin(), rep.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return rep;
}

namespace {

// monic annihilator of the Krylov sequence v, Av, A^2 v, ...
UPoly krylov_annihilator(const RatMat& a, const Vec& v) {
    const std::size_t n = v.size();
    std::vector<Vec> seq = {v};
    for (;;) {
        // columns of k are the Krylov vectors; a kernel vector is a
        // linear dependence, i.e. a polynomial annihilating v
        RatMat k(n, seq.size());
        for (std::size_t j = 0; j < seq.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) k.at(i, j) = seq[j][i];
        RankKernel rk = rank_kernel(k);
        if (!rk.kernel.empty()) {
            // first dependence: single kernel vector, last coordinate nonzero
            UPoly ann(rk.kernel[0].begin(), rk.kernel[0].end());
            return upoly_monic(upoly_trim(std::move(ann)));
        }
        seq.push_back(mat_vec(a, seq.back()));
    }
}

}  // namespace

UPoly minimal_polynomial(const RatMat& a) {
    if (a.rows() != a.cols()) throw std::domain_error("minimal_polynomial: not square");
    const std::size_t n = a.rows();
    if (n == 0) return {Rat(1)};  // identity of the polynomial algebra
    UPoly m = {Rat(1)};
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, Rat(0));
        e[i] = 1;
        UPoly ann = krylov_annihilator(a, e);
        UPoly g = upoly_gcd(m, ann);
        m = upoly_divmod(upoly_mul(m, ann), g).first;  // lcm
        if (upoly_deg(m) == static_cast<int>(n)) break;
    }
    return m;
}

}  // namespace lie
