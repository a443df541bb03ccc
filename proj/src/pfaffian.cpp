#include <lie/pfaffian.hpp>

#include <stdexcept>

namespace lie {

namespace {

void require_skew(const RatMat& m) {
    if (m.rows() != m.cols()) throw std::domain_error("pfaffian: not square");
    if (m.rows() % 2 != 0) throw std::domain_error("odd-size Pfaffian");
    if (!is_skew_symmetric(m)) throw std::domain_error("pfaffian: not skew-symmetric");
}

}  // namespace

Rat pfaffian(const RatMat& skew) {
    require_skew(skew);
    const std::size_t n = skew.rows();
    if (n == 0) return 1;
    RatMat m = skew;
    Rat result = 1;

    for (std::size_t k = 0; k + 1 < n; k += 2) {
        // pivot: first nonzero in row k to the right of k
        std::size_t piv = n;
        for (std::size_t j = k + 1; j < n; ++j)
            if (m.at(k, j) != 0) {
                piv = j;
                break;
            }
        if (piv == n) return 0;  // row k dead: expansion along it vanishes
        if (piv != k + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k + 1, j), m.at(piv, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, k + 1), m.at(i, piv));
            result = -result;
        }
        const Rat p = m.at(k, k + 1);
        result *= p;
        // transvections zero out row/column k beyond k+1 and preserve Pf
        for (std::size_t i = k + 2; i < n; ++i) {
            if (m.at(k, i) == 0) continue;
            Rat f = m.at(k, i) / p;
            for (std::size_t j = k + 2; j < n; ++j) {
                if (m.at(k + 1, j) == 0) continue;
                Rat delta = f * m.at(k + 1, j);
                m.at(i, j) -= delta;
                m.at(j, i) += delta;
            }
            m.at(k, i) = 0;
            m.at(i, k) = 0;
        }
    }
    return result;
}

Rat pfaffian_expansion(const RatMat& skew) {
    require_skew(skew);
    const std::size_t n = skew.rows();
    if (n == 0) return 1;
    if (n > 16) throw std::domain_error("pfaffian_expansion: size limit");

    // recursion over index subsets, first-row expansion
    auto pf = [&](auto&& self, std::vector<std::size_t> idx) -> Rat {
        if (idx.empty()) return 1;
        Rat acc = 0;
        for (std::size_t t = 1; t < idx.size(); ++t) {
            const Rat& a = skew.at(idx[0], idx[t]);
            if (a == 0) continue;
            std::vector<std::size_t> rest;
            for (std::size_t s = 1; s < idx.size(); ++s)
                if (s != t) rest.push_back(idx[s]);
            Rat term = a * self(self, std::move(rest));
            if (t % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        return acc;
    };
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return pf(pf, all);
}

}  // namespace lie
