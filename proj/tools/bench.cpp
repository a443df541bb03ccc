// Timing harness for the exact-arithmetic kernels. Compares the serial and
// OpenMP Bareiss eliminations on structure matrices and dense random input,
// times the Pfaffian elimination against the recursive reference, and runs
// a few end-to-end index computations. Not part of the test suite.

#include <CLI11.hpp>

#include <lie/coadjoint.hpp>
#include <lie/families.hpp>
#include <lie/linalg.hpp>
#include <lie/pfaffian.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using lie::Rat;
using lie::RatMat;
using lie::Rng;

namespace {

double seconds(const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

RatMat dense_random(int n, Rng& rng) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rat(rng.int_in(9));
    return m;
}

RatMat skew_random(int n, Rng& rng) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            m.at(i, j) = Rat(rng.int_in(9));
            m.at(j, i) = -m.at(i, j);
        }
    return m;
}

void bench_rank(const std::string& label, const RatMat& m) {
    int rank_serial = 0;
    int rank_parallel = 0;
    const double ts = seconds([&] { rank_serial = lie::bareiss_echelon(m, false).rank; });
    const double tp = seconds([&] { rank_parallel = lie::bareiss_echelon(m, true).rank; });
    std::printf("  %-18s %4zu x %-4zu rank %-4d serial %8.3fs  parallel %8.3fs  speedup %.2fx%s\n",
                label.c_str(), m.rows(), m.cols(), rank_serial, ts, tp,
                tp > 0 ? ts / tp : 0.0,
                rank_serial == rank_parallel ? "" : "  RANK MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kernel timings: Bareiss rank, Pfaffian, end-to-end index"};
    std::uint64_t seed = 1;
    int threads = 0;
    bool quick = false;
    app.add_option("--seed", seed, "RNG seed for the sampled inputs");
    app.add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");
    app.add_flag("--quick", quick, "smaller sizes, for smoke runs");

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    (void)threads;
    std::printf("built without OpenMP, parallel columns degenerate to serial\n");
#endif
    Rng rng(seed);

    std::printf("\nBareiss rank of structure matrices at a random functional\n");
    {
        std::vector<std::pair<int, int>> shapes =
            quick ? std::vector<std::pair<int, int>>{{3, 3}, {4, 3}}
                  : std::vector<std::pair<int, int>>{{4, 4}, {5, 4}, {5, 5}};
        for (auto [a, b] : shapes) {
            const lie::LieAlgebra q = lie::q_family(a, b).q;
            bench_rank("q(" + std::to_string(a) + "," + std::to_string(b) + ")",
                       q.structure_matrix(rng.rational_point(q.dim(), 1 << 20)));
            const lie::LieAlgebra r = lie::r_family(a, b).q;
            bench_rank("r(" + std::to_string(a) + "," + std::to_string(b) + ")",
                       r.structure_matrix(rng.rational_point(r.dim(), 1 << 20)));
        }
    }

    std::printf("\nBareiss rank of dense random matrices, entries in [-9,9]\n");
    for (int n : quick ? std::vector<int>{32, 48} : std::vector<int>{48, 72, 96}) {
        bench_rank("dense n=" + std::to_string(n), dense_random(n, rng));
    }

    std::printf("\nPfaffian by skew elimination, entries in [-9,9]\n");
    for (int n : quick ? std::vector<int>{16, 24} : std::vector<int>{24, 40, 56}) {
        const RatMat m = skew_random(n, rng);
        Rat pf;
        const double t = seconds([&] { pf = lie::pfaffian(m); });
        std::printf("  n=%-3d %8.3fs  (%zu digits)\n", n, t,
                    pf.get_num().get_str().size());
    }

    std::printf("\nPfaffian elimination vs recursive expansion\n");
    for (int n : {8, 10}) {
        const RatMat m = skew_random(n, rng);
        Rat fast, ref;
        const double tf = seconds([&] { fast = lie::pfaffian(m); });
        const double tr = seconds([&] { ref = lie::pfaffian_expansion(m); });
        std::printf("  n=%-3d elimination %8.5fs  expansion %8.5fs  %s\n", n, tf, tr,
                    fast == ref ? "agree" : "DISAGREE");
    }

    std::printf("\nEnd-to-end probabilistic index\n");
    for (auto [a, b] : quick ? std::vector<std::pair<int, int>>{{3, 3}}
                             : std::vector<std::pair<int, int>>{{4, 4}, {5, 5}}) {
        const lie::LieAlgebra r = lie::r_family(a, b).q;
        lie::SampleCfg cfg;
        cfg.seed = seed;
        cfg.mode = lie::Mode::probabilistic;
        lie::IndexResult res;
        const double t = seconds([&] { res = lie::index(r, cfg); });
        std::printf("  r(%d,%d)  dim %-4d index %-3d %8.3fs\n", a, b, r.dim(), res.index, t);
    }

    return 0;
}
