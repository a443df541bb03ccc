#include <lie/verify.hpp>

#include <lie/families.hpp>
#include <lie/semidirect.hpp>
#include <lie/semiinv.hpp>

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace lie {

namespace {

// Per-check sampling config: decoupled seed stream, and the suite's pinned
// mode unless the suite leaves the choice automatic.
SampleCfg cell_cfg(const VerifyCfg& cfg, std::uint64_t cell, Mode mode) {
    SampleCfg c = cfg.sample;
    c.seed = Rng(cfg.sample.seed).fork(cell).state;
    c.mode = mode != Mode::automatic ? mode : cfg.sample.mode;
    return c;
}

// Exceptions must not escape a parallel loop; record them as failed checks.
template <typename F>
void guarded(CheckLine& slot, const std::string& name, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        CheckLine l;
        l.name = name;
        l.pass = false;
        l.computed = std::string("exception: ") + e.what();
        slot = std::move(l);
    }
}

CheckLine make_line(std::string name, bool pass, std::string expected, std::string computed,
                    double bound = 0.0, std::string note = {}) {
    CheckLine l;
    l.name = std::move(name);
    l.pass = pass;
    l.expected = std::move(expected);
    l.computed = std::move(computed);
    l.failure_bound = bound;
    l.note = std::move(note);
    return l;
}

SuiteResult finish(std::string suite, std::vector<CheckLine> checks) {
    SuiteResult r;
    r.suite = std::move(suite);
    r.checks = std::move(checks);
    for (const CheckLine& c : r.checks) r.pass = r.pass && c.pass;
    return r;
}

std::string param_name(const std::string& stem, int a, int b) {
    return stem + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- suite 1

SuiteResult suite_index_grid(const VerifyCfg& cfg) {
    struct Cell {
        int a, b;
        bool r_model;
    };
    std::vector<Cell> cells;
    for (int a = 0; a <= cfg.max_grid; ++a)
        for (int b = 0; b <= cfg.max_grid; ++b) {
            if (a == 0 && b == 0) continue;
            cells.push_back({a, b, false});
            cells.push_back({a, b, true});
        }

    std::vector<CheckLine> lines(cells.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell c = cells[i];
        const std::string name = param_name(c.r_model ? "r" : "q", c.a, c.b);
        guarded(lines[i], name, [&] {
            const SampleCfg sc = cell_cfg(cfg, 100 + i, Mode::probabilistic);
            const SemidirectDecomposition d =
                c.r_model ? r_family(c.a, c.b) : q_family(c.a, c.b);
            const int expect =
                c.r_model ? expected_index_r(c.a, c.b) : expected_index_q(c.a, c.b);
            const IndexResult ir = index(d.q, sc);
            lines[i] = make_line(name, ir.index == expect, std::to_string(expect),
                                 std::to_string(ir.index), ir.failure_bound,
                                 "dim " + std::to_string(d.q.dim()));
        });
    }
    return finish("index-grid", std::move(lines));
}

// ---------------------------------------------------------------- suite 2

SuiteResult suite_index_shift(const VerifyCfg& cfg) {
    struct Cell {
        int a, b;
        bool r_model;
    };
    std::vector<Cell> cells;
    for (int a = 0; a <= cfg.max_grid; ++a)
        for (int b = 0; b <= cfg.max_grid; ++b) {
            if (!(a == 0 && b == 0)) cells.push_back({a, b, false});
            if (b >= 1) cells.push_back({a, b, true});
        }

    std::vector<CheckLine> lines(cells.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell c = cells[i];
        const std::string name = param_name(c.r_model ? "rbar" : "qbar", c.a, c.b);
        guarded(lines[i], name, [&] {
            const SampleCfg sc = cell_cfg(cfg, 300 + i, Mode::probabilistic);
            const SemidirectDecomposition d = c.r_model ? r_bar(c.a, c.b) : q_bar(c.a, c.b);
            const int expect =
                (c.r_model ? expected_index_r(c.a, c.b) : expected_index_q(c.a, c.b)) - 1;
            const IndexResult ir = index(d.q, sc);
            lines[i] = make_line(name, ir.index == expect, std::to_string(expect),
                                 std::to_string(ir.index), ir.failure_bound,
                                 "dim " + std::to_string(d.q.dim()));
        });
    }
    return finish("index-shift", std::move(lines));
}

// ---------------------------------------------------------------- suite 3

SuiteResult suite_contact_seaweeds(const VerifyCfg& cfg) {
    struct Inst {
        int a, b;
        bool r_model;
    };
    const std::vector<Inst> insts = {{2, 4, false}, {4, 2, false}, {2, 8, false},
                                     {8, 2, false}, {4, 6, false}, {6, 4, false},
                                     {2, 2, true},  {4, 2, true},  {2, 6, true}};

    std::vector<CheckLine> lines(2 * insts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < insts.size(); ++i) {
        const Inst in = insts[i];
        const std::string name = param_name(in.r_model ? "rbar" : "qbar", in.a, in.b);
        guarded(lines[2 * i], name + " contact", [&] {
            const SampleCfg sc = cell_cfg(cfg, 500 + i, Mode::probabilistic);
            const SemidirectDecomposition d = in.r_model ? r_bar(in.a, in.b) : q_bar(in.a, in.b);
            const ContactResult c = is_contact_algebra(d.q, sc);
            const bool witness_ok = c.contact && is_contact_form(d.q, c.witness);
            lines[2 * i] = make_line(name + " contact", c.contact && c.certified && witness_ok,
                                     "contact with exact certificate",
                                     c.contact ? "contact, Pfaffian " + rat_str(c.certificate)
                                               : c.detail);
        });
        guarded(lines[2 * i + 1], name + " reduction", [&] {
            const SampleCfg sc = cell_cfg(cfg, 550 + i, Mode::probabilistic);
            const SemidirectDecomposition d = in.r_model ? r_bar(in.a, in.b) : q_bar(in.a, in.b);
            const Splitting sp = in.r_model ? analysis_splitting_r_bar(in.a, in.b)
                                            : analysis_splitting_q_bar(in.a, in.b);
            const SemidirectAnalysis an = analyze_semidirect(make_semidirect(d.q, sp), sc);
            lines[2 * i + 1] =
                make_line(name + " reduction", an.contact, "contact via stabiliser reduction",
                          std::string("case ") + an.case_tag + ", " + an.route);
        });
    }
    return finish("contact-seaweeds", std::move(lines));
}

// ---------------------------------------------------------------- suite 4

SuiteResult suite_noncontact_seaweeds(const VerifyCfg& cfg) {
    std::vector<CheckLine> lines;
    const std::vector<std::pair<int, int>> qs = {{1, 1}, {1, 3}, {1, 5}};
    for (std::size_t i = 0; i < qs.size(); ++i) {
        const auto [a, b] = qs[i];
        const std::string name = param_name("qbar", a, b);
        const SampleCfg sc = cell_cfg(cfg, 700 + i, Mode::probabilistic);
        const SemidirectDecomposition d = q_bar(a, b);

        const IndexResult ir = index(d.q, sc);
        lines.push_back(make_line(name + " index", ir.index == 1, "1", std::to_string(ir.index),
                                  ir.failure_bound));

        const ContactResult c = is_contact_algebra(d.q, sc);
        const bool small = c.failure_bound < 1e-16;
        lines.push_back(make_line(name + " not contact", !c.contact && small,
                                  "not contact, failure bound < 1e-16",
                                  bool_str(!c.contact), c.failure_bound));
    }

    {
        // exact certification for the dim-3 case: the contact semi-invariant
        // vanishes identically
        const SemidirectDecomposition d = q_bar(1, 1);
        const SampleCfg sc = cell_cfg(cfg, 710, Mode::symbolic);
        const ContactResult c = is_contact_algebra(d.q, sc);
        const bool fzero = contact_semi_invariant(d.q, sc).is_zero();
        lines.push_back(make_line("qbar(1,1) symbolic", !c.contact && c.certified && fzero,
                                  "certified not contact, vanishing semi-invariant", c.detail));
    }
    {
        const SampleCfg sc = cell_cfg(cfg, 711, Mode::automatic);
        const ContactResult c = is_contact_algebra(r_bar(1, 2).q, sc);
        lines.push_back(make_line("rbar(1,2) contact", c.contact && c.certified,
                                  "contact with exact certificate",
                                  c.contact ? "contact, Pfaffian " + rat_str(c.certificate)
                                            : c.detail));
    }
    return finish("noncontact-seaweeds", std::move(lines));
}

// ---------------------------------------------------------------- suite 5

SuiteResult suite_borel_semiinv(const VerifyCfg& cfg) {
    std::vector<CheckLine> lines;
    const LieAlgebra b = borel_sl3();
    const SampleCfg sc = cell_cfg(cfg, 900, Mode::automatic);

    // expected generators: z and h*z + 3*x*y in the (h,h1,x,y,z) coordinates
    const MPoly z = MPoly::var(5, 4);
    MPoly h2(5);
    {
        Exp hz = {1, 0, 0, 0, 1};
        Exp xy = {0, 0, 1, 1, 0};
        h2.add_term(hz, Rat(1));
        h2.add_term(xy, Rat(3));
    }

    const auto gens = semi_invariants_up_to_degree(b, 2);
    const bool shape = gens.size() == 2 && gens[0].degree == 1 && gens[1].degree == 2 &&
                       gens[0].poly == z && gens[1].poly == h2;
    lines.push_back(make_line("degree-2 generators", shape, "exactly {z, h*z + 3*x*y}",
                              shape ? "as expected"
                                    : std::to_string(gens.size()) + " generators"));

    const Vec chi = {Rat(0), Rat(2), Rat(0), Rat(0), Rat(0)};
    const bool weights = shape && gens[0].weight == chi && gens[1].weight == chi;
    lines.push_back(make_line("weights", weights, "both weights (0,2,0,0,0)",
                              bool_str(weights)));

    if (shape) {
        const WeightRelation rel = weight_relation_and_generator(gens);
        const bool rel_ok = !rel.invariant_product && rel.num_poly == h2 && rel.den_poly == z;
        lines.push_back(make_line("rational generator", rel_ok,
                                  "(h*z + 3*x*y) / z", rel_ok ? "as expected" : "different"));
        lines.push_back(make_line("independence", algebraic_independence(gens, sc), "true",
                                  bool_str(algebraic_independence(gens, sc))));
    }

    const MPoly p = fundamental_semi_invariant(b, sc);
    lines.push_back(make_line("fundamental semi-invariant", p == MPoly::constant(5, Rat(1)),
                              "1", poly_str(p, b.labels())));

    const MPoly f = contact_semi_invariant(b, sc);
    const MPoly zf = canonical_scale(z * h2);
    lines.push_back(make_line("contact semi-invariant", f == zf,
                              poly_str(zf, b.labels()), poly_str(f, b.labels())));

    const auto gens4 = semi_invariants_up_to_degree(b, 4);
    bool no_invariant = true;
    for (const SemiInvariant& g : gens4)
        if (is_zero_vec(g.weight)) no_invariant = false;
    lines.push_back(make_line("no regular invariant to degree 4", no_invariant,
                              "all weights nonzero", bool_str(no_invariant)));
    return finish("borel-semiinv", std::move(lines));
}

// ---------------------------------------------------------------- suite 6

SuiteResult suite_heisenberg_ladder(const VerifyCfg& cfg) {
    std::vector<CheckLine> lines;
    for (int n = 1; n <= 4; ++n) {
        const LieAlgebra h = heisenberg(n);
        const SampleCfg sc = cell_cfg(cfg, 1100 + n, Mode::automatic);
        const int dim = 2 * n + 1;
        const int zi = 2 * n;

        MPoly zn = MPoly::constant(dim, 1);
        for (int k = 0; k < n; ++k) zn = zn * MPoly::var(dim, zi);
        const MPoly zn1 = zn * MPoly::var(dim, zi);

        const MPoly p = fundamental_semi_invariant(h, sc);
        lines.push_back(make_line("heisenberg(" + std::to_string(n) + ") fundamental", p == zn,
                                  "z^" + std::to_string(n), poly_str(p, h.labels())));
        const MPoly f = contact_semi_invariant(h, sc);
        lines.push_back(make_line("heisenberg(" + std::to_string(n) + ") contact", f == zn1,
                                  "z^" + std::to_string(n + 1), poly_str(f, h.labels())));
    }
    return finish("heisenberg-ladder", std::move(lines));
}

// ---------------------------------------------------------------- suite 7

SuiteResult suite_sp4_parabolic(const VerifyCfg& cfg) {
    std::vector<CheckLine> lines;
    const LieAlgebra q = sp4_parabolic();
    const SampleCfg sc = cell_cfg(cfg, 1300, Mode::automatic);

    const ContactResult c = is_contact_algebra(q, sc);
    lines.push_back(make_line("contact", c.contact && c.certified,
                              "contact with exact certificate",
                              c.contact ? "contact" : c.detail));

    const MPoly p = fundamental_semi_invariant(q, sc);
    lines.push_back(make_line("fundamental semi-invariant", p == MPoly::constant(7, Rat(1)),
                              "1", poly_str(p, q.labels())));

    const auto gens = semi_invariants_up_to_degree(q, 1);
    const MPoly z = MPoly::var(7, 6);
    const bool found_z = gens.size() == 1 && gens[0].poly == z;
    lines.push_back(make_line("degree-1 generator", found_z, "z",
                              std::to_string(gens.size()) + " generator(s)"));

    const MPoly f = contact_semi_invariant(q, sc);
    const auto h2 = exact_div(f, z);
    const bool factored = found_z && h2.has_value() && h2->degree() == 3 && f == z * *h2;
    lines.push_back(make_line("contact semi-invariant factors", factored,
                              "f = z * (cubic)", factored ? "as expected"
                                                          : poly_str(f, q.labels())));
    return finish("sp4-parabolic", std::move(lines));
}

// ---------------------------------------------------------------- suite 8

SuiteResult suite_sl2_product(const VerifyCfg& cfg) {
    std::vector<CheckLine> lines;
    const SemidirectDecomposition d = sl2_natural_copies(1);
    const LieAlgebra& q = d.q;
    const SampleCfg sc = cell_cfg(cfg, 1500, Mode::automatic);

    const Vec alpha = {Rat(0), Rat(1), Rat(0), Rat(0), Rat(1)};  // e* + y*
    const Subspace st = stabiliser(q, alpha);
    const Subspace expect = span_of(5, {Vec{Rat(0), Rat(1), Rat(0), Rat(0), Rat(2)}});
    lines.push_back(make_line("stabiliser", st == expect, "span{e + 2y}",
                              "dim " + std::to_string(st.dim())));

    Rat pairing(0);
    if (st.dim() == 1)
        for (int i = 0; i < 5; ++i) pairing += alpha[i] * st.basis[0][i];
    lines.push_back(make_line("alpha on stabiliser", pairing == 3, "3", rat_str(pairing)));

    lines.push_back(make_line("orbit not conical", !is_conical_orbit(q, alpha),
                              "not conical", bool_str(is_conical_orbit(q, alpha))));
    lines.push_back(make_line("stable point", is_stable_point(q, alpha), "stable",
                              bool_str(is_stable_point(q, alpha))));

    const IndexResult ir = index(q, sc);
    lines.push_back(make_line("index", ir.index == 1, "1", std::to_string(ir.index)));
    const StabiliserClass cls = classify_generic_stabiliser(q, sc);
    lines.push_back(make_line("generic stabiliser class", cls.kind == "nilpotent", "nilpotent",
                              cls.kind + " (" + cls.minimal_polynomial + ")"));
    return finish("sl2-product", std::move(lines));
}

// ---------------------------------------------------------------- suite 9

SuiteResult suite_two_characters(const VerifyCfg& cfg) {
    std::vector<CheckLine> lines;
    const std::vector<std::pair<long, long>> params = {{1, 1}, {1, 2}, {2, 3}, {3, 3}};
    for (std::size_t i = 0; i < params.size(); ++i) {
        const auto [lam, mu] = params[i];
        const std::string name =
            "k(" + std::to_string(lam) + "," + std::to_string(mu) + ")";
        const bool expect = lam != mu;
        const LieAlgebra q = k_two_characters(Rat(lam), Rat(mu));
        const SampleCfg sc = cell_cfg(cfg, 1700 + i, Mode::automatic);

        const ContactResult c = is_contact_algebra(q, cell_cfg(cfg, 1750 + i, Mode::symbolic));
        lines.push_back(make_line(name + " direct", c.contact == expect && c.certified,
                                  bool_str(expect), bool_str(c.contact)));

        const SemidirectAnalysis a =
            analyze_semidirect(make_semidirect(q, Splitting{{0}, {1, 2}}), sc);
        lines.push_back(make_line(name + " plane split", a.contact == expect && a.case_tag == 'A',
                                  bool_str(expect) + std::string(" via case A"),
                                  bool_str(a.contact) + std::string(" via case ") + a.case_tag));

        const SemidirectDecomposition nested = make_semidirect(q, Splitting{{0, 1}, {2}});
        const SemidirectAnalysis bAn = analyze_semidirect(nested, sc);
        bool principal_ok = false;
        if (bAn.principal) {
            // [s, x] = -x in the two-dimensional levi (t, x)
            const Vec sx = nested.levi.bracket(*bAn.principal, Vec{Rat(0), Rat(1)});
            principal_ok = sx == Vec{Rat(0), Rat(-1)};
        }
        lines.push_back(make_line(name + " line split",
                                  bAn.contact == expect && bAn.case_tag == 'B' && principal_ok,
                                  bool_str(expect) + std::string(" via case B, [s,x] = -x"),
                                  bool_str(bAn.contact) + std::string(", ") + bAn.route));
    }
    return finish("two-characters", std::move(lines));
}

// ---------------------------------------------------------------- suite 10

SuiteResult suite_equivalence(const VerifyCfg& cfg) {
    std::vector<std::pair<std::string, LieAlgebra>> insts;
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{
             {2, 4}, {4, 2}, {2, 8}, {8, 2}, {4, 6}, {6, 4}, {1, 1}, {1, 3}, {1, 5}})
        insts.push_back({param_name("qbar", a, b), q_bar(a, b).q});
    for (const auto& [a, b] :
         std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {2, 6}, {1, 2}})
        insts.push_back({param_name("rbar", a, b), r_bar(a, b).q});
    for (const auto& [l, m] :
         std::vector<std::pair<long, long>>{{1, 1}, {1, 2}, {2, 3}, {3, 3}})
        insts.push_back({"k(" + std::to_string(l) + "," + std::to_string(m) + ")",
                         k_two_characters(Rat(l), Rat(m))});
    insts.push_back({"sl2 x| k^2", sl2_natural_copies(1).q});
    insts.push_back({"borel sl3", borel_sl3()});
    insts.push_back({"sl2", sl2()});

    std::vector<CheckLine> lines(insts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < insts.size(); ++i) {
        guarded(lines[i], insts[i].first, [&] {
            const LieAlgebra& q = insts[i].second;
            const SampleCfg sc = cell_cfg(cfg, 1900 + i, Mode::automatic);
            const IndexResult ir = index(q, sc);
            const ContactResult c = is_contact_algebra(q, sc);
            const bool conical = is_conical_orbit(q, ir.witness);
            const bool stable = is_stable_point(q, ir.witness);

            bool ok = ir.index == 1 && c.contact == !conical && c.contact == stable;
            std::string note = "contact " + std::string(bool_str(c.contact)) + ", conical " +
                               bool_str(conical) + ", stable " + bool_str(stable);
            if (ok && !c.contact) {
                const StabiliserClass cls = classify_generic_stabiliser(q, sc);
                ok = cls.kind == "nilpotent";
                note += ", stabiliser " + cls.kind;
            }
            double bound = std::max(ir.failure_bound, c.failure_bound);
            lines[i] = make_line(insts[i].first, ok,
                                 "contact == not conical == stable (index 1)", note, bound);
        });
    }
    return finish("equivalence", std::move(lines));
}

// ---------------------------------------------------------------- suite 11

SuiteResult suite_rais(const VerifyCfg& cfg) {
    std::vector<std::pair<std::string, SemidirectDecomposition>> insts;
    for (const auto& [a, b] :
         std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 1}})
        insts.push_back({param_name("q", a, b), q_family(a, b)});
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}})
        insts.push_back({param_name("r", a, b), r_family(a, b)});
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {2, 4}}) {
        SemidirectDecomposition d = q_bar(a, b);
        insts.push_back(
            {param_name("qbar", a, b), make_semidirect(d.q, analysis_splitting_q_bar(a, b))});
    }
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}}) {
        SemidirectDecomposition d = r_bar(a, b);
        insts.push_back(
            {param_name("rbar", a, b), make_semidirect(d.q, analysis_splitting_r_bar(a, b))});
    }
    insts.push_back(
        {"k(1,2)", make_semidirect(k_two_characters(Rat(1), Rat(2)), Splitting{{0}, {1, 2}})});
    insts.push_back({"sl2 x| k^2", sl2_natural_copies(1)});
    insts.push_back({"heisenberg(1)", make_semidirect(heisenberg(1), Splitting{{0}, {1, 2}})});
    insts.push_back({"sl2 x| 4k^2", sl2_natural_copies(4)});

    std::vector<CheckLine> lines(insts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < insts.size(); ++i) {
        guarded(lines[i], insts[i].first, [&] {
            const SampleCfg sc = cell_cfg(cfg, 2100 + i, Mode::automatic);
            const RaisResult r = rais_check(insts[i].second, sc);
            lines[i] = make_line(insts[i].first, r.ok,
                                 "ind q == ind stab + dim V - dim orbit",
                                 std::to_string(r.lhs) + " == " + std::to_string(r.ind_stab) +
                                     " + " + std::to_string(r.dim_v) + " - " +
                                     std::to_string(r.dim_orbit));
        });
    }
    return finish("rais", std::move(lines));
}

// ---------------------------------------------------------------- suite 12

SuiteResult suite_truncation(const VerifyCfg& cfg) {
    std::vector<CheckLine> lines;
    const SampleCfg sc = cell_cfg(cfg, 2300, Mode::automatic);
    const TruncationResult tr = canonical_truncation(borel_sl3(), 2);

    lines.push_back(make_line("truncation dimension", tr.space.dim() == 4, "4",
                              std::to_string(tr.space.dim())));
    lines.push_back(make_line("generator count", tr.generator_count == 2, "2",
                              std::to_string(tr.generator_count)));
    const int ind0 = index(tr.algebra, sc).index;
    lines.push_back(make_line("truncation index == generator count", ind0 == 2, "2",
                              std::to_string(ind0)));

    for (int k = 1; k <= 3; ++k) {
        const LieAlgebra tk = takiff(tr.algebra, k);
        const int ind = index(tk, cell_cfg(cfg, 2300 + k, Mode::automatic)).index;
        lines.push_back(make_line("takiff k=" + std::to_string(k), ind == 2 * k,
                                  std::to_string(2 * k), std::to_string(ind),
                                  0.0, "dim " + std::to_string(tk.dim())));
    }
    return finish("truncation", std::move(lines));
}

// ---------------------------------------------------------------- suite 13

SuiteResult suite_four_copies(const VerifyCfg& cfg) {
    std::vector<CheckLine> lines;
    {
        const SampleCfg sc = cell_cfg(cfg, 2500, Mode::automatic);
        const IndexResult ir = index(sl2_natural_copies(4).q, sc);
        lines.push_back(make_line("sl2 x| 4k^2 index", ir.index == 5, "5",
                                  std::to_string(ir.index), ir.failure_bound));
    }
    {
        const SampleCfg sc = cell_cfg(cfg, 2501, Mode::probabilistic);
        const SemidirectDecomposition d = sl_plus_torus_4copies(0);
        const IndexResult ir = index(d.q, sc);
        lines.push_back(make_line("(sl2 + 4k) x| 4k^2 index", ir.index == 1, "1",
                                  std::to_string(ir.index), ir.failure_bound,
                                  "dim " + std::to_string(d.q.dim())));
    }
    return finish("four-copies", std::move(lines));
}

// ---------------------------------------------------------------- suite 14

SuiteResult suite_mode_agreement(const VerifyCfg& cfg) {
    std::vector<std::pair<std::string, LieAlgebra>> insts;
    for (int n = 1; n <= 4; ++n)
        insts.push_back({"heisenberg(" + std::to_string(n) + ")", heisenberg(n)});
    insts.push_back({"sl2", sl2()});
    insts.push_back({"gl(2)", gl(2)});
    insts.push_back({"sl(3)", sl(3)});
    insts.push_back({"borel sl3", borel_sl3()});
    insts.push_back({"sp4 parabolic", sp4_parabolic()});
    insts.push_back({"seaweed 1|1|1 / 3", seaweed_sl(3, {1, 1, 1}, {3})});
    insts.push_back({"seaweed 2|2 / 1|3", seaweed_sl(4, {2, 2}, {1, 3})});
    insts.push_back({"q(1,1)", q_family(1, 1).q});
    insts.push_back({"qbar(1,1)", q_bar(1, 1).q});
    insts.push_back({"q(1,2)", q_family(1, 2).q});
    insts.push_back({"qbar(1,2)", q_bar(1, 2).q});
    insts.push_back({"r(1,1)", r_family(1, 1).q});
    insts.push_back({"rbar(1,1)", r_bar(1, 1).q});
    insts.push_back({"r(1,2)", r_family(1, 2).q});
    insts.push_back({"rbar(1,2)", r_bar(1, 2).q});
    insts.push_back({"k(1,2)", k_two_characters(Rat(1), Rat(2))});
    insts.push_back({"sl2 x| k^2", sl2_natural_copies(1).q});
    insts.push_back({"sl2 x| 2k^2", sl2_natural_copies(2).q});
    insts.push_back({"sl3 x| k^3", sl_copies(3, 1).q});
    insts.push_back({"takiff sl2", takiff(sl2(), 2)});
    insts.push_back({"borel truncation", canonical_truncation(borel_sl3(), 2).algebra});

    std::vector<CheckLine> lines(insts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < insts.size(); ++i) {
        guarded(lines[i], insts[i].first, [&] {
            const LieAlgebra& q = insts[i].second;
            const IndexResult p = index(q, cell_cfg(cfg, 2700 + 2 * i, Mode::probabilistic));
            const IndexResult s = index(q, cell_cfg(cfg, 2700 + 2 * i + 1, Mode::symbolic));
            lines[i] = make_line(insts[i].first, p.index == s.index,
                                 "probabilistic == symbolic",
                                 std::to_string(p.index) + " == " + std::to_string(s.index),
                                 p.failure_bound, "dim " + std::to_string(q.dim()));
        });
    }
    return finish("mode-agreement", std::move(lines));
}

using SuiteFn = SuiteResult (*)(const VerifyCfg&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"index-grid", suite_index_grid},
        {"index-shift", suite_index_shift},
        {"contact-seaweeds", suite_contact_seaweeds},
        {"noncontact-seaweeds", suite_noncontact_seaweeds},
        {"borel-semiinv", suite_borel_semiinv},
        {"heisenberg-ladder", suite_heisenberg_ladder},
        {"sp4-parabolic", suite_sp4_parabolic},
        {"sl2-product", suite_sl2_product},
        {"two-characters", suite_two_characters},
        {"equivalence", suite_equivalence},
        {"rais", suite_rais},
        {"truncation", suite_truncation},
        {"four-copies", suite_four_copies},
        {"mode-agreement", suite_mode_agreement},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : suite_table()) n.push_back(name);
        return n;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, const VerifyCfg& cfg) {
    for (const auto& [n, fn] : suite_table())
        if (n == name) return fn(cfg);
    throw std::domain_error("unknown suite: " + name);
}

std::vector<SuiteResult> run_all_suites(const VerifyCfg& cfg) {
    std::vector<SuiteResult> out;
    for (const auto& [n, fn] : suite_table()) out.push_back(fn(cfg));
    return out;
}

}  // namespace lie
