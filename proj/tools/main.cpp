#include <CLI11.hpp>
#include <json.hpp>

#include <lie/coadjoint.hpp>
#include <lie/families.hpp>
#include <lie/json_io.hpp>
#include <lie/semidirect.hpp>
#include <lie/semiinv.hpp>
#include <lie/verify.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using lie::Rat;
using lie::Vec;
using ordered_json = nlohmann::ordered_json;

namespace {

int to_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::domain_error(std::string("expected an integer for ") + what + ", got '" + s +
                                "'");
    }
}

std::vector<int> parse_composition(const std::string& s) {
    std::vector<int> parts;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) parts.push_back(to_int(item, "composition part"));
    if (parts.empty()) throw std::domain_error("empty composition");
    return parts;
}

void need_params(const std::vector<std::string>& p, std::size_t n, const std::string& family,
                 const char* usage) {
    if (p.size() != n)
        throw std::domain_error("family " + family + " expects " + usage);
}

lie::AlgebraDoc construct_family(const std::string& family, const std::vector<std::string>& p) {
    lie::AlgebraDoc doc;
    if (family == "heisenberg") {
        need_params(p, 1, family, "1 parameter: n");
        doc.algebra = lie::heisenberg(to_int(p[0], "n"));
        // x_1..x_n span a complement of the abelian ideal (y_1..y_n, z)
        lie::Splitting sp;
        const int n = to_int(p[0], "n");
        for (int i = 0; i < n; ++i) sp.levi.push_back(i);
        for (int i = n; i < 2 * n + 1; ++i) sp.ideal.push_back(i);
        doc.splitting = sp;
    } else if (family == "sl2") {
        need_params(p, 0, family, "no parameters");
        doc.algebra = lie::sl2();
    } else if (family == "gl") {
        need_params(p, 1, family, "1 parameter: n");
        doc.algebra = lie::gl(to_int(p[0], "n"));
    } else if (family == "sl") {
        need_params(p, 1, family, "1 parameter: n");
        doc.algebra = lie::sl(to_int(p[0], "n"));
    } else if (family == "borel-sl3") {
        need_params(p, 0, family, "no parameters");
        doc.algebra = lie::borel_sl3();
    } else if (family == "sp4-parabolic") {
        need_params(p, 0, family, "no parameters");
        doc.algebra = lie::sp4_parabolic();
    } else if (family == "seaweed-sl") {
        need_params(p, 3, family, "3 parameters: n top bottom (e.g. 4 2,2 1,3)");
        doc.algebra = lie::seaweed_sl(to_int(p[0], "n"), parse_composition(p[1]),
                                      parse_composition(p[2]));
    } else if (family == "two-characters") {
        need_params(p, 2, family, "2 parameters: lambda mu (rationals)");
        doc.algebra = lie::k_two_characters(lie::rat_parse(p[0]), lie::rat_parse(p[1]));
        doc.splitting = lie::Splitting{{0}, {1, 2}};
    } else if (family == "sl-copies") {
        need_params(p, 2, family, "2 parameters: n m");
        lie::SemidirectDecomposition d = lie::sl_copies(to_int(p[0], "n"), to_int(p[1], "m"));
        doc.algebra = d.q;
        doc.splitting = d.split;
    } else if (family == "sl-plus-torus") {
        need_params(p, 1, family, "1 parameter: n");
        lie::SemidirectDecomposition d = lie::sl_plus_torus_4copies(to_int(p[0], "n"));
        doc.algebra = d.q;
        doc.splitting = d.split;
    } else if (family == "q" || family == "r") {
        need_params(p, 2, family, "2 parameters: a b");
        lie::SemidirectDecomposition d = family == "q"
                                             ? lie::q_family(to_int(p[0], "a"), to_int(p[1], "b"))
                                             : lie::r_family(to_int(p[0], "a"), to_int(p[1], "b"));
        doc.algebra = d.q;
        doc.splitting = d.split;
    } else if (family == "qbar" || family == "rbar") {
        need_params(p, 2, family, "2 parameters: a b");
        const int a = to_int(p[0], "a"), b = to_int(p[1], "b");
        lie::SemidirectDecomposition d = family == "qbar" ? lie::q_bar(a, b) : lie::r_bar(a, b);
        doc.algebra = d.q;
        // ship the partition the contact analysis wants, not the plain one
        doc.splitting = family == "qbar" ? lie::analysis_splitting_q_bar(a, b)
                                         : lie::analysis_splitting_r_bar(a, b);
    } else if (family == "takiff") {
        need_params(p, 2, family, "2 parameters: file k");
        doc.algebra = lie::takiff(lie::load_algebra_file(p[0]).algebra, to_int(p[1], "k"));
    } else {
        throw std::domain_error(
            "unknown family: " + family +
            " (known: heisenberg sl2 gl sl borel-sl3 sp4-parabolic seaweed-sl two-characters"
            " sl-copies sl-plus-torus q qbar r rbar takiff)");
    }
    return doc;
}

lie::Mode parse_mode(const std::string& s) {
    if (s == "auto" || s == "automatic") return lie::Mode::automatic;
    if (s == "prob" || s == "probabilistic") return lie::Mode::probabilistic;
    if (s == "sym" || s == "symbolic") return lie::Mode::symbolic;
    throw std::domain_error("unknown mode: " + s + " (auto|probabilistic|symbolic)");
}

ordered_json vec_json(const Vec& v) {
    ordered_json arr = ordered_json::array();
    for (const Rat& c : v) arr.push_back(lie::rat_str(c));
    return arr;
}

ordered_json report_json(const lie::LieAlgebra& q, const lie::CoadjointReport& r) {
    ordered_json j;
    j["dim"] = r.dim;
    {
        ordered_json ji;
        ji["value"] = r.index.index;
        ji["max_rank"] = r.index.max_rank;
        ji["symbolic"] = r.index.symbolic;
        ji["failure_bound"] = r.index.failure_bound;
        ji["witness"] = vec_json(r.index.witness);
        j["index"] = ji;
    }
    {
        ordered_json jc;
        jc["value"] = r.contact.contact;
        jc["certified"] = r.contact.certified;
        if (r.contact.contact) {
            jc["witness"] = vec_json(r.contact.witness);
            jc["certificate"] = lie::rat_str(r.contact.certificate);
        }
        jc["failure_bound"] = r.contact.failure_bound;
        if (!r.contact.detail.empty()) jc["detail"] = r.contact.detail;
        j["contact"] = jc;
    }
    if (r.dim > 0) {
        j["generic_orbit_conical"] = r.generic_conical;
        j["stable"] = r.stable;
    }
    if (r.stabiliser_class) {
        ordered_json js;
        js["kind"] = r.stabiliser_class->kind;
        js["central"] = r.stabiliser_class->central;
        js["minimal_polynomial"] = r.stabiliser_class->minimal_polynomial;
        j["generic_stabiliser"] = js;
    }
    if (r.p) j["fundamental_semi_invariant"] = lie::poly_str(*r.p, q.labels());
    if (r.f) j["contact_semi_invariant"] = lie::poly_str(*r.f, q.labels());
    if (r.codim2) j["codim2"] = *r.codim2;
    return j;
}

ordered_json semidirect_json(const lie::SemidirectDecomposition& d, int index,
                             const lie::SampleCfg& cfg) {
    ordered_json j;
    const lie::RaisResult rr = lie::rais_check(d, cfg);
    ordered_json jr;
    jr["ind_q"] = rr.lhs;
    jr["ind_stabiliser"] = rr.ind_stab;
    jr["dim_ideal"] = rr.dim_v;
    jr["dim_orbit"] = rr.dim_orbit;
    jr["additivity_holds"] = rr.ok;
    j["index_additivity"] = jr;

    if (index == 1) {
        const lie::SemidirectAnalysis an = lie::analyze_semidirect(d, cfg);
        ordered_json ja;
        ja["case"] = std::string(1, an.case_tag);
        ja["contact"] = an.contact;
        ja["route"] = an.route;
        ja["dim_orbit"] = an.dim_orbit;
        ja["ind_stabiliser"] = an.ind_stab;
        if (an.ind_line >= 0) ja["ind_line_normaliser"] = an.ind_line;
        ja["gamma"] = vec_json(an.gamma);
        if (an.principal) ja["principal_element"] = vec_json(*an.principal);
        j["contact_analysis"] = ja;
    }
    return j;
}

ordered_json semi_invariants_json(const lie::LieAlgebra& q, int degree,
                                  const lie::SampleCfg& cfg) {
    ordered_json j;
    j["max_degree"] = degree;
    const auto gens = lie::semi_invariants_up_to_degree(q, degree);
    ordered_json arr = ordered_json::array();
    for (const auto& g : gens) {
        ordered_json jg;
        jg["poly"] = lie::poly_str(g.poly, q.labels());
        jg["degree"] = g.degree;
        jg["weight"] = vec_json(g.weight);
        arr.push_back(jg);
    }
    j["generators"] = arr;
    if (!gens.empty()) {
        j["algebraically_independent"] = lie::algebraic_independence(gens, cfg);
        try {
            const lie::WeightRelation rel = lie::weight_relation_and_generator(gens);
            ordered_json jr;
            ordered_json coeffs = ordered_json::array();
            for (const auto& c : rel.coeffs) coeffs.push_back(c.get_str());
            jr["coefficients"] = coeffs;
            jr["numerator"] = lie::poly_str(rel.num_poly, q.labels());
            jr["denominator"] = lie::poly_str(rel.den_poly, q.labels());
            jr["invariant_product"] = rel.invariant_product;
            j["weight_relation"] = jr;
        } catch (const std::domain_error&) {
            // relation lattice not a line; nothing canonical to report
        }
    }
    return j;
}

int run_verify(const std::string& suite, const lie::VerifyCfg& cfg) {
    std::vector<lie::SuiteResult> results;
    if (suite == "all")
        results = lie::run_all_suites(cfg);
    else
        results.push_back(lie::run_suite(suite, cfg));

    int suites_passed = 0;
    for (const lie::SuiteResult& s : results) {
        std::printf("== %s\n", s.suite.c_str());
        std::size_t ok = 0;
        for (const lie::CheckLine& c : s.checks) {
            std::string tail;
            if (c.failure_bound > 0.0) {
                char buf[48];
                std::snprintf(buf, sizeof buf, " (failure bound <= %.3g)", c.failure_bound);
                tail += buf;
            }
            if (!c.note.empty()) tail += " [" + c.note + "]";
            if (c.pass) {
                ++ok;
                std::printf("   ok  %s: %s%s\n", c.name.c_str(), c.computed.c_str(),
                            tail.c_str());
            } else {
                std::printf("  FAIL %s: expected %s, got %s%s\n", c.name.c_str(),
                            c.expected.c_str(), c.computed.c_str(), tail.c_str());
            }
        }
        std::printf("-- %s: %s (%zu/%zu checks)\n", s.suite.c_str(), s.pass ? "PASS" : "FAIL",
                    ok, s.checks.size());
        if (s.pass) ++suites_passed;
    }
    std::printf("%d/%zu suites passed\n", suites_passed, results.size());
    return suites_passed == static_cast<int>(results.size()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact index, contact and semi-invariant computations for rational Lie algebras"};
    app.require_subcommand(1);

    // construct
    auto* c_cmd = app.add_subcommand("construct", "emit a family member as JSON");
    std::string c_family;
    std::vector<std::string> c_params;
    std::string c_out;
    bool c_pretty = false;
    c_cmd->add_option("family", c_family, "family name")->required();
    c_cmd->add_option("params", c_params, "family parameters");
    c_cmd->add_option("-o,--output", c_out, "write to a file instead of stdout");
    c_cmd->add_flag("--pretty", c_pretty, "indent the JSON");

    // analyze
    auto* a_cmd = app.add_subcommand("analyze", "coadjoint report for an algebra file");
    std::string a_file, a_mode = "auto";
    lie::SampleCfg a_cfg;
    int a_degree = 0;
    bool a_pretty = false;
    a_cmd->add_option("file", a_file, "algebra JSON file")->required();
    a_cmd->add_option("--seed", a_cfg.seed, "random seed");
    a_cmd->add_option("--trials", a_cfg.trials, "sampling trials");
    a_cmd->add_option("--bound", a_cfg.bound, "coordinate bound for samples");
    a_cmd->add_option("--mode", a_mode, "auto|probabilistic|symbolic");
    a_cmd->add_option("--degree", a_degree, "also list semi-invariants up to this degree");
    a_cmd->add_flag("--pretty", a_pretty, "indent the JSON");

    // verify
    auto* v_cmd = app.add_subcommand("verify", "run a regression suite");
    std::string v_suite = "all", v_mode = "auto";
    lie::VerifyCfg v_cfg;
    int v_jobs = 0;
    v_cmd->add_option("suite", v_suite, "suite name or 'all'");
    v_cmd->add_option("--seed", v_cfg.sample.seed, "random seed");
    v_cmd->add_option("--trials", v_cfg.sample.trials, "sampling trials");
    v_cmd->add_option("--bound", v_cfg.sample.bound, "coordinate bound for samples");
    v_cmd->add_option("--mode", v_mode, "override for checks with a free mode choice");
    v_cmd->add_option("--max", v_cfg.max_grid, "grid bound for the parameter sweeps");
    v_cmd->add_option("--jobs", v_jobs, "worker threads (0 = library default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_cmd->parsed()) {
            const lie::AlgebraDoc doc = construct_family(c_family, c_params);
            if (c_out.empty())
                std::cout << lie::algebra_to_json(doc, c_pretty) << "\n";
            else
                lie::save_algebra_file(doc, c_out, c_pretty);
            return 0;
        }

        if (a_cmd->parsed()) {
            a_cfg.mode = parse_mode(a_mode);
            const lie::AlgebraDoc doc = lie::load_algebra_file(a_file);
            const lie::CoadjointReport rep = lie::analyze(doc.algebra, a_cfg);
            ordered_json j = report_json(doc.algebra, rep);
            if (doc.splitting) {
                const lie::SemidirectDecomposition d =
                    lie::make_semidirect(doc.algebra, *doc.splitting);
                j["semidirect"] = semidirect_json(d, rep.index.index, a_cfg);
            }
            if (a_degree > 0)
                j["semi_invariants"] = semi_invariants_json(doc.algebra, a_degree, a_cfg);
            std::cout << (a_pretty ? j.dump(2) : j.dump()) << "\n";
            return 0;
        }

        // verify
        v_cfg.sample.mode = parse_mode(v_mode);
        if (v_jobs > 0) {
#ifdef _OPENMP
            omp_set_num_threads(v_jobs);
#endif
        }
        return run_verify(v_suite, v_cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
