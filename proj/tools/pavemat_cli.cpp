// Command-line front end: exact Ehrhart polynomials and normalized volumes of
// hypersimplices, panhandle and paving matroids and design matroids, brute
// force lattice-point oracles, and exhaustive conjecture verification sweeps.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pavemat/pavemat.hpp"

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("file '" + path + "': " + e.what());
    }
    return j;
}

void emit_polynomial(const pavemat::Polynomial& p, const std::string& format) {
    if (format == "csv") {
        const auto& coeffs = p.coefficients();
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            std::cout << k << "," << pavemat::rational_to_string(coeffs[k]) << "\n";
    } else {
        std::cout << p.to_json().dump() << "\n";
    }
}

void emit_volume(const pavemat::Int& v, const std::string& format) {
    if (format == "csv")
        std::cout << v.str() << "\n";
    else
        std::cout << json{{"volume", v.str()}}.dump() << "\n";
}

void note_formula_only() {
    std::cerr << "note: formula-only result; existence of a design with these parameters is "
                 "not checked beyond the divisibility condition\n";
}

struct CommonArgs {
    int r = 0, s = 0, n = 0, t = 0, k = 0, q = 0;
    int jobs = 1;
    int big_max_s = 5;
    int phi_max_s = 10, phi_span = 4;
    int tphi_max_s = 10, tphi_span = 4;
    int gen_max_s = 6, gen_span = 3, gen_max_u = 3;
    int lah_max_n = 7;
    int sweep_max_n = 8;
    std::vector<int> dilations;
    std::string profile_path, matroid_path, format = "json";
};

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Ehrhart polynomials and volumes of paving and panhandle matroids"};
    app.require_subcommand(1);

    app.add_option_function<int>(
           "--memo-max", [](int v) { pavemat::set_memo_row_limit(v); },
           "Cache limit for Eulerian/Stirling recurrence rows (default 64)")
        ->check(CLI::NonNegativeNumber);

    CommonArgs a;
    int rc = 0;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };

    // ehrhart -------------------------------------------------------------
    auto* ehr = app.add_subcommand("ehrhart", "Exact Ehrhart polynomials");
    ehr->require_subcommand(1);

    auto* ehr_hyp = ehr->add_subcommand("hypersimplex", "Hypersimplex Delta_{r,n}");
    ehr_hyp->add_option("--r", a.r)->required();
    ehr_hyp->add_option("--n", a.n)->required();
    add_format(ehr_hyp);
    ehr_hyp->callback([&] { emit_polynomial(pavemat::ehrhart_hypersimplex(a.r, a.n), a.format); });

    auto* ehr_pan = ehr->add_subcommand("panhandle", "Panhandle matroid Pan_{r,s,n}");
    ehr_pan->add_option("--r", a.r)->required();
    ehr_pan->add_option("--s", a.s)->required();
    ehr_pan->add_option("--n", a.n)->required();
    add_format(ehr_pan);
    ehr_pan->callback(
        [&] { emit_polynomial(pavemat::ehrhart_panhandle(pavemat::PanhandleParams(a.r, a.s, a.n)), a.format); });

    auto* ehr_pav = ehr->add_subcommand("paving", "Paving matroid from a hyperplane profile");
    ehr_pav->add_option("--profile", a.profile_path, "PavingProfile JSON file")->required();
    add_format(ehr_pav);
    ehr_pav->callback([&] {
        auto profile = pavemat::PavingProfile::from_json(read_json_file(a.profile_path));
        emit_polynomial(pavemat::ehrhart_paving(profile), a.format);
    });

    auto* ehr_st = ehr->add_subcommand("steiner", "Matroid of a Steiner system S(t,k,n)");
    ehr_st->add_option("--t", a.t)->required();
    ehr_st->add_option("--k", a.k)->required();
    ehr_st->add_option("--n", a.n)->required();
    add_format(ehr_st);
    ehr_st->callback([&] {
        emit_polynomial(pavemat::ehrhart_steiner(a.t, a.k, a.n), a.format);
        note_formula_only();
    });

    auto* ehr_pl = ehr->add_subcommand("plane", "Matroid of a projective plane of order q");
    ehr_pl->add_option("--q", a.q)->required();
    add_format(ehr_pl);
    ehr_pl->callback([&] {
        emit_polynomial(pavemat::ehrhart_projective_plane(a.q), a.format);
        note_formula_only();
    });

    // volume --------------------------------------------------------------
    auto* vol = app.add_subcommand("volume", "Normalized volumes of base polytopes");
    vol->require_subcommand(1);

    auto* vol_hyp = vol->add_subcommand("hypersimplex", "Vol Delta_{r,n} = A(n-1,r-1)");
    vol_hyp->add_option("--r", a.r)->required();
    vol_hyp->add_option("--n", a.n)->required();
    add_format(vol_hyp);
    vol_hyp->callback([&] { emit_volume(pavemat::volume_hypersimplex(a.r, a.n), a.format); });

    auto* vol_pan = vol->add_subcommand("panhandle", "Vol P_{Pan_{r,s,n}} by descent counts");
    vol_pan->add_option("--r", a.r)->required();
    vol_pan->add_option("--s", a.s)->required();
    vol_pan->add_option("--n", a.n)->required();
    add_format(vol_pan);
    vol_pan->callback(
        [&] { emit_volume(pavemat::volume_panhandle(pavemat::PanhandleParams(a.r, a.s, a.n)), a.format); });

    auto* vol_pav = vol->add_subcommand("paving", "Paving matroid volume from a profile");
    vol_pav->add_option("--profile", a.profile_path, "PavingProfile JSON file")->required();
    add_format(vol_pav);
    vol_pav->callback([&] {
        auto profile = pavemat::PavingProfile::from_json(read_json_file(a.profile_path));
        emit_volume(pavemat::volume_paving(profile), a.format);
    });

    auto* vol_st = vol->add_subcommand("steiner", "Volume for a Steiner system S(t,k,n)");
    vol_st->add_option("--t", a.t)->required();
    vol_st->add_option("--k", a.k)->required();
    vol_st->add_option("--n", a.n)->required();
    add_format(vol_st);
    vol_st->callback([&] {
        emit_volume(pavemat::volume_steiner(a.t, a.k, a.n), a.format);
        note_formula_only();
    });

    auto* vol_pl = vol->add_subcommand("plane", "Volume for a projective plane of order q");
    vol_pl->add_option("--q", a.q)->required();
    add_format(vol_pl);
    vol_pl->callback([&] {
        emit_volume(pavemat::volume_projective_plane(a.q), a.format);
        note_formula_only();
    });

    // oracle ---------------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "Brute-force lattice point counts (CSV rows t,count)");
    oracle->require_subcommand(1);

    auto* or_pan = oracle->add_subcommand("panhandle", "Count points of t * P_{Pan_{r,s,n}}");
    or_pan->add_option("--r", a.r)->required();
    or_pan->add_option("--s", a.s)->required();
    or_pan->add_option("--n", a.n)->required();
    or_pan->add_option("--t", a.dilations, "Dilation factor(s)")->required();
    or_pan->callback([&] {
        pavemat::PanhandleParams p(a.r, a.s, a.n);
        for (int t : a.dilations) std::cout << t << "," << pavemat::count_panhandle_points(p, t).str() << "\n";
    });

    auto* or_mat = oracle->add_subcommand("matroid", "Count points of t * P_M for an explicit matroid");
    or_mat->add_option("--matroid", a.matroid_path, "Matroid JSON file")->required();
    or_mat->add_option("--t", a.dilations, "Dilation factor(s)")->required();
    or_mat->callback([&] {
        auto m = pavemat::Matroid::from_json(read_json_file(a.matroid_path));
        for (int t : a.dilations) std::cout << t << "," << pavemat::count_matroid_points(m, t).str() << "\n";
    });

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Exhaustive conjecture verification (report JSON)");
    verify->require_subcommand(1);

    auto emit_report = [&rc](const pavemat::VerificationReport& report) {
        std::cout << report.to_json().dump() << "\n";
        if (!report.certified) rc = 1;
    };

    auto* v_big = verify->add_subcommand("big-conjecture", "bar_xi(q,s,k,l,m) = |CG(q,s,k,l,m)|");
    v_big->add_option("--max-s", a.big_max_s, "Largest s")->capture_default_str();
    v_big->add_option("--jobs", a.jobs);
    v_big->callback([&] { emit_report(pavemat::verify_big_conjecture(a.big_max_s, a.jobs)); });

    auto* v_phi = verify->add_subcommand("phi-positive", "phi_{r,s,n} has positive coefficients");
    v_phi->add_option("--max-s", a.phi_max_s, "Largest s")->capture_default_str();
    v_phi->add_option("--n-span", a.phi_span, "Check n up to s + span")->capture_default_str();
    v_phi->add_option("--jobs", a.jobs);
    v_phi->callback([&] { emit_report(pavemat::verify_phi_positive(a.phi_max_s, a.phi_span, a.jobs)); });

    auto* v_tphi = verify->add_subcommand("tilde-phi-positive", "tilde_phi_{r,s,n} has positive coefficients");
    v_tphi->add_option("--max-s", a.tphi_max_s, "Largest s")->capture_default_str();
    v_tphi->add_option("--n-span", a.tphi_span, "Check n up to s + span")->capture_default_str();
    v_tphi->add_option("--jobs", a.jobs);
    v_tphi->callback([&] { emit_report(pavemat::verify_tilde_phi_positive(a.tphi_max_s, a.tphi_span, a.jobs)); });

    auto* v_gen = verify->add_subcommand("genfunc", "Generating-function identity, symbolically");
    v_gen->add_option("--max-s", a.gen_max_s, "Largest s")->capture_default_str();
    v_gen->add_option("--n-span", a.gen_span, "Check n up to s + span")->capture_default_str();
    v_gen->add_option("--max-u", a.gen_max_u, "Largest u")->capture_default_str();
    v_gen->add_option("--jobs", a.jobs);
    v_gen->callback([&] { emit_report(pavemat::verify_genfunc(a.gen_max_s, a.gen_span, a.gen_max_u, a.jobs)); });

    auto* v_lah = verify->add_subcommand("weighted-lah", "W(q,n,k) = eta(q,n,k) = eta_elm_form(q,n,k)");
    v_lah->add_option("--n", a.lah_max_n, "Largest n")->capture_default_str();
    v_lah->add_option("--jobs", a.jobs);
    v_lah->callback([&] { emit_report(pavemat::verify_weighted_lah(a.lah_max_n, a.jobs)); });

    // sweep ----------------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "CSV sweep over all panhandle parameters with n <= max-n");
    sweep->add_option("--max-n", a.sweep_max_n, "Largest ground-set size")->capture_default_str();
    sweep->add_option("--jobs", a.jobs);
    sweep->callback([&] {
        std::vector<pavemat::PanhandleParams> params;
        for (int n = 2; n <= a.sweep_max_n; ++n)
            for (int s = 1; s < n; ++s)
                for (int r = 1; r <= s; ++r) params.emplace_back(r, s, n);
        std::vector<std::string> rows(params.size());
        pavemat::parallel_for(params.size(), a.jobs, [&](std::size_t i) {
            const auto& p = params[i];
            pavemat::Int bases =
                pavemat::binomial(p.s, p.r) + pavemat::binomial(p.s, p.r - 1) * (p.n - p.s);
            pavemat::Polynomial ehr = pavemat::ehrhart_panhandle(p);
            std::ostringstream row;
            row << p.r << "," << p.s << "," << p.n << "," << bases.str() << ","
                << pavemat::volume_panhandle(p).str() << ","
                << (ehr.has_positive_coefficients() ? 1 : 0);
            rows[i] = row.str();
        });
        std::cout << "r,s,n,bases,volume,ehrhart_positive\n";
        for (const auto& row : rows) std::cout << row << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

int main(int argc, char** argv) { return run(argc, argv); }
