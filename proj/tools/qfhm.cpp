// Command line front end: curvature sweeps, modulus sweeps, equivalence
// verdicts, rank profiles and the built-in check suite.
//
// Exit codes: 0 success (equivalent / all checks pass), 1 negative outcome
// (inequivalent / failing checks), 2 any error, 3 inconclusive.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "qfhm/checksuite.hpp"
#include "qfhm/curvature.hpp"
#include "qfhm/equivalence.hpp"
#include "qfhm/grid.hpp"
#include "qfhm/json_io.hpp"
#include "qfhm/linalg.hpp"
#include "qfhm/localization.hpp"
#include "qfhm/mapanalysis.hpp"

namespace {

using namespace qfhm;

std::vector<std::string> coord_header(int dim) {
    std::vector<std::string> h;
    if (dim == 1) {
        h = {"x", "y"};
    } else {
        for (int v = 1; v <= dim; ++v) {
            h.push_back("x" + std::to_string(v));
            h.push_back("y" + std::to_string(v));
        }
    }
    return h;
}

void push_coords(std::vector<std::string>& row, const ComplexPoint& z) {
    for (int v = 0; v < z.dim(); ++v) {
        row.push_back(format_sci(z[v].real()));
        row.push_back(format_sci(z[v].imag()));
    }
}

Metadata base_meta(const std::string& tool) {
    Metadata m;
    m.add("tool", tool);
    return m;
}

int run_curvature(const std::string& kernel_path, const std::string& grid_str,
                  const FDScheme& scheme, const std::string& out_path) {
    KernelSpec spec = load_kernel_file(kernel_path);
    validate_scheme(scheme);
    auto grid = domain_grid(spec.domain(), parse_grid(grid_str));
    const int n = spec.domain().dim();

    std::vector<std::string> header = coord_header(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            header.push_back("c" + std::to_string(i) + std::to_string(j) + "_re");
            header.push_back("c" + std::to_string(i) + std::to_string(j) + "_im");
        }

    std::vector<std::vector<std::string>> rows;
    rows.reserve(grid.size());
    for (const auto& z : grid) {
        CMat c = curvature_form(spec, z, scheme);
        std::vector<std::string> row;
        push_coords(row, z);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                row.push_back(format_sci(c(i, j).real()));
                row.push_back(format_sci(c(i, j).imag()));
            }
        rows.push_back(std::move(row));
    }

    Metadata meta = base_meta("qfhm curvature");
    meta.add("spec", spec_hash(spec));
    meta.add("grid", grid_str);
    for (auto& kv : scheme_metadata(scheme).kv) meta.kv.push_back(kv);
    meta.add("convention", "log-gap");
    write_csv_file(out_path, meta, header, rows);
    std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
    return 0;
}

int run_modulus(const std::string& path_a, const std::string& path_b, const std::string& grid_str,
                const std::string& out_path) {
    KernelSpec a = load_kernel_file(path_a);
    KernelSpec b = load_kernel_file(path_b);
    auto grid = domain_grid(a.domain(), parse_grid(grid_str));
    const int m = a.rank();

    std::vector<std::string> header = coord_header(a.domain().dim());
    for (int i = 1; i <= m; ++i) header.push_back("mu_" + std::to_string(i));

    std::vector<std::vector<std::string>> rows;
    rows.reserve(grid.size());
    for (const auto& z : grid) {
        LocalData d = localized_modulus(a, b, z);
        RVec ev = modulus_spectrum(d);
        std::vector<std::string> row;
        push_coords(row, z);
        for (Eigen::Index i = 0; i < ev.size(); ++i) row.push_back(format_sci(ev(i)));
        rows.push_back(std::move(row));
    }

    Metadata meta = base_meta("qfhm modulus");
    meta.add("spec_a", spec_hash(a));
    meta.add("spec_b", spec_hash(b));
    meta.add("grid", grid_str);
    write_csv_file(out_path, meta, header, rows);
    std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
    return 0;
}

int run_equiv(const std::string& path_a, const std::string& path_b, const std::string& grid_str,
              double tol, const FDScheme& scheme, const std::string& out_path) {
    KernelSpec a = load_kernel_file(path_a);
    KernelSpec b = load_kernel_file(path_b);
    auto grid = domain_grid(a.domain(), parse_grid(grid_str));

    EquivalenceVerdict v = a.rank() == 1 ? decide_rank_one(a, b, grid, tol, scheme)
                                         : grammian_equality(a, b, grid, tol);

    Json meta;
    meta["tool"] = "qfhm equiv";
    meta["spec_a"] = spec_hash(a);
    meta["spec_b"] = spec_hash(b);
    meta["grid"] = grid_str;
    meta["method"] = a.rank() == 1 ? "rank_one_curvature" : "grammian_equality";
    meta["scheme"] = "h=" + format_sci(scheme.h) + " richardson=" + (scheme.richardson ? "1" : "0");
    meta["convention"] = "log-gap";
    Json report = verdict_to_json(v, std::move(meta));
    if (!out_path.empty()) save_text_file(out_path, report.dump(2) + "\n");

    std::cout << "verdict: " << verdict_name(v.verdict)
              << " (max residual " << format_sci(v.max_residual);
    if (v.witness) {
        std::cout << ", witness";
        for (int i = 0; i < v.witness->dim(); ++i)
            std::cout << " " << format_sci((*v.witness)[i].real()) << "+"
                      << format_sci((*v.witness)[i].imag()) << "i";
    }
    std::cout << ")\n";

    switch (v.verdict) {
        case Verdict::Equivalent: return 0;
        case Verdict::Inequivalent: return 1;
        case Verdict::Inconclusive: return 3;
    }
    return 2;
}

int run_rank_profile(const std::string& map_path, const std::string& grid_str, double tol,
                     double margin, const std::string& out_path) {
    HoloMatrix psi = load_matrix_file(map_path);
    const int n = std::max(psi.nvars(), 1);
    Domain dom = n == 1 ? Domain::disk(margin) : Domain::polydisk(n, margin);
    auto grid = domain_grid(dom, parse_grid(grid_str));
    RankProfile prof = rank_profile(psi, grid, tol);

    std::vector<std::string> header = coord_header(n);
    header.push_back("rank");
    header.push_back("smin");
    std::vector<std::vector<std::string>> rows;
    rows.reserve(prof.points.size());
    for (const auto& p : prof.points) {
        std::vector<std::string> row;
        push_coords(row, p.z);
        row.push_back(std::to_string(p.rank));
        row.push_back(format_sci(p.smin));
        rows.push_back(std::move(row));
    }

    Metadata meta = base_meta("qfhm rank-profile");
    meta.add("map", fnv1a_hex(holo_matrix_to_json(psi).dump()));
    meta.add("grid", grid_str);
    meta.add("tol", format_sci(tol));
    write_csv_file(out_path, meta, header, rows);

    std::cout << "generic rank " << prof.generic_rank << " over " << prof.points.size()
              << " points\n";
    for (const auto& s : prof.singular_sets) {
        std::cout << "rank " << s.rank << " locus: " << s.point_indices.size() << " point(s), "
                  << (s.interior_at_grid_resolution ? "fills area at grid resolution"
                                                    : "thin at grid resolution");
        std::cout << ", bbox";
        for (std::size_t v = 0; v < s.bbox_re_min.size(); ++v)
            std::cout << " re[" << format_sci(s.bbox_re_min[v]) << "," << format_sci(s.bbox_re_max[v])
                      << "] im[" << format_sci(s.bbox_im_min[v]) << "," << format_sci(s.bbox_im_max[v])
                      << "]";
        std::cout << "\n";
    }
    return 0;
}

int run_check(bool oracle_only, const std::string& out_path) {
    auto results = run_checks(oracle_only);
    std::printf("%-14s %-28s %-22s %-22s %s\n", "section", "name", "residual", "tolerance",
                "status");
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::printf("%-14s %-28s %-22s %-22s %s\n", r.section.c_str(), r.name.c_str(),
                    format_sci(r.residual).c_str(), format_sci(r.tolerance).c_str(),
                    r.pass ? "pass" : "FAIL");
    }
    std::printf("%s\n", all_pass ? "all checks passed" : "CHECK FAILURES PRESENT");

    if (!out_path.empty()) {
        Json arr = Json::array();
        for (const auto& r : results)
            arr.push_back(Json{{"test", r.section + "/" + r.name},
                               {"residual", r.residual},
                               {"tolerance", r.tolerance},
                               {"pass", r.pass}});
        save_text_file(out_path, arr.dump(2) + "\n");
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matrix kernel localization toolkit"};
    app.require_subcommand(1);

    std::string kernel_path, path_a, path_b, map_path, out_path;
    std::string grid_curv, grid_mod, grid_equiv, grid_rank;
    double tol = 1e-5;
    double rank_tol = 1e-9;
    double margin = 0.05;
    FDScheme scheme;
    bool no_richardson = false;
    bool oracle_only = false;

    auto* curvature = app.add_subcommand("curvature", "curvature of a kernel metric over a grid");
    curvature->add_option("--kernel", kernel_path, "kernel spec JSON")->required();
    curvature->add_option("--grid", grid_curv, "grid as ROWSxCOLS")->default_val("41x41");
    curvature->add_option("--step", scheme.h, "finite difference step");
    curvature->add_flag("--no-richardson", no_richardson, "disable Richardson extrapolation");
    curvature->add_option("--out", out_path, "output CSV path")->required();

    auto* modulus = app.add_subcommand("modulus", "local modulus spectrum of a kernel pair");
    modulus->add_option("--kernel-a", path_a, "first kernel spec JSON")->required();
    modulus->add_option("--kernel-b", path_b, "second kernel spec JSON")->required();
    modulus->add_option("--grid", grid_mod, "grid as ROWSxCOLS")->default_val("41x41");
    modulus->add_option("--out", out_path, "output CSV path")->required();

    auto* equiv = app.add_subcommand("equiv", "equivalence verdict for a kernel pair");
    equiv->add_option("--kernel-a", path_a, "first kernel spec JSON")->required();
    equiv->add_option("--kernel-b", path_b, "second kernel spec JSON")->required();
    equiv->add_option("--grid", grid_equiv, "grid as ROWSxCOLS")->default_val("25x25");
    equiv->add_option("--tol", tol, "decision tolerance");
    equiv->add_option("--step", scheme.h, "finite difference step");
    equiv->add_flag("--no-richardson", no_richardson, "disable Richardson extrapolation");
    equiv->add_option("--out", out_path, "verdict JSON path");

    auto* rankp = app.add_subcommand("rank-profile", "pointwise rank of a holomorphic map");
    rankp->add_option("--map", map_path, "matrix of expressions, JSON")->required();
    rankp->add_option("--grid", grid_rank, "grid as ROWSxCOLS")->default_val("41x41");
    rankp->add_option("--tol", rank_tol, "singular value cutoff scale");
    rankp->add_option("--margin", margin, "domain margin");
    rankp->add_option("--out", out_path, "output CSV path")->required();

    auto* check = app.add_subcommand("check", "run the built-in self checks");
    check->add_flag("--oracle", oracle_only, "restrict to the sampled-model checks");
    check->add_option("--out", out_path, "write results as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    scheme.richardson = !no_richardson;
    try {
        if (app.got_subcommand(curvature))
            return run_curvature(kernel_path, grid_curv, scheme, out_path);
        if (app.got_subcommand(modulus)) return run_modulus(path_a, path_b, grid_mod, out_path);
        if (app.got_subcommand(equiv))
            return run_equiv(path_a, path_b, grid_equiv, tol, scheme, out_path);
        if (app.got_subcommand(rankp))
            return run_rank_profile(map_path, grid_rank, rank_tol, margin, out_path);
        if (app.got_subcommand(check)) return run_check(oracle_only, out_path);
    } catch (const qfhm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
