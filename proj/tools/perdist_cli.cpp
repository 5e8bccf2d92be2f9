// perdist: CLI over the periodic-distribution toolkit. Subcommands build
// corpus coefficient fields, take coefficient products, run the
// compatibility and wave-front analyses, count lattice points in
// translated cones, convolve shift-invariant elements, and run the
// acceptance suite. All outputs are deterministic for fixed inputs and
// seed; floats are serialized with 17 significant digits.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "perdist/acceptance.hpp"
#include "perdist/distributions.hpp"
#include "perdist/io.hpp"
#include "perdist/product.hpp"
#include "perdist/shiftinv.hpp"
#include "perdist/wavefront.hpp"

namespace fs = std::filesystem;
using namespace perdist;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdictFalse = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

std::array<double, kMaxDim> parse_point(const std::string& s, int dim) {
    const auto v = parse_double_list(s);
    if (static_cast<int>(v.size()) != dim)
        throw CLI::ValidationError("expected " + std::to_string(dim) + " comma-separated values: " + s);
    std::array<double, kMaxDim> p{0, 0, 0};
    for (int i = 0; i < dim; ++i) p[i] = v[static_cast<std::size_t>(i)];
    return p;
}

MultiIndex parse_index(const std::string& s) {
    const auto v = parse_int_list(s);
    if (v.empty() || v.size() > kMaxDim)
        throw CLI::ValidationError("expected 1..3 comma-separated integers: " + s);
    MultiIndex k(static_cast<int>(v.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) k.c[i] = v[i];
    return k;
}

ClosedFormSpec spec_from_flags(const std::string& kind, int dim, const std::string& harmonic,
                               const std::string& factors, const std::string& cone_path,
                               double inside_exp, double outside_exp) {
    if (kind == "dirac_comb") return ClosedFormSpec::dirac_comb(dim);
    if (kind == "constant") return ClosedFormSpec::constant(dim);
    if (kind == "sawtooth") return ClosedFormSpec::sawtooth();
    if (kind == "square_wave") return ClosedFormSpec::square_wave();
    if (kind == "harmonic") {
        if (harmonic.empty()) throw CLI::ValidationError("--harmonic-index required for harmonic");
        return ClosedFormSpec::harmonic(parse_index(harmonic));
    }
    if (kind == "tensor") {
        std::vector<std::string> names;
        std::stringstream ss(factors);
        std::string item;
        while (std::getline(ss, item, ',')) names.push_back(item);
        if (names.size() < 2) throw CLI::ValidationError("--factors needs two or more kinds");
        ClosedFormSpec spec = spec_from_flags(names[0], 1, "", "", "", 0, 0);
        for (std::size_t i = 1; i < names.size(); ++i)
            spec = ClosedFormSpec::tensor(std::move(spec), spec_from_flags(names[i], 1, "", "", "", 0, 0));
        return spec;
    }
    if (kind == "cone_supported") {
        if (cone_path.empty()) throw CLI::ValidationError("--cone required for cone_supported");
        return ClosedFormSpec::cone_supported(io::read_cone(cone_path), inside_exp, outside_exp);
    }
    throw CLI::ValidationError("unknown corpus kind: " + kind);
}

std::vector<LatticeCone> read_cones(const std::string& list) {
    std::vector<LatticeCone> cones;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) cones.push_back(io::read_cone(item));
    if (cones.empty()) throw CLI::ValidationError("empty cone list");
    return cones;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"perdist: products, cones, and Sobolev wave fronts of periodic distributions"};
    app.require_subcommand(1);

    // ---------------------------------------------------------------- corpus
    auto* corpus = app.add_subcommand("corpus", "emit a closed-form coefficient field");
    std::string c_kind, c_harmonic, c_factors, c_cone, c_out;
    int c_dim = 1, c_radius = 16;
    double c_inside = 0.0, c_outside = 0.0;
    corpus->add_option("--kind", c_kind,
                       "dirac_comb|constant|harmonic|sawtooth|square_wave|tensor|cone_supported")
        ->required();
    corpus->add_option("--dim", c_dim, "dimension for dirac_comb/constant (default 1)");
    corpus->add_option("--radius", c_radius, "truncation radius N")->required();
    corpus->add_option("--harmonic-index", c_harmonic, "e.g. \"3,-1\"");
    corpus->add_option("--factors", c_factors, "tensor factors, e.g. \"square_wave,constant\"");
    corpus->add_option("--cone", c_cone, "cone JSON for cone_supported");
    corpus->add_option("--inside-exp", c_inside, "cone_supported exponent on the cone");
    corpus->add_option("--outside-exp", c_outside, "cone_supported exponent off the cone");
    corpus->add_option("-o,--out", c_out, "output coefficient JSON")->required();

    // --------------------------------------------------------------- product
    auto* product = app.add_subcommand("product", "Cauchy product of two coefficient files");
    std::string p_a, p_b, p_out, p_method = "fft";
    product->add_option("a", p_a, "first coefficient file")->required();
    product->add_option("b", p_b, "second coefficient file")->required();
    product->add_option("--method", p_method, "direct|fft (default fft)");
    product->add_option("-o,--out", p_out, "output coefficient JSON")->required();

    // ----------------------------------------------------------- compat-check
    auto* compat = app.add_subcommand("compat-check",
                                      "compatible-coefficient-estimates verdict for two fields");
    std::string q_f1, q_f2, q_cones1, q_cones2, q_out, q_traces;
    bool q_check = false;
    compat->add_option("f1", q_f1, "first coefficient file")->required();
    compat->add_option("f2", q_f2, "second coefficient file")->required();
    compat->add_option("--cones1", q_cones1, "comma-separated cone JSONs for f1")->required();
    compat->add_option("--cones2", q_cones2, "comma-separated cone JSONs for f2")->required();
    compat->add_option("-o,--out", q_out, "report JSON")->required();
    compat->add_option("--traces-dir", q_traces, "directory for per-cone trace CSVs");
    compat->add_flag("--check", q_check, "exit 1 when the verdict is false");

    // ------------------------------------------------------------ cone-count
    auto* count = app.add_subcommand("cone-count", "translated-cone intersection counts");
    std::string n_c1, n_c2, n_out, n_radii = "8,16,32,64,128";
    int n_dirs = 16;
    count->add_option("--c1", n_c1, "first cone JSON")->required();
    count->add_option("--c2", n_c2, "second cone JSON")->required();
    count->add_option("--directions", n_dirs, "number of sample directions (default 16)");
    count->add_option("--radii", n_radii, "comma-separated radii (default 8,16,32,64,128)");
    count->add_option("-o,--out", n_out, "output CSV (n, |n|, c(n))")->required();

    // ------------------------------------------------------------- wavefront
    auto* wf = app.add_subcommand("wavefront", "direction scan of Sobolev regularity");
    std::string w_field, w_x0, w_out, w_traces, w_sgrid = "1";
    int w_dirs = 16, w_radius = 128, w_smooth = 8;
    double w_aperture = 20.0, w_eta = 0.9, w_eps = 0.25;
    bool w_thresholds = false, w_check = false;
    wf->add_option("field", w_field, "coefficient file")->required();
    wf->add_option("--x0", w_x0, "base point, e.g. \"0.5,0.37\"")->required();
    wf->add_option("--s", w_sgrid, "s values, e.g. \"0.5\" or \"0,0.5,1\"");
    wf->add_option("--directions", w_dirs, "number of directions (default 16)");
    wf->add_option("--aperture-deg", w_aperture, "cone half-angle in degrees (default 20)");
    wf->add_option("--radius", w_radius, "analysis radius N (default 128)");
    wf->add_option("--eta", w_eta, "window support width (default 0.9)");
    wf->add_option("--eps", w_eps, "window plateau width (default 0.25)");
    wf->add_option("--smoothness", w_smooth, "window smoothness order m (default 8)");
    wf->add_flag("--with-thresholds", w_thresholds, "compute s* per direction");
    wf->add_option("-o,--out", w_out, "report JSON")->required();
    wf->add_option("--traces-dir", w_traces, "directory for per-direction trace CSVs");
    wf->add_flag("--check", w_check, "exit 1 when any scanned direction is non-regular");

    // ------------------------------------------------------------ si-product
    auto* si = app.add_subcommand("si-product", "convolution product of V_s elements");
    std::string s_g1, s_c1, s_g2, s_c2, s_prefix;
    double s_s1 = 0.0, s_s2 = 0.0;
    si->add_option("--gen1", s_g1, "generator samples CSV (t,value)")->required();
    si->add_option("--coeff1", s_c1, "coefficient JSON")->required();
    si->add_option("--gen2", s_g2, "generator samples CSV")->required();
    si->add_option("--coeff2", s_c2, "coefficient JSON")->required();
    si->add_option("--s1", s_s1, "declared smoothness of the first element");
    si->add_option("--s2", s_s2, "declared smoothness of the second element");
    si->add_option("-o,--out-prefix", s_prefix, "writes <prefix>_gen.csv and <prefix>_coeffs.json")
        ->required();

    // ------------------------------------------------------------ acceptance
    auto* acc = app.add_subcommand("acceptance", "run the acceptance suite");
    std::uint64_t a_seed = 0;
    acc->add_option("--seed", a_seed, "seed for the randomized checks (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*corpus) {
            const auto spec =
                spec_from_flags(c_kind, c_dim, c_harmonic, c_factors, c_cone, c_inside, c_outside);
            io::write_field(c_out, from_closed_form(spec, c_radius));
            return kExitOk;
        }

        if (*product) {
            const auto a = io::read_field(p_a);
            const auto b = io::read_field(p_b);
            if (p_method == "direct")
                io::write_field(p_out, cauchy_product_direct(a, b));
            else if (p_method == "fft")
                io::write_field(p_out, cauchy_product_fft(a, b));
            else
                throw std::runtime_error("--method must be direct or fft");
            return kExitOk;
        }

        if (*compat) {
            const auto f1 = io::read_field(q_f1);
            const auto f2 = io::read_field(q_f2);
            const auto cones1 = read_cones(q_cones1);
            const auto cones2 = read_cones(q_cones2);
            const auto rep = check_compatibility(f1, cones1, f2, cones2);
            io::write_text(q_out, io::compat_report_to_json(rep));
            if (!q_traces.empty()) {
                fs::create_directories(q_traces);
                const auto dump = [&](const CoefficientField& f,
                                      const std::vector<LatticeCone>& cones, const char* tag) {
                    const auto radii = dyadic_radii(f.radius());
                    for (std::size_t i = 0; i < cones.size(); ++i) {
                        io::write_trace_csv(q_traces + "/" + tag + std::to_string(i + 1) +
                                                "_inside.csv",
                                            cone_sum(f, cones[i], 0.0, radii, false));
                        io::write_trace_csv(q_traces + "/" + tag + std::to_string(i + 1) +
                                                "_complement.csv",
                                            cone_sum(f, cones[i], 0.0, radii, true));
                    }
                };
                dump(f1, cones1, "f1_cone");
                dump(f2, cones2, "f2_cone");
            }
            std::cout << "verdict: " << (rep.verdict ? "compatible" : "not compatible") << "\n";
            return (q_check && !rep.verdict) ? kExitVerdictFalse : kExitOk;
        }

        if (*count) {
            const auto c1 = io::read_cone(n_c1);
            const auto c2 = io::read_cone(n_c2);
            const auto radii = parse_int_list(n_radii);
            const auto dirs = uniform_directions(c1.dim(), n_dirs);
            std::vector<std::pair<MultiIndex, long long>> rows;
            for (int r : radii)
                for (const auto& u : dirs) {
                    MultiIndex n(c1.dim(), 0);
                    for (int i = 0; i < c1.dim(); ++i)
                        n.c[i] = static_cast<int>(std::llround(r * u[i]));
                    if (n.norm2() == 0) continue;
                    rows.emplace_back(n, intersection_count(c1, c2, n));
                }
            io::write_text(n_out, io::counts_to_csv(c1.dim(), rows));
            return kExitOk;
        }

        if (*wf) {
            const auto f = io::read_field(w_field);
            const auto x0 = parse_point(w_x0, f.dim());
            const LocalizationWindow window(f.dim(), {0, 0, 0}, w_eta, w_eps, w_smooth);
            const auto s_grid = parse_double_list(w_sgrid);
            const auto rep =
                wavefront_scan(f, x0, s_grid, w_dirs, w_aperture, window, w_radius, w_thresholds);
            io::write_text(w_out, io::wavefront_report_to_json(rep));
            if (!w_traces.empty()) {
                fs::create_directories(w_traces);
                for (std::size_t i = 0; i < rep.rows.size(); ++i)
                    io::write_trace_csv(w_traces + "/direction_" + std::to_string(i) + ".csv",
                                        rep.rows[i].trace);
            }
            bool any_bad = false;
            for (const auto& row : rep.rows)
                if (row.verdicts[0] != Verdict::convergent) any_bad = true;
            std::cout << "non-regular arcs: " << rep.nonregular_arcs.size() << "\n";
            return (w_check && any_bad) ? kExitVerdictFalse : kExitOk;
        }

        if (*si) {
            ShiftInvariantElement e1, e2;
            e1.generators.push_back(io::read_generator_csv(s_g1));
            e1.coefficients.push_back(io::read_field(s_c1));
            e1.s = s_s1;
            e2.generators.push_back(io::read_generator_csv(s_g2));
            e2.coefficients.push_back(io::read_field(s_c2));
            e2.s = s_s2;
            const auto p = si_product(e1, e2);
            io::write_generator_csv(s_prefix + "_gen.csv", p.generators[0]);
            io::write_field(s_prefix + "_coeffs.json", p.coefficients[0]);
            std::cout << "product smoothness s = " << io::fmt17(p.s) << "\n";
            return kExitOk;
        }

        if (*acc) {
            const auto results = acceptance::run_all(a_seed, &std::cout);
            bool all = true;
            double total = 0.0;
            for (const auto& r : results) {
                all = all && r.pass;
                total += r.seconds;
            }
            std::cout << (all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
                      << results.size() << " criteria, " << io::fmt17(total) << " s)\n";
            return all ? kExitOk : kExitVerdictFalse;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
