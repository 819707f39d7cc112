#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <tripod/tripod.hpp>

namespace {

using tripod::Beam;
using tripod::TripodParams;

struct CommonOpts {
    std::string config;
    std::string preset;
    std::string format = "text";
    std::string out;
};

// One output value: a number or a flag, flattened under a stable key.
struct Field {
    std::string key;
    double num = 0.0;
    bool flag = false;
    bool is_bool = false;
};

Field num_field(std::string key, double v) { return Field{std::move(key), v, false, false}; }
Field bool_field(std::string key, bool v) { return Field{std::move(key), 0.0, v, true}; }

void push_complex(std::vector<Field>& f, const std::string& key, std::complex<double> v) {
    f.push_back(num_field(key + "_re", v.real()));
    f.push_back(num_field(key + "_im", v.imag()));
}

// The three scalar output formats share one flat key-value list; every
// number is printed at 12 significant digits so repeated runs are
// byte-identical.
std::string render(const std::vector<Field>& fields, const std::string& format) {
    std::string s;
    if (format == "json") {
        s += "{";
        for (size_t i = 0; i < fields.size(); ++i) {
            if (i) s += ",";
            s += "\"" + fields[i].key + "\":";
            s += fields[i].is_bool ? (fields[i].flag ? "true" : "false")
                                   : tripod::json_number(fields[i].num);
        }
        s += "}\n";
    } else if (format == "csv") {
        for (size_t i = 0; i < fields.size(); ++i) {
            if (i) s += ",";
            s += fields[i].key;
        }
        s += "\n";
        for (size_t i = 0; i < fields.size(); ++i) {
            if (i) s += ",";
            s += fields[i].is_bool ? (fields[i].flag ? "true" : "false")
                                   : tripod::csv_cell(fields[i].num);
        }
        s += "\n";
    } else {
        for (const auto& f : fields) {
            s += f.key + " = ";
            s += f.is_bool ? (f.flag ? "true" : "false") : tripod::fmt12(f.num);
            s += "\n";
        }
    }
    return s;
}

TripodParams resolve_params(const CommonOpts& c) {
    if (!c.config.empty()) return tripod::load_params_file(c.config);
    if (!c.preset.empty()) return tripod::preset_by_name(c.preset);
    return tripod::quantum_preset();
}

void emit(const std::string& text, const CommonOpts& c) {
    if (c.out.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw tripod::ConfigError("cannot open output file '" + c.out + "'");
    f << text;
}

void push_phase_table(std::vector<Field>& f, const tripod::PhaseTable& ph) {
    f.push_back(num_field("phi0_p", ph.phi0_p));
    f.push_back(num_field("phi0_t", ph.phi0_t));
    f.push_back(num_field("phi_lin_p", ph.phi_lin_p));
    f.push_back(num_field("phi_lin_t", ph.phi_lin_t));
    f.push_back(num_field("phi_nlin_p", ph.phi_nlin_p));
    f.push_back(num_field("phi_nlin_t", ph.phi_nlin_t));
    f.push_back(num_field("phi_conditional", ph.phi_conditional));
}

std::string run_susceptibility(const TripodParams& p, const std::string& format) {
    const tripod::SusceptibilityReport rep = tripod::susceptibility_report(p);
    std::vector<Field> f;
    push_complex(f, "chi1_p", rep.chi1_p);
    push_complex(f, "chi1_t", rep.chi1_t);
    push_complex(f, "chi3_p", rep.chi3_p);
    push_complex(f, "chi3_t", rep.chi3_t);
    return render(f, format);
}

std::string run_phases(const TripodParams& p, const std::string& format) {
    std::vector<Field> f;
    push_phase_table(f, tripod::phase_table(p));
    return render(f, format);
}

std::string run_truth_table(const TripodParams& p, const std::string& format) {
    const tripod::TruthTable tt = tripod::build_truth_table(p);
    const tripod::UniversalityReport uni = tripod::is_universal(tt);
    std::vector<Field> f;
    f.push_back(num_field("theta_mm", tt.theta_mm));
    f.push_back(num_field("theta_mp", tt.theta_mp));
    f.push_back(num_field("theta_pp", tt.theta_pp));
    f.push_back(num_field("theta_pm", tt.theta_pm));
    f.push_back(num_field("phi_conditional", tripod::conditional_phase(tt)));
    f.push_back(bool_field("universal", uni.universal));
    f.push_back(num_field("witness", uni.witness));
    return render(f, format);
}

std::string run_find(const TripodParams& p, double target, bool by_length,
                     const std::string& format) {
    const tripod::SearchResult r =
        by_length ? tripod::find_length(p, target) : tripod::find_density(p, target);
    TripodParams q = p;
    if (by_length) {
        q.length = r.value;
    } else {
        q.density = r.value;
    }
    std::vector<Field> f;
    f.push_back(num_field(by_length ? "length" : "density", r.value));
    f.push_back(bool_field("non_monotone", r.non_monotone));
    push_phase_table(f, tripod::phase_table(q));
    return render(f, format);
}

std::string run_sweep(const TripodParams& p, const tripod::SweepSpec& spec) {
    const std::vector<tripod::SweepRow> rows = tripod::sweep(p, spec);
    std::string s =
        "value,status,chi1_p_re,chi1_p_im,chi1_t_re,chi1_t_im,chi3_p_re,chi3_p_im,"
        "chi3_t_re,chi3_t_im,phi0_p,phi0_t,phi_lin_p,phi_lin_t,phi_nlin_p,phi_nlin_t,"
        "phi_conditional,window,witness\n";
    for (const auto& r : rows) {
        s += tripod::fmt12(r.value);
        s += "," + r.status;
        const std::complex<double> chis[] = {r.chi.chi1_p, r.chi.chi1_t, r.chi.chi3_p,
                                             r.chi.chi3_t};
        for (const auto& c : chis) {
            s += "," + tripod::csv_cell(c.real());
            s += "," + tripod::csv_cell(c.imag());
        }
        const double phases[] = {r.phases.phi0_p,     r.phases.phi0_t,   r.phases.phi_lin_p,
                                 r.phases.phi_lin_t,  r.phases.phi_nlin_p, r.phases.phi_nlin_t,
                                 r.phases.phi_conditional};
        for (double v : phases) s += "," + tripod::csv_cell(v);
        s += "," + tripod::csv_cell(r.window);
        s += "," + tripod::csv_cell(r.witness);
        s += "\n";
    }
    return s;
}

double relative_error(std::complex<double> est, std::complex<double> ana) {
    const double diff = std::abs(est - ana);
    if (std::abs(ana) > 0.0) return diff / std::abs(ana);
    return diff > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

// Analytic-vs-extracted comparison. The Kerr scan for each beam is derived
// from the partner beam's configured amplitude K as {0, K/2, K, 2K}; a beam
// whose own amplitude is zero cannot be probed and is skipped.
std::string run_oracle_check(const TripodParams& p, const std::string& format) {
    std::vector<Field> f;
    bool any = false;
    for (Beam b : {Beam::probe, Beam::trigger}) {
        const double weak = (b == Beam::probe) ? p.omega_p : p.omega_t;
        if (!(weak > 0.0)) continue;
        any = true;
        const double kerr = (b == Beam::probe) ? p.omega_t : p.omega_p;
        const std::vector<double> scan{0.0, 0.5 * kerr, kerr, 2.0 * kerr};
        const tripod::ChiExtraction ext = tripod::extract_chi(p, b, scan);
        const std::complex<double> chi1_ana = tripod::chi1_beam(p, b);
        const std::complex<double> chi3_ana = tripod::chi3_beam(p, b);
        const std::string tag = tripod::beam_name(b);
        push_complex(f, tag + "_chi1_analytic", chi1_ana);
        push_complex(f, tag + "_chi1_extracted", ext.chi1_est);
        f.push_back(num_field(tag + "_chi1_rel_err", relative_error(ext.chi1_est, chi1_ana)));
        push_complex(f, tag + "_chi3_analytic", chi3_ana);
        push_complex(f, tag + "_chi3_extracted", ext.chi3_est);
        f.push_back(num_field(tag + "_chi3_rel_err", relative_error(ext.chi3_est, chi3_ana)));
        f.push_back(num_field(tag + "_fit_residual", ext.fit_residual));
    }
    if (!any) {
        throw tripod::ConfigError(
            "oracle-check needs a positive omega_p or omega_t to have a beam to extract");
    }
    return render(f, format);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cross-Kerr polarization phase gate in a tripod EIT medium"};
    app.require_subcommand(1);

    CommonOpts common;
    auto add_common = [&common](CLI::App* sub) {
        auto* cfg = sub->add_option("--config", common.config,
                                    "JSON parameter file, merged over the quantum baseline");
        auto* pre =
            sub->add_option("--preset", common.preset, "named parameter set: quantum or classical");
        cfg->excludes(pre);
        pre->excludes(cfg);
        sub->add_option("--format", common.format, "output format (default text)")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", common.out, "write output to this file instead of stdout");
    };

    CLI::App* cmd_susc =
        app.add_subcommand("susceptibility", "linear and cross-Kerr susceptibilities");
    CLI::App* cmd_phases = app.add_subcommand("phases", "vacuum, linear, and nonlinear phases");
    CLI::App* cmd_tt =
        app.add_subcommand("truth-table", "gate truth table, conditional phase, universality");
    CLI::App* cmd_fl =
        app.add_subcommand("find-length", "interaction length for a target conditional phase");
    CLI::App* cmd_fd =
        app.add_subcommand("find-density", "atom density for a target conditional phase");
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "full pipeline over a parameter grid (CSV)");
    CLI::App* cmd_oracle =
        app.add_subcommand("oracle-check", "analytic susceptibilities vs master-equation extraction");
    for (CLI::App* sub : {cmd_susc, cmd_phases, cmd_tt, cmd_fl, cmd_fd, cmd_sweep, cmd_oracle})
        add_common(sub);

    double target = 0.0;
    cmd_fl->add_option("--target", target, "target conditional phase, rad")->required();
    cmd_fd->add_option("--target", target, "target conditional phase, rad")->required();

    tripod::SweepSpec spec;
    std::string scale = "linear";
    cmd_sweep->add_option("--param", spec.parameter, "parameter to sweep")->required();
    cmd_sweep->add_option("--start", spec.start, "grid start")->required();
    cmd_sweep->add_option("--stop", spec.stop, "grid stop")->required();
    cmd_sweep->add_option("--points", spec.points, "number of grid points")->required();
    cmd_sweep->add_option("--scale", scale, "grid spacing (default linear)")
        ->check(CLI::IsMember({"linear", "log"}));

    try {
        app.parse(argc, argv);
        const TripodParams p = resolve_params(common);
        std::string out;
        if (cmd_susc->parsed()) {
            out = run_susceptibility(p, common.format);
        } else if (cmd_phases->parsed()) {
            out = run_phases(p, common.format);
        } else if (cmd_tt->parsed()) {
            out = run_truth_table(p, common.format);
        } else if (cmd_fl->parsed()) {
            out = run_find(p, target, true, common.format);
        } else if (cmd_fd->parsed()) {
            out = run_find(p, target, false, common.format);
        } else if (cmd_sweep->parsed()) {
            spec.scale = (scale == "log") ? tripod::SweepSpec::Scale::log
                                          : tripod::SweepSpec::Scale::linear;
            out = run_sweep(p, spec);
        } else if (cmd_oracle->parsed()) {
            out = run_oracle_check(p, common.format);
        }
        emit(out, common);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 1;
    } catch (const tripod::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const tripod::NoBracketError& e) {
        std::cerr << "search error: " << e.what() << "\n";
        return 3;
    } catch (const tripod::Error& e) {
        std::cerr << "physics error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
