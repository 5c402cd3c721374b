#include "hankel_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hankel_cli/suites.hpp"
#include "hankel_cli/svg.hpp"
#include "hankel_lab/asymptotics.hpp"
#include "hankel_lab/csv.hpp"
#include "hankel_lab/error.hpp"
#include "hankel_lab/hankel.hpp"
#include "hankel_lab/ida.hpp"
#include "hankel_lab/lattice.hpp"
#include "hankel_lab/rearrange.hpp"
#include "hankel_lab/symbol.hpp"

namespace hankel_cli {

using namespace hankel_lab;

namespace {

double parse_number(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw ConfigError("bad " + what + " '" + text + "'");
    return v;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

struct RunConfig {
    std::string space;
    std::string symbol;
    std::optional<double> delta;
    std::optional<double> extent;
    int trunc = 32;
    std::optional<int> proj;
    int degree = kDefaultIdaDegree;
    std::optional<double> p;
    std::uint64_t seed = 1;
    std::string out;
    bool loglog = false;
    std::string in;
    std::string spectrum_in;
    std::string ida_in;
    std::string rho = "power:1";
    double kappa = 1.0;
    std::string suite;
};

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw ConfigError("cannot open '" + cfg.out + "' for writing");
    f << text;
    if (!f) throw ConfigError("write to '" + cfg.out + "' failed");
}

WeightModel model_of(const RunConfig& cfg) {
    if (cfg.space.empty()) throw ConfigError("--space is required");
    return parse_space(cfg.space);
}

Symbol symbol_of(const RunConfig& cfg) {
    if (cfg.symbol.empty()) throw ConfigError("--symbol is required");
    return catalog_symbol(cfg.symbol);
}

IdaProfile compute_profile(const RunConfig& cfg) {
    const WeightModel model = model_of(cfg);
    const Symbol f = symbol_of(cfg);
    const double delta = cfg.delta.value_or(model.is_fock() ? 0.5 : 0.2);
    const double extent = cfg.extent.value_or(model.is_fock() ? 4.0 : 0.995);
    IdaOptions opts;
    opts.max_degree = cfg.degree;
    return ida_profile(f, model, build_lattice(model, delta, extent), delta, opts);
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const WeightModel model = model_of(cfg);
    const Symbol f = symbol_of(cfg);
    if (cfg.trunc < 1) throw ConfigError("--trunc must be at least 1");
    const SpectrumResult s = spectrum(make_gram_spec(model, f, cfg.trunc, cfg.proj));
    std::ostringstream csv, diag;
    write_spectrum_csv(csv, s);
    write_spectrum_diagnostics(diag, s);
    emit(cfg, csv.str(), out);
    if (cfg.out.empty()) {
        err << diag.str();
    } else {
        std::ofstream d(cfg.out + ".diag", std::ios::binary);
        if (!d) throw ConfigError("cannot open '" + cfg.out + ".diag' for writing");
        d << diag.str();
    }
    return kOk;
}

int cmd_ida(const RunConfig& cfg, std::ostream& out) {
    std::ostringstream csv;
    write_profile_csv(csv, compute_profile(cfg));
    emit(cfg, csv.str(), out);
    return kOk;
}

WeightedSamples profile_samples(const CsvTable& t) {
    return WeightedSamples{t.values("G"), t.values("cell_measure")};
}

int cmd_rearrange(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    WeightedSamples samples;
    if (!cfg.in.empty()) {
        samples = profile_samples(read_csv_file(cfg.in));
    } else {
        const IdaProfile prof = compute_profile(cfg);
        samples = WeightedSamples{prof.G, prof.measure};
    }
    const RearrangementCurve curve = rearrangement(samples);
    std::ostringstream csv;
    write_curve_csv(csv, curve);
    emit(cfg, csv.str(), out);
    if (cfg.p) {
        if (!(*cfg.p > 0.0) || !std::isfinite(*cfg.p)) throw ConfigError("--p must be finite and positive");
        std::ostream& rep = cfg.out.empty() ? err : out;
        rep << "p=" << format_double(*cfg.p) << '\n'
            << "lp_norm=" << format_double(lp_norm(curve, *cfg.p)) << '\n'
            << "weak_lp=" << format_double(weak_lp(curve, *cfg.p)) << '\n';
    }
    return kOk;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
    if (cfg.spectrum_in.empty() || cfg.ida_in.empty()) throw ConfigError("compare needs --spectrum and --ida");
    if (!(cfg.kappa > 0.0)) throw ConfigError("--kappa must be positive");
    const double power = parse_rho(cfg.rho);
    const std::vector<double> s = read_csv_file(cfg.spectrum_in).values("s_n");
    const RearrangementCurve g = rearrangement(profile_samples(read_csv_file(cfg.ida_in)));
    std::vector<double> a, b;
    for (std::size_t n = 0; n < s.size(); ++n) {
        a.push_back(std::pow(s[n], power));
        b.push_back(std::pow(g.evaluate(cfg.kappa * double(n)), power));
    }
    const int n_hi = std::min<int>(50, int(s.size()) - 1);
    const DecayReport rep = compare_decay(a, b, 5, n_hi);
    std::ostringstream os;
    os << "rho=power:" << format_double(power) << '\n' << "kappa=" << format_double(cfg.kappa) << '\n';
    write_report(os, rep);
    emit(cfg, os.str(), out);
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const std::vector<Check> checks = run_suite(cfg.suite, cfg.seed);
    std::ostringstream os;
    const bool ok = print_checks(os, checks);
    emit(cfg, os.str(), out);
    return ok ? kOk : kChecksFailed;
}

int cmd_plot(const RunConfig& cfg, std::ostream& out) {
    if (cfg.in.empty()) throw ConfigError("plot needs --in");
    emit(cfg, render_svg(read_csv_file(cfg.in), cfg.loglog), out);
    return kOk;
}

std::optional<std::string> flag_value(const std::vector<std::string>& args, const std::string& name) {
    const std::string flag = "--" + name;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == flag && i + 1 < args.size()) return args[i + 1];
        if (args[i].rfind(flag + "=", 0) == 0) return args[i].substr(flag.size() + 1);
    }
    return std::nullopt;
}

bool has_flag(const std::vector<std::string>& args, const std::string& name) {
    const std::string flag = "--" + name;
    return std::any_of(args.begin() + 1, args.end(),
                       [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

} // namespace

WeightModel parse_space(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ConfigError("space must be fock:alpha or bergman:alpha, got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const double alpha = parse_number(text.substr(colon + 1), "alpha");
    try {
        if (kind == "fock") return WeightModel::fock(alpha);
        if (kind == "bergman") return WeightModel::bergman(alpha);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    throw ConfigError("unknown space '" + kind + "'");
}

double parse_rho(const std::string& text) {
    if (text.rfind("power:", 0) != 0) throw ConfigError("rho must be power:p, got '" + text + "'");
    const double p = parse_number(text.substr(6), "rho exponent");
    if (!(p > 0.0) || !std::isfinite(p)) throw ConfigError("rho exponent must be positive");
    return p;
}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys{"space", "symbol", "delta", "extent", "trunc", "proj",
                                               "degree", "p",      "seed",  "out",    "loglog", "in",
                                               "spectrum", "ida",  "rho",   "kappa",  "suite"};
    return keys;
}

std::map<std::string, std::string> read_config(std::istream& is) {
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const auto& keys = config_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        kv[key] = trim(line.substr(eq + 1));
    }
    return kv;
}

int run_cli(const std::vector<std::string>& input, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Hankel operator numerics on Fock and Bergman spaces"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");
    std::string config_path;

    const auto space = [&](CLI::App* c, bool required) {
        auto* o = c->add_option("--space", cfg.space, "fock:alpha or bergman:alpha");
        if (required) o->required();
    };
    const auto symbol = [&](CLI::App* c, bool required) {
        auto* o = c->add_option("--symbol", cfg.symbol, "catalog name or monomial a,b");
        if (required) o->required();
    };
    const auto geometry = [&](CLI::App* c) {
        c->add_option("--delta", cfg.delta, "disk radius factor (default 0.5 Fock, 0.2 Bergman)");
        c->add_option("--extent", cfg.extent, "lattice extent (default 4 Fock, 0.995 Bergman)");
        c->add_option("--degree", cfg.degree, "maximum fit degree");
    };
    const auto common = [&](CLI::App* c) {
        c->add_option("--out", cfg.out, "output path (default stdout)");
        c->add_option("--config", config_path, "key=value file; command-line flags win");
    };

    auto* sp = app.add_subcommand("spectrum", "singular values of the truncated Hankel operator");
    space(sp, true);
    symbol(sp, true);
    sp->add_option("--trunc", cfg.trunc, "number of singular values N");
    sp->add_option("--proj", cfg.proj, "projection dimension M");
    common(sp);

    auto* ida = app.add_subcommand("ida", "local holomorphic distance profile on a lattice");
    space(ida, true);
    symbol(ida, true);
    geometry(ida);
    common(ida);

    auto* re = app.add_subcommand("rearrange", "decreasing rearrangement of G");
    re->add_option("--in", cfg.in, "profile CSV from the ida command");
    space(re, false);
    symbol(re, false);
    geometry(re);
    re->add_option("--p", cfg.p, "also report Lp and weak Lp norms");
    common(re);

    auto* cmp = app.add_subcommand("compare", "compare s_n with G*(kappa n)");
    cmp->add_option("--spectrum", cfg.spectrum_in, "spectrum CSV")->required();
    cmp->add_option("--ida", cfg.ida_in, "profile CSV")->required();
    cmp->add_option("--rho", cfg.rho, "power:p");
    cmp->add_option("--kappa", cfg.kappa, "index scale");
    common(cmp);

    auto* ver = app.add_subcommand("verify", "run an invariant suite");
    ver->add_option("--suite", cfg.suite, "quadrature, lattice, lemmas or rearrange")->required();
    ver->add_option("--seed", cfg.seed, "probe seed");
    common(ver);

    auto* pl = app.add_subcommand("plot", "SVG polyline plot of a CSV file");
    pl->add_option("--in", cfg.in, "CSV input")->required();
    pl->add_flag("--loglog", cfg.loglog, "log10 axes");
    common(pl);

    std::vector<std::string> args = input;
    if (args.empty()) args.push_back("hankel-lab");
    try {
        if (const auto path = flag_value(args, "config")) {
            std::ifstream f(*path);
            if (!f) throw ConfigError("cannot read config '" + *path + "'");
            const auto kv = read_config(f);
            CLI::App* sub = nullptr;
            for (std::size_t i = 1; i < args.size() && !sub; ++i)
                if (args[i].empty() || args[i][0] != '-') sub = app.get_subcommand_no_throw(args[i]);
            for (const auto& [key, value] : kv) {
                if (!sub || !sub->get_option_no_throw("--" + key) || has_flag(args, key)) continue;
                if (key == "loglog") {
                    if (value == "true" || value == "1") args.push_back("--loglog");
                } else {
                    args.push_back("--" + key + "=" + value);
                }
            }
        }
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        try {
            app.parse(int(argv.size()), argv.data());
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return kOk;
        } catch (const CLI::CallForAllHelp&) {
            out << app.help("", CLI::AppFormatMode::All);
            return kOk;
        } catch (const CLI::ParseError& e) {
            err << "error: " << e.what() << '\n';
            const auto subs = app.get_subcommands();
            err << (subs.empty() ? app.help() : subs.front()->help());
            return kConfigError;
        }
        if (sp->parsed()) return cmd_spectrum(cfg, out, err);
        if (ida->parsed()) return cmd_ida(cfg, out);
        if (re->parsed()) return cmd_rearrange(cfg, out, err);
        if (cmp->parsed()) return cmd_compare(cfg, out);
        if (ver->parsed()) return cmd_verify(cfg, out);
        return cmd_plot(cfg, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kConfigError;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return kNumericalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kNumericalError;
    }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    return run_cli(std::vector<std::string>(argv, argv + argc), out, err);
}

} // namespace hankel_cli
