#include "radschrod/run_config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "radschrod/potential.hpp"
#include "radschrod/transform.hpp"

namespace radschrod {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string& key, const std::string& v) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw std::invalid_argument("config key " + key + ": bad number \"" + v + "\"");
    return x;
}

int parse_int(const std::string& key, const std::string& v) {
    char* end = nullptr;
    const long x = std::strtol(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0')
        throw std::invalid_argument("config key " + key + ": bad integer \"" + v + "\"");
    return static_cast<int>(x);
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::string render_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "potential=" << cfg.potential << "\n";
    out << "alpha=" << fmt_double(cfg.alpha) << "\n";
    out << "ell=" << cfg.ell << "\n";
    out << "transform=" << cfg.transform << "\n";
    out << "order=" << cfg.order << "\n";
    out << "npoints=";
    for (size_t i = 0; i < cfg.npoints.size(); ++i)
        out << (i ? "," : "") << cfg.npoints[i];
    out << "\n";
    out << "xi=" << cfg.xi << "\n";
    out << "imag_tol=" << fmt_double(cfg.imag_tol) << "\n";
    out << "reference=" << cfg.reference << "\n";
    out << "nref=" << cfg.nref << "\n";
    out << "order_ref=" << cfg.order_ref << "\n";
    out << "format=" << cfg.format << "\n";
    out << "out=" << cfg.out << "\n";
    out << "nq=" << cfg.nq << "\n";
    out << "min_lambda=" << fmt_double(cfg.min_lambda) << "\n";
    return out.str();
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key=value, got \"" + line + "\"");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "potential") cfg.potential = val;
        else if (key == "alpha") cfg.alpha = parse_double(key, val);
        else if (key == "ell") cfg.ell = parse_int(key, val);
        else if (key == "transform") cfg.transform = val;
        else if (key == "order") cfg.order = parse_int(key, val);
        else if (key == "npoints") {
            cfg.npoints.clear();
            std::istringstream list(val);
            std::string item;
            while (std::getline(list, item, ','))
                cfg.npoints.push_back(parse_int(key, trim(item)));
        }
        else if (key == "xi") cfg.xi = val;
        else if (key == "imag_tol") cfg.imag_tol = parse_double(key, val);
        else if (key == "reference") cfg.reference = val;
        else if (key == "nref") cfg.nref = parse_int(key, val);
        else if (key == "order_ref") cfg.order_ref = parse_int(key, val);
        else if (key == "format") cfg.format = val;
        else if (key == "out") cfg.out = val;
        else if (key == "nq") cfg.nq = parse_int(key, val);
        else if (key == "min_lambda") cfg.min_lambda = parse_double(key, val);
        else throw std::invalid_argument("config: unknown key \"" + key + "\"");
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void validate_config(const RunConfig& cfg) {
    const PotentialKind kind = potential_kind_from_string(cfg.potential);
    if (kind == PotentialKind::Custom)
        throw std::invalid_argument("custom potentials are only available through the library API");
    if (kind != PotentialKind::Hydrogen && !(cfg.alpha > 0.0))
        throw std::invalid_argument("alpha must be > 0 for screened potentials");
    if (cfg.ell < 0) throw std::invalid_argument("ell must be >= 0");
    transform_kind_from_string(cfg.transform);
    if (cfg.order < 2 || cfg.order > 12 || cfg.order % 2 != 0)
        throw std::invalid_argument("order must be even and in [2, 12]");
    if (cfg.npoints.empty()) throw std::invalid_argument("at least one npoints value is required");
    const int k = cfg.order / 2;
    for (int n : cfg.npoints)
        if (n < 2 * k + 2)
            throw std::invalid_argument("npoints must be >= 2k+2 = " + std::to_string(2 * k + 2) +
                                        " for order " + std::to_string(cfg.order));
    if (cfg.xi != "auto") {
        char* end = nullptr;
        const double x = std::strtod(cfg.xi.c_str(), &end);
        if (end == cfg.xi.c_str() || *end != '\0' || !(x > 0.0))
            throw std::invalid_argument("xi must be \"auto\" or a positive decimal");
    }
    if (!(cfg.imag_tol >= 0.0)) throw std::invalid_argument("imag-tol must be >= 0");
    if (cfg.reference != "exact" && cfg.reference != "highn" && cfg.reference != "none")
        throw std::invalid_argument("reference must be exact, highn or none");
    if (cfg.reference == "highn") {
        if (cfg.order_ref < 2 || cfg.order_ref > 12 || cfg.order_ref % 2 != 0)
            throw std::invalid_argument("order-ref must be even and in [2, 12]");
        if (cfg.nref < 2 * (cfg.order_ref / 2) + 2)
            throw std::invalid_argument("nref is too small for order-ref");
    }
    if (cfg.format != "csv" && cfg.format != "json" && cfg.format != "table")
        throw std::invalid_argument("format must be csv, json or table");
    if (cfg.nq != 0 && cfg.nq < cfg.ell + 1)
        throw std::invalid_argument("nq must be >= ell + 1");
}

int stencil_half_width(const RunConfig& cfg) { return cfg.order / 2; }

double resolve_xi(const RunConfig& cfg) {
    if (cfg.xi == "auto") return xi_heuristic(cfg.ell, cfg.order);
    return std::strtod(cfg.xi.c_str(), nullptr);
}

}  // namespace radschrod
