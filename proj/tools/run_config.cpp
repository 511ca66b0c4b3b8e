#include "run_config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>

#include "splab/errors.hpp"

namespace splab::cli {

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    if (name == "both") return OutputFormat::both;
    throw config_error("unknown format '" + name + "' (expected csv|json|both)");
}

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const double x = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0')
        throw config_error("config key '" + key + "': cannot parse '" + value +
                           "' as a number");
    return x;
}

int parse_int(const std::string& key, const std::string& value) {
    const double x = parse_double(key, value);
    const int i = static_cast<int>(x);
    if (double(i) != x)
        throw config_error("config key '" + key + "': expected an integer, got '" +
                           value + "'");
    return i;
}

// "30:50:2" (inclusive range) or "30,34,40"
std::vector<int> parse_int_list(const std::string& key, const std::string& value) {
    std::vector<int> out;
    if (value.find(':') != std::string::npos) {
        const size_t c1 = value.find(':');
        const size_t c2 = value.find(':', c1 + 1);
        const int lo = parse_int(key, trim(value.substr(0, c1)));
        const int hi = parse_int(key, c2 == std::string::npos
                                          ? trim(value.substr(c1 + 1))
                                          : trim(value.substr(c1 + 1, c2 - c1 - 1)));
        const int step =
            c2 == std::string::npos ? 1 : parse_int(key, trim(value.substr(c2 + 1)));
        if (step <= 0 || hi < lo)
            throw config_error("config key '" + key + "': bad range '" + value + "'");
        for (int v = lo; v <= hi; v += step) out.push_back(v);
        return out;
    }
    size_t pos = 0;
    while (pos <= value.size()) {
        const size_t comma = value.find(',', pos);
        const std::string item =
            trim(value.substr(pos, comma == std::string::npos ? std::string::npos
                                                              : comma - pos));
        if (!item.empty()) out.push_back(parse_int(key, item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty())
        throw config_error("config key '" + key + "': empty list");
    return out;
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"n", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.n = parse_int(k, v);
         }},
        {"n_list", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.n_list = parse_int_list(k, v);
         }},
        {"v_max_frac", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.spec.v_max = ParamEntry{parse_double(k, v), false};
         }},
        {"v_max_abs", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.spec.v_max = ParamEntry{parse_double(k, v), true};
         }},
        {"delta_v_frac", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.spec.delta_v = ParamEntry{parse_double(k, v), false};
         }},
        {"delta_v_abs", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.spec.delta_v = ParamEntry{parse_double(k, v), true};
         }},
        {"delta_w_frac", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.spec.delta_w = ParamEntry{parse_double(k, v), false};
         }},
        {"delta_w_abs", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.spec.delta_w = ParamEntry{parse_double(k, v), true};
         }},
        {"fluct_f_frac", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.spec.fluct_f = ParamEntry{parse_double(k, v), false};
         }},
        {"fluct_f_abs", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.spec.fluct_f = ParamEntry{parse_double(k, v), true};
         }},
        {"k", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.k = parse_double(k, v);
         }},
        {"b", [](RunConfig& c, const std::string& k, const std::string& v) {
             if (v == "auto") {
                 c.b_auto = true;
             } else {
                 c.b = parse_double(k, v);
                 c.b_auto = false;
             }
         }},
        {"s", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.s = parse_double(k, v);
         }},
        {"b_lo", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.b_lo = parse_double(k, v);
         }},
        {"b_hi", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.b_hi = parse_double(k, v);
         }},
        {"b_points", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.b_points = parse_int(k, v);
         }},
        {"s_points", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.s_points = parse_int(k, v);
         }},
        {"mingap_b_lo", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.mingap_b_lo = parse_double(k, v);
         }},
        {"mingap_b_hi", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.mingap_b_hi = parse_double(k, v);
         }},
        {"coarse_points", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.coarse_points = parse_int(k, v);
         }},
        {"gs_tol", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.gs_tol = parse_double(k, v);
         }},
        {"margin_frac", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.margin_frac = parse_double(k, v);
         }},
        {"w_b", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.w_b = parse_int(k, v);
         }},
        {"d", [](RunConfig& c, const std::string& k, const std::string& v) {
             c.d = parse_int(k, v);
         }},
    };
    return table;
}

void apply(RunConfig& cfg, const std::string& key, const std::string& value) {
    const auto it = setters().find(key);
    if (it == setters().end())
        throw config_error("unknown config key '" + key + "'");
    it->second(cfg, key, value);
}

void validate(const RunConfig& cfg) {
    if (cfg.n < 2) throw config_error("config: n must be >= 2");
    if (cfg.n_list.empty()) throw config_error("config: n_list must be non-empty");
    if (cfg.b_points < 1) throw config_error("config: b_points must be >= 1");
    if (cfg.b_points > 1 && !(cfg.b_lo < cfg.b_hi))
        throw config_error("config: b grid needs b_lo < b_hi");
    if (!(cfg.b_lo >= 0.0)) throw config_error("config: b_lo must be >= 0");
    if (cfg.s_points < 1) throw config_error("config: s_points must be >= 1");
    if (!(cfg.gs_tol > 0.0)) throw config_error("config: gs_tol must be positive");
    if (!(cfg.margin_frac >= 0.0 && cfg.margin_frac < 1.0))
        throw config_error("config: margin_frac must lie in [0, 1)");
    if (!(cfg.s >= 0.0 && cfg.s <= 1.0)) throw config_error("config: s must lie in [0, 1]");
    if (!(cfg.k > 0.0)) throw config_error("config: k must be positive");
    if (!cfg.b_auto && !(cfg.b >= 0.0)) throw config_error("config: b must be >= 0");
}

} // namespace

RunConfig load_config(const std::string& path) {
    RunConfig cfg;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw config_error("cannot open config file '" + path + "'");
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const std::string stripped = trim(line);
            if (stripped.empty()) continue;
            const size_t eq = stripped.find('=');
            if (eq == std::string::npos)
                throw config_error(path + ":" + std::to_string(lineno) +
                                   ": expected key = value");
            apply(cfg, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
        }
    }
    for (const auto& [key, setter] : setters()) {
        std::string env_key = "SHORTPATH_" + key;
        std::transform(env_key.begin(), env_key.end(), env_key.begin(),
                       [](unsigned char ch) { return std::toupper(ch); });
        if (const char* value = std::getenv(env_key.c_str()))
            setter(cfg, key, value);
    }
    validate(cfg);
    return cfg;
}

std::vector<double> linspace(double lo, double hi, int points) {
    std::vector<double> g(static_cast<size_t>(points));
    if (points == 1) {
        g[0] = lo;
        return g;
    }
    for (int i = 0; i < points; ++i)
        g[static_cast<size_t>(i)] = lo + (hi - lo) * i / (points - 1);
    return g;
}

} // namespace splab::cli
