#include "ucc/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ucc/csv.hpp"
#include "ucc/errors.hpp"

namespace ucc {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': cannot parse '" + value + "' as a number");
    }
    if (pos != value.size()) {
        throw ConfigError("config key '" + key + "': trailing junk in '" + value + "'");
    }
    return v;
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
    const double v = parse_double(key, value);
    const std::int64_t i = static_cast<std::int64_t>(std::llround(v));
    if (static_cast<double>(i) != v) {
        throw ConfigError("config key '" + key + "': expected an integer, got '" + value + "'");
    }
    return i;
}

std::uint64_t parse_uint64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("junk");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': cannot parse '" + value +
                          "' as an unsigned integer");
    }
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = strip(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    for (const std::string& item : split_list(value)) {
        out.push_back(parse_double(key, item));
    }
    if (out.empty()) {
        throw ConfigError("config key '" + key + "': empty list");
    }
    return out;
}

void check_scheme_name(const std::string& key, const std::string& name) {
    if (name != "greedy" && name != "noncoop" && name != "hitmax") {
        throw ConfigError("config key '" + key + "': unknown scheme '" + name +
                          "' (expected greedy, noncoop or hitmax)");
    }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected 'key = value'");
        }
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
        }
        out.emplace_back(key, value);
    }
    return out;
}

void apply_key(ExperimentConfig& config, const std::string& key, const std::string& value) {
    if (key == "rho_per_km2") {
        config.rho_per_km2 = parse_double(key, value);
    } else if (key == "lambda_per_km2") {
        config.lambda_per_km2 = parse_double(key, value);
    } else if (key == "pt_w_per_mhz") {
        config.pt_w_per_mhz = parse_double(key, value);
    } else if (key == "pt_dbm_per_mhz") {
        config.pt_w_per_mhz = dbm_to_watts(parse_double(key, value));
    } else if (key == "alpha") {
        config.alpha = parse_double(key, value);
    } else if (key == "sigma2_w_per_mhz") {
        config.sigma2_w_per_mhz = parse_double(key, value);
    } else if (key == "sigma2_dbm_per_mhz") {
        config.sigma2_w_per_mhz = dbm_to_watts(parse_double(key, value));
    } else if (key == "i_w_per_mhz") {
        config.i_w_per_mhz = parse_double_list(key, value);
    } else if (key == "i_dbm_per_mhz") {
        config.i_w_per_mhz.clear();
        for (double dbm : parse_double_list(key, value)) {
            config.i_w_per_mhz.push_back(dbm_to_watts(dbm));
        }
    } else if (key == "i_extension") {
        if (value != "hold_last" && value != "strict") {
            throw ConfigError("config key 'i_extension': expected hold_last or strict, got '" +
                              value + "'");
        }
        config.i_extension = value;
    } else if (key == "bandwidth_mhz") {
        config.bandwidth_mhz = parse_double(key, value);
    } else if (key == "dbh_ms") {
        config.dbh_ms = parse_double(key, value);
    } else if (key == "cluster_size") {
        config.cluster_size = static_cast<int>(parse_int(key, value));
    } else if (key == "files") {
        config.files = static_cast<int>(parse_int(key, value));
    } else if (key == "zipf_nu") {
        config.zipf_nu = parse_double(key, value);
    } else if (key == "segments_per_file") {
        config.segments_per_file = parse_int(key, value);
    } else if (key == "segment_bits") {
        config.segment_bits = parse_double(key, value);
    } else if (key == "trace_path") {
        config.trace_path = value;
    } else if (key == "cache_budget") {
        config.cache_budget = parse_int(key, value);
    } else if (key == "scheme") {
        check_scheme_name(key, value);
        config.scheme = value;
    } else if (key == "schemes") {
        config.schemes = split_list(value);
        if (config.schemes.empty()) {
            throw ConfigError("config key 'schemes': empty list");
        }
        for (const std::string& s : config.schemes) check_scheme_name(key, s);
    } else if (key == "sweep_var") {
        if (value != "C" && value != "rho" && value != "lambda" && value != "nu" &&
            value != "D_BH" && value != "K") {
            throw ConfigError("config key 'sweep_var': expected one of C, rho, lambda, nu, "
                              "D_BH, K; got '" + value + "'");
        }
        config.sweep_var = value;
    } else if (key == "sweep_values") {
        config.sweep_values = parse_double_list(key, value);
    } else if (key == "k_min") {
        config.k_min = static_cast<int>(parse_int(key, value));
    } else if (key == "k_max") {
        config.k_max = static_cast<int>(parse_int(key, value));
    } else if (key == "dbh_sweep_ms") {
        config.dbh_sweep_ms = parse_double_list(key, value);
    } else if (key == "region_side_m") {
        config.region_side_m = parse_double(key, value);
    } else if (key == "n_drops") {
        config.n_drops = static_cast<int>(parse_int(key, value));
    } else if (key == "n_users_sampled") {
        config.n_users_sampled = static_cast<int>(parse_int(key, value));
    } else if (key == "seed") {
        config.seed = parse_uint64(key, value);
    } else if (key == "lambda_sweep_per_km2") {
        config.lambda_sweep_per_km2 = parse_double_list(key, value);
    } else if (key == "request_mode") {
        if (value != "group" && value != "perfile") {
            throw ConfigError("config key 'request_mode': expected group or perfile, got '" +
                              value + "'");
        }
        config.request_mode = value;
    } else if (key == "output") {
        config.output = value;
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

ExperimentConfig build_config(const std::string& config_path,
                              const std::vector<std::string>& overrides) {
    ExperimentConfig config;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            throw ConfigError("cannot open config file '" + config_path + "'");
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        for (const auto& [key, value] : parse_config_text(buffer.str())) {
            apply_key(config, key, value);
        }
    }
    for (const std::string& item : overrides) {
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("override '" + item + "': expected key=value");
        }
        apply_key(config, strip(item.substr(0, eq)), strip(item.substr(eq + 1)));
    }
    return config;
}

NetworkParams make_network(const ExperimentConfig& config) {
    NetworkParams net;
    net.rho = config.rho_per_km2 * 1e-6;
    net.lambda = config.lambda_per_km2 * 1e-6;
    net.P_T = config.pt_w_per_mhz;
    net.alpha = config.alpha;
    net.sigma2 = config.sigma2_w_per_mhz;
    net.W = config.bandwidth_mhz * 1e6;
    net.D_BH = config.dbh_ms * 1e-3;
    net.K = config.cluster_size;
    net.I = make_schedule(config).first(config.cluster_size);
    net.validate();
    return net;
}

InterferenceSchedule make_schedule(const ExperimentConfig& config) {
    InterferenceSchedule schedule;
    schedule.base = config.i_w_per_mhz;
    if (config.i_extension == "strict") {
        schedule.extension = InterferenceSchedule::Extension::kStrict;
    } else if (config.i_extension == "hold_last") {
        schedule.extension = InterferenceSchedule::Extension::kHoldLast;
    } else {
        throw ConfigError("i_extension must be 'hold_last' or 'strict', got '" +
                          config.i_extension + "'");
    }
    return schedule;
}

FileLibrary make_library(const ExperimentConfig& config) {
    FileLibrary lib;
    if (!config.trace_path.empty()) {
        lib.popularity = load_trace(config.trace_path);
    } else {
        ZipfParams zipf;
        if (config.files < 1) throw ConfigError("config key 'files': must be at least 1");
        zipf.F = static_cast<std::size_t>(config.files);
        zipf.nu = config.zipf_nu;
        lib.popularity = zipf_popularity(zipf);
    }
    if (config.segments_per_file < 1) {
        throw ConfigError("config key 'segments_per_file': must be at least 1");
    }
    lib.s.assign(lib.popularity.size(), config.segments_per_file);
    lib.L = config.segment_bits;
    lib.validate();
    return lib;
}

SimConfig make_sim(const ExperimentConfig& config) {
    SimConfig sim;
    sim.region_side = config.region_side_m;
    sim.n_drops = config.n_drops;
    sim.n_users_sampled = config.n_users_sampled;
    sim.seed = config.seed;
    sim.validate();
    return sim;
}

std::vector<std::pair<std::string, std::string>> config_metadata(const ExperimentConfig& c) {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("alpha", fmt_double(c.alpha));
    kv.emplace_back("bandwidth_mhz", fmt_double(c.bandwidth_mhz));
    kv.emplace_back("cache_budget", std::to_string(c.cache_budget));
    kv.emplace_back("cluster_size", std::to_string(c.cluster_size));
    kv.emplace_back("dbh_ms", fmt_double(c.dbh_ms));
    if (!c.dbh_sweep_ms.empty()) kv.emplace_back("dbh_sweep_ms", join_doubles(c.dbh_sweep_ms));
    kv.emplace_back("files", std::to_string(c.files));
    kv.emplace_back("i_extension", c.i_extension +
                                       (c.i_extension == "hold_last"
                                            ? " (ranks beyond the configured list reuse the last value)"
                                            : ""));
    kv.emplace_back("i_w_per_mhz", join_doubles(c.i_w_per_mhz));
    kv.emplace_back("k_max", std::to_string(c.k_max));
    kv.emplace_back("k_min", std::to_string(c.k_min));
    kv.emplace_back("lambda_per_km2", fmt_double(c.lambda_per_km2));
    kv.emplace_back("lambda_sweep_per_km2", join_doubles(c.lambda_sweep_per_km2));
    kv.emplace_back("n_drops", std::to_string(c.n_drops));
    kv.emplace_back("n_users_sampled", std::to_string(c.n_users_sampled));
    kv.emplace_back("pt_w_per_mhz", fmt_double(c.pt_w_per_mhz));
    kv.emplace_back("region_side_m", fmt_double(c.region_side_m));
    kv.emplace_back("request_mode", c.request_mode);
    kv.emplace_back("rho_per_km2", fmt_double(c.rho_per_km2));
    kv.emplace_back("scheme", c.scheme);
    {
        std::string joined;
        for (std::size_t i = 0; i < c.schemes.size(); ++i) {
            if (i > 0) joined += ",";
            joined += c.schemes[i];
        }
        kv.emplace_back("schemes", joined);
    }
    kv.emplace_back("seed", std::to_string(c.seed));
    kv.emplace_back("segment_bits", fmt_double(c.segment_bits));
    kv.emplace_back("segments_per_file", std::to_string(c.segments_per_file));
    kv.emplace_back("sigma2_w_per_mhz", fmt_double(c.sigma2_w_per_mhz));
    kv.emplace_back("sweep_values", c.sweep_values.empty() ? std::string("(none)")
                                                           : join_doubles(c.sweep_values));
    kv.emplace_back("sweep_var", c.sweep_var);
    if (!c.trace_path.empty()) kv.emplace_back("trace_path", c.trace_path);
    kv.emplace_back("zipf_nu", fmt_double(c.zipf_nu));
    std::sort(kv.begin(), kv.end());
    return kv;
}

}  // namespace ucc
