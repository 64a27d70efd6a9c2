// config.cpp — config parsing, the TOML subset, and the manifest echo.

#include "srlab/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace srlab {

namespace {

using nlohmann::json;

void check_keys(const json& j, std::initializer_list<const char*> allowed, const char* where) {
    if (!j.is_object())
        throw std::invalid_argument(std::string("config: \"") + where + "\" must be an object");
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* key : allowed)
            if (item.key() == key) { ok = true; break; }
        if (!ok)
            throw std::invalid_argument(std::string("config: unknown key \"") + item.key() +
                                        "\" in \"" + where + "\"");
    }
}

double number_field(const json& j, const char* key) {
    if (!j.at(key).is_number())
        throw std::invalid_argument(std::string("config: \"") + key + "\" must be a number");
    return j.at(key).get<double>();
}

int int_field(const json& j, const char* key) {
    if (!j.at(key).is_number_integer())
        throw std::invalid_argument(std::string("config: \"") + key + "\" must be an integer");
    return j.at(key).get<int>();
}

std::vector<double> grid_values(const json& v, const char* where) {
    std::vector<double> out;
    if (v.is_array()) {
        for (const auto& e : v) {
            if (!e.is_number())
                throw std::invalid_argument(std::string("config: \"") + where +
                                            ".values\" entries must be numbers");
            out.push_back(e.get<double>());
        }
    } else if (v.is_object()) {
        check_keys(v, {"from", "to", "count", "spacing"}, "values");
        const double from = number_field(v, "from");
        const double to = number_field(v, "to");
        const int count = int_field(v, "count");
        if (count < 1) throw std::invalid_argument("config: \"values.count\" must be >= 1");
        std::string spacing = "linear";
        if (v.contains("spacing")) spacing = v.at("spacing").get<std::string>();
        if (spacing != "linear" && spacing != "log")
            throw std::invalid_argument("config: \"values.spacing\" must be \"linear\" or \"log\"");
        if (spacing == "log" && (from <= 0.0 || to <= 0.0))
            throw std::invalid_argument("config: log spacing needs positive endpoints");
        for (int k = 0; k < count; ++k) {
            const double t = count == 1 ? 0.0 : static_cast<double>(k) / (count - 1);
            out.push_back(spacing == "linear"
                              ? from + t * (to - from)
                              : std::exp(std::log(from) + t * (std::log(to) - std::log(from))));
        }
    } else {
        throw std::invalid_argument(std::string("config: \"") + where +
                                    ".values\" must be an array or a {from,to,count} object");
    }
    if (out.empty()) throw std::invalid_argument("config: empty value grid");
    for (double x : out)
        if (!std::isfinite(x))
            throw std::invalid_argument("config: grid values must be finite");
    return out;
}

} // namespace

RunConfig config_from_json(const json& j) {
    check_keys(j, {"model", "beta", "temperature", "sweep", "exponent", "verify", "testing"},
               "top level");
    if (!j.contains("model")) throw std::invalid_argument("config: missing \"model\"");

    RunConfig cfg;
    cfg.model = model_spec_from_json(j.at("model"));

    if (j.contains("beta") && j.contains("temperature"))
        throw std::invalid_argument("config: give \"beta\" or \"temperature\", not both");
    if (j.contains("beta")) {
        const json& b = j.at("beta");
        if (b.is_string() && b.get<std::string>() == "inf") {
            cfg.beta = std::numeric_limits<double>::infinity();
        } else if (b.is_number() && b.get<double>() > 0.0) {
            cfg.beta = b.get<double>();
        } else {
            throw std::invalid_argument("config: \"beta\" must be a positive number or \"inf\"");
        }
    } else if (j.contains("temperature")) {
        const double t = number_field(j, "temperature");
        if (t < 0.0) throw std::invalid_argument("config: \"temperature\" must be >= 0");
        cfg.beta = t == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / t;
    }

    if (j.contains("sweep")) {
        const json& s = j.at("sweep");
        check_keys(s, {"parameter", "values", "fock_cutoff", "tail_tol"}, "sweep");
        if (!s.contains("parameter") || !s.contains("values"))
            throw std::invalid_argument("config: \"sweep\" needs \"parameter\" and \"values\"");
        cfg.sweep.parameter = s.at("parameter").get<std::string>();
        if (cfg.sweep.parameter != "omega" && cfg.sweep.parameter != "coupling_scale" &&
            cfg.sweep.parameter != "lambda" && cfg.sweep.parameter != "temperature")
            throw std::invalid_argument(
                "config: \"sweep.parameter\" must be omega, coupling_scale, lambda or temperature");
        cfg.sweep.values = grid_values(s.at("values"), "sweep");
        if (s.contains("fock_cutoff")) {
            if (s.at("fock_cutoff").is_string() && s.at("fock_cutoff").get<std::string>() == "auto")
                cfg.sweep.fock_cutoff = -1;
            else {
                cfg.sweep.fock_cutoff = int_field(s, "fock_cutoff");
                if (cfg.sweep.fock_cutoff < 0)
                    throw std::invalid_argument("config: \"sweep.fock_cutoff\" must be >= 0 or \"auto\"");
            }
        }
        if (s.contains("tail_tol")) {
            cfg.sweep.tail_tol = number_field(s, "tail_tol");
            if (!(cfg.sweep.tail_tol > 0.0))
                throw std::invalid_argument("config: \"sweep.tail_tol\" must be > 0");
        }
    }

    if (j.contains("exponent")) {
        const json& e = j.at("exponent");
        check_keys(e, {"window_lo", "window_hi", "points"}, "exponent");
        if (e.contains("window_lo")) cfg.exponent.window_lo = number_field(e, "window_lo");
        if (e.contains("window_hi")) cfg.exponent.window_hi = number_field(e, "window_hi");
        if (e.contains("points")) cfg.exponent.points = int_field(e, "points");
    }

    if (j.contains("verify")) {
        const json& v = j.at("verify");
        check_keys(v, {"fock_cutoff", "betas", "chi_window"}, "verify");
        if (v.contains("fock_cutoff")) {
            cfg.verify.fock_cutoff = int_field(v, "fock_cutoff");
            if (cfg.verify.fock_cutoff < 0)
                throw std::invalid_argument("config: \"verify.fock_cutoff\" must be >= 0");
        }
        if (v.contains("betas")) {
            cfg.verify.betas.clear();
            for (const auto& b : v.at("betas")) {
                if (!b.is_number() || !(b.get<double>() > 0.0))
                    throw std::invalid_argument("config: \"verify.betas\" must be positive numbers");
                cfg.verify.betas.push_back(b.get<double>());
            }
            if (cfg.verify.betas.empty())
                throw std::invalid_argument("config: \"verify.betas\" must not be empty");
        }
        if (v.contains("chi_window")) {
            cfg.verify.chi_window = int_field(v, "chi_window");
            if (cfg.verify.chi_window < 1)
                throw std::invalid_argument("config: \"verify.chi_window\" must be >= 1");
        }
    }

    if (j.contains("testing")) {
        const json& t = j.at("testing");
        check_keys(t, {"fail_at_indices", "corrupt_phase"}, "testing");
        if (t.contains("fail_at_indices")) {
            for (const auto& idx : t.at("fail_at_indices")) {
                if (!idx.is_number_integer() || idx.get<int>() < 0)
                    throw std::invalid_argument(
                        "config: \"testing.fail_at_indices\" must be non-negative integers");
                cfg.testing.fail_at_indices.push_back(idx.get<int>());
            }
        }
        if (t.contains("corrupt_phase")) {
            if (!t.at("corrupt_phase").is_boolean())
                throw std::invalid_argument("config: \"testing.corrupt_phase\" must be a boolean");
            cfg.testing.corrupt_phase = t.at("corrupt_phase").get<bool>();
        }
    }
    return cfg;
}

json config_to_json(const RunConfig& cfg) {
    json j;
    j["model"] = to_json(cfg.model);
    if (std::isinf(cfg.beta)) j["beta"] = "inf";
    else j["beta"] = cfg.beta;
    j["sweep"] = {{"parameter", cfg.sweep.parameter},
                  {"values", cfg.sweep.values},
                  {"fock_cutoff", cfg.sweep.fock_cutoff},
                  {"tail_tol", cfg.sweep.tail_tol}};
    j["exponent"] = {{"window_lo", cfg.exponent.window_lo},
                     {"window_hi", cfg.exponent.window_hi},
                     {"points", cfg.exponent.points}};
    j["verify"] = {{"fock_cutoff", cfg.verify.fock_cutoff},
                   {"betas", cfg.verify.betas},
                   {"chi_window", cfg.verify.chi_window}};
    j["testing"] = {{"fail_at_indices", cfg.testing.fail_at_indices},
                    {"corrupt_phase", cfg.testing.corrupt_phase}};
    return j;
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

json toml_scalar(const std::string& raw, int line_no) {
    const std::string v = trim(raw);
    if (v.empty())
        throw std::invalid_argument("toml: empty value on line " + std::to_string(line_no));
    if (v.front() == '"') {
        if (v.size() < 2 || v.back() != '"')
            throw std::invalid_argument("toml: unterminated string on line " + std::to_string(line_no));
        return v.substr(1, v.size() - 2);
    }
    if (v == "true") return true;
    if (v == "false") return false;
    if (v == "inf") return "inf"; // beta sentinel spelled without quotes
    try {
        size_t used = 0;
        if (v.find_first_of(".eE") == std::string::npos) {
            const long long n = std::stoll(v, &used);
            if (used == v.size()) return n;
        } else {
            const double d = std::stod(v, &used);
            if (used == v.size()) return d;
        }
    } catch (const std::exception&) {
        // fall through to the error below
    }
    throw std::invalid_argument("toml: cannot parse value \"" + v + "\" on line " +
                                std::to_string(line_no));
}

} // namespace

json toml_lite_to_json(const std::string& text) {
    json root = json::object();
    json* section = &root;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        // strip comments outside of strings
        bool quoted = false;
        std::string line;
        for (char c : raw) {
            if (c == '"') quoted = !quoted;
            if (c == '#' && !quoted) break;
            line.push_back(c);
        }
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument("toml: malformed section on line " + std::to_string(line_no));
            const std::string name = trim(line.substr(1, line.size() - 2));
            if (name.empty() || name.find('.') != std::string::npos)
                throw std::invalid_argument("toml: only flat [section] names are supported (line " +
                                            std::to_string(line_no) + ")");
            section = &root[name];
            *section = json::object();
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("toml: expected key = value on line " + std::to_string(line_no));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("toml: empty key on line " + std::to_string(line_no));

        if (!value.empty() && value.front() == '[') {
            if (value.back() != ']')
                throw std::invalid_argument("toml: unterminated array on line " + std::to_string(line_no));
            json arr = json::array();
            const std::string inner = value.substr(1, value.size() - 2);
            std::string item;
            bool in_str = false;
            for (char c : inner) {
                if (c == '"') in_str = !in_str;
                if (c == ',' && !in_str) {
                    arr.push_back(toml_scalar(item, line_no));
                    item.clear();
                } else {
                    item.push_back(c);
                }
            }
            if (!trim(item).empty()) arr.push_back(toml_scalar(item, line_no));
            (*section)[key] = std::move(arr);
        } else {
            (*section)[key] = toml_scalar(value, line_no);
        }
    }
    return root;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    json j;
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument("config: JSON parse error in \"" + path + "\": " + e.what());
        }
    } else if (path.size() >= 5 && path.substr(path.size() - 5) == ".toml") {
        j = toml_lite_to_json(text);
    } else {
        throw std::invalid_argument("config: \"" + path + "\" must end in .json or .toml");
    }
    return config_from_json(j);
}

} // namespace srlab
