#include "walkhull/results_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace walkhull {

namespace {

const char* kHeader =
    "experiment,n,param_name,param_value,trials,successes,ambiguous,estimate,ci_low,ci_high,"
    "seed,wall_seconds";

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::string to_csv(const std::vector<ResultRow>& rows) {
    std::ostringstream os;
    os << kHeader << '\n';
    for (const ResultRow& r : rows) {
        os << r.experiment << ',' << r.n << ',' << r.param_name << ',' << fmt_double(r.param_value)
           << ',' << r.trials << ',' << r.successes << ',' << r.ambiguous << ','
           << fmt_double(r.estimate) << ',' << fmt_double(r.ci_low) << ',' << fmt_double(r.ci_high)
           << ',' << r.seed << ',' << fmt_double(r.wall_seconds) << '\n';
    }
    return os.str();
}

std::vector<ResultRow> parse_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != kHeader)
        throw std::runtime_error("bad or missing CSV header");
    std::vector<ResultRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 12) throw std::runtime_error("bad CSV row: " + line);
        ResultRow r;
        r.experiment = f[0];
        r.n = std::stoll(f[1]);
        r.param_name = f[2];
        r.param_value = std::stod(f[3]);
        r.trials = std::stoll(f[4]);
        r.successes = std::stoll(f[5]);
        r.ambiguous = std::stoll(f[6]);
        r.estimate = std::stod(f[7]);
        r.ci_low = std::stod(f[8]);
        r.ci_high = std::stod(f[9]);
        r.seed = std::stoull(f[10]);
        r.wall_seconds = std::stod(f[11]);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string to_json(const std::vector<ResultRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ResultRow& r : rows) {
        arr.push_back({{"experiment", r.experiment},
                       {"n", r.n},
                       {"param_name", r.param_name},
                       {"param_value", r.param_value},
                       {"trials", r.trials},
                       {"successes", r.successes},
                       {"ambiguous", r.ambiguous},
                       {"estimate", r.estimate},
                       {"ci_low", r.ci_low},
                       {"ci_high", r.ci_high},
                       {"seed", r.seed},
                       {"wall_seconds", r.wall_seconds}});
    }
    return arr.dump(2) + "\n";
}

std::vector<ResultRow> parse_json(const std::string& text) {
    const nlohmann::json arr = nlohmann::json::parse(text);
    std::vector<ResultRow> rows;
    for (const auto& j : arr) {
        ResultRow r;
        r.experiment = j.at("experiment").get<std::string>();
        r.n = j.at("n").get<std::int64_t>();
        r.param_name = j.at("param_name").get<std::string>();
        r.param_value = j.at("param_value").get<double>();
        r.trials = j.at("trials").get<std::int64_t>();
        r.successes = j.at("successes").get<std::int64_t>();
        r.ambiguous = j.at("ambiguous").get<std::int64_t>();
        r.estimate = j.at("estimate").get<double>();
        r.ci_low = j.at("ci_low").get<double>();
        r.ci_high = j.at("ci_high").get<double>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.wall_seconds = j.at("wall_seconds").get<double>();
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace walkhull
