// report.hpp
//
// CSV tables and the per-run JSON summary shared by the CLI and the
// verification suites. Numeric formatting is fixed so identical runs give
// byte-identical CSV.

#pragma once

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "scslab/common.hpp"

namespace scslab {

using json = nlohmann::ordered_json;

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

class CsvTable {
  public:
    explicit CsvTable(std::string header) : header_(std::move(header)) {}

    void add_row(const std::vector<std::string>& cells) {
        std::string row;
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) row += ',';
            row += cells[i];
        }
        rows_.push_back(std::move(row));
    }

    std::string str() const {
        std::string out = header_ + "\n";
        for (const auto& r : rows_) out += r + "\n";
        return out;
    }

    void save(const std::string& path) const {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + path);
        f << str();
    }

    size_t size() const { return rows_.size(); }

  private:
    std::string header_;
    std::vector<std::string> rows_;
};

// One summary per run: {command, params, pass, max_ratio, counterexamples,
// elapsed_ms}. Scans never abort on a violation; failures accumulate here.
struct VerifyReport {
    std::string command;
    json params = json::object();
    bool pass = true;
    double max_ratio = 0.0;
    std::vector<std::string> counterexamples;
    i64 checks = 0;
    double elapsed_ms = 0.0;

    static constexpr size_t kMaxCounterexamples = 25;

    void fail(const std::string& what) {
        pass = false;
        if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(what);
    }

    void observe_ratio(double r) { max_ratio = std::max(max_ratio, r); }

    json to_json() const {
        json j;
        j["command"] = command;
        j["params"] = params;
        j["pass"] = pass;
        j["max_ratio"] = max_ratio;
        j["counterexamples"] = counterexamples;
        j["checks"] = checks;
        j["elapsed_ms"] = elapsed_ms;
        return j;
    }
};

}  // namespace scslab
