// scslab.cpp
//
// Command-line surface over the library. Subcommands:
//
//   kloosterman a b q
//   ramanujan q n
//   charsum {direct|reduced|zero} <params...>
//   verify {weil|mult-b31|scale-b32|lemma-b30|lemma-b17|lemma-fk|lemma-m4|
//           lemma-ll1|lemma-ll2|poisson|delta-crosscheck|charsum-equiv|
//           m3-split|scs} [--qmax N] [--seed S] [--csv file]
//   scs {D|L} --X n --H n --series a,b --hweight w
//   scan --theta-grid t1,t2,... --x-grid x1,x2,... --out file.csv
//
// Exit codes: 0 all checks pass, 1 a property violation was recorded,
// 2 usage error. Each verify run prints one JSON summary to stdout.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "scslab/verify.hpp"

namespace {

using namespace scslab;

std::string value_str(const ExpSumValue& v) {
    if (v.as_integer) return std::to_string(*v.as_integer);
    return fmt_double(v.value.real()) + (v.value.imag() < 0 ? "" : "+") +
           fmt_double(v.value.imag()) + "i";
}

int finish(const VerifyReport& rep, const std::string& csv_path, const CsvTable* csv) {
    if (!csv_path.empty() && csv) csv->save(csv_path);
    std::cout << rep.to_json().dump(2) << "\n";
    return rep.pass ? 0 : 1;
}

int usage_error(const std::string& msg) {
    std::cerr << "usage error: " << msg << "\n";
    return 2;
}

std::vector<i64> parse_i64_list(const std::string& s) {
    std::vector<i64> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::stoll(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::stod(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

struct SeriesSpec {
    CoefficientSeries::Kind kind;
    int k = 0;
};

SeriesSpec parse_series_name(const std::string& name) {
    if (name == "gl3") return {CoefficientSeries::Kind::gl3_eisenstein, 3};
    if (name == "tau" || name == "tau_normalized")
        return {CoefficientSeries::Kind::tau_normalized, 0};
    if (name.size() >= 2 && name[0] == 'd') {
        int k = std::stoi(name.substr(1));
        if (k >= 2) return {CoefficientSeries::Kind::divisor, k};
    }
    throw CLI::ValidationError("--series", "unknown series '" + name + "' (use dK, gl3, tau)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shifted-convolution-sum and character-sum laboratory"};
    app.require_subcommand(1);

    // --- plain evaluators ------------------------------------------------
    i64 kl_a = 0, kl_b = 0, kl_q = 1;
    auto* cmd_kl = app.add_subcommand("kloosterman", "evaluate S(a,b;q)");
    cmd_kl->add_option("a", kl_a)->required();
    cmd_kl->add_option("b", kl_b)->required();
    cmd_kl->add_option("q", kl_q)->required()->check(CLI::PositiveNumber);

    i64 rs_q = 1, rs_n = 0;
    auto* cmd_rs = app.add_subcommand("ramanujan", "evaluate c_q(n)");
    cmd_rs->add_option("q", rs_q)->required()->check(CLI::PositiveNumber);
    cmd_rs->add_option("n", rs_n)->required();

    std::string cs_mode;
    std::vector<i64> cs_params;
    auto* cmd_cs = app.add_subcommand("charsum", "evaluate a character sum");
    cmd_cs->add_option("mode", cs_mode)->required()->check(CLI::IsMember({"direct", "reduced", "zero"}));
    cmd_cs->add_option("params", cs_params,
                       "direct/reduced: q n1 m1 m2 m2p h n2; zero: q m1 m2 m2p");

    // --- verify ----------------------------------------------------------
    std::string verify_what;
    i64 v_qmax = -1;
    u64 v_seed = 0;
    int v_samples = -1;
    int v_workers = default_workers();
    std::string v_csv;
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("suite", verify_what)
        ->required()
        ->check(CLI::IsMember({"weil", "mult-b31", "scale-b32", "lemma-b30", "lemma-b17",
                               "lemma-fk", "lemma-m4", "lemma-ll1", "lemma-ll2", "poisson",
                               "delta-crosscheck", "charsum-equiv", "m3-split", "scs"}));
    cmd_verify->add_option("--qmax", v_qmax, "scan limit (suite-specific default)");
    cmd_verify->add_option("--seed", v_seed, "sampling seed (default 0)");
    cmd_verify->add_option("--samples", v_samples, "samples per scan point");
    cmd_verify->add_option("--workers", v_workers, "worker threads");
    cmd_verify->add_option("--csv", v_csv, "also write the scan table as CSV");

    // --- scs -------------------------------------------------------------
    std::string scs_mode;
    i64 scs_x = 0, scs_h = 0;
    std::string scs_series = "gl3,gl3";
    std::string scs_hweight = "constant";
    int scs_workers = default_workers();
    auto* cmd_scs = app.add_subcommand("scs", "evaluate a shifted convolution sum");
    cmd_scs->add_option("mode", scs_mode)->required()->check(CLI::IsMember({"D", "L"}));
    cmd_scs->add_option("--X", scs_x)->required()->check(CLI::PositiveNumber);
    cmd_scs->add_option("--H", scs_h)->required()->check(CLI::PositiveNumber);
    cmd_scs->add_option("--series", scs_series, "coefficient pair, e.g. gl3,gl3 or d2,d3");
    cmd_scs->add_option("--hweight", scs_hweight)->check(CLI::IsMember({"constant", "tau", "tau_normalized"}));
    cmd_scs->add_option("--workers", scs_workers);

    // --- scan ------------------------------------------------------------
    std::string scan_thetas = "0.5,0.6,0.75";
    std::string scan_xs = "1000,10000,100000";
    std::string scan_out;
    std::string scan_series = "gl3,gl3";
    std::string scan_hweight = "tau";
    int scan_workers = default_workers();
    auto* cmd_scan = app.add_subcommand("scan", "exponent scan over (X, H = X^theta) grids");
    cmd_scan->add_option("--theta-grid", scan_thetas);
    cmd_scan->add_option("--x-grid", scan_xs);
    cmd_scan->add_option("--out", scan_out, "CSV output path")->required();
    cmd_scan->add_option("--series", scan_series);
    cmd_scan->add_option("--hweight", scan_hweight)->check(CLI::IsMember({"constant", "tau", "tau_normalized"}));
    cmd_scan->add_option("--workers", scan_workers);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_kl->parsed()) {
            std::cout << value_str(kloosterman(kl_a, kl_b, kl_q)) << "\n";
            return 0;
        }

        if (cmd_rs->parsed()) {
            std::cout << value_str(ramanujan_sum(rs_q, rs_n)) << "\n";
            return 0;
        }

        if (cmd_cs->parsed()) {
            if (cs_mode == "zero") {
                if (cs_params.size() != 4) return usage_error("charsum zero needs: q m1 m2 m2p");
                std::cout << value_str(charsum_zero(cs_params[0], cs_params[1], cs_params[2],
                                                    cs_params[3]))
                          << "\n";
                return 0;
            }
            if (cs_params.size() != 7)
                return usage_error("charsum " + cs_mode + " needs: q n1 m1 m2 m2p h n2");
            CharSumParams p(cs_params[0], cs_params[1], cs_params[2], cs_params[3], cs_params[4],
                            cs_params[5], cs_params[6]);
            auto v = cs_mode == "direct" ? charsum_direct(p) : charsum_reduced(p);
            std::cout << value_str(v) << "\n";
            return 0;
        }

        if (cmd_verify->parsed()) {
            auto qmax_or = [&](i64 def) { return v_qmax > 0 ? v_qmax : def; };
            auto samples_or = [&](int def) { return v_samples > 0 ? v_samples : def; };
            VerifyReport rep;
            CsvTable* csv_ptr = nullptr;
            std::optional<CsvTable> csv;

            if (verify_what == "weil") {
                if (!v_csv.empty())
                    csv.emplace("q,a,b,value_re,value_im,bound,ratio"), csv_ptr = &*csv;
                rep = verify::weil(qmax_or(500), v_workers, csv_ptr);
            } else if (verify_what == "mult-b31") {
                rep = verify::mult_b31(qmax_or(60), v_seed, samples_or(6));
            } else if (verify_what == "scale-b32") {
                rep = verify::scale_b32(qmax_or(60), v_seed, samples_or(8));
            } else if (verify_what == "lemma-b30") {
                rep = verify::lemma_b30(qmax_or(100), v_seed, samples_or(4));
            } else if (verify_what == "lemma-b17") {
                if (!v_csv.empty())
                    csv.emplace("q,n1,m1,m2,m2p,h,n2,value_re,value_im,bound,ratio"), csv_ptr = &*csv;
                rep = verify::lemma_b17(qmax_or(97), v_workers, csv_ptr);
            } else if (verify_what == "lemma-fk") {
                i64 pmax = qmax_or(100);
                if (v_qmax > 0 && !is_prime(v_qmax))
                    return usage_error("lemma-fk: --qmax must be prime, got " + std::to_string(v_qmax));
                if (!v_csv.empty())
                    csv.emplace("p,c,c1,c2,m,n,h,value_re,value_im,bound,ratio"), csv_ptr = &*csv;
                rep = verify::lemma_fk(pmax, v_seed, samples_or(200), 8.0, csv_ptr);
            } else if (verify_what == "lemma-m4") {
                rep = verify::lemma_m4(qmax_or(24), v_seed, samples_or(12));
            } else if (verify_what == "lemma-ll1") {
                rep = verify::lemma_ll1();
            } else if (verify_what == "lemma-ll2") {
                rep = verify::lemma_ll2();
            } else if (verify_what == "poisson") {
                rep = verify::poisson();
            } else if (verify_what == "delta-crosscheck") {
                rep = verify::delta_crosscheck_suite();
            } else if (verify_what == "charsum-equiv") {
                rep = verify::charsum_equiv(qmax_or(24), v_seed, samples_or(50), v_workers);
            } else if (verify_what == "m3-split") {
                if (!v_csv.empty())
                    csv.emplace("q,n1,m1,m2,m2p,h,n2,value_re,value_im,bound,ratio"), csv_ptr = &*csv;
                rep = verify::m3_split(qmax_or(60), v_seed, samples_or(6), csv_ptr);
            } else if (verify_what == "scs") {
                rep = verify::scs_suite(v_workers);
            }
            return finish(rep, v_csv, csv_ptr);
        }

        if (cmd_scs->parsed()) {
            size_t comma = scs_series.find(',');
            if (comma == std::string::npos) return usage_error("--series needs two names, e.g. gl3,gl3");
            auto spec_a = parse_series_name(scs_series.substr(0, comma));
            auto spec_b = parse_series_name(scs_series.substr(comma + 1));
            i64 limit = 2 * scs_x + 4 * scs_h;
            auto make = [&](const SeriesSpec& s) {
                switch (s.kind) {
                    case CoefficientSeries::Kind::divisor: return CoefficientSeries::divisor(s.k, limit);
                    case CoefficientSeries::Kind::gl3_eisenstein: return CoefficientSeries::gl3(limit);
                    default: return tau_series_cached(limit);
                }
            };
            auto sa = make(spec_a);
            auto sb = make(spec_b);
            SCSConfig cfg;
            cfg.X = scs_x;
            cfg.H = scs_h;
            cfg.series_a = &sa;
            cfg.series_b = &sb;
            std::optional<CoefficientSeries> hs;
            if (scs_mode == "D" && scs_hweight != "constant") {
                cfg.hweight = HWeight::tau_normalized;
                hs.emplace(tau_series_cached(2 * scs_h));
                cfg.hseries = &*hs;
            }
            double v = scs_mode == "D" ? scs_D(cfg, scs_workers) : scs_L(cfg, scs_workers);
            std::cout << fmt_double(v) << "\n";
            return 0;
        }

        if (cmd_scan->parsed()) {
            size_t comma = scan_series.find(',');
            if (comma == std::string::npos) return usage_error("--series needs two names");
            auto spec_a = parse_series_name(scan_series.substr(0, comma));
            auto spec_b = parse_series_name(scan_series.substr(comma + 1));
            auto xs = parse_i64_list(scan_xs);
            auto thetas = parse_double_list(scan_thetas);
            HWeight hw = scan_hweight == "constant" ? HWeight::constant : HWeight::tau_normalized;
            auto rows = exponent_scan(xs, thetas, spec_a.kind, spec_a.k, spec_b.kind, spec_b.k, hw,
                                      scan_workers);
            CsvTable csv("X,H,theta,value,envelope,ratio,slope");
            for (const auto& r : rows)
                csv.add_row({std::to_string(r.X), std::to_string(r.H), fmt_double(r.theta),
                             fmt_double(r.value), fmt_double(r.envelope), fmt_double(r.ratio),
                             fmt_double(r.slope)});
            csv.save(scan_out);
            json j;
            j["command"] = "scan";
            j["params"] = {{"x_grid", scan_xs}, {"theta_grid", scan_thetas},
                           {"series", scan_series}, {"hweight", scan_hweight}};
            j["pass"] = true;
            j["rows"] = rows.size();
            j["out"] = scan_out;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
