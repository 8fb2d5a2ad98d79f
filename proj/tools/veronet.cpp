// veronet command-line tool: construct osculating-space subspace codes over
// small finite fields, compare observed and closed-form parameters, verify
// the equidistance claims over a parameter grid, measure subspace distances,
// and run operator-channel decoding simulations.
//
// Exit codes: 0 success / all checks pass, 1 a verification or parameter
// check failed, 2 usage or configuration error.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <veronet/channel.hpp>
#include <veronet/code.hpp>
#include <veronet/gf.hpp>
#include <veronet/io.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct GridSpec {
    std::vector<std::uint64_t> qs{2, 3, 4, 5};
    std::vector<std::uint32_t> ns{1, 2};
    std::vector<std::uint32_t> ds{2, 3, 4};
    std::vector<std::uint32_t> ks;  // empty: every 1 <= k < d
};

void print_params_table(const veronet::CodeParams& predicted,
                        const veronet::CodeParams& constructed) {
    const auto line = [](const char* name, auto pred, auto cons) {
        std::cout << std::left << std::setw(12) << name << std::setw(16) << pred
                  << std::setw(16) << cons << '\n';
    };
    std::cout << std::left << std::setw(12) << "param" << std::setw(16) << "predicted"
              << std::setw(16) << "constructed" << '\n';
    line("N", predicted.packet_length, constructed.packet_length);
    line("dim", predicted.dim, constructed.dim);
    line("size", predicted.size, constructed.size);
    line("log_q_size", predicted.log_q_size, constructed.log_q_size);
    line("D", predicted.min_distance, constructed.min_distance);
    line("lambda", predicted.lambda, constructed.lambda);
    line("rate", predicted.rate, constructed.rate);
    line("delta", predicted.delta, constructed.delta);
}

int run_construct(std::uint64_t q, std::uint32_t n, std::uint32_t d, std::uint32_t k,
                  const std::string& out_path) {
    const veronet::FieldPtr field = veronet::Field::from_order(q);
    const veronet::Code code = veronet::build_code(field, n, d, k);
    veronet::write_file(out_path, veronet::code_to_json(code).dump(2) + "\n");
    std::cout << "wrote " << code.size() << " codewords to " << out_path << '\n';
    return kExitOk;
}

int run_params(std::uint64_t q, std::uint32_t n, std::uint32_t d, std::uint32_t k,
               const std::string& format) {
    const veronet::FieldPtr field = veronet::Field::from_order(q);
    const veronet::CodeParams predicted = veronet::predicted_params(n, d, k, q);
    const veronet::Code code = veronet::build_code(field, n, d, k);
    const veronet::CodeParams constructed = code.params();
    const bool agree = predicted == constructed;
    if (format == "json") {
        veronet::json j;
        j["q"] = q;
        j["n"] = n;
        j["d"] = d;
        j["k"] = k;
        j["predicted"] = veronet::params_to_json(predicted);
        j["constructed"] = veronet::params_to_json(constructed);
        j["agree"] = agree;
        std::cout << j.dump(2) << '\n';
    } else {
        print_params_table(predicted, constructed);
        std::cout << (agree ? "predicted and constructed parameters agree\n"
                            : "MISMATCH between predicted and constructed parameters\n");
    }
    return agree ? kExitOk : kExitCheckFailed;
}

int run_verify(const GridSpec& grid, const std::string& format) {
    std::vector<veronet::VerifyReport> reports;
    for (std::uint64_t q : grid.qs) {
        const veronet::FieldPtr field = veronet::Field::from_order(q);
        for (std::uint32_t n : grid.ns)
            for (std::uint32_t d : grid.ds) {
                std::vector<std::uint32_t> ks = grid.ks;
                if (ks.empty())
                    for (std::uint32_t k = 1; k < d; ++k) ks.push_back(k);
                for (std::uint32_t k : ks) {
                    if (k < 1 || k >= d) continue;
                    reports.push_back(veronet::verify_theorem(field, n, d, k));
                }
            }
    }
    if (reports.empty()) {
        std::cerr << "error: the grid selects no (q, n, d, k) tuples\n";
        return kExitUsage;
    }
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.all_pass();

    if (format == "json") {
        veronet::json j;
        j["all_pass"] = all_pass;
        veronet::json rows = veronet::json::array();
        for (const auto& r : reports) rows.push_back(veronet::report_to_json(r));
        j["rows"] = std::move(rows);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << std::left << std::setw(6) << "q" << std::setw(4) << "n" << std::setw(4)
                  << "d" << std::setw(4) << "k" << std::setw(8) << "result"
                  << "failing checks" << '\n';
        for (const auto& r : reports) {
            std::string failing;
            for (const auto& c : r.checks)
                if (!c.pass) failing += c.name + " (" + c.detail + ") ";
            std::cout << std::left << std::setw(6) << r.q << std::setw(4) << r.n
                      << std::setw(4) << r.d << std::setw(4) << r.k << std::setw(8)
                      << (r.all_pass() ? "pass" : "FAIL") << failing << '\n';
        }
        std::cout << (all_pass ? "all rows pass\n" : "some rows FAILED\n");
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

int run_distance(const std::string& path_a, const std::string& path_b,
                 const std::string& format) {
    const veronet::Subspace a = veronet::subspace_from_text(veronet::read_file(path_a));
    const veronet::Subspace b = veronet::subspace_from_text(veronet::read_file(path_b));
    const std::size_t dist = veronet::subspace_distance(a, b);
    if (format == "json") {
        veronet::json j;
        j["distance"] = dist;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << dist << '\n';
    }
    return kExitOk;
}

int run_simulate(std::uint64_t q, std::uint32_t n, std::uint32_t d, std::uint32_t k,
                 const veronet::ChannelConfig& cfg, std::uint64_t trials,
                 const std::string& format) {
    const veronet::FieldPtr field = veronet::Field::from_order(q);
    const veronet::Code code = veronet::build_code(field, n, d, k);
    const veronet::SimulationStats stats = veronet::simulate(code, cfg, trials);
    if (format == "table") {
        std::cout << "trials    " << stats.trials << '\n'
                  << "correct   " << stats.correct << '\n'
                  << "wrong     " << stats.wrong << '\n'
                  << "ambiguous " << stats.ambiguous << '\n'
                  << "success   " << stats.success_rate << '\n';
    } else {
        std::cout << veronet::stats_to_json(stats).dump(2) << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"osculating-space subspace codes over finite fields"};
    app.require_subcommand(1);

    std::uint64_t q = 2;
    std::uint32_t n = 1, d = 2, k = 1;
    std::string out_path, format = "table", path_a, path_b;
    std::string sim_format = "json";  // the report is a JSON contract
    std::uint64_t trials = 100;
    veronet::ChannelConfig cfg;
    if (const char* env_seed = std::getenv("VERONET_SEED"))
        cfg.seed = std::strtoull(env_seed, nullptr, 10);
    GridSpec grid;

    const auto add_code_options = [&](CLI::App* cmd) {
        cmd->add_option("--q", q, "field order (prime power)")->required();
        cmd->add_option("--n", n, "projective dimension")->required();
        cmd->add_option("--d", d, "embedding degree")->required();
        cmd->add_option("--k", k, "osculating order (1 <= k < d)")->required();
    };

    CLI::App* construct = app.add_subcommand("construct", "build a code and write it as JSON");
    add_code_options(construct);
    construct->add_option("--out", out_path, "output path")->required();

    CLI::App* params = app.add_subcommand("params", "predicted vs constructed parameters");
    add_code_options(params);
    params->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "check the construction over a grid");
    verify->add_option("--q", grid.qs, "field orders (default 2 3 4 5)");
    verify->add_option("--n", grid.ns, "projective dimensions (default 1 2)");
    verify->add_option("--d", grid.ds, "embedding degrees (default 2 3 4)");
    verify->add_option("--k", grid.ks, "osculating orders (default: all 1 <= k < d)");
    verify->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    CLI::App* distance = app.add_subcommand("distance", "subspace distance between two files");
    distance->add_option("file_a", path_a, "first subspace file")->required();
    distance->add_option("file_b", path_b, "second subspace file")->required();
    distance->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    CLI::App* simulate = app.add_subcommand("simulate", "operator-channel decoding simulation");
    add_code_options(simulate);
    simulate->add_option("--erasures", cfg.erasures, "erased dimensions per transmission");
    simulate->add_option("--errors", cfg.errors, "injected error dimensions");
    simulate->add_option("--seed", cfg.seed, "RNG seed (VERONET_SEED is the fallback)");
    simulate->add_option("--trials", trials, "number of transmissions");
    simulate->add_option("--format", sim_format)->check(CLI::IsMember({"table", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return kExitOk;
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(construct)) return run_construct(q, n, d, k, out_path);
        if (app.got_subcommand(params)) return run_params(q, n, d, k, format);
        if (app.got_subcommand(verify)) return run_verify(grid, format);
        if (app.got_subcommand(distance)) return run_distance(path_a, path_b, format);
        if (app.got_subcommand(simulate))
            return run_simulate(q, n, d, k, cfg, trials, sim_format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
