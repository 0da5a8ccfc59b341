#include <sdpdeg/cli.hpp>

#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <sdpdeg/errors.hpp>
#include <sdpdeg/schubert.hpp>

namespace sdpdeg::cli
{

namespace
{

using json = nlohmann::ordered_json;

engine_options engine_for(const run_config &cfg)
{
    engine_options opts;
    opts.jobs = cfg.worker_count;
    return opts;
}

std::vector<integer> parse_lambda(const std::string &text)
{
    std::vector<integer> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        integer v;
        if (item.empty() || v.set_str(item, 10) != 0) {
            throw parameter_error("--lambda: '" + item + "' is not an integer");
        }
        out.push_back(v);
    }
    return out;
}

void check_against_oracle(const problem_triple &t, const integer &value)
{
    const integer oracle = schubert::delta_via_schubert(t);
    if (oracle != value) {
        throw inconsistency_error("localization gives " + value.get_str() + " but Schubert calculus gives "
                                  + oracle.get_str() + " for (" + std::to_string(t.m) + ", " + std::to_string(t.n)
                                  + ", " + std::to_string(t.r) + ")");
    }
}

struct table_row {
    problem_triple triple;
    integer value;
};

std::vector<table_row> table_rows(const run_config &cfg)
{
    if (cfg.n < 1) {
        throw parameter_error("table: n must be positive (got n = " + std::to_string(cfg.n) + ")");
    }
    const long n = cfg.n;
    const long total = n * (n + 1) / 2;
    std::vector<table_row> rows;
    for (long r = 1; r <= n; ++r) {
        for (long m = 0; m <= total; ++m) {
            problem_triple t;
            try {
                t = validate_params(m, n, r);
            } catch (const parameter_error &) {
                continue;
            }
            auto res = delta_certified(t, cfg.lambda_source, cfg.check_count, engine_for(cfg));
            if (cfg.use_oracle) {
                check_against_oracle(t, res.value);
            }
            rows.push_back({t, std::move(res.value)});
        }
    }
    return rows;
}

} // namespace

int cmd_degree(const run_config &cfg, std::ostream &out)
{
    const problem_triple t = validate_params(cfg.m, cfg.n, cfg.r);
    degree_result res = delta_certified(t, cfg.lambda_source, cfg.check_count, engine_for(cfg));
    if (cfg.use_oracle) {
        check_against_oracle(t, res.value);
        res.oracle_checked = true;
    }
    switch (cfg.format) {
        case output_format::json: {
            json j;
            j["m"] = t.m;
            j["n"] = t.n;
            j["r"] = t.r;
            j["k"] = t.k;
            j["l"] = t.l;
            j["degree"] = res.value.get_str();
            json checks;
            checks["specializations"] = res.specializations_checked;
            if (cfg.use_oracle) {
                checks["oracle"] = res.oracle_checked;
            }
            j["checks"] = std::move(checks);
            out << j.dump() << '\n';
            break;
        }
        case output_format::csv:
            out << "m,n,r,k,l,delta\n"
                << t.m << ',' << t.n << ',' << t.r << ',' << t.k << ',' << t.l << ',' << res.value.get_str() << '\n';
            break;
        case output_format::text:
            out << "delta(" << t.m << ", " << t.n << ", " << t.r << ") = " << res.value.get_str() << '\n'
                << "  k = " << t.k << ", l = " << t.l << '\n'
                << "  specializations checked: " << res.specializations_checked << '\n';
            if (cfg.use_oracle) {
                out << "  Schubert calculus: agrees\n";
            }
            break;
    }
    return exit_ok;
}

int cmd_table(const run_config &cfg, std::ostream &out)
{
    const auto rows = table_rows(cfg);
    switch (cfg.format) {
        case output_format::json: {
            json j;
            j["n"] = cfg.n;
            json arr = json::array();
            for (const auto &row : rows) {
                json e;
                e["m"] = row.triple.m;
                e["r"] = row.triple.r;
                e["k"] = row.triple.k;
                e["l"] = row.triple.l;
                e["delta"] = row.value.get_str();
                arr.push_back(std::move(e));
            }
            j["rows"] = std::move(arr);
            out << j.dump() << '\n';
            break;
        }
        case output_format::csv:
            out << "m,r,k,l,delta\n";
            for (const auto &row : rows) {
                out << row.triple.m << ',' << row.triple.r << ',' << row.triple.k << ',' << row.triple.l << ','
                    << row.value.get_str() << '\n';
            }
            break;
        case output_format::text:
            out << std::setw(5) << "m" << std::setw(5) << "r" << std::setw(5) << "k" << std::setw(5) << "l"
                << "  delta\n";
            for (const auto &row : rows) {
                out << std::setw(5) << row.triple.m << std::setw(5) << row.triple.r << std::setw(5) << row.triple.k
                    << std::setw(5) << row.triple.l << "  " << row.value.get_str() << '\n';
            }
            break;
    }
    return exit_ok;
}

int cmd_verify(const run_config &cfg, std::ostream &out)
{
    if (cfg.max_n < 1) {
        throw parameter_error("verify: --max-n must be positive");
    }
    const auto opts = engine_for(cfg);
    json report = json::array();
    bool all_passed = true;
    std::size_t triples = 0;
    for (long n = 1; n <= cfg.max_n; ++n) {
        const long total = n * (n + 1) / 2;
        for (long r = 1; r <= n; ++r) {
            for (long m = 0; m <= total; ++m) {
                problem_triple t;
                try {
                    t = validate_params(m, n, r);
                } catch (const parameter_error &) {
                    continue;
                }
                ++triples;
                json entry;
                entry["m"] = m;
                entry["n"] = n;
                entry["r"] = r;
                std::string failure;
                integer value;
                auto run_check = [&](const char *name, auto &&body) {
                    try {
                        body();
                        entry[name] = "pass";
                    } catch (const inconsistency_error &e) {
                        entry[name] = "fail";
                        if (failure.empty()) {
                            failure = std::string(name) + ": " + e.what();
                        }
                    }
                };
                run_check("constancy", [&] {
                    value = delta(t, specialization::sequential(t.n), opts);
                    const auto rev = delta_certified(t, specialization_strategy::make_reversed(), 1, opts).value;
                    const auto rnd = delta_certified(t, specialization_strategy::make_random(cfg.lambda_source.seed),
                                                     cfg.check_count, opts)
                                         .value;
                    if (rev != value || rnd != value) {
                        throw inconsistency_error("sequential " + value.get_str() + ", reversed " + rev.get_str()
                                                  + ", random " + rnd.get_str());
                    }
                });
                run_check("duality", [&] {
                    const auto d = dual_triple(t);
                    const auto dv = delta(d, specialization::sequential(d.n), opts);
                    if (dv != value) {
                        throw inconsistency_error("dual (" + std::to_string(d.m) + ", " + std::to_string(d.n) + ", "
                                                  + std::to_string(d.r) + ") gives " + dv.get_str());
                    }
                });
                if (n <= cfg.oracle_max_n) {
                    run_check("oracle", [&] { check_against_oracle(t, value); });
                }
                entry["delta"] = value.get_str();
                if (!failure.empty()) {
                    all_passed = false;
                    entry["detail"] = failure;
                }
                if (cfg.format == output_format::text) {
                    out << (failure.empty() ? "PASS" : "FAIL") << "  delta(" << m << ", " << n << ", " << r
                        << ") = " << value.get_str();
                    for (const char *name : {"constancy", "duality", "oracle"}) {
                        if (entry.contains(name)) {
                            out << "  " << name << '=' << entry[name].get<std::string>();
                        }
                    }
                    if (!failure.empty()) {
                        out << "\n      " << failure;
                    }
                    out << '\n';
                }
                report.push_back(std::move(entry));
            }
        }
    }
    if (cfg.format == output_format::text) {
        out << (all_passed ? "all checks passed" : "some checks FAILED") << " over " << triples << " triples\n";
    } else {
        json j;
        j["max_n"] = cfg.max_n;
        j["oracle_max_n"] = cfg.oracle_max_n;
        j["passed"] = all_passed;
        j["triples"] = std::move(report);
        out << j.dump() << '\n';
    }
    return all_passed ? exit_ok : exit_inconsistent;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact algebraic degree of semidefinite programming"};
    app.name(args.empty() ? "sdpdeg" : args.front());
    app.require_subcommand(1);

    run_config cfg;
    std::string lambda_text;
    std::string strategy = "sequential";
    std::uint64_t seed = 0;
    std::string format = "text";
    long checks = -1;

    const std::vector<std::string> strategies{"sequential", "reversed", "random"};

    auto add_common = [&](CLI::App *sub, bool with_lambda) {
        if (with_lambda) {
            auto *explicit_opt = sub->add_option("--lambda", lambda_text, "Comma-separated distinct integers");
            sub->add_option("--lambda-strategy", strategy, "How specializations are chosen")
                ->check(CLI::IsMember(strategies))
                ->excludes(explicit_opt);
        }
        sub->add_option("--seed", seed, "Seed for random specializations");
        sub->add_option("--checks", checks, "Number of specializations to evaluate")->check(CLI::PositiveNumber);
        sub->add_option("--jobs", cfg.worker_count, "Worker threads (0 = hardware concurrency)");
    };

    auto *degree = app.add_subcommand("degree", "Algebraic degree for one (m, n, r)");
    degree->add_option("--m", cfg.m, "Dimension of the affine subspace")->required();
    degree->add_option("--n", cfg.n, "Matrix size")->required();
    degree->add_option("--r", cfg.r, "Rank of the optimal solution")->required();
    degree->add_flag("--oracle", cfg.use_oracle, "Cross-check with Schubert calculus");
    degree->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    add_common(degree, true);

    auto *table = app.add_subcommand("table", "Degrees for every valid (m, r) at fixed n");
    table->add_option("--n", cfg.n, "Matrix size")->required();
    table->add_flag("--oracle", cfg.use_oracle, "Cross-check every row with Schubert calculus");
    table->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    add_common(table, true);

    auto *verify = app.add_subcommand("verify", "Constancy, duality and oracle checks up to a bound");
    verify->add_option("--max-n", cfg.max_n, "Largest n to verify")->required();
    verify->add_option("--oracle-max-n", cfg.oracle_max_n, "Largest n checked against Schubert calculus");
    verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    add_common(verify, false);

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        cfg.format = format == "json" ? output_format::json : format == "csv" ? output_format::csv : output_format::text;
        if (!lambda_text.empty()) {
            cfg.lambda_source = specialization_strategy::make_explicit(parse_lambda(lambda_text), seed);
        } else if (strategy == "random") {
            cfg.lambda_source = specialization_strategy::make_random(seed);
        } else if (strategy == "reversed") {
            cfg.lambda_source = specialization_strategy::make_reversed();
        } else {
            cfg.lambda_source = specialization_strategy::make_sequential();
            cfg.lambda_source.seed = seed;
        }
        if (*degree) {
            cfg.cmd = command::degree;
            cfg.check_count = checks > 0 ? static_cast<std::size_t>(checks) : 2;
            return cmd_degree(cfg, out);
        }
        if (*table) {
            cfg.cmd = command::table;
            cfg.check_count = checks > 0 ? static_cast<std::size_t>(checks) : 1;
            return cmd_table(cfg, out);
        }
        cfg.cmd = command::verify;
        cfg.check_count = checks > 0 ? static_cast<std::size_t>(checks) : 3;
        return cmd_verify(cfg, out);
    } catch (const parameter_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const inconsistency_error &e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return exit_inconsistent;
    }
}

} // namespace sdpdeg::cli
