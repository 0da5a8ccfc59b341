#ifndef SDPDEG_CLI_HPP
#define SDPDEG_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <sdpdeg/localization.hpp>

namespace sdpdeg::cli
{

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;        // bad parameters or malformed input
inline constexpr int exit_inconsistent = 3; // the engine contradicted itself

enum class command { degree, table, verify };
enum class output_format { text, json, csv };

struct run_config {
    command cmd = command::degree;
    long m = 0;
    long n = 0;
    long r = 0;
    long max_n = 0;
    long oracle_max_n = 5;
    specialization_strategy lambda_source = specialization_strategy::make_sequential();
    std::size_t check_count = 2;
    bool use_oracle = false;
    output_format format = output_format::text;
    // 0 means one worker per hardware thread.
    unsigned worker_count = 1;
};

// Each command writes its report to `out` and returns an exit code. They
// throw parameter_error / inconsistency_error; run() maps those to codes.
int cmd_degree(const run_config &cfg, std::ostream &out);
int cmd_table(const run_config &cfg, std::ostream &out);
int cmd_verify(const run_config &cfg, std::ostream &out);

// Full command line (args[0] is the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace sdpdeg::cli

#endif // SDPDEG_CLI_HPP
