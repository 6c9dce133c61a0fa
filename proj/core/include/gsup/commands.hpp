#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "gsup/solver.hpp"
#include "gsup/supports.hpp"
#include "gsup/verify.hpp"

namespace gsup {

// exit codes shared by every command
inline constexpr int exit_ok = 0;
inline constexpr int exit_contract_violation = 2;
inline constexpr int exit_input_error = 3;
inline constexpr int exit_budget = 4;

struct CommandOutcome {
    nlohmann::json report;
    int exit_code = exit_ok;
};

/// Wrap a command body: exceptions become error reports with the matching
/// exit code.
CommandOutcome run_guarded(const std::string& command,
                           const std::function<nlohmann::json()>& body);

CommandOutcome cmd_check(const std::string& path);
CommandOutcome cmd_support(const std::string& path, SupportMode mode, const PipelineOptions& opt,
                           const std::optional<std::string>& dot_path);
CommandOutcome cmd_verify(const std::string& system_path, const std::string& report_path);
CommandOutcome cmd_color(const std::string& path, SupportMode mode, const PipelineOptions& opt);
CommandOutcome cmd_solve(const std::string& path, ProblemKind kind, SupportMode mode, int k,
                         std::uint64_t seed);
CommandOutcome cmd_gen(int rows, int cols, int count, int k_count, std::uint64_t seed,
                       const std::string& out_path);
CommandOutcome cmd_from_grid(const std::string& path, const std::optional<std::string>& out_path);

SupportMode parse_mode(const std::string& s);
ProblemKind parse_kind(const std::string& s);

} // namespace gsup
