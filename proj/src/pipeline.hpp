#pragma once

#include <string>

#include "config.hpp"

namespace finsent {

enum class Command { label, train, evaluate, predict, plot, run_all };

// Accepts the CLI spelling ("run-all"); anything else is a config_error.
Command parse_command(const std::string& name);

// Cheap pre-flight: config ranges plus existence of every input file the
// command will read. Throws before any output is produced.
void validate_run(const RunConfig& cfg, Command cmd, const std::string& model_path = {},
                  const std::string& articles_path = {});

// Executes one subcommand: writes its artifacts plus the resolved config echo
// under cfg.output_dir and returns the human-readable summary. model_path and
// articles_path apply to predict only; an empty articles_path falls back to
// paths.unknown_articles.
std::string run_command(const RunConfig& cfg, Command cmd, const std::string& model_path = {},
                        const std::string& articles_path = {});

}  // namespace finsent
