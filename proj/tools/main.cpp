#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finsent/finsent.h"

namespace {

int fail_validation(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return FINSENT_ERR_VALIDATION;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"news sentiment stock-trend pipeline"};
    app.require_subcommand(1);

    std::string config_path, output_dir, model_path, articles_path;
    std::vector<std::string> overrides;

    app.add_option("-c,--config", config_path, "INI config file (defaults apply without it)");
    app.add_option("--set", overrides, "override one setting, section.key=value")
        ->type_name("KEY=VALUE");
    app.add_option("-o,--output-dir", output_dir,
                   "output directory (overrides FINSENT_OUTPUT_DIR and the config)");

    app.add_subcommand("label", "score articles against the lexicons and write labels");
    app.add_subcommand("train", "fit tf-idf vocabulary and train all three classifiers");
    app.add_subcommand("evaluate", "run every configured test option and write reports");
    auto* predict = app.add_subcommand("predict", "apply a saved model to articles");
    predict->add_option("-m,--model", model_path, "saved model file")->required();
    predict->add_option("-a,--articles", articles_path,
                        "articles to predict (default: paths.unknown_articles)");
    app.add_subcommand("plot", "render the sentiment vs price comparison");
    app.add_subcommand("run-all", "label, train, evaluate and plot in one pass");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help / --version
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return FINSENT_ERR_VALIDATION;
    }
    std::string command = app.get_subcommands().front()->get_name();

    finsent_config* cfg = nullptr;
    if (!config_path.empty()) {
        if (finsent_config_load(config_path.c_str(), &cfg) != FINSENT_OK) {
            return fail_validation(finsent_last_error());
        }
    } else {
        cfg = finsent_config_new();
        if (!cfg) return fail_validation("cannot allocate config");
    }

    int status = FINSENT_OK;
    for (const auto& item : overrides) {
        size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            status = fail_validation("--set expects section.key=value, got '" + item + "'");
            break;
        }
        if (finsent_config_set(cfg, item.substr(0, eq).c_str(), item.substr(eq + 1).c_str()) !=
            FINSENT_OK) {
            status = fail_validation(finsent_last_error());
            break;
        }
    }

    if (status == FINSENT_OK) {
        // Precedence: flag, then environment, then config file.
        const char* env_dir = std::getenv("FINSENT_OUTPUT_DIR");
        std::string resolved_dir = !output_dir.empty() ? output_dir : (env_dir ? env_dir : "");
        if (!resolved_dir.empty() &&
            finsent_config_set(cfg, "paths.output_dir", resolved_dir.c_str()) != FINSENT_OK) {
            status = fail_validation(finsent_last_error());
        }
    }

    if (status == FINSENT_OK) {
        char* summary = nullptr;
        status = finsent_run(cfg, command.c_str(), model_path.empty() ? nullptr : model_path.c_str(),
                             articles_path.empty() ? nullptr : articles_path.c_str(), &summary);
        if (status == FINSENT_OK) {
            if (summary) std::cout << summary;
        } else {
            std::cerr << "error: " << finsent_last_error() << "\n";
        }
        finsent_string_free(summary);
    }

    finsent_config_free(cfg);
    return status;
}
