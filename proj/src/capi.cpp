#include "finsent/finsent.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "config.hpp"
#include "errors.hpp"
#include "pipeline.hpp"

struct finsent_config {
    finsent::RunConfig cfg;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int fail(int code, const std::string& message) {
    g_last_error = message;
    return code;
}

}  // namespace

extern "C" {

const char* finsent_version(void) { return "1.0.0"; }

const char* finsent_last_error(void) { return g_last_error.c_str(); }

finsent_config* finsent_config_new(void) { return new (std::nothrow) finsent_config{}; }

int finsent_config_load(const char* path, finsent_config** out) {
    if (!path || !out) return fail(FINSENT_ERR_VALIDATION, "null argument");
    try {
        auto holder = std::make_unique<finsent_config>();
        holder->cfg = finsent::parse_config_file(path);
        *out = holder.release();
        g_last_error.clear();
        return FINSENT_OK;
    } catch (const finsent::Error& e) {
        return fail(FINSENT_ERR_VALIDATION, e.what());
    } catch (const std::exception& e) {
        return fail(FINSENT_ERR_RUNTIME, e.what());
    }
}

int finsent_config_set(finsent_config* cfg, const char* dotted_key, const char* value) {
    if (!cfg || !dotted_key || !value) return fail(FINSENT_ERR_VALIDATION, "null argument");
    try {
        finsent::apply_setting(cfg->cfg, dotted_key, value);
        g_last_error.clear();
        return FINSENT_OK;
    } catch (const finsent::Error& e) {
        return fail(FINSENT_ERR_VALIDATION, e.what());
    } catch (const std::exception& e) {
        return fail(FINSENT_ERR_RUNTIME, e.what());
    }
}

int finsent_config_render(const finsent_config* cfg, char** out) {
    if (!cfg || !out) return fail(FINSENT_ERR_VALIDATION, "null argument");
    try {
        *out = dup_string(finsent::render_config(cfg->cfg));
        if (!*out) return fail(FINSENT_ERR_RUNTIME, "out of memory");
        g_last_error.clear();
        return FINSENT_OK;
    } catch (const std::exception& e) {
        return fail(FINSENT_ERR_RUNTIME, e.what());
    }
}

void finsent_config_free(finsent_config* cfg) { delete cfg; }

int finsent_run(const finsent_config* cfg, const char* command, const char* model_path,
                const char* articles_path, char** summary) {
    if (!cfg || !command) return fail(FINSENT_ERR_VALIDATION, "null argument");
    std::string model = model_path ? model_path : "";
    std::string articles = articles_path ? articles_path : "";

    finsent::Command cmd;
    try {
        cmd = finsent::parse_command(command);
        finsent::validate_run(cfg->cfg, cmd, model, articles);
    } catch (const std::exception& e) {
        return fail(FINSENT_ERR_VALIDATION, e.what());
    }
    try {
        std::string text = finsent::run_command(cfg->cfg, cmd, model, articles);
        if (summary) {
            *summary = dup_string(text);
            if (!*summary) return fail(FINSENT_ERR_RUNTIME, "out of memory");
        }
        g_last_error.clear();
        return FINSENT_OK;
    } catch (const std::exception& e) {
        return fail(FINSENT_ERR_RUNTIME, e.what());
    }
}

void finsent_string_free(char* s) { std::free(s); }

}  // extern "C"
