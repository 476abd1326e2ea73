#include "config.hpp"

#include <charconv>
#include <fstream>

#include "errors.hpp"
#include "strutil.hpp"

namespace finsent {

namespace {

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const char* expected) {
    raise(ErrorKind::config_error,
          "setting " + key + ": cannot read '" + value + "' as " + expected);
}

bool to_bool(const std::string& key, const std::string& value) {
    std::string v = to_lower(value);
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    bad_value(key, value, "a boolean");
}

uint64_t to_u64(const std::string& key, const std::string& value) {
    uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        bad_value(key, value, "a non-negative integer");
    }
    return out;
}

double to_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        bad_value(key, value, "a number");
    }
    return out;
}

std::vector<std::string> to_path_list(const std::string& value) {
    std::vector<std::string> out;
    for (const auto& part : split(value, ',')) {
        std::string p = trim(part);
        if (!p.empty()) out.push_back(p);
    }
    return out;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ',';
        out += p;
    }
    return out;
}

}  // namespace

void apply_setting(RunConfig& cfg, const std::string& dotted_key, const std::string& value) {
    const std::string& k = dotted_key;
    if (k == "paths.articles") cfg.articles = value;
    else if (k == "paths.prices") cfg.prices = value;
    else if (k == "paths.positive_words") cfg.positive_words = value;
    else if (k == "paths.negative_words") cfg.negative_words = value;
    else if (k == "paths.stoplists") cfg.stoplists = to_path_list(value);
    else if (k == "paths.unknown_articles") cfg.unknown_articles = value;
    else if (k == "paths.output_dir") cfg.output_dir = value;
    else if (k == "prep.min_df") cfg.min_df = to_u64(k, value);
    else if (k == "prep.stem") cfg.stem = to_bool(k, value);
    else if (k == "prep.min_token_len") cfg.min_token_len = to_u64(k, value);
    else if (k == "vectorizer.sublinear_tf") cfg.sublinear_tf = to_bool(k, value);
    else if (k == "vectorizer.add_one_idf") cfg.add_one_idf = to_bool(k, value);
    else if (k == "vectorizer.dump_matrix") cfg.dump_matrix = to_bool(k, value);
    else if (k == "nb.alpha") cfg.nb_alpha = to_double(k, value);
    else if (k == "rf.n_trees") cfg.rf_trees = uint32_t(to_u64(k, value));
    else if (k == "rf.m_try") cfg.rf_m_try = uint32_t(to_u64(k, value));
    else if (k == "rf.max_depth") cfg.rf_max_depth = uint32_t(to_u64(k, value));
    else if (k == "rf.bootstrap") cfg.rf_bootstrap = to_bool(k, value);
    else if (k == "svm.c") cfg.svm_c = to_double(k, value);
    else if (k == "svm.epochs") cfg.svm_epochs = uint32_t(to_u64(k, value));
    else if (k == "svm.tolerance") cfg.svm_tolerance = to_double(k, value);
    else if (k == "eval.folds") {
        cfg.folds.clear();
        for (const auto& part : split(value, ',')) {
            std::string p = trim(part);
            if (!p.empty()) cfg.folds.push_back(to_u64(k, p));
        }
    } else if (k == "eval.splits") {
        cfg.splits.clear();
        for (const auto& part : split(value, ',')) {
            std::string p = trim(part);
            if (!p.empty()) cfg.splits.push_back(to_double(k, p));
        }
    } else if (k == "eval.seed") cfg.seed = to_u64(k, value);
    else if (k == "eval.stratified") cfg.stratified = to_bool(k, value);
    else if (k == "eval.threads") cfg.threads = unsigned(to_u64(k, value));
    else if (k == "plot.aggregate") {
        std::string v = to_lower(value);
        if (v == "net") cfg.plot_mean = false;
        else if (v == "mean") cfg.plot_mean = true;
        else bad_value(k, value, "net or mean");
    } else {
        raise(ErrorKind::config_error, "unknown setting '" + k + "'");
    }
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorKind::io_error, "cannot open config " + path);

    RunConfig cfg;
    std::string line, section;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[' && t.back() == ']') {
            section = trim(t.substr(1, t.size() - 2));
            if (section.empty()) {
                raise(ErrorKind::config_error,
                      path + ":" + std::to_string(line_no) + ": empty section name");
            }
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos || section.empty()) {
            raise(ErrorKind::config_error,
                  path + ":" + std::to_string(line_no) + ": expected key = value inside a section");
        }
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty()) {
            raise(ErrorKind::config_error,
                  path + ":" + std::to_string(line_no) + ": empty key");
        }
        try {
            apply_setting(cfg, section + "." + key, value);
        } catch (const Error& e) {
            raise(ErrorKind::config_error,
                  path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return cfg;
}

void validate_config(const RunConfig& cfg) {
    if (cfg.min_df < 1) raise(ErrorKind::config_error, "prep.min_df must be at least 1");
    if (!(cfg.nb_alpha > 0)) raise(ErrorKind::config_error, "nb.alpha must be positive");
    if (cfg.rf_trees < 1) raise(ErrorKind::config_error, "rf.n_trees must be at least 1");
    if (!(cfg.svm_c > 0)) raise(ErrorKind::config_error, "svm.c must be positive");
    if (cfg.svm_epochs < 1) raise(ErrorKind::config_error, "svm.epochs must be at least 1");
    if (!(cfg.svm_tolerance >= 0)) raise(ErrorKind::config_error, "svm.tolerance must be >= 0");
    if (cfg.folds.empty() && cfg.splits.empty() && cfg.unknown_articles.empty()) {
        raise(ErrorKind::config_error, "eval needs at least one test option");
    }
    for (size_t k : cfg.folds) {
        if (k < 2) raise(ErrorKind::config_error, "eval.folds entries must be at least 2");
    }
    for (double f : cfg.splits) {
        if (!(f > 0.0 && f < 1.0)) {
            raise(ErrorKind::config_error, "eval.splits entries must lie strictly in (0, 1)");
        }
    }
    if (cfg.output_dir.empty()) raise(ErrorKind::config_error, "paths.output_dir must be set");
}

std::string render_config(const RunConfig& cfg) {
    std::string out;
    auto kv = [&](const char* key, const std::string& value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    auto b = [](bool v) { return std::string(v ? "true" : "false"); };

    out += "[paths]\n";
    kv("articles", cfg.articles);
    kv("prices", cfg.prices);
    kv("positive_words", cfg.positive_words);
    kv("negative_words", cfg.negative_words);
    kv("stoplists", join(cfg.stoplists));
    kv("unknown_articles", cfg.unknown_articles);
    kv("output_dir", cfg.output_dir);
    out += "\n[prep]\n";
    kv("min_df", std::to_string(cfg.min_df));
    kv("stem", b(cfg.stem));
    kv("min_token_len", std::to_string(cfg.min_token_len));
    out += "\n[vectorizer]\n";
    kv("sublinear_tf", b(cfg.sublinear_tf));
    kv("add_one_idf", b(cfg.add_one_idf));
    kv("dump_matrix", b(cfg.dump_matrix));
    out += "\n[nb]\n";
    kv("alpha", format_shortest(cfg.nb_alpha));
    out += "\n[rf]\n";
    kv("n_trees", std::to_string(cfg.rf_trees));
    kv("m_try", std::to_string(cfg.rf_m_try));
    kv("max_depth", std::to_string(cfg.rf_max_depth));
    kv("bootstrap", b(cfg.rf_bootstrap));
    out += "\n[svm]\n";
    kv("c", format_shortest(cfg.svm_c));
    kv("epochs", std::to_string(cfg.svm_epochs));
    kv("tolerance", format_shortest(cfg.svm_tolerance));
    out += "\n[eval]\n";
    std::string folds;
    for (size_t k : cfg.folds) {
        if (!folds.empty()) folds += ',';
        folds += std::to_string(k);
    }
    kv("folds", folds);
    std::string splits;
    for (double f : cfg.splits) {
        if (!splits.empty()) splits += ',';
        splits += format_shortest(f);
    }
    kv("splits", splits);
    kv("seed", std::to_string(cfg.seed));
    kv("stratified", b(cfg.stratified));
    kv("threads", std::to_string(cfg.threads));
    out += "\n[plot]\n";
    kv("aggregate", cfg.plot_mean ? "mean" : "net");
    return out;
}

}  // namespace finsent
