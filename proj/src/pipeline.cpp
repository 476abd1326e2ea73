#include "pipeline.hpp"

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "corpus.hpp"
#include "errors.hpp"
#include "evaluation.hpp"
#include "lexicon.hpp"
#include "model.hpp"
#include "naive_bayes.hpp"
#include "random_forest.hpp"
#include "rng.hpp"
#include "signal_report.hpp"
#include "strutil.hpp"
#include "svm.hpp"
#include "textprep.hpp"
#include "vectorizer.hpp"

namespace fs = std::filesystem;

namespace finsent {

namespace {

// Paper-order rows for every report: forest, bayes, svm.
constexpr std::array<ModelVariant, 3> kVariants = {
    ModelVariant::random_forest, ModelVariant::naive_bayes, ModelVariant::svm};

const char* variant_display(ModelVariant v) {
    switch (v) {
        case ModelVariant::random_forest: return "random forest";
        case ModelVariant::naive_bayes: return "naive bayes";
        case ModelVariant::svm: return "svm";
    }
    return "?";
}

std::string doc_text(const NewsArticle& a) { return a.headline + " " + a.body; }

PrepOptions prep_of(const RunConfig& cfg) {
    PrepOptions p;
    p.stem = cfg.stem;
    p.min_token_len = cfg.min_token_len;
    return p;
}

VectorizerOptions weight_of(const RunConfig& cfg) {
    VectorizerOptions w;
    w.sublinear_tf = cfg.sublinear_tf;
    w.add_one_idf = cfg.add_one_idf;
    return w;
}

struct Inputs {
    ArticleSet articles;
    Lexicon lexicon;
    StopList stops;
};

Inputs load_inputs(const RunConfig& cfg) {
    Inputs in;
    in.articles = load_articles(cfg.articles);
    in.lexicon = Lexicon::load(cfg.positive_words, cfg.negative_words);
    in.stops = StopList::load(cfg.stoplists);
    return in;
}

// Gold labels win; unlabeled articles fall back to the lexicon verdict.
std::vector<Polarity> resolve_labels(const ArticleSet& set, const Lexicon& lex,
                                     const StopList& stops) {
    std::vector<Polarity> out;
    out.reserve(set.size());
    for (const auto& a : set) {
        if (a.label) {
            out.push_back(*a.label);
        } else {
            out.push_back(label_from_score(score_document(scoring_tokens(doc_text(a), stops), lex)));
        }
    }
    return out;
}

std::vector<TokenizedDoc> tokenize_set(const ArticleSet& set, const StopList& stops,
                                       const PrepOptions& prep) {
    std::vector<TokenizedDoc> docs;
    docs.reserve(set.size());
    for (const auto& a : set) docs.push_back({a.id, vector_tokens(doc_text(a), stops, prep)});
    return docs;
}

TrainedModel train_one(ModelVariant v, const DocumentMatrix& matrix, const RunConfig& cfg,
                       uint64_t rf_seed) {
    TrainedModel model;
    switch (v) {
        case ModelVariant::naive_bayes:
            model = train_naive_bayes(matrix, cfg.nb_alpha);
            break;
        case ModelVariant::random_forest: {
            RFOptions o;
            o.n_trees = cfg.rf_trees;
            o.m_try = cfg.rf_m_try;
            o.max_depth = cfg.rf_max_depth;
            o.bootstrap = cfg.rf_bootstrap;
            o.seed = rf_seed;
            o.threads = cfg.threads;
            model = train_random_forest(matrix, o);
            break;
        }
        case ModelVariant::svm: {
            SVMOptions o;
            o.c = cfg.svm_c;
            o.epochs = cfg.svm_epochs;
            o.tolerance = cfg.svm_tolerance;
            model = train_svm(matrix, o);
            break;
        }
    }
    model.prep = prep_of(cfg);
    model.weighting = weight_of(cfg);
    return model;
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
    return cfg.output_dir + "/" + name;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrorKind::io_error, "cannot write " + path);
    out << content;
}

void prepare_output(const RunConfig& cfg) {
    std::error_code ec;
    fs::create_directories(cfg.output_dir, ec);
    if (ec) {
        raise(ErrorKind::io_error, "cannot create output dir " + cfg.output_dir + ": " + ec.message());
    }
    write_text(out_path(cfg, "resolved_config.ini"), render_config(cfg));
}

std::string pct(double fraction) { return format_fixed(fraction * 100.0, 2); }

std::string pad(const std::string& s, size_t width) {
    std::string out = s;
    while (out.size() < width) out += ' ';
    return out;
}

std::string cmd_label(const RunConfig& cfg) {
    Inputs in = load_inputs(cfg);
    auto labeled = label_corpus(in.articles, in.lexicon, in.stops);
    ArticleSet out;
    size_t n_pos = 0;
    out.articles.reserve(labeled.size());
    for (const auto& la : labeled) {
        out.articles.push_back(la.article);
        if (la.article.label == Polarity::positive) ++n_pos;
    }
    std::string path = out_path(cfg, "labeled_articles.tsv");
    write_articles(out, path);

    std::string s;
    s += "labeled " + std::to_string(labeled.size()) + " articles: " + std::to_string(n_pos) +
         " positive, " + std::to_string(labeled.size() - n_pos) + " negative\n";
    s += "wrote " + path + "\n";
    return s;
}

DocumentMatrix build_matrix(const Inputs& in, const RunConfig& cfg) {
    auto labels = resolve_labels(in.articles, in.lexicon, in.stops);
    auto docs = tokenize_set(in.articles, in.stops, prep_of(cfg));
    DocumentMatrix matrix = fit_transform(docs, labels, cfg.min_df, weight_of(cfg));
    if (cfg.dump_matrix) write_matrix(matrix, out_path(cfg, "matrix.txt"));
    return matrix;
}

std::string cmd_train(const RunConfig& cfg) {
    Inputs in = load_inputs(cfg);
    DocumentMatrix matrix = build_matrix(in, cfg);

    std::string s = "vocabulary: " + std::to_string(matrix.vocab.size()) + " terms over " +
                    std::to_string(matrix.n_rows()) + " documents\n";
    for (ModelVariant v : kVariants) {
        std::string name = model_variant_name(v);
        TrainedModel model = train_one(v, matrix, cfg, derive_seed(cfg.seed, "train/" + name));
        std::string path = out_path(cfg, name + ".model");
        save_model(model, path);

        auto preds = predict_matrix(model, matrix);
        size_t correct = 0;
        for (size_t i = 0; i < preds.size(); ++i) {
            if (preds[i].label == matrix.labels[i]) ++correct;
        }
        s += std::string(variant_display(v)) + ": wrote " + path + ", training accuracy " +
             pct(double(correct) / double(matrix.n_rows())) + "%\n";
    }
    return s;
}

struct OptionResult {
    std::string token;    // file-name-safe: cv5, split70, unknown
    std::string display;  // report heading: 5-fold CV, 70% split, unknown set
    std::array<EvalReport, 3> by_variant;
};

std::string grid_report_text(const std::vector<OptionResult>& grid) {
    constexpr size_t name_w = 16, cell_w = 14;
    struct Block {
        const char* title;
        std::string (*cell)(const EvalReport&);
    };
    const Block blocks[] = {
        {"Correctly Classified (%)",
         [](const EvalReport& r) { return pct(r.accuracy); }},
        {"Correctly Classified (count)",
         [](const EvalReport& r) {
             return std::to_string(r.n_correct) + " / " + std::to_string(r.n_total);
         }},
        {"ROC Area", [](const EvalReport& r) { return format_fixed(r.auc, 3); }},
        {"Weighted Precision",
         [](const EvalReport& r) { return format_fixed(r.weighted_precision, 3); }},
        {"Weighted Recall",
         [](const EvalReport& r) { return format_fixed(r.weighted_recall, 3); }},
    };

    std::string txt;
    for (const auto& block : blocks) {
        txt += block.title;
        txt += '\n';
        txt += pad("algorithm", name_w);
        for (const auto& opt : grid) txt += pad(opt.display, cell_w);
        txt += '\n';
        for (size_t vi = 0; vi < kVariants.size(); ++vi) {
            txt += pad(variant_display(kVariants[vi]), name_w);
            for (const auto& opt : grid) txt += pad(block.cell(opt.by_variant[vi]), cell_w);
            txt += '\n';
        }
        txt += '\n';
    }
    return txt;
}

std::string grid_report_csv(const std::vector<OptionResult>& grid) {
    std::string csv = "option,algorithm,metric,value\n";
    for (const auto& opt : grid) {
        for (size_t vi = 0; vi < kVariants.size(); ++vi) {
            const EvalReport& r = opt.by_variant[vi];
            std::string prefix = opt.token + "," + model_variant_name(kVariants[vi]) + ",";
            csv += prefix + "accuracy," + format_shortest(r.accuracy) + "\n";
            csv += prefix + "correct," + std::to_string(r.n_correct) + "\n";
            csv += prefix + "total," + std::to_string(r.n_total) + "\n";
            csv += prefix + "roc_area," + format_shortest(r.auc) + "\n";
            csv += prefix + "weighted_precision," + format_shortest(r.weighted_precision) + "\n";
            csv += prefix + "weighted_recall," + format_shortest(r.weighted_recall) + "\n";
        }
    }
    return csv;
}

std::string cmd_evaluate(const RunConfig& cfg) {
    Inputs in = load_inputs(cfg);
    DocumentMatrix matrix = build_matrix(in, cfg);

    std::vector<OptionResult> grid;
    auto trainer_for = [&](ModelVariant v, const std::string& token) {
        return [&cfg, v, token](const DocumentMatrix& train, size_t fold) {
            return train_one(v, train, cfg,
                             derive_seed(cfg.seed, token + "/" + model_variant_name(v) +
                                                       "/fold" + std::to_string(fold)));
        };
    };

    for (size_t k : cfg.folds) {
        OptionResult opt;
        opt.token = "cv" + std::to_string(k);
        opt.display = std::to_string(k) + "-fold CV";
        FoldPlan plan =
            make_fold_plan(matrix.labels, k, derive_seed(cfg.seed, opt.token), cfg.stratified);
        for (size_t vi = 0; vi < kVariants.size(); ++vi) {
            opt.by_variant[vi] = cross_validate(matrix, plan, trainer_for(kVariants[vi], opt.token));
        }
        grid.push_back(std::move(opt));
    }
    for (double f : cfg.splits) {
        OptionResult opt;
        int percent = int(std::lround(f * 100.0));
        opt.token = "split" + std::to_string(percent);
        opt.display = std::to_string(percent) + "% split";
        auto [train_idx, test_idx] =
            percentage_split(matrix.n_rows(), f, derive_seed(cfg.seed, opt.token));
        for (size_t vi = 0; vi < kVariants.size(); ++vi) {
            opt.by_variant[vi] = split_evaluate(matrix, train_idx, test_idx,
                                                trainer_for(kVariants[vi], opt.token));
        }
        grid.push_back(std::move(opt));
    }
    if (!cfg.unknown_articles.empty()) {
        OptionResult opt;
        opt.token = "unknown";
        opt.display = "unknown set";
        ArticleSet uset = load_articles(cfg.unknown_articles);
        auto ulabels = resolve_labels(uset, in.lexicon, in.stops);
        DocumentMatrix um;
        um.vocab = matrix.vocab;
        um.labels = ulabels;
        um.rows.reserve(uset.size());
        for (const auto& a : uset) {
            um.rows.push_back(
                transform(vector_tokens(doc_text(a), in.stops, prep_of(cfg)), matrix.vocab,
                          weight_of(cfg)));
        }
        for (size_t vi = 0; vi < kVariants.size(); ++vi) {
            ModelVariant v = kVariants[vi];
            TrainedModel full = train_one(
                v, matrix, cfg,
                derive_seed(cfg.seed, "unknown/" + std::string(model_variant_name(v))));
            opt.by_variant[vi] = evaluate_unknown(full, um);
        }
        grid.push_back(std::move(opt));
    }

    std::string report_txt = out_path(cfg, "report.txt");
    std::string report_csv = out_path(cfg, "report.csv");
    write_text(report_txt, grid_report_text(grid));
    write_text(report_csv, grid_report_csv(grid));
    size_t roc_files = 0;
    for (const auto& opt : grid) {
        for (size_t vi = 0; vi < kVariants.size(); ++vi) {
            std::string roc = "fpr,tpr\n";
            for (const auto& p : opt.by_variant[vi].roc) {
                roc += format_shortest(p.fpr) + "," + format_shortest(p.tpr) + "\n";
            }
            write_text(out_path(cfg, "roc_" + opt.token + "_" +
                                         model_variant_name(kVariants[vi]) + ".csv"),
                       roc);
            ++roc_files;
        }
    }

    std::string s = "evaluated " + std::to_string(grid.size()) + " test options x " +
                    std::to_string(kVariants.size()) + " classifiers over " +
                    std::to_string(matrix.n_rows()) + " documents\n";
    for (const auto& opt : grid) {
        s += opt.display + ": ";
        for (size_t vi = 0; vi < kVariants.size(); ++vi) {
            if (vi) s += ", ";
            s += std::string(variant_display(kVariants[vi])) + " " +
                 pct(opt.by_variant[vi].accuracy) + "%";
        }
        s += '\n';
    }
    s += "wrote " + report_txt + ", " + report_csv + ", " + std::to_string(roc_files) +
         " roc files\n";
    return s;
}

std::string cmd_predict(const RunConfig& cfg, const std::string& model_path,
                        const std::string& articles_path) {
    TrainedModel model = load_model(model_path);
    StopList stops = StopList::load(cfg.stoplists);
    ArticleSet set = load_articles(articles_path);

    std::string tsv;
    std::vector<PredictionRecord> records;
    bool all_gold = !set.empty();
    for (const auto& a : set) {
        SparseVector x =
            transform(vector_tokens(doc_text(a), stops, model.prep), model.vocab, model.weighting);
        Prediction p = predict(model, x, model.vocab_fingerprint);
        tsv += a.id + "\t" + format_double(p.score) + "\t" + polarity_name(p.label) + "\n";
        if (a.label) {
            records.push_back({*a.label, p.label, p.score});
        } else {
            all_gold = false;
        }
    }
    std::string path = out_path(cfg, "predictions.tsv");
    write_text(path, tsv);

    std::string s = "predicted " + std::to_string(set.size()) + " articles with " +
                    variant_display(model.variant()) + " model\n";
    s += "wrote " + path + "\n";
    if (all_gold) {
        EvalReport r = compute_metrics(records);
        s += "correctly classified: " + std::to_string(r.n_correct) + " / " +
             std::to_string(r.n_total) + "\n";
        s += "accuracy: " + pct(r.accuracy) + "%\n";
        s += "roc area: " + format_fixed(r.auc, 3) + "\n";
    }
    return s;
}

std::string cmd_plot(const RunConfig& cfg) {
    Inputs in = load_inputs(cfg);
    PriceSeries prices = load_prices(cfg.prices);
    auto labeled = label_corpus(in.articles, in.lexicon, in.stops);
    auto days = daily_series(labeled, prices);

    PlotOptions popts;
    popts.use_mean = cfg.plot_mean;
    std::string svg_path = out_path(cfg, "sentiment_vs_price.svg");
    std::string csv_path = out_path(cfg, "sentiment_vs_price.csv");
    render_comparison(days, prices, svg_path, csv_path, popts);

    std::string s = "plotted " + std::to_string(days.size()) + " news days against " +
                    std::to_string(prices.size()) + " price bars\n";
    s += "wrote " + svg_path + ", " + csv_path + "\n";
    try {
        AlignmentStats stats = alignment_stats(days, prices);
        s += "pearson_correlation," + format_shortest(stats.correlation) + "\n";
        s += "directional_hit_rate," + format_shortest(stats.hit_rate) + "\n";
        s += "aligned_days," + std::to_string(stats.aligned_days) + "\n";
        s += std::string("zero_variance,") + (stats.zero_variance ? "1" : "0") + "\n";
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::insufficient_data) throw;
        s += std::string("alignment stats skipped: ") + e.what() + "\n";
    }
    return s;
}

}  // namespace

Command parse_command(const std::string& name) {
    if (name == "label") return Command::label;
    if (name == "train") return Command::train;
    if (name == "evaluate") return Command::evaluate;
    if (name == "predict") return Command::predict;
    if (name == "plot") return Command::plot;
    if (name == "run-all" || name == "run_all") return Command::run_all;
    raise(ErrorKind::config_error, "unknown command '" + name + "'");
}

void validate_run(const RunConfig& cfg, Command cmd, const std::string& model_path,
                  const std::string& articles_path) {
    validate_config(cfg);
    auto need = [](const std::string& path, const std::string& what) {
        if (path.empty()) raise(ErrorKind::config_error, what + " is required for this command");
        if (!fs::exists(path)) raise(ErrorKind::config_error, what + " not found: " + path);
    };
    auto need_corpus = [&]() {
        need(cfg.articles, "paths.articles");
        need(cfg.positive_words, "paths.positive_words");
        need(cfg.negative_words, "paths.negative_words");
        for (const auto& p : cfg.stoplists) need(p, "stoplist entry");
    };
    switch (cmd) {
        case Command::label:
        case Command::train:
            need_corpus();
            break;
        case Command::evaluate:
            need_corpus();
            if (!cfg.unknown_articles.empty()) need(cfg.unknown_articles, "paths.unknown_articles");
            break;
        case Command::predict: {
            need(model_path, "model path");
            const std::string& apath =
                articles_path.empty() ? cfg.unknown_articles : articles_path;
            need(apath, "articles path");
            for (const auto& p : cfg.stoplists) need(p, "stoplist entry");
            break;
        }
        case Command::plot:
            need_corpus();
            need(cfg.prices, "paths.prices");
            break;
        case Command::run_all:
            need_corpus();
            need(cfg.prices, "paths.prices");
            if (!cfg.unknown_articles.empty()) need(cfg.unknown_articles, "paths.unknown_articles");
            break;
    }
}

std::string run_command(const RunConfig& cfg, Command cmd, const std::string& model_path,
                        const std::string& articles_path) {
    prepare_output(cfg);
    switch (cmd) {
        case Command::label: return cmd_label(cfg);
        case Command::train: return cmd_train(cfg);
        case Command::evaluate: return cmd_evaluate(cfg);
        case Command::predict: {
            const std::string& apath =
                articles_path.empty() ? cfg.unknown_articles : articles_path;
            return cmd_predict(cfg, model_path, apath);
        }
        case Command::plot: return cmd_plot(cfg);
        case Command::run_all: {
            std::string s;
            s += "== label ==\n" + cmd_label(cfg);
            s += "== train ==\n" + cmd_train(cfg);
            s += "== evaluate ==\n" + cmd_evaluate(cfg);
            s += "== plot ==\n" + cmd_plot(cfg);
            return s;
        }
    }
    raise(ErrorKind::config_error, "unhandled command");
}

}  // namespace finsent
