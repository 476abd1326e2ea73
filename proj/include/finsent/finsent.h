#ifndef FINSENT_H
#define FINSENT_H

/*
 * C interface to the news-sentiment pipeline. All functions return a status:
 * 0 success, 1 validation failure (bad config, missing input paths),
 * 2 runtime failure (unreadable data, training or rendering errors).
 * The message for the most recent failure on the calling thread is available
 * via finsent_last_error().
 */

#ifdef __cplusplus
extern "C" {
#endif

#define FINSENT_OK 0
#define FINSENT_ERR_VALIDATION 1
#define FINSENT_ERR_RUNTIME 2

typedef struct finsent_config finsent_config;

/* Library version, static storage, never NULL. */
const char* finsent_version(void);

/* Message for the calling thread's most recent failure; empty if none. */
const char* finsent_last_error(void);

/* New config holding the built-in defaults. Free with finsent_config_free. */
finsent_config* finsent_config_new(void);

/* Parses an INI config file into a new config stored in *out. */
int finsent_config_load(const char* path, finsent_config** out);

/* Applies one override, e.g. ("eval.seed", "7") or ("paths.output_dir", d). */
int finsent_config_set(finsent_config* cfg, const char* dotted_key, const char* value);

/* Canonical text form of the resolved config. Free with finsent_string_free. */
int finsent_config_render(const finsent_config* cfg, char** out);

void finsent_config_free(finsent_config* cfg);

/*
 * Runs one pipeline command: "label", "train", "evaluate", "predict", "plot"
 * or "run-all". Artifacts are written under the config's output_dir.
 * model_path and articles_path are read only by "predict" (articles_path may
 * be NULL to fall back to paths.unknown_articles); pass NULL otherwise.
 * On success, *summary (when summary is non-NULL) receives the human-readable
 * summary; free it with finsent_string_free.
 */
int finsent_run(const finsent_config* cfg, const char* command, const char* model_path,
                const char* articles_path, char** summary);

void finsent_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* FINSENT_H */
