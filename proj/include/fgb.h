/* C interface to the free-group boundary toolkit.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions return fgb_status; on failure the output parameters are left
 * untouched and fgb_last_error() describes the problem (thread-local, valid
 * until the next failing call on the same thread).
 *
 * Strings returned through char** outputs are heap-allocated; release them
 * with fgb_string_free().
 */
#ifndef FGB_H
#define FGB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fgb_status {
  FGB_OK = 0,
  FGB_ERR_ARGUMENT = 1,       /* precondition or usage violation */
  FGB_ERR_PARSE = 2,          /* malformed word/point/relation/config text */
  FGB_ERR_NOT_STABILIZED = 3, /* computation finished without stabilizing */
  FGB_ERR_INTERNAL = 4
} fgb_status;

typedef struct fgb_word fgb_word;
typedef struct fgb_point fgb_point;
typedef struct fgb_levelfn fgb_levelfn;

const char* fgb_last_error(void);
void fgb_string_free(char* s);

/* -- words: exact arithmetic in the free group ------------------------- */

/* Text format: "a".."z" generators, "A".."Z" inverses, "1" identity. */
fgb_status fgb_word_parse(int rank, const char* text, fgb_word** out);
fgb_status fgb_word_format(const fgb_word* w, char** out);
void fgb_word_free(fgb_word* w);
fgb_status fgb_word_multiply(const fgb_word* x, const fgb_word* y,
                             fgb_word** out);
fgb_status fgb_word_inverse(const fgb_word* x, fgb_word** out);
long long fgb_word_length(const fgb_word* x);
fgb_status fgb_gromov_product(const fgb_word* y, const fgb_word* z,
                              const fgb_word* base, long long* out);

/* -- boundary points ---------------------------------------------------- */

/* Text format "u|v" for the eventually periodic word u v v v ... */
fgb_status fgb_point_parse(int rank, const char* text, fgb_point** out);
fgb_status fgb_point_format(const fgb_point* x, char** out);
void fgb_point_free(fgb_point* x);
/* sign > 0 for the forward limit, sign < 0 for the backward limit. */
fgb_status fgb_limit_point(const fgb_word* w, int sign, fgb_point** out);
fgb_status fgb_act(const fgb_word* g, const fgb_point* x, fgb_point** out);
fgb_status fgb_point_prefix(const fgb_point* x, int n, fgb_word** out);
fgb_status fgb_is_fixed(const fgb_word* g, const fgb_point* x, int* out);
/* relation: comma-separated words, "S" for all generators, "none"/"". */
fgb_status fgb_related(int rank, const char* x_text, const char* y_text,
                       const char* relation, int* out);

/* -- locally constant integer functions --------------------------------- */

fgb_status fgb_cylinder_p(const fgb_word* w, fgb_levelfn** out);
fgb_status fgb_cylinder_q(const fgb_word* w, fgb_levelfn** out);
void fgb_levelfn_free(fgb_levelfn* f);
fgb_status fgb_levelfn_translate(const fgb_word* g, const fgb_levelfn* f,
                                 fgb_levelfn** out);
fgb_status fgb_levelfn_evaluate(const fgb_levelfn* f, const fgb_point* x,
                                long long* out);
fgb_status fgb_levelfn_to_json(const fgb_levelfn* f, char** out);

/* -- command layer ------------------------------------------------------ */

/* Each command takes a JSON configuration and produces the report text that
 * the CLI prints. FGB_ERR_NOT_STABILIZED still carries a full report. */
fgb_status fgb_run_kgroup(const char* config_json, char** report_out);
fgb_status fgb_run_verify(const char* config_json, char** report_out);
fgb_status fgb_run_witness(const char* config_json, char** report_out);
fgb_status fgb_run_orbits(const char* config_json, char** report_out);
fgb_status fgb_run_act(const char* config_json, char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* FGB_H */
