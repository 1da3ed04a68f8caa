/* stftpr.h - C API for the stftpr library.
 *
 * Recovers a complex signal (up to global phase) from the squared magnitude
 * of its short-time Fourier transform. The library exposes four recovery
 * routes (least-squares over circulant systems, algebraic recursion,
 * trace-minimization splitting solver, Griffin-Lim iteration), window
 * admissibility checks, a 2D extension, and a reproducible experiment
 * harness.
 *
 * Conventions:
 *   - Every constructor returns STFTPR_OK and writes a handle through the
 *     out-parameter, or returns an error code and leaves it untouched.
 *   - Handles are freed with the matching *_free function; freeing NULL is
 *     a no-op.
 *   - stftpr_last_error() returns a thread-local message describing the
 *     most recent failure on the calling thread.
 *   - Strings returned through char** out-parameters are heap-allocated
 *     and must be released with stftpr_string_free().
 */

#ifndef STFTPR_H
#define STFTPR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define STFTPR_API __declspec(dllexport)
#else
#define STFTPR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stftpr_status {
  STFTPR_OK = 0,
  STFTPR_ERR_INVALID_ARGUMENT = 1,
  STFTPR_ERR_WINDOW_INADMISSIBLE = 2,
  STFTPR_ERR_VANISHING_SIGNAL = 3,
  STFTPR_ERR_IO = 4,
  STFTPR_ERR_INTERNAL = 5
} stftpr_status;

typedef struct stftpr_signal stftpr_signal;
typedef struct stftpr_window stftpr_window;
typedef struct stftpr_measurements stftpr_measurements;
typedef struct stftpr_signal2d stftpr_signal2d;
typedef struct stftpr_window2d stftpr_window2d;
typedef struct stftpr_measurements2d stftpr_measurements2d;

STFTPR_API const char* stftpr_version(void);
STFTPR_API const char* stftpr_status_str(stftpr_status status);
STFTPR_API const char* stftpr_last_error(void);
STFTPR_API void stftpr_string_free(char* s);

/* ---- signals ---------------------------------------------------------- */

/* Complex length-n signal from split real/imag arrays (im may be NULL). */
STFTPR_API stftpr_status stftpr_signal_create(const double* re,
                                              const double* im, size_t n,
                                              stftpr_signal** out);
/* i.i.d. complex Gaussian entries (unit variance per component),
 * deterministic in seed. */
STFTPR_API stftpr_status stftpr_signal_random(size_t n, uint64_t seed,
                                              stftpr_signal** out);
STFTPR_API void stftpr_signal_free(stftpr_signal* s);
STFTPR_API size_t stftpr_signal_len(const stftpr_signal* s);
/* Copies values into caller buffers of length stftpr_signal_len(s). */
STFTPR_API stftpr_status stftpr_signal_values(const stftpr_signal* s,
                                              double* re, double* im);
STFTPR_API stftpr_status stftpr_signal_save_csv(const stftpr_signal* s,
                                                const char* path);
STFTPR_API stftpr_status stftpr_signal_load_csv(const char* path,
                                                stftpr_signal** out);

/* Global-phase-aligned relative error  min_phi ||truth - e^{j phi} est|| /
 * ||est||.  Fails with STFTPR_ERR_INVALID_ARGUMENT on length mismatch or a
 * zero-norm estimate. */
STFTPR_API stftpr_status stftpr_phase_aligned_error(const stftpr_signal* truth,
                                                    const stftpr_signal* est,
                                                    double* out);

/* ---- windows ---------------------------------------------------------- */

/* Ones on [0, w-1], zero elsewhere; requires 1 <= w <= n. */
STFTPR_API stftpr_status stftpr_window_rectangular(size_t n, size_t w,
                                                   stftpr_window** out);
/* exp(-m^2/sigma^2) on the symmetric periodic index m in
 * {-floor(n/2), ..., ceil(n/2)-1}; requires sigma > 0. */
STFTPR_API stftpr_status stftpr_window_gaussian(size_t n, double sigma,
                                                stftpr_window** out);
STFTPR_API stftpr_status stftpr_window_custom(const double* re,
                                              const double* im, size_t n,
                                              stftpr_window** out);
STFTPR_API void stftpr_window_free(stftpr_window* w);
STFTPR_API size_t stftpr_window_len(const stftpr_window* w);
/* Writes the value CSV at `path` and a JSON metadata sidecar at
 * `path`.json describing the window kind and parameters. */
STFTPR_API stftpr_status stftpr_window_save_csv(const stftpr_window* w,
                                                const char* path);
STFTPR_API stftpr_status stftpr_window_load_csv(const char* path,
                                                stftpr_window** out);

/* Admissibility of the window for the shift set `ells` (length n_ells):
 * for each shift the spectrum of the windowed autocorrelation must stay
 * above tol * max|spectrum|.  Pass tol <= 0 for the default 1e-10.
 * json_report (optional) receives a per-shift table. */
STFTPR_API stftpr_status stftpr_check_window(const stftpr_window* w,
                                             const size_t* ells,
                                             size_t n_ells, double tol,
                                             int* admissible,
                                             char** json_report);

/* Closed-form admissibility predicate for rectangular windows.
 * mode 0: the full shift range {0,...,n-1} (needed by LS recovery);
 * mode 1: shifts {0,1} only (needed by algebraic recovery). */
STFTPR_API stftpr_status stftpr_rect_admissible(size_t n, size_t w, int mode,
                                                int* out);

/* ---- measurements ----------------------------------------------------- */

/* Squared STFT magnitudes |X[m,k]|^2 of `x` under window `w` (hop 1). */
STFTPR_API stftpr_status stftpr_measure(const stftpr_signal* x,
                                        const stftpr_window* w,
                                        stftpr_measurements** out);
/* Adds i.i.d. zero-mean Gaussian noise at the requested SNR (dB), defined
 * as 10 log10(||clean||_F^2 / (n^2 sigma^2)).  snr_db = INFINITY returns a
 * clean copy.  Deterministic in seed. */
STFTPR_API stftpr_status stftpr_measurements_add_noise(
    const stftpr_measurements* clean, double snr_db, uint64_t seed,
    stftpr_measurements** out);
STFTPR_API void stftpr_measurements_free(stftpr_measurements* m);
STFTPR_API size_t stftpr_measurements_len(const stftpr_measurements* m);
STFTPR_API stftpr_status stftpr_measurements_save_csv(
    const stftpr_measurements* m, const char* path);
STFTPR_API stftpr_status stftpr_measurements_load_csv(
    const char* path, stftpr_measurements** out);

/* ---- recovery --------------------------------------------------------- */

/* Least-squares route: per-shift circulant solves, rank-one extraction.
 * Requires the window admissible on the full shift range.  json_report
 * (optional) receives lambda_max and per-shift residuals. */
STFTPR_API stftpr_status stftpr_recover_ls(const stftpr_measurements* y,
                                           const stftpr_window* w,
                                           stftpr_signal** est,
                                           char** json_report);

/* Algebraic recursion for non-vanishing signals on noise-free data.
 * Requires the window admissible on shifts {0,1}.  nonnegative != 0 skips
 * the phase recursion and returns the square root of the magnitudes
 * (valid for real nonnegative signals). */
STFTPR_API stftpr_status stftpr_recover_algebraic(const stftpr_measurements* y,
                                                  const stftpr_window* w,
                                                  int nonnegative,
                                                  stftpr_signal** est);

/* Trace-minimization splitting solver over the PSD cone.  `lambda` lists
 * the measurement shifts used (n_lambda entries); `eta` gives the per-shift
 * noise budgets in the units of the magnitude-DFT columns (n_lambda
 * entries, see stftpr_default_eta).  Solver knobs <= 0 select defaults
 * (max_iters 5000, tol 1e-7). */
STFTPR_API stftpr_status stftpr_recover_sdp(const stftpr_measurements* y,
                                            const stftpr_window* w,
                                            const size_t* lambda,
                                            size_t n_lambda,
                                            const double* eta, int max_iters,
                                            double tol, stftpr_signal** est,
                                            char** json_report);

/* Default per-shift noise budget 1.2 * sigma * n, where sigma is the
 * standard deviation of the additive measurement noise. */
STFTPR_API stftpr_status stftpr_default_eta(double sigma, size_t n,
                                            double* out);

/* Griffin-Lim baseline: magnitude projection + least-squares synthesis,
 * best (by residual) of `restarts` random initializations.  Knobs <= 0
 * select defaults (max_iters 500, tol 1e-6, restarts 1). */
STFTPR_API stftpr_status stftpr_recover_gla(const stftpr_measurements* y,
                                            const stftpr_window* w,
                                            int max_iters, double tol,
                                            int restarts, uint64_t seed,
                                            stftpr_signal** est,
                                            int* iterations,
                                            double* final_diff);

/* ---- bivariate signals ------------------------------------------------ */

/* n x n complex grid in row-major order (im may be NULL). */
STFTPR_API stftpr_status stftpr_signal2d_create(const double* re,
                                                const double* im, size_t n,
                                                stftpr_signal2d** out);
STFTPR_API stftpr_status stftpr_signal2d_random(size_t n, uint64_t seed,
                                                stftpr_signal2d** out);
STFTPR_API void stftpr_signal2d_free(stftpr_signal2d* s);
STFTPR_API size_t stftpr_signal2d_len(const stftpr_signal2d* s);
STFTPR_API stftpr_status stftpr_signal2d_values(const stftpr_signal2d* s,
                                                double* re, double* im);
STFTPR_API stftpr_status stftpr_signal2d_save_csv(const stftpr_signal2d* s,
                                                  const char* path);
STFTPR_API stftpr_status stftpr_signal2d_load_csv(const char* path,
                                                  stftpr_signal2d** out);
STFTPR_API stftpr_status stftpr_phase_aligned_error2d(
    const stftpr_signal2d* truth, const stftpr_signal2d* est, double* out);

/* Separable window u x v from two 1D windows of equal length. */
STFTPR_API stftpr_status stftpr_window2d_product(const stftpr_window* u,
                                                 const stftpr_window* v,
                                                 stftpr_window2d** out);
STFTPR_API stftpr_status stftpr_window2d_custom(const double* re,
                                                const double* im, size_t n,
                                                stftpr_window2d** out);
STFTPR_API void stftpr_window2d_free(stftpr_window2d* w);

STFTPR_API stftpr_status stftpr_measure2d(const stftpr_signal2d* x,
                                          const stftpr_window2d* w,
                                          stftpr_measurements2d** out);
STFTPR_API void stftpr_measurements2d_free(stftpr_measurements2d* m);

/* 2D least-squares recovery; the rank-one lift is materialized only for
 * n <= 8 (STFTPR_ERR_INVALID_ARGUMENT beyond that). */
STFTPR_API stftpr_status stftpr_recover2d_ls(const stftpr_measurements2d* y,
                                             const stftpr_window2d* w,
                                             stftpr_signal2d** est);
STFTPR_API stftpr_status stftpr_recover2d_algebraic(
    const stftpr_measurements2d* y, const stftpr_window2d* w,
    stftpr_signal2d** est);

/* ---- experiments ------------------------------------------------------ */

/* Runs an experiment described by a JSON spec (see the README for the
 * schema) and writes the result CSV to out_csv.  with_timing != 0 fills
 * the seconds column with wall times; otherwise the column is left empty
 * so that equal seeds give byte-identical files. */
STFTPR_API stftpr_status stftpr_experiment_run_json(const char* spec_json,
                                                    const char* out_csv,
                                                    int with_timing);

/* JSON spec of a named preset (table1 | fig1 | fig2), heap-allocated. */
STFTPR_API stftpr_status stftpr_experiment_preset_json(const char* name,
                                                       char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* STFTPR_H */
