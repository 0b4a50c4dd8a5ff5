/* C interface to the volt/var control library. All functions return a
 * vv_status; on failure, vv_last_error() describes what went wrong for the
 * calling thread. Handles are opaque and must be released with their close
 * function. */
#ifndef VOLTVAR_H
#define VOLTVAR_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vv_status {
  VV_OK = 0,
  VV_ERR_INVALID_ARGUMENT = 1,
  VV_ERR_IO = 2,
  VV_ERR_CONFIG = 3,
  VV_ERR_NUMERIC = 4,
  VV_ERR_INFEASIBLE = 5,
  VV_ERR_NOT_CONVERGED = 6,
  VV_ERR_UNKNOWN = 7
} vv_status;

/* Message for the most recent failure on this thread; never NULL. */
const char* vv_last_error(void);
const char* vv_status_name(vv_status status);

/* ---- experiment pipeline ---------------------------------------------- */

typedef struct vv_run vv_run;

/* Loads a JSON experiment config. */
vv_status vv_run_open(const char* config_path, vv_run** out);
void vv_run_close(vv_run* run);

/* Overrides before running stages. Numeric keys: alpha, epsilon, noise,
 * seed, steps, workers, scenarios, hidden. String keys additionally:
 * epsilon ("auto"), controller, flow, out, feeder, profiles. */
vv_status vv_run_set_f64(vv_run* run, const char* key, double value);
vv_status vv_run_set_str(vv_run* run, const char* key, const char* value);

/* Pipeline stages. Each writes its artifacts under the configured output
 * directory. The report text of the last completed stage is kept on the
 * handle. */
vv_status vv_run_build_dataset(vv_run* run);
vv_status vv_run_train(vv_run* run);
vv_status vv_run_bound(vv_run* run, double* x_norm, double* max_lipschitz,
                       double* eps_max, double* eps_used);
vv_status vv_run_simulate(vv_run* run);
vv_status vv_run_evaluate(vv_run* run);

/* Human-readable summary of the last completed stage; valid until the next
 * stage call or vv_run_close. Never NULL. */
const char* vv_run_report(const vv_run* run);

/* ---- feeder model ------------------------------------------------------ */

typedef struct vv_model vv_model;

vv_status vv_model_load(const char* feeder_path, vv_model** out);
void vv_model_close(vv_model* model);

vv_status vv_model_bus_count(const vv_model* model, int* out);
vv_status vv_model_der_count(const vv_model* model, int* out);
/* Spectral norm of the DER-block voltage sensitivity. */
vv_status vv_model_x_norm(const vv_model* model, double* out);

/* ---- trained response functions ---------------------------------------- */

typedef struct vv_function vv_function;

vv_status vv_function_load(const char* path, vv_function** out);
void vv_function_close(vv_function* fn);

vv_status vv_function_eval(const vv_function* fn, double v, double* q);
vv_status vv_function_lipschitz(const vv_function* fn, double* out);

/* ---- formulas ----------------------------------------------------------- */

/* min(1, 2 / (x_norm * lipschitz + 1)^2) */
double vv_stepsize_bound(double x_norm, double lipschitz);

#ifdef __cplusplus
}
#endif

#endif /* VOLTVAR_H */
