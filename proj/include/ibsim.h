/*
 * ibsim C API: thermal wavefunction-ensemble simulations for small
 * enantiomer and magnet models.
 *
 * All functions return ibsim_status; outputs are written through pointers.
 * On failure the outputs are untouched and ibsim_last_error() describes the
 * problem for the calling thread. Opaque handles are created and destroyed
 * with the matching _create/_destroy pair and are immutable, so they may be
 * shared freely across threads.
 *
 * Matrices are dense, row-major, split into real and imaginary parts; an
 * imaginary part pointer may be NULL for a real matrix. States are amplitude
 * arrays in the same split layout.
 */
#ifndef IBSIM_H
#define IBSIM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define IBSIM_VERSION_STRING "0.1.0"

#if defined(_WIN32)
#if defined(IBSIM_BUILD_SHARED)
#define IBSIM_API __declspec(dllexport)
#else
#define IBSIM_API __declspec(dllimport)
#endif
#else
#define IBSIM_API __attribute__((visibility("default")))
#endif

typedef enum ibsim_status {
  IBSIM_OK = 0,
  IBSIM_ERR_VALIDATION = 1, /* bad user-supplied parameters */
  IBSIM_ERR_CONTRACT = 2,   /* dimension or precondition breach */
  IBSIM_ERR_CAPACITY = 3,   /* problem size over a configured cap */
  IBSIM_ERR_RUNTIME = 4     /* internal failure */
} ibsim_status;

typedef enum ibsim_case_verdict {
  IBSIM_CASE_CRITICAL = 0, /* candidate energies tie within tolerance */
  IBSIM_CASE_I = 1,        /* localized forms preferred */
  IBSIM_CASE_II = 2        /* symmetric superposition preferred */
} ibsim_case_verdict;

typedef enum ibsim_sampler_method {
  IBSIM_SAMPLER_UNIFORM_IMPORTANCE = 0,
  IBSIM_SAMPLER_METROPOLIS = 1
} ibsim_sampler_method;

typedef enum ibsim_detect_statistic {
  IBSIM_DETECT_CONVERSION = 0, /* P_A, the substrate-conversion weight */
  IBSIM_DETECT_ROTATION = 1    /* signed rotation, +1 pure A / -1 pure B */
} ibsim_detect_statistic;

/* Dense Hermitian matrix. */
typedef struct ibsim_operator ibsim_operator;
/* Two-level symmetry-breaking molecule. */
typedef struct ibsim_enantiomer ibsim_enantiomer;
/* Symmetric-sector ferromagnet of N spins. */
typedef struct ibsim_curie_weiss ibsim_curie_weiss;

typedef struct ibsim_sampler_config {
  int32_t method;     /* ibsim_sampler_method */
  int64_t n_samples;  /* retained draws per chain, >= 100 */
  int32_t n_chains;   /* independent seeded chains, >= 1 */
  int64_t burn_in;    /* discarded (and step-tuning) draws per chain */
  double step_size;   /* Metropolis proposal scale before tuning */
  uint64_t seed;      /* master seed; chain c uses substream (seed, c) */
  double r_hat_threshold; /* convergence gate, default 1.05 */
} ibsim_sampler_config;

typedef struct ibsim_estimate {
  double mean;
  double std_error;
  double n_effective;
  double r_hat;           /* split-chain potential scale reduction */
  double acceptance_rate; /* NaN for the importance sampler */
  int32_t converged;      /* 0 when r_hat exceeded the threshold */
} ibsim_estimate;

typedef struct ibsim_ground_config {
  int32_t n_starts;          /* random multi-starts, default 32 */
  int64_t max_iterations;    /* per start, default 100000 */
  double gradient_tolerance; /* tangential norm target, default 1e-9 */
  uint64_t seed;
} ibsim_ground_config;

typedef struct ibsim_ground_result {
  double energy;
  int32_t converged;
  int64_t iterations; /* total gradient steps across starts */
} ibsim_ground_result;

typedef struct ibsim_classification {
  int32_t verdict; /* ibsim_case_verdict */
  double energy_localized;
  double energy_superposed;
  double margin; /* superposed - localized */
} ibsim_classification;

IBSIM_API const char* ibsim_version(void);

/* Message of the most recent failing call on this thread ("" if none). */
IBSIM_API const char* ibsim_last_error(void);

/* Deterministic substream derivation, for seeding independent scan cells. */
IBSIM_API uint64_t ibsim_substream_seed(uint64_t master, uint64_t stream);

IBSIM_API void ibsim_sampler_config_init(ibsim_sampler_config* cfg);
IBSIM_API void ibsim_ground_config_init(ibsim_ground_config* cfg);

/* ---- operators ---------------------------------------------------------- */

IBSIM_API ibsim_status ibsim_operator_create(int32_t dim,
                                             const double* real_parts,
                                             const double* imag_parts,
                                             ibsim_operator** out);
IBSIM_API void ibsim_operator_destroy(ibsim_operator* op);
IBSIM_API int32_t ibsim_operator_dim(const ibsim_operator* op);

/* Ascending eigenvalues; `out` must hold dim doubles. */
IBSIM_API ibsim_status ibsim_operator_eigenvalues(const ibsim_operator* op,
                                                  double* out);

/* <psi|O|psi> for the amplitude arrays of length dim (imag may be NULL). */
IBSIM_API ibsim_status ibsim_operator_expectation(const ibsim_operator* op,
                                                  const double* state_re,
                                                  const double* state_im,
                                                  int32_t dim, double* out);

/* ---- eigenbasis (von Neumann) thermal ensemble -------------------------- */

/* Gibbs-weighted trace average; temperature may be HUGE_VAL for beta = 0. */
IBSIM_API ibsim_status ibsim_vnte_expectation(const ibsim_operator* hamiltonian,
                                              const ibsim_operator* observable,
                                              double temperature, double* out);

IBSIM_API ibsim_status ibsim_vnte_log_partition(
    const ibsim_operator* hamiltonian, double temperature, double* log_z);

/* ---- wavefunction (Schroedingerist) thermal ensemble -------------------- */

/* Sphere-measure Gibbs average of <psi|O|psi> under the linear energy
 * <psi|H|psi>. */
IBSIM_API ibsim_status ibsim_ste_expectation(const ibsim_operator* hamiltonian,
                                             const ibsim_operator* observable,
                                             double temperature,
                                             const ibsim_sampler_config* cfg,
                                             ibsim_estimate* out);

/* Deterministic dim-2 oracle for the same average (Bloch quadrature). */
IBSIM_API ibsim_status ibsim_ste_quadrature_2d(
    const ibsim_operator* hamiltonian, const ibsim_operator* observable,
    double temperature, int32_t n_grid, double tolerance, double* out);

/* ---- enantiomer model ---------------------------------------------------- */

IBSIM_API ibsim_status ibsim_enantiomer_create(double site_energy,
                                               double tunneling,
                                               double separation,
                                               double wfe_strength,
                                               int32_t n_dof,
                                               ibsim_enantiomer** out);
IBSIM_API void ibsim_enantiomer_destroy(ibsim_enantiomer* model);

IBSIM_API ibsim_status ibsim_enantiomer_hamiltonian(
    const ibsim_enantiomer* model, ibsim_operator** out);
IBSIM_API ibsim_status ibsim_enantiomer_com_operator(
    const ibsim_enantiomer* model, ibsim_operator** out);

/* <psi|H|psi> + WFE(psi) for a length-2 amplitude array. */
IBSIM_API ibsim_status ibsim_enantiomer_total_energy(
    const ibsim_enantiomer* model, const double* state_re,
    const double* state_im, double* out);

IBSIM_API ibsim_status ibsim_enantiomer_classify(const ibsim_enantiomer* model,
                                                 ibsim_classification* out);

/* w* = 4 Delta / (N^2 d^2), where the classification flips. */
IBSIM_API ibsim_status ibsim_critical_wfe_strength(double tunneling,
                                                   double separation,
                                                   int32_t n_dof, double* out);

/* Gibbs average of <psi|O|psi> under the WFE-augmented energy. */
IBSIM_API ibsim_status ibsim_enantiomer_ste_expectation(
    const ibsim_enantiomer* model, const ibsim_operator* observable,
    double temperature, const ibsim_sampler_config* cfg, ibsim_estimate* out);

/* Multi-start sphere minimizer of the augmented energy. amp_re/amp_im must
 * hold 2 doubles each and receive the best minimizer. */
IBSIM_API ibsim_status ibsim_enantiomer_ground_state(
    const ibsim_enantiomer* model, const ibsim_ground_config* cfg,
    double* amp_re, double* amp_im, ibsim_ground_result* out);

/* Mean and histogram of a detection statistic over the thermal ensemble.
 * bin_edges must hold bins+1 doubles, masses bins doubles. Conversion bins
 * span [0,1], rotation bins [-1,1]. */
IBSIM_API ibsim_status ibsim_enantiomer_detect(
    const ibsim_enantiomer* model, double temperature,
    const ibsim_sampler_config* cfg, int32_t statistic, int32_t bins,
    double* bin_edges, double* masses, ibsim_estimate* mean_out);

/* One boundary-scan cell: exact classification plus sampled P_A mean and the
 * fraction of members with P_A within `window` of 0 or 1. */
IBSIM_API ibsim_status ibsim_enantiomer_boundary_cell(
    const ibsim_enantiomer* model, double temperature,
    const ibsim_sampler_config* cfg, double window,
    ibsim_classification* classification_out, ibsim_estimate* p_a_out,
    ibsim_estimate* bimodality_out);

/* ---- symmetric-sector magnet --------------------------------------------- */

IBSIM_API ibsim_status ibsim_curie_weiss_create(int32_t n_spins,
                                                double coupling,
                                                double wfe_strength,
                                                ibsim_curie_weiss** out);
IBSIM_API void ibsim_curie_weiss_destroy(ibsim_curie_weiss* model);

/* Hilbert dimension of the symmetric sector: n_spins + 1. */
IBSIM_API int32_t ibsim_curie_weiss_dim(const ibsim_curie_weiss* model);

IBSIM_API ibsim_status ibsim_curie_weiss_hamiltonian(
    const ibsim_curie_weiss* model, ibsim_operator** out);
/* Magnetization density M/N. */
IBSIM_API ibsim_status ibsim_curie_weiss_m_operator(
    const ibsim_curie_weiss* model, ibsim_operator** out);
/* Squared magnetization density (M/N)^2, the order parameter. */
IBSIM_API ibsim_status ibsim_curie_weiss_m2_operator(
    const ibsim_curie_weiss* model, ibsim_operator** out);

/* Gibbs average of <psi|O|psi> under the WFE-augmented magnet energy. */
IBSIM_API ibsim_status ibsim_curie_weiss_ste_expectation(
    const ibsim_curie_weiss* model, const ibsim_operator* observable,
    double temperature, const ibsim_sampler_config* cfg, ibsim_estimate* out);

/* amp_re/amp_im must hold n_spins + 1 doubles each. */
IBSIM_API ibsim_status ibsim_curie_weiss_ground_state(
    const ibsim_curie_weiss* model, const ibsim_ground_config* cfg,
    double* amp_re, double* amp_im, ibsim_ground_result* out);

#ifdef __cplusplus
}
#endif

#endif /* IBSIM_H */
