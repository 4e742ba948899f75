#pragma once

// Batch polynomial evaluation kernels. Dense sampling validation and the
// Monte Carlo harness evaluate a handful of fixed polynomials at 1e5..1e6
// points; that inner loop is the only data-parallel hot spot in the
// toolkit. A scalar reference kernel and an AVX2 variant share one
// contract; the implementation is picked once at startup from cpuid and
// the two are equivalence-tested against each other.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fungen/poly.hpp"

namespace fg::kern {

// Flattened term list of one polynomial, laid out for streaming evaluation.
struct TermTable {
  int n_vars = 0;
  std::vector<double> coeffs;         // n_terms
  std::vector<std::uint16_t> exps;    // n_terms * n_vars, row-major

  std::size_t term_count() const { return coeffs.size(); }
  static TermTable from(const poly::Poly& p);
};

// Evaluates `t` at `n` points. Points are stored variable-major (structure
// of arrays): points[v * n + i] is coordinate v of point i. out[i] is
// overwritten.
void eval_batch(const TermTable& t, const double* points, std::size_t n,
                double* out);

// Convenience wrapper building the SoA buffer from row-major points.
std::vector<double> eval_batch_rowmajor(const TermTable& t,
                                        const std::vector<double>& pts_rowmajor,
                                        std::size_t n);

const char* active_kernel();       // "avx2" or "scalar"
void force_scalar(bool on);        // used by the equivalence tests

namespace detail {
void eval_batch_scalar(const TermTable& t, const double* points, std::size_t n,
                       double* out);
#if defined(FG_HAVE_AVX2_TU)
void eval_batch_avx2(const TermTable& t, const double* points, std::size_t n,
                     double* out);
#endif
}  // namespace detail

}  // namespace fg::kern
