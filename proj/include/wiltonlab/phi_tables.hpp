#pragma once

#include <cstddef>
#include <cstdint>

#include "wiltonlab/eval.hpp"

namespace wiltonlab {

// Fast phi2 via a precomputed Fourier table: phi2(u) =
// (1/pi^2) sum_N d(N) cos(2 pi N u) / N^2 is folded modulo the table size by
// a divisor sieve and transformed once with FFTW; evaluation is a linear
// interpolation between nodes. The returned bound is rigorous (Fourier-tail
// node error + interpolation error computed from the exact divisor summatory
// function). Built lazily on first use; deterministic.
eval_result phi2_fast(double u);

// Fast tail integral tailint(y) = int_y^inf phi2(t)/t^3 dt for y >= 1.
// First three Theta terms are certified directly; the n >= 4 remainder is
// folded into small periodic tables of sum_{n>=4} B_k(n u)/n^k for k = 3..8.
eval_result tau_fast(double y);

struct phi2_table_info {
    std::size_t nodes;         // grid resolution
    std::int64_t sieve_cutoff; // largest Fourier index N represented
    double node_error;         // omitted Fourier tail at the nodes
    double interp_error;       // linear-interpolation majorant
    double eval_bound;         // total per-evaluation certificate
};
const phi2_table_info& phi2_table_diagnostics();

// Force the lazy tables to build now (useful before timing runs).
void warm_tables();

}  // namespace wiltonlab
