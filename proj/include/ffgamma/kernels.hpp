#pragma once

#include <cstddef>

#include "ffgamma/field.hpp"

namespace ffgamma::kernels {

// out[k] = sum_{i+j=k} a[i]*b[j] for 0 <= k < len, over F_q.  Entries of a
// and b past na / nb are treated as zero.  out must hold len entries and may
// not alias the inputs.
void convolve_serial(const GaloisField& f, const GaloisField::Raw* a, std::size_t na,
                     const GaloisField::Raw* b, std::size_t nb, GaloisField::Raw* out,
                     std::size_t len);

// Same contract; output coefficients are distributed over OpenMP threads.
void convolve_parallel(const GaloisField& f, const GaloisField::Raw* a, std::size_t na,
                       const GaloisField::Raw* b, std::size_t nb, GaloisField::Raw* out,
                       std::size_t len);

// Picks the parallel kernel above a size threshold.
void convolve(const GaloisField& f, const GaloisField::Raw* a, std::size_t na,
              const GaloisField::Raw* b, std::size_t nb, GaloisField::Raw* out, std::size_t len);

constexpr std::size_t kParallelThreshold = 512;

}  // namespace ffgamma::kernels
