#include "ffgamma/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace ffgamma::kernels {
namespace {

using Raw = GaloisField::Raw;

// One output coefficient.  Prime fields accumulate integer products and
// reduce once; extension fields accumulate the F_p-digits of each product.
inline Raw coefficient(const GaloisField& f, const Raw* a, std::size_t na, const Raw* b,
                       std::size_t nb, std::size_t k, std::uint64_t* digit_acc) {
  const std::size_t lo = k + 1 > nb ? k + 1 - nb : 0;
  const std::size_t hi = std::min(k, na - 1);
  if (lo > hi) return 0;
  if (f.is_prime()) {
    std::uint64_t acc = 0;
    for (std::size_t i = lo; i <= hi; ++i) acc += static_cast<std::uint64_t>(a[i]) * b[k - i];
    return static_cast<Raw>(acc % f.p());
  }
  const unsigned e = f.degree();
  std::fill(digit_acc, digit_acc + e, 0);
  for (std::size_t i = lo; i <= hi; ++i) {
    if (a[i] == 0 || b[k - i] == 0) continue;
    const Raw m = f.mul(a[i], b[k - i]);
    for (unsigned d = 0; d < e; ++d) digit_acc[d] += f.digit(m, d);
  }
  unsigned v = 0;
  for (unsigned d = e; d-- > 0;) v = v * f.p() + static_cast<unsigned>(digit_acc[d] % f.p());
  return static_cast<Raw>(v);
}

}  // namespace

void convolve_serial(const GaloisField& f, const Raw* a, std::size_t na, const Raw* b,
                     std::size_t nb, Raw* out, std::size_t len) {
  std::vector<std::uint64_t> acc(f.degree());
  for (std::size_t k = 0; k < len; ++k) {
    out[k] = (na && nb) ? coefficient(f, a, na, b, nb, k, acc.data()) : Raw{0};
  }
}

void convolve_parallel(const GaloisField& f, const Raw* a, std::size_t na, const Raw* b,
                       std::size_t nb, Raw* out, std::size_t len) {
  if (na == 0 || nb == 0) {
    std::fill(out, out + len, Raw{0});
    return;
  }
  const long long n = static_cast<long long>(len);
#pragma omp parallel
  {
    std::vector<std::uint64_t> acc(f.degree());
    // Later coefficients carry longer sums, so hand out small chunks.
#pragma omp for schedule(dynamic, 64)
    for (long long k = 0; k < n; ++k) {
      out[k] = coefficient(f, a, na, b, nb, static_cast<std::size_t>(k), acc.data());
    }
  }
}

void convolve(const GaloisField& f, const Raw* a, std::size_t na, const Raw* b, std::size_t nb,
              Raw* out, std::size_t len) {
  if (len >= kParallelThreshold) {
    convolve_parallel(f, a, na, b, nb, out, len);
  } else {
    convolve_serial(f, a, na, b, nb, out, len);
  }
}

}  // namespace ffgamma::kernels
