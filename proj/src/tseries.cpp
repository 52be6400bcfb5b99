#include "ffgamma/tseries.hpp"

#include <algorithm>

#include "ffgamma/errors.hpp"

namespace ffgamma {

TSeries::TSeries(const GaloisField& f, int trunc_t, long prec) : f_(&f), trunc_t_(trunc_t) {
  if (trunc_t < 0) throw DomainError("trunc_t must be non-negative");
  c_.assign(static_cast<std::size_t>(trunc_t) + 1, LaurentNum::zero(f, prec));
}

TSeries::TSeries(std::vector<LaurentNum> coeffs, int trunc_t, long pad_prec)
    : f_(coeffs.empty() ? nullptr : &coeffs.front().field()), trunc_t_(trunc_t), c_(std::move(coeffs)) {
  if (trunc_t < 0) throw DomainError("trunc_t must be non-negative");
  if (!f_) throw DomainError("TSeries needs at least one coefficient to fix q");
  c_.resize(static_cast<std::size_t>(trunc_t) + 1, LaurentNum::zero(*f_, pad_prec));
  for (const auto& c : c_)
    if (&c.field() != f_) throw DomainError("TSeries coefficients over different fields");
}

TSeries TSeries::constant(const LaurentNum& c, int trunc_t) {
  return TSeries(std::vector<LaurentNum>{c}, trunc_t, kExactPrec);
}

long TSeries::min_prec() const {
  long p = LONG_MAX;
  for (const auto& c : c_) p = std::min(p, c.prec());
  return p;
}

long TSeries::valuation() const {
  long v = LONG_MAX;
  for (const auto& c : c_) v = std::min(v, c.valuation());
  return v;
}

TSeries TSeries::operator+(const TSeries& o) const {
  const int tr = std::min(trunc_t_, o.trunc_t_);
  std::vector<LaurentNum> v;
  v.reserve(static_cast<std::size_t>(tr) + 1);
  for (int i = 0; i <= tr; ++i) v.push_back((*this)[i] + o[i]);
  return TSeries(std::move(v), tr, 0);
}

TSeries TSeries::operator-() const {
  TSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TSeries TSeries::operator-(const TSeries& o) const { return *this + (-o); }

TSeries TSeries::operator*(const TSeries& o) const {
  const int tr = std::min(trunc_t_, o.trunc_t_);
  std::vector<LaurentNum> v;
  v.reserve(static_cast<std::size_t>(tr) + 1);
  for (int k = 0; k <= tr; ++k) {
    LaurentNum acc = (*this)[0] * o[k];
    for (int i = 1; i <= k; ++i) acc += (*this)[i] * o[k - i];
    v.push_back(std::move(acc));
  }
  return TSeries(std::move(v), tr, 0);
}

TSeries TSeries::scaled(const LaurentNum& c) const {
  TSeries r = *this;
  for (auto& x : r.c_) x = x * c;
  return r;
}

TSeries TSeries::t_shifted(int k) const {
  if (k < 0) throw DomainError("negative t-shift");
  std::vector<LaurentNum> v;
  v.reserve(c_.size());
  // Shifted-in low coefficients are exact zeros.
  const long exact = kExactPrec;
  for (int i = 0; i <= trunc_t_; ++i)
    v.push_back(i < k ? LaurentNum::zero(*f_, exact) : c_[static_cast<std::size_t>(i - k)]);
  return TSeries(std::move(v), trunc_t_, 0);
}

TSeries TSeries::twist(int n, long cap) const {
  TSeries r = *this;
  for (auto& x : r.c_) x = x.twist(n, cap);
  return r;
}

TSeries TSeries::truncated(long prec) const {
  TSeries r = *this;
  for (auto& x : r.c_) x = x.truncated(prec);
  return r;
}

TSeries TSeries::with_trunc(int trunc_t) const {
  if (trunc_t > trunc_t_) throw PrecisionError("cannot raise trunc_t of a truncated series");
  std::vector<LaurentNum> v(c_.begin(), c_.begin() + trunc_t + 1);
  return TSeries(std::move(v), trunc_t, 0);
}

LaurentNum ts_eval(const TSeries& a, const LaurentNum& t0, long target) {
  const int n = a.trunc_t();
  if (t0.is_zero()) return a[0].truncated(std::min(a[0].prec(), t0.prec()));
  const long tail = a[n].valuation() + static_cast<long>(n) * t0.val();
  if (tail < target) {
    throw PrecisionError("tail bound not met at trunc_t = " + std::to_string(n) + " (reaches u^" +
                         std::to_string(tail) + ", need u^" + std::to_string(target) + ")");
  }
  LaurentNum acc = a[n];
  for (int i = n - 1; i >= 0; --i) acc = acc * t0 + a[i];
  return acc.truncated(tail);
}

TMatrix::TMatrix(const GaloisField& f, std::size_t rows, std::size_t cols, int trunc_t, long prec)
    : f_(&f), rows_(rows), cols_(cols), trunc_t_(trunc_t), e_(rows * cols, TSeries(f, trunc_t, prec)) {}

TMatrix TMatrix::identity(const GaloisField& f, std::size_t n, int trunc_t, long prec) {
  TMatrix m(f, n, n, trunc_t, prec);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = TSeries::one(f, trunc_t, prec);
  return m;
}

TMatrix TMatrix::operator+(const TMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  TMatrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  r.trunc_t_ = std::min(trunc_t_, o.trunc_t_);
  return r;
}

TMatrix TMatrix::operator-(const TMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  TMatrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  r.trunc_t_ = std::min(trunc_t_, o.trunc_t_);
  return r;
}

TMatrix TMatrix::operator*(const TMatrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix shape mismatch");
  const int tr = std::min(trunc_t_, o.trunc_t_);
  TMatrix r(*f_, rows_, o.cols_, tr, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      TSeries acc = (*this)(i, 0) * o(0, j);
      for (std::size_t k = 1; k < cols_; ++k) acc = acc + (*this)(i, k) * o(k, j);
      r(i, j) = std::move(acc);
    }
  return r;
}

TMatrix TMatrix::twist(int n, long cap) const {
  TMatrix r = *this;
  for (auto& x : r.e_) x = x.twist(n, cap);
  return r;
}

TMatrix TMatrix::truncated(long prec) const {
  TMatrix r = *this;
  for (auto& x : r.e_) x = x.truncated(prec);
  return r;
}

TMatrix TMatrix::with_trunc(int trunc_t) const {
  TMatrix r = *this;
  for (auto& x : r.e_) x = x.with_trunc(trunc_t);
  r.trunc_t_ = trunc_t;
  return r;
}

long TMatrix::valuation() const {
  long v = LONG_MAX;
  for (const auto& x : e_) v = std::min(v, x.valuation());
  return v;
}

long TMatrix::min_prec() const {
  long v = LONG_MAX;
  for (const auto& x : e_) v = std::min(v, x.min_prec());
  return v;
}

LMatrix TMatrix::eval(const LaurentNum& t0, long target) const {
  LMatrix out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(ts_eval((*this)(i, j), t0, target));
  return out;
}

ConvergentProduct tm_product_convergent(const std::function<TMatrix(int)>& factor, int first,
                                        long target, int budget) {
  TMatrix prod = factor(first);
  const std::size_t n = prod.rows();
  if (prod.cols() != n) throw DomainError("product factors must be square");
  // Valuation of (m - 1) over all entries and t-coefficients.
  auto defect = [&](const TMatrix& m) {
    long v = LONG_MAX;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (int k = 0; k <= m.trunc_t(); ++k) {
          const LaurentNum& c = m(i, j)[k];
          if (i == j && k == 0) {
            v = std::min(v, (c - LaurentNum::one(c.field(), c.prec())).valuation());
          } else {
            v = std::min(v, c.valuation());
          }
        }
    return v;
  };
  long last = defect(prod);
  if (last <= 0) throw PrecisionError("first factor is not a contraction (defect valuation <= 0)");
  int used = 1;
  for (int N = first + 1;; ++N) {
    if (used >= budget) throw PrecisionError("product did not stabilize within the factor budget");
    TMatrix next = factor(N);
    const long d = defect(next);
    if (d >= target) break;
    if (d <= last) throw PrecisionError("factor defects are not decreasing");
    last = d;
    prod = prod * next;
    ++used;
  }
  return {prod.truncated(target), used};
}

}  // namespace ffgamma
