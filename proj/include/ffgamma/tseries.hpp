#pragma once

#include <functional>
#include <vector>

#include "ffgamma/laurent.hpp"

namespace ffgamma {

/// Power series in t with LaurentNum coefficients, known mod t^{trunc_t+1}.
class TSeries {
 public:
  /// The zero series with every coefficient zero mod u^prec.
  TSeries(const GaloisField& f, int trunc_t, long prec);
  /// Coefficients for t^0, t^1, ...; missing ones are zero mod u^pad_prec.
  TSeries(std::vector<LaurentNum> coeffs, int trunc_t, long pad_prec);

  static TSeries constant(const LaurentNum& c, int trunc_t);
  static TSeries one(const GaloisField& f, int trunc_t, long prec) {
    return constant(LaurentNum::one(f, prec), trunc_t);
  }

  const GaloisField& field() const noexcept { return *f_; }
  int trunc_t() const noexcept { return trunc_t_; }
  const LaurentNum& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
  LaurentNum& operator[](int i) { return c_.at(static_cast<std::size_t>(i)); }
  const std::vector<LaurentNum>& coeffs() const noexcept { return c_; }

  /// Smallest coefficient precision.
  long min_prec() const;
  /// Smallest coefficient valuation (sup norm, as a u-adic valuation).
  long valuation() const;

  TSeries operator+(const TSeries& o) const;
  TSeries operator-(const TSeries& o) const;
  TSeries operator-() const;
  /// Truncates at the smaller trunc_t.
  TSeries operator*(const TSeries& o) const;
  TSeries scaled(const LaurentNum& c) const;
  /// Multiply by t^k, dropping what falls past trunc_t.
  TSeries t_shifted(int k) const;
  /// Coefficientwise twist, truncating each coefficient at `cap`.
  TSeries twist(int n, long cap = LONG_MAX) const;
  TSeries truncated(long prec) const;
  TSeries with_trunc(int trunc_t) const;

  /// Smallest residual valuation of this - o over all t-coefficients.
  long residual(const TSeries& o) const { return (*this - o).valuation(); }

 private:
  const GaloisField* f_;
  int trunc_t_;
  std::vector<LaurentNum> c_;
};

/// Evaluate at t = t0.  The last coefficient must satisfy
/// val(c_trunc) + trunc * val(t0) >= target, otherwise PrecisionError (the
/// truncation would not be dominated).  The result precision is capped by
/// that tail bound.
LaurentNum ts_eval(const TSeries& a, const LaurentNum& t0, long target);

/// Dense matrix of LaurentNum values.
using LMatrix = std::vector<std::vector<LaurentNum>>;

/// Matrix with TSeries entries, uniform trunc_t.
class TMatrix {
 public:
  TMatrix(const GaloisField& f, std::size_t rows, std::size_t cols, int trunc_t, long prec);
  static TMatrix identity(const GaloisField& f, std::size_t n, int trunc_t, long prec);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  int trunc_t() const noexcept { return trunc_t_; }
  const GaloisField& field() const noexcept { return *f_; }
  TSeries& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const TSeries& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  TMatrix operator+(const TMatrix& o) const;
  TMatrix operator-(const TMatrix& o) const;
  TMatrix operator*(const TMatrix& o) const;
  TMatrix twist(int n, long cap = LONG_MAX) const;
  TMatrix truncated(long prec) const;
  TMatrix with_trunc(int trunc_t) const;

  /// Entrywise sup norm as a valuation.
  long valuation() const;
  long min_prec() const;
  long residual(const TMatrix& o) const { return (*this - o).valuation(); }

  LMatrix eval(const LaurentNum& t0, long target) const;

 private:
  const GaloisField* f_;
  std::size_t rows_, cols_;
  int trunc_t_;
  std::vector<TSeries> e_;
};

struct ConvergentProduct {
  TMatrix value;
  int factors_used = 0;
};

/// prod_{N=first}^{...} factor(N), multiplied on the right.  Stops at the
/// first factor whose defect from the identity is zero to `target`.  Each
/// defect must be positive and strictly larger than the previous one;
/// otherwise, or after `budget` factors, throws PrecisionError.
ConvergentProduct tm_product_convergent(const std::function<TMatrix(int)>& factor, int first,
                                        long target, int budget = 64);

}  // namespace ffgamma
