#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ffgamma/cycle.hpp"
#include "ffgamma/laurent.hpp"

namespace ffgamma {

/// Bad command line or config file; maps to exit code 3.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  unsigned q = 3;
  /// u-coefficients; 0 means the default 128 (q-1).
  long prec = 0;
  int trunc_t = 64;
  int deg_f_cap = 6;
  /// Largest ell = #(A/f)^x for motive matrices.
  int ell_cap = 8;
  std::uint64_t seed = 20240601;
  /// Minimum residual a verification must reach; 0 means 7/10 of prec.
  long tol = 0;

  long effective_prec() const { return prec ? prec : 128L * (q - 1); }
  long effective_tol() const { return tol ? tol : (effective_prec() * 7 + 9) / 10; }
  /// UsageError unless q is a prime power <= 512, prec >= 16 and the caps
  /// are positive (ell_cap at most kMaxEll).
  void validate() const;
  /// Applies key=value lines ('#' starts a comment), skipping keys in
  /// `keep`.  UsageError on unknown keys or bad values.
  void apply_text(std::string_view text, const std::set<std::string>& keep = {});
  void apply_file(const std::string& path, const std::set<std::string>& keep = {});
};

/// {q, val, prec, coeffs}; coefficients are the raw field encodings.
nlohmann::json laurent_to_json(const LaurentNum& x);
/// Inverse of laurent_to_json.  UsageError on a malformed object.
LaurentNum laurent_from_json(const nlohmann::json& j);

/// A bare element "x" is the symbol [x]; otherwise a sum of terms
/// "k*[x]" or "[x]" with signs, e.g. "2*[1/T] - [1/T^2]".
CycleElement parse_cycle(std::string_view text, const Poly& f);

/// Runs one subcommand; JSON lines go to `out`, the summary and errors to
/// `err`.  Exit codes: 0 ok, 1 domain or precision error, 2 verification
/// failure, 3 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ffgamma
