#pragma once

#include <string>

#include "qweyl/algebra.hpp"

namespace qweyl {

/// Ore fraction u * alpha_1^{-k_1} ... alpha_n^{-k_n}; denominators sit on
/// the right. Only defined for the Rescaled presentation, where the Euler
/// operators q-commute with every generator.
class LocalizedElement {
 public:
  explicit LocalizedElement(PbwElement numerator);
  LocalizedElement(PbwElement numerator, IntVector denom);

  const AlgebraSpec& spec() const noexcept { return num_.spec(); }
  const PbwElement& numerator() const noexcept { return num_; }
  const IntVector& denom() const noexcept { return denom_; }
  bool has_denominator() const;

 private:
  PbwElement num_;
  IntVector denom_;
};

/// The diagonal automorphism sigma^k: x^a d^b -> q^{sum k_i e_ii (a_i - b_i)} x^a d^b.
PbwElement sigma_power(const PbwElement& v, const IntVector& k);

/// prod alpha_i^{c_i} for c >= 0.
PbwElement euler_power(const AlgebraSpec& spec, const IntVector& c);

/// (u a^{-k})(v a^{-m}) = u sigma^{-k}(v) a^{-(k+m)}.
LocalizedElement localized_multiply(const LocalizedElement& s, const LocalizedElement& t);
/// Sum over the common denominator max(k, m).
LocalizedElement localized_add(const LocalizedElement& s, const LocalizedElement& t);
/// Cross-multiplied comparison over the common denominator.
bool localized_equal(const LocalizedElement& s, const LocalizedElement& t);
/// s * alpha^{c} for an arbitrary integer vector c.
LocalizedElement times_euler(const LocalizedElement& s, const IntVector& c);

/// "u" or "(u)*a1^-k1*...".
std::string to_string(const LocalizedElement& s);

}  // namespace qweyl
