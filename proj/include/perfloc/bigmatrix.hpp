#pragma once

// Exact square integer matrices over GMP integers. Only what is needed to
// evaluate words under unitriangular representations: elementary matrices,
// products, unitriangular inverses.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "perfloc/word.hpp"

namespace perfloc {

class IntMatrix {
 public:
  /// The N x N identity.
  explicit IntMatrix(std::size_t dim);

  static IntMatrix identity(std::size_t dim) { return IntMatrix(dim); }

  /// Identity plus `a` in slot (i, j), 1-based. Throws DomainError when
  /// i == j or either index is out of range.
  static IntMatrix elementary(const mpz_class& a, std::size_t i, std::size_t j,
                              std::size_t dim);

  std::size_t dim() const { return dim_; }

  /// 1-based access.
  const mpz_class& at(std::size_t i, std::size_t j) const {
    return entries_[(i - 1) * dim_ + (j - 1)];
  }
  mpz_class& at(std::size_t i, std::size_t j) {
    return entries_[(i - 1) * dim_ + (j - 1)];
  }

  bool is_identity() const;
  bool is_unitriangular() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  /// Arbitrary total order (for sets of matrices).
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t dim_;
  std::vector<mpz_class> entries_;  // row-major
};

/// Exact product. Throws RankMismatch on differing dimensions.
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  return matmul(a, b);
}

/// Inverse of an upper unitriangular matrix by back-substitution. Throws
/// DomainError if `a` is not upper unitriangular.
IntMatrix unitriangular_inverse(const IntMatrix& a);

/// a^k for any integer k (negative powers need `a` unitriangular).
IntMatrix matrix_power(const IntMatrix& a, long k);

using MatrixAssignment = std::map<GeneratorId, IntMatrix>;

/// Product of the assigned matrices (or their inverses) in letter order; the
/// empty word maps to the identity. Throws DomainError on an unassigned
/// generator or a non-unitriangular image, RankMismatch on mixed dimensions.
/// Matrices of the form identity + one off-diagonal entry are applied as
/// column operations.
IntMatrix evaluate_word(const MatrixAssignment& assignment, const Word& w);

/// {"dim": N, "rows": [["1","0",...],...]} with decimal-string entries.
nlohmann::json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

std::string to_string(const IntMatrix& m);

}  // namespace perfloc
