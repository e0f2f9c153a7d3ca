#include "perfloc/bigmatrix.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace perfloc {

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw DomainError("matrix dimension must be positive");
  for (std::size_t i = 0; i < dim; ++i) entries_[i * dim + i] = 1;
}

IntMatrix IntMatrix::elementary(const mpz_class& a, std::size_t i,
                                std::size_t j, std::size_t dim) {
  if (i == j || i < 1 || j < 1 || i > dim || j > dim) {
    throw DomainError("elementary(" + std::to_string(i) + "," +
                      std::to_string(j) + ") invalid in dimension " +
                      std::to_string(dim));
  }
  IntMatrix m(dim);
  m.at(i, j) = a;
  return m;
}

bool IntMatrix::is_identity() const {
  for (std::size_t i = 1; i <= dim_; ++i)
    for (std::size_t j = 1; j <= dim_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::is_unitriangular() const {
  for (std::size_t i = 1; i <= dim_; ++i) {
    if (at(i, i) != 1) return false;
    for (std::size_t j = 1; j < i; ++j)
      if (at(i, j) != 0) return false;
  }
  return true;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(),
                                      b.entries_.begin(), b.entries_.end());
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) {
    throw RankMismatch("matmul: dimension " + std::to_string(a.dim()) +
                       " vs " + std::to_string(b.dim()));
  }
  const std::size_t n = a.dim();
  IntMatrix c(n);
  for (std::size_t i = 1; i <= n; ++i) c.at(i, i) = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = 1; k <= n; ++k) {
      const mpz_class& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 1; j <= n; ++j) {
        mpz_addmul(c.at(i, j).get_mpz_t(), aik.get_mpz_t(),
                   b.at(k, j).get_mpz_t());
      }
    }
  }
  return c;
}

IntMatrix unitriangular_inverse(const IntMatrix& a) {
  if (!a.is_unitriangular()) {
    throw DomainError("unitriangular_inverse: matrix is not upper unitriangular");
  }
  const std::size_t n = a.dim();
  IntMatrix x(n);
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = j; i-- > 1;) {
      mpz_class sum = 0;
      for (std::size_t k = i + 1; k <= j; ++k) sum += a.at(i, k) * x.at(k, j);
      x.at(i, j) = -sum;
    }
  }
  return x;
}

IntMatrix matrix_power(const IntMatrix& a, long k) {
  IntMatrix base = k < 0 ? unitriangular_inverse(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k)
                          : static_cast<unsigned long>(k);
  IntMatrix result(a.dim());
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

namespace {

// Right action of one generator image on an accumulator.
struct LetterAction {
  // identity + value * E(row, col)
  std::optional<std::tuple<std::size_t, std::size_t, mpz_class>> elementary;
  IntMatrix forward;
  IntMatrix backward;
};

std::optional<std::tuple<std::size_t, std::size_t, mpz_class>> as_elementary(
    const IntMatrix& m) {
  std::optional<std::tuple<std::size_t, std::size_t, mpz_class>> found;
  for (std::size_t i = 1; i <= m.dim(); ++i) {
    for (std::size_t j = 1; j <= m.dim(); ++j) {
      if (i == j) {
        if (m.at(i, j) != 1) return std::nullopt;
      } else if (m.at(i, j) != 0) {
        if (found) return std::nullopt;
        found.emplace(i, j, m.at(i, j));
      }
    }
  }
  if (!found) found.emplace(1, 1, mpz_class(0));  // identity: no-op
  return found;
}

}  // namespace

IntMatrix evaluate_word(const MatrixAssignment& assignment, const Word& w) {
  std::optional<std::size_t> dim;
  for (const auto& [gen, m] : assignment) {
    if (dim && *dim != m.dim()) {
      throw RankMismatch("evaluate_word: assigned matrices differ in dimension");
    }
    dim = m.dim();
    if (!m.is_unitriangular()) {
      throw DomainError("evaluate_word: image of x" + std::to_string(gen) +
                        " is not unitriangular");
    }
  }
  for (Letter l : w.letters()) {
    if (!assignment.contains(l.gen())) {
      throw DomainError("evaluate_word: generator x" + std::to_string(l.gen()) +
                        " is unassigned");
    }
  }
  if (!dim) return IntMatrix(1);

  std::map<GeneratorId, LetterAction> actions;
  for (GeneratorId g : support(w)) {
    const IntMatrix& m = assignment.at(g);
    auto elem = as_elementary(m);
    if (elem) {
      actions.emplace(g, LetterAction{elem, IntMatrix(1), IntMatrix(1)});
    } else {
      actions.emplace(g, LetterAction{std::nullopt, m, unitriangular_inverse(m)});
    }
  }

  IntMatrix acc(*dim);
  const std::size_t n = *dim;
  for (Letter l : w.letters()) {
    const LetterAction& act = actions.at(l.gen());
    if (act.elementary) {
      const auto& [src, dst, value] = *act.elementary;
      if (src == dst) continue;
      // acc * (I + v E(src,dst)) adds v * column src to column dst.
      mpz_class v = l.sign() > 0 ? value : mpz_class(-value);
      for (std::size_t r = 1; r <= n; ++r) {
        if (acc.at(r, src) == 0) continue;
        mpz_addmul(acc.at(r, dst).get_mpz_t(), v.get_mpz_t(),
                   acc.at(r, src).get_mpz_t());
      }
    } else {
      acc = acc * (l.sign() > 0 ? act.forward : act.backward);
    }
  }
  return acc;
}

nlohmann::json to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 1; i <= m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 1; j <= m.dim(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"rows", std::move(rows)}};
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  const auto dim = j.at("dim").get<std::size_t>();
  const auto& rows = j.at("rows");
  if (rows.size() != dim) throw ParseError("matrix JSON: row count != dim");
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (rows[i].size() != dim) throw ParseError("matrix JSON: ragged row");
    for (std::size_t k = 0; k < dim; ++k) {
      const auto text = rows[i][k].get<std::string>();
      if (m.at(i + 1, k + 1).set_str(text, 10) != 0) {
        throw ParseError("matrix JSON: bad integer '" + text + "'");
      }
    }
  }
  return m;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 1; i <= m.dim(); ++i) {
    out << (i > 1 ? ", [" : "[");
    for (std::size_t j = 1; j <= m.dim(); ++j) {
      out << (j > 1 ? ", " : "") << m.at(i, j).get_str();
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace perfloc
