#include "outerdraw/lp.hpp"

namespace outerdraw {

bool LinearSystem::satisfied_by(const std::vector<Rational>& z) const {
  if (static_cast<int>(z.size()) != variables) return false;
  for (const auto& row : strict) {
    Rational s = 0;
    for (const auto& [j, c] : row) s += c * z.at(j);
    if (s >= 0) return false;
  }
  return true;
}

std::optional<std::vector<Rational>> solve_leq(const std::vector<std::vector<Rational>>& A,
                                                const std::vector<Rational>& b) {
  const std::size_t m = A.size();
  const std::size_t v = m ? A.front().size() : 0;
  if (b.size() != m) throw InputError("solve_leq: row count mismatch");
  if (m == 0) return std::vector<Rational>(v, Rational(0));

  // columns: x+ (v), x- (v), slacks (m), artificials (one per row with b < 0)
  std::vector<std::size_t> art_row;
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0) art_row.push_back(i);
  const std::size_t slack0 = 2 * v, art0 = 2 * v + m, cols = art0 + art_row.size();
  const std::size_t rhs = cols;

  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != v) throw InputError("solve_leq: ragged matrix");
    const int s = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < v; ++j) {
      T[i][j] = s * A[i][j];
      T[i][v + j] = -s * A[i][j];
    }
    T[i][slack0 + i] = s;
    T[i][rhs] = s * b[i];
    basis[i] = slack0 + i;
  }
  for (std::size_t a = 0; a < art_row.size(); ++a) {
    T[art_row[a]][art0 + a] = 1;
    basis[art_row[a]] = art0 + a;
  }

  // reduced costs of the phase-1 objective (sum of artificials); obj[rhs]
  // holds minus the objective value
  std::vector<Rational> obj(cols + 1, Rational(0));
  for (std::size_t a = 0; a < art_row.size(); ++a) obj[art0 + a] = 1;
  for (std::size_t i : art_row)
    for (std::size_t j = 0; j <= cols; ++j) obj[j] -= T[i][j];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][rhs] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw std::logic_error("phase-1 objective unbounded");
    const Rational piv = T[leave][enter];
    for (auto& e : T[leave]) e /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      const Rational f = T[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
    }
    if (obj[enter] != 0) {
      const Rational f = obj[enter];
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  if (obj[rhs] != 0) return std::nullopt;

  std::vector<Rational> value(cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) value[basis[i]] = T[i][rhs];
  std::vector<Rational> x(v);
  for (std::size_t j = 0; j < v; ++j) x[j] = value[j] - value[v + j];
  return x;
}

std::optional<std::vector<Rational>> lp_feasible(const LinearSystem& sys) {
  std::vector<std::vector<Rational>> A;
  for (const auto& row : sys.strict) {
    std::vector<Rational> r(static_cast<std::size_t>(sys.variables), Rational(0));
    for (const auto& [j, c] : row) r.at(j) += c;
    A.push_back(std::move(r));
  }
  auto z = solve_leq(A, std::vector<Rational>(A.size(), Rational(-1)));
  if (!z) return std::nullopt;
  if (z->size() != static_cast<std::size_t>(sys.variables)) z->assign(sys.variables, Rational(0));
  if (!sys.satisfied_by(*z)) throw std::logic_error("simplex witness violates the system");
  return z;
}

}  // namespace outerdraw
