#include "ctv/lp.hpp"

#include <limits>

namespace ctv::lp {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense phase-1 tableau over standard-form columns:
// [original (split if free) | slack/surplus | artificial].
class Tableau {
 public:
  explicit Tableau(const Problem& p) {
    const std::size_t m = p.constraints.size();
    std::size_t col = 0;
    plus_col_.resize(p.num_vars);
    minus_col_.assign(p.num_vars, kNone);
    for (std::size_t j = 0; j < p.num_vars; ++j) {
      plus_col_[j] = col++;
      if (!p.free.empty() && p.free[j]) minus_col_[j] = col++;
    }
    std::vector<std::size_t> slack_col(m, kNone);
    for (std::size_t i = 0; i < m; ++i) {
      if (p.constraints[i].relation != Relation::Equal) slack_col[i] = col++;
    }
    // Rows whose slack can start basic (<= with nonnegative rhs) need no artificial.
    std::vector<std::size_t> art_col(m, kNone);
    first_artificial_ = col;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = p.constraints[i];
      const bool slack_basic = c.relation == Relation::LessEqual && c.rhs >= 0;
      if (!slack_basic) art_col[i] = col++;
    }
    cols_ = col;
    rows_ = m;
    t_.assign(m * (cols_ + 1), Rational(0));
    basis_.assign(m, kNone);
    obj_.assign(cols_ + 1, Rational(0));

    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = p.constraints[i];
      const int flip = c.rhs < 0 ? -1 : 1;
      for (std::size_t j = 0; j < p.num_vars; ++j) {
        if (c.coeffs[j] == 0) continue;
        at(i, plus_col_[j]) = flip * c.coeffs[j];
        if (minus_col_[j] != kNone) at(i, minus_col_[j]) = -flip * c.coeffs[j];
      }
      if (slack_col[i] != kNone) {
        at(i, slack_col[i]) = c.relation == Relation::LessEqual ? flip : -flip;
      }
      rhs(i) = flip * c.rhs;
      if (art_col[i] != kNone) {
        at(i, art_col[i]) = 1;
        basis_[i] = art_col[i];
      } else {
        basis_[i] = slack_col[i];
      }
    }
    // Reduced costs of min sum(artificials): c_j - sum over artificial-basic rows.
    for (std::size_t j = first_artificial_; j < cols_; ++j) obj_[j] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (std::size_t j = 0; j <= cols_; ++j) obj_[j] -= at(i, j);
    }
  }

  std::size_t run() {
    std::size_t pivots = 0;
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return pivots;
      std::size_t leave = kNone;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (at(i, enter) <= 0) continue;
        Rational ratio = rhs(i) / at(i, enter);
        if (leave == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      // Phase-1 objective is bounded below by zero, so a ratio row always exists.
      pivot(leave, enter);
      ++pivots;
    }
  }

  [[nodiscard]] Rational objective() const { return -obj_[cols_]; }

  [[nodiscard]] Vector original_values(std::size_t num_vars) const {
    Vector col_value = zeros(cols_);
    for (std::size_t i = 0; i < rows_; ++i) col_value[basis_[i]] = t_[i * (cols_ + 1) + cols_];
    Vector x = zeros(num_vars);
    for (std::size_t j = 0; j < num_vars; ++j) {
      x[j] = col_value[plus_col_[j]];
      if (minus_col_[j] != kNone) x[j] -= col_value[minus_col_[j]];
    }
    return x;
  }

 private:
  Rational& at(std::size_t i, std::size_t j) { return t_[i * (cols_ + 1) + j]; }
  Rational& rhs(std::size_t i) { return t_[i * (cols_ + 1) + cols_]; }

  void pivot(std::size_t row, std::size_t col) {
    const std::size_t width = cols_ + 1;
    const Rational inv = 1 / at(row, col);
    for (std::size_t j = 0; j < width; ++j) {
      if (at(row, j) != 0) at(row, j) *= inv;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || at(i, col) == 0) continue;
      const Rational f = at(i, col);
      for (std::size_t j = 0; j < width; ++j) {
        if (at(row, j) != 0) at(i, j) -= f * at(row, j);
      }
    }
    if (obj_[col] != 0) {
      const Rational f = obj_[col];
      for (std::size_t j = 0; j < width; ++j) {
        if (at(row, j) != 0) obj_[j] -= f * at(row, j);
      }
    }
    basis_[row] = col;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t first_artificial_ = 0;
  std::vector<std::size_t> plus_col_;
  std::vector<std::size_t> minus_col_;
  std::vector<Rational> t_;
  std::vector<std::size_t> basis_;
  Vector obj_;
};

}  // namespace

Result solve(const Problem& problem) {
  Tableau tab(problem);
  Result result;
  result.pivots = tab.run();
  result.infeasibility = tab.objective();
  result.feasible = result.infeasibility == 0;
  result.solution = tab.original_values(problem.num_vars);
  return result;
}

}  // namespace ctv::lp
