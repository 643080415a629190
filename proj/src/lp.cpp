#include "csn/lp.hpp"

#include <cassert>

namespace csn {

void LpProblem::add_row(Vec coeffs, Rel rel, Rat rhs) {
  if (int(coeffs.size()) != num_vars)
    throw DomainError("row length does not match variable count");
  rows.push_back(LpRow{std::move(coeffs), rel, std::move(rhs)});
}

void LpProblem::set_objective(Vec coeffs, LpSense s) {
  if (int(coeffs.size()) != num_vars)
    throw DomainError("objective length does not match variable count");
  objective = std::move(coeffs);
  sense = s;
}

void LpProblem::mark_nonneg(int var) {
  if (var < 0 || var >= num_vars) throw DomainError("nonneg variable out of range");
  if (nonneg.empty()) nonneg.assign(size_t(num_vars), false);
  nonneg[size_t(var)] = true;
}

namespace {

// Standard-form tableau. Columns: one column per nonnegative variable
// and an (x⁺, x⁻) pair per free variable, then one slack per inequality
// row, then artificials. Rows are sign normalized so the right-hand
// side is nonnegative; when every normalized row then carries a +1
// slack, the slack basis is feasible and no artificial block is built.
class Simplex {
 public:
  explicit Simplex(const LpProblem& p) : p_(p) {
    m_ = int(p.rows.size());
    col_of_var_.resize(p.num_vars);
    int col = 0;
    for (int j = 0; j < p.num_vars; ++j) {
      col_of_var_[j] = col;
      col += p.var_nonneg(j) ? 1 : 2;
    }
    nsplit_ = col;
    slack_of_.assign(m_, -1);
    int nslack = 0;
    for (int i = 0; i < m_; ++i)
      if (p.rows[i].rel != Rel::Eq) slack_of_[i] = nslack++;
    slack0_ = nsplit_;
    art0_ = nsplit_ + nslack;

    row_sign_.assign(m_, 1);
    slack_basis_ = true;
    for (int i = 0; i < m_; ++i) {
      const LpRow& r = p.rows[i];
      row_sign_[i] = r.rhs.sign() < 0 ? -1 : 1;
      Rat sc = (r.rel == Rel::Le) ? Rat(1) : Rat(-1);
      if (r.rel == Rel::Eq || (sc * Rat(row_sign_[i])) != Rat(1)) slack_basis_ = false;
    }
    width_ = art0_ + (slack_basis_ ? 0 : m_);

    tab_.assign(m_, Vec(width_ + 1));
    for (int i = 0; i < m_; ++i) {
      const LpRow& r = p.rows[i];
      Rat sr(row_sign_[i]);
      for (int j = 0; j < p.num_vars; ++j) {
        if (r.coeffs[j].is_zero()) continue;
        Rat v = r.coeffs[j] * sr;
        tab_[i][col_of_var_[j]] = v;
        if (!p.var_nonneg(j)) tab_[i][col_of_var_[j] + 1] = -v;
      }
      if (r.rel != Rel::Eq) {
        Rat sc = (r.rel == Rel::Le) ? Rat(1) : Rat(-1);
        tab_[i][slack0_ + slack_of_[i]] = sc * sr;
      }
      if (!slack_basis_) tab_[i][art0_ + i] = Rat(1);
      tab_[i][width_] = r.rhs * sr;
    }
  }

  LpOutcome solve() {
    basis_.resize(m_);

    if (slack_basis_) {
      for (int i = 0; i < m_; ++i) basis_[i] = slack0_ + slack_of_[i];
    } else {
      for (int i = 0; i < m_; ++i) basis_[i] = art0_ + i;

      // Phase 1: minimize the artificial sum.
      cost_.assign(width_ + 1, Rat());
      for (int j = 0; j < art0_; ++j) {
        Rat s;
        for (int i = 0; i < m_; ++i)
          if (!tab_[i][j].is_zero()) s += tab_[i][j];
        cost_[j] = -s;
      }
      {
        Rat s;
        for (int i = 0; i < m_; ++i) s += tab_[i][width_];
        cost_[width_] = -s;  // negative of current phase-1 objective value
      }
      run(/*allow_artificial=*/true);

      if (cost_[width_].sign() < 0) return infeasible();

      drive_out_artificials();
    }

    if (!p_.objective) {
      LpOutcome out;
      out.status = LpOutcome::Status::Feasible;
      out.witness = extract_witness();
      return out;
    }

    // Phase 2 on the real objective (converted to Min).
    cost_.assign(width_ + 1, Rat());
    Rat sgn = (p_.sense == LpSense::Max) ? Rat(-1) : Rat(1);
    for (int j = 0; j < p_.num_vars; ++j) {
      const Rat& c = (*p_.objective)[j];
      if (c.is_zero()) continue;
      cost_[col_of_var_[j]] = c * sgn;
      if (!p_.var_nonneg(j)) cost_[col_of_var_[j] + 1] = -(c * sgn);
    }
    for (int i = 0; i < m_; ++i) {
      int b = basis_[i];
      if (cost_[b].is_zero()) continue;
      Rat f = cost_[b];
      for (int j = 0; j <= width_; ++j)
        if (!tab_[i][j].is_zero()) cost_[j] -= f * tab_[i][j];
    }
    if (!run(/*allow_artificial=*/false)) {
      LpOutcome out;
      out.status = LpOutcome::Status::Unbounded;
      return out;
    }

    LpOutcome out;
    out.status = LpOutcome::Status::Optimal;
    out.witness = extract_witness();
    out.value = -cost_[width_];
    if (p_.sense == LpSense::Max) out.value = -out.value;
    return out;
  }

 private:
  // Entering rule: most negative reduced cost (lowest index on ties),
  // falling back to Bland's rule during degenerate streaks so cycling
  // is impossible. Deterministic either way. Returns false when
  // unbounded.
  bool run(bool allow_artificial) {
    int limit = allow_artificial ? width_ : art0_;
    int degenerate_streak = 0;
    for (;;) {
      bool bland = degenerate_streak >= 12;
      int enter = -1;
      for (int j = 0; j < limit; ++j) {
        if (cost_[j].sign() < 0) {
          if (bland) {
            enter = j;
            break;
          }
          if (enter < 0 || cost_[j] < cost_[enter]) enter = j;
        }
      }
      if (enter < 0) return true;

      int leave = -1;
      Rat best;
      for (int i = 0; i < m_; ++i) {
        if (tab_[i][enter].sign() <= 0) continue;
        Rat ratio = tab_[i][width_] / tab_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      if (best.is_zero())
        ++degenerate_streak;
      else
        degenerate_streak = 0;
      pivot(leave, enter);
    }
  }

  void pivot(int row, int col) {
    Vec& pr = tab_[row];
    Rat inv = Rat(1) / pr[col];
    for (int j = 0; j <= width_; ++j)
      if (!pr[j].is_zero()) pr[j] *= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == row || tab_[i][col].is_zero()) continue;
      Rat f = tab_[i][col];
      Vec& ri = tab_[i];
      for (int j = 0; j <= width_; ++j)
        if (!pr[j].is_zero()) ri[j] -= f * pr[j];
    }
    if (!cost_[col].is_zero()) {
      Rat f = cost_[col];
      for (int j = 0; j <= width_; ++j)
        if (!pr[j].is_zero()) cost_[j] -= f * pr[j];
    }
    basis_[row] = col;
  }

  // A zero-value basic artificial either pivots out on a real column or
  // sits on a redundant row where it can never block a later pivot.
  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < art0_) continue;
      for (int j = 0; j < art0_; ++j) {
        if (!tab_[i][j].is_zero()) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  LpOutcome infeasible() {
    LpOutcome out;
    out.status = LpOutcome::Status::Infeasible;
    // Simplex multipliers: y_i = 1 − (reduced cost of artificial i).
    // Multiplying normalized rows by y and flipping Ge rows to their
    // ≤-canonical form yields the published certificate.
    out.farkas.resize(m_);
    for (int i = 0; i < m_; ++i) {
      Rat y = Rat(1) - cost_[art0_ + i];
      Rat mult = -(Rat(row_sign_[i]) * y);
      if (p_.rows[i].rel == Rel::Ge) mult = -mult;
      out.farkas[i] = mult;
    }
    return out;
  }

  Vec extract_witness() const {
    Vec split(width_, Rat());
    for (int i = 0; i < m_; ++i) split[basis_[i]] = tab_[i][width_];
    Vec x(p_.num_vars);
    for (int j = 0; j < p_.num_vars; ++j) {
      x[j] = split[col_of_var_[j]];
      if (!p_.var_nonneg(j)) x[j] -= split[col_of_var_[j] + 1];
    }
    return x;
  }

  const LpProblem& p_;
  int m_ = 0, nsplit_ = 0, slack0_ = 0, art0_ = 0, width_ = 0;
  bool slack_basis_ = false;
  std::vector<Vec> tab_;
  Vec cost_;
  std::vector<int> basis_;
  std::vector<int> col_of_var_;
  std::vector<int> slack_of_;
  std::vector<int> row_sign_;
};

}  // namespace

LpOutcome lp_solve(const LpProblem& p) { return Simplex(p).solve(); }

bool witness_valid(const LpProblem& p, const Vec& x) {
  if (int(x.size()) != p.num_vars) return false;
  for (int j = 0; j < p.num_vars; ++j)
    if (p.var_nonneg(j) && x[j].sign() < 0) return false;
  for (const LpRow& r : p.rows) {
    Rat lhs = dot(r.coeffs, x);
    switch (r.rel) {
      case Rel::Le:
        if (lhs > r.rhs) return false;
        break;
      case Rel::Ge:
        if (lhs < r.rhs) return false;
        break;
      case Rel::Eq:
        if (lhs != r.rhs) return false;
        break;
    }
  }
  return true;
}

bool farkas_valid(const LpProblem& p, const Vec& mult) {
  if (mult.size() != p.rows.size()) return false;
  Vec combo(p.num_vars, Rat());
  Rat rhs;
  for (size_t i = 0; i < p.rows.size(); ++i) {
    const LpRow& r = p.rows[i];
    Rat lambda = mult[i];
    if (r.rel != Rel::Eq && lambda.sign() < 0) return false;
    if (lambda.is_zero()) continue;
    Rat eff = (r.rel == Rel::Ge) ? -lambda : lambda;
    for (int j = 0; j < p.num_vars; ++j)
      if (!r.coeffs[j].is_zero()) combo[j] += eff * r.coeffs[j];
    rhs += eff * r.rhs;
  }
  for (int j = 0; j < p.num_vars; ++j) {
    if (p.var_nonneg(j)) {
      if (combo[j].sign() < 0) return false;
    } else if (!combo[j].is_zero()) {
      return false;
    }
  }
  return rhs.sign() < 0;
}

}  // namespace csn
