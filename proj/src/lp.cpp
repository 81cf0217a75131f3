#include "cardpoly/error.hpp"
#include "cardpoly/solver.hpp"

namespace cardpoly {

std::string to_string(LpStatus s)
{
    switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
    }
    return "?";
}

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

/// Bounded-variable simplex tableau. Every column j has bounds
/// [0, upper_j] (upper_j absent = +infinity); nonbasic columns sit at one
/// of their bounds.
class Tableau {
public:
    Tableau(int rows, int cols)
        : m_(rows), n_(cols), t_(at(rows), RationalVector(at(cols))),
          beta_(at(rows)), basis_(at(rows), -1), upper_(at(cols)),
          at_upper_(at(cols), false), is_basic_(at(cols), false)
    {
    }

    Rational &entry(int i, int j) { return t_[at(i)][at(j)]; }
    void set_upper(int j, std::optional<Rational> u) { upper_[at(j)] = std::move(u); }
    void set_basic(int i, int j, Rational value)
    {
        basis_[at(i)] = j;
        is_basic_[at(j)] = true;
        beta_[at(i)] = std::move(value);
    }

    /// Minimizes cost . x from the current basis. Returns false when the
    /// objective is unbounded.
    bool optimize(const RationalVector &cost, int &pivots)
    {
        RationalVector d = cost;
        for (int i = 0; i < m_; ++i) {
            const Rational &cb = cost[at(basis_[at(i)])];
            if (sgn(cb) == 0)
                continue;
            for (int j = 0; j < n_; ++j)
                if (sgn(t_[at(i)][at(j)]) != 0)
                    d[at(j)] -= cb * t_[at(i)][at(j)];
        }
        for (;;) {
            // Bland: smallest index that improves.
            int enter = -1;
            int dir = 0;
            for (int j = 0; j < n_ && enter < 0; ++j) {
                if (is_basic_[at(j)])
                    continue;
                const int s = sgn(d[at(j)]);
                if (!at_upper_[at(j)] && s < 0 && can_increase(j)) {
                    enter = j;
                    dir = 1;
                } else if (at_upper_[at(j)] && s > 0) {
                    enter = j;
                    dir = -1;
                }
            }
            if (enter < 0)
                return true;

            // Ratio test; -1 stands for the entering column's own bound.
            std::optional<Rational> theta;
            int leave_row = -2;
            int leave_index = 0;
            if (upper_[at(enter)]) {
                theta = *upper_[at(enter)];
                leave_row = -1;
                leave_index = enter;
            }
            for (int i = 0; i < m_; ++i) {
                const Rational &a = t_[at(i)][at(enter)];
                const int s = sgn(a) * dir;
                if (s == 0)
                    continue;
                std::optional<Rational> limit;
                const int b = basis_[at(i)];
                if (s > 0)
                    limit = beta_[at(i)] / abs(a);
                else if (upper_[at(b)])
                    limit = (*upper_[at(b)] - beta_[at(i)]) / abs(a);
                if (!limit)
                    continue;
                if (!theta || *limit < *theta || (*limit == *theta && b < leave_index)) {
                    theta = limit;
                    leave_row = i;
                    leave_index = b;
                }
            }
            if (!theta)
                return false;
            ++pivots;

            const Rational step = *theta * dir;
            for (int i = 0; i < m_; ++i)
                if (sgn(t_[at(i)][at(enter)]) != 0)
                    beta_[at(i)] -= t_[at(i)][at(enter)] * step;
            if (leave_row == -1) {
                at_upper_[at(enter)] = !at_upper_[at(enter)];
                continue;
            }
            const int out = basis_[at(leave_row)];
            const Rational entering_value = value_of_nonbasic(enter) + step;
            // The leaving column ends at whichever bound it reached.
            at_upper_[at(out)] = sgn(t_[at(leave_row)][at(enter)]) * dir < 0;
            is_basic_[at(out)] = false;
            pivot(leave_row, enter, d);
            at_upper_[at(enter)] = false;
            beta_[at(leave_row)] = entering_value;
        }
    }

    /// Degenerate pivot bringing column j into row i.
    void exchange(int i, int j)
    {
        const Rational value = value_of_nonbasic(j);
        const int out = basis_[at(i)];
        RationalVector dummy(at(n_));
        is_basic_[at(out)] = false;
        at_upper_[at(out)] = false;
        pivot(i, j, dummy);
        at_upper_[at(j)] = false;
        beta_[at(i)] = value;
    }

    Rational value(int j) const
    {
        if (is_basic_[at(j)]) {
            for (int i = 0; i < m_; ++i)
                if (basis_[at(i)] == j)
                    return beta_[at(i)];
        }
        return value_of_nonbasic(j);
    }

    int basic_at(int i) const { return basis_[at(i)]; }
    bool is_basic(int j) const { return is_basic_[at(j)]; }
    const Rational &coefficient(int i, int j) const { return t_[at(i)][at(j)]; }

private:
    bool can_increase(int j) const { return !upper_[at(j)] || sgn(*upper_[at(j)]) > 0; }

    Rational value_of_nonbasic(int j) const
    {
        return at_upper_[at(j)] ? *upper_[at(j)] : Rational(0);
    }

    void pivot(int r, int j, RationalVector &d)
    {
        auto &row = t_[at(r)];
        const Rational inv = 1 / row[at(j)];
        for (auto &q : row)
            if (sgn(q) != 0)
                q *= inv;
        std::vector<int> nz;
        for (int k = 0; k < n_; ++k)
            if (sgn(row[at(k)]) != 0)
                nz.push_back(k);
        for (int i = 0; i < m_; ++i) {
            if (i == r || sgn(t_[at(i)][at(j)]) == 0)
                continue;
            const Rational f = t_[at(i)][at(j)];
            for (int k : nz)
                t_[at(i)][at(k)] -= f * row[at(k)];
        }
        if (sgn(d[at(j)]) != 0) {
            const Rational f = d[at(j)];
            for (int k : nz)
                d[at(k)] -= f * row[at(k)];
        }
        basis_[at(r)] = j;
        is_basic_[at(j)] = true;
    }

    int m_, n_;
    std::vector<RationalVector> t_;
    RationalVector beta_;
    std::vector<int> basis_;
    std::vector<std::optional<Rational>> upper_;
    std::vector<bool> at_upper_;
    std::vector<bool> is_basic_;
};

} // namespace

LpResult lp_solve(const std::vector<LinearInequality> &constraints,
                  const RationalVector &objective, std::optional<RationalVector> lower,
                  std::optional<RationalVector> upper)
{
    const int nv = static_cast<int>(objective.size());
    RationalVector lo = lower ? *lower : RationalVector(at(nv), Rational(0));
    RationalVector up = upper ? *upper : RationalVector(at(nv), Rational(1));
    require(static_cast<int>(lo.size()) == nv && static_cast<int>(up.size()) == nv,
            "bounds do not match the objective");
    for (const auto &c : constraints)
        require(static_cast<int>(c.coeffs.size()) == nv,
                "constraint does not match the objective");

    LpResult result;
    for (int j = 0; j < nv; ++j)
        if (up[at(j)] < lo[at(j)])
            return result;

    // Column layout: shifted originals, one slack per inequality, then
    // artificials for rows without a usable slack.
    const int m = static_cast<int>(constraints.size());
    std::vector<int> slack(at(m), -1);
    int cols = nv;
    for (int i = 0; i < m; ++i)
        if (constraints[at(i)].sense != Sense::Equal)
            slack[at(i)] = cols++;

    std::vector<RationalVector> rows(at(m));
    RationalVector rhs(at(m));
    std::vector<int> slack_sign(at(m), 0);
    for (int i = 0; i < m; ++i) {
        const auto &c = constraints[at(i)];
        rows[at(i)] = c.coeffs;
        rhs[at(i)] = c.rhs;
        for (int j = 0; j < nv; ++j)
            if (sgn(c.coeffs[at(j)]) != 0)
                rhs[at(i)] -= c.coeffs[at(j)] * lo[at(j)];
        slack_sign[at(i)] = c.sense == Sense::LessEq ? 1 : c.sense == Sense::GreaterEq ? -1 : 0;
        if (sgn(rhs[at(i)]) < 0) {
            for (auto &q : rows[at(i)])
                q = -q;
            rhs[at(i)] = -rhs[at(i)];
            slack_sign[at(i)] = -slack_sign[at(i)];
        }
    }
    std::vector<int> artificial(at(m), -1);
    for (int i = 0; i < m; ++i)
        if (slack_sign[at(i)] != 1)
            artificial[at(i)] = cols++;

    Tableau tab(m, cols);
    for (int j = 0; j < nv; ++j)
        tab.set_upper(j, up[at(j)] - lo[at(j)]);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < nv; ++j)
            tab.entry(i, j) = rows[at(i)][at(j)];
        if (slack[at(i)] >= 0)
            tab.entry(i, slack[at(i)]) = slack_sign[at(i)];
        if (artificial[at(i)] >= 0) {
            tab.entry(i, artificial[at(i)]) = 1;
            tab.set_basic(i, artificial[at(i)], rhs[at(i)]);
        } else {
            tab.set_basic(i, slack[at(i)], rhs[at(i)]);
        }
    }

    RationalVector phase1(at(cols));
    bool needs_phase1 = false;
    for (int i = 0; i < m; ++i)
        if (artificial[at(i)] >= 0) {
            phase1[at(artificial[at(i)])] = 1;
            needs_phase1 = true;
        }
    if (needs_phase1) {
        if (!tab.optimize(phase1, result.pivots))
            throw InternalError("phase one cannot be unbounded");
        Rational infeas = 0;
        for (int i = 0; i < m; ++i)
            if (artificial[at(i)] >= 0)
                infeas += tab.value(artificial[at(i)]);
        if (sgn(infeas) > 0)
            return result;
        // Drive basic artificials out where possible; the rest sit in
        // redundant rows and are pinned to zero.
        std::vector<bool> is_artificial(at(cols), false);
        for (int i = 0; i < m; ++i)
            if (artificial[at(i)] >= 0)
                is_artificial[at(artificial[at(i)])] = true;
        for (int i = 0; i < m; ++i) {
            if (!is_artificial[at(tab.basic_at(i))])
                continue;
            for (int j = 0; j < cols; ++j)
                if (!is_artificial[at(j)] && !tab.is_basic(j) && sgn(tab.coefficient(i, j)) != 0) {
                    tab.exchange(i, j);
                    break;
                }
        }
        for (int i = 0; i < m; ++i)
            if (artificial[at(i)] >= 0)
                tab.set_upper(artificial[at(i)], Rational(0));
    }

    RationalVector cost(at(cols));
    for (int j = 0; j < nv; ++j)
        cost[at(j)] = objective[at(j)];
    if (!tab.optimize(cost, result.pivots)) {
        result.status = LpStatus::Unbounded;
        return result;
    }
    result.status = LpStatus::Optimal;
    result.point.resize(at(nv));
    result.value = 0;
    for (int j = 0; j < nv; ++j) {
        result.point[at(j)] = lo[at(j)] + tab.value(j);
        result.value += objective[at(j)] * result.point[at(j)];
    }
    return result;
}

} // namespace cardpoly
