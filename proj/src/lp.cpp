#include "lprev/lp.hpp"

#include <algorithm>

namespace lprev {

namespace lp {

SparseRow SparseRow::from_dense(std::span<const Rational> dense) {
    SparseRow row;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (dense[i].is_zero()) continue;
        row.index.push_back(static_cast<std::uint32_t>(i));
        row.value.push_back(dense[i]);
    }
    return row;
}

Rational SparseRow::dot(std::span<const Rational> x) const {
    Rational acc;
    for (std::size_t k = 0; k < index.size(); ++k) {
        const Rational& xi = x[index[k]];
        if (!xi.is_zero()) acc += value[k] * xi;
    }
    return acc;
}

System System::from(const HRep& h) {
    System s;
    s.dim = h.dim();
    for (const auto& c : h.constraints()) s.add(c.coeffs, c.rhs);
    return s;
}

void System::add(std::span<const Rational> coeffs, Rational b) {
    if (coeffs.size() != dim) throw std::invalid_argument("lp::System: row length mismatch");
    add(SparseRow::from_dense(coeffs), std::move(b));
}

void System::add(SparseRow row, Rational b) {
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
}

void System::pop_back() {
    rows.pop_back();
    rhs.pop_back();
}

bool System::satisfied_by(std::span<const Rational> x) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].dot(x) > rhs[i]) return false;
    return true;
}

namespace {

constexpr long kFiller = -1;
constexpr long kLineality = -2;
constexpr int kDegenerateRunBeforeBland = 16;

// Active-set primal simplex in x-space. The working matrix M holds one row per
// slot: either a tight constraint or a placeholder; its inverse is kept as
// columns so that column k is the direction that moves off slot k only.
class ActiveSet {
public:
    ActiveSet(const System& sys, const Vec& objective, Vec start, const Budget* budget)
        : sys_(sys), c_(objective), d_(sys.dim), m_(sys.size()), budget_(budget), x_(std::move(start)) {
        slack_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) slack_[i] = sys_.rhs[i] - sys_.rows[i].dot(x_);
        cols_.assign(d_, Vec(d_));
        for (std::size_t k = 0; k < d_; ++k) cols_[k][k] = 1;
        slot_.assign(d_, kFiller);
        in_slot_.assign(m_, false);
        along_.resize(m_);
    }

    LpResult run() {
        if (auto r = crash()) return *r;
        return pivot_loop();
    }

private:
    struct Block {
        std::size_t row;
        Rational step;
    };

    // Computes <a_i, dir> for all rows and the first blocking row.
    std::optional<Block> ratio_test(const Vec& dir) {
        std::optional<Block> best;
        for (std::size_t i = 0; i < m_; ++i) {
            along_[i] = sys_.rows[i].dot(dir);
            if (in_slot_[i] || along_[i].sign() <= 0) continue;
            Rational step = slack_[i] / along_[i];
            if (!best || step < best->step) best = Block{i, std::move(step)};
        }
        return best;
    }

    void move(const Vec& dir, const Rational& step) {
        if (step.is_zero()) return;
        for (std::size_t j = 0; j < d_; ++j)
            if (!dir[j].is_zero()) x_[j] += step * dir[j];
        for (std::size_t i = 0; i < m_; ++i)
            if (!along_[i].is_zero()) slack_[i] -= step * along_[i];
    }

    void replace_slot(std::size_t k, std::size_t row) {
        const SparseRow& a = sys_.rows[row];
        Vec v(d_);
        for (std::size_t j = 0; j < d_; ++j) v[j] = a.dot(cols_[j]);
        const Rational inv = v[k].inverse();
        for (auto& e : cols_[k])
            if (!e.is_zero()) e *= inv;
        for (std::size_t j = 0; j < d_; ++j) {
            if (j == k || v[j].is_zero()) continue;
            for (std::size_t r = 0; r < d_; ++r)
                if (!cols_[k][r].is_zero()) cols_[j][r] -= v[j] * cols_[k][r];
        }
        if (slot_[k] >= 0) in_slot_[static_cast<std::size_t>(slot_[k])] = false;
        slot_[k] = static_cast<long>(row);
        in_slot_[row] = true;
        slack_[row] = Rational();
    }

    static Vec negated(const Vec& v) {
        Vec out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
        return out;
    }

    LpResult unbounded(Vec ray) const {
        LpResult r;
        r.status = LpStatus::unbounded;
        r.point = x_;
        r.ray = std::move(ray);
        return r;
    }

    // Moves from the feasible start to a vertex, fixing lineality directions
    // that are orthogonal to the objective.
    std::optional<LpResult> crash() {
        for (std::size_t k = 0; k < d_; ++k) {
            if (budget_) budget_->check_time();
            const Rational gain = dot(c_, cols_[k]);
            std::vector<Vec> dirs;
            if (gain.sign() >= 0) dirs.push_back(cols_[k]);
            if (gain.sign() <= 0) dirs.push_back(negated(cols_[k]));
            bool placed = false;
            for (const auto& dir : dirs) {
                if (auto block = ratio_test(dir)) {
                    move(dir, block->step);
                    replace_slot(k, block->row);
                    placed = true;
                    break;
                }
            }
            if (placed) continue;
            if (!gain.is_zero()) return unbounded(dirs.front());
            slot_[k] = kLineality;
        }
        return std::nullopt;
    }

    LpResult pivot_loop() {
        bool bland = false;
        int degenerate_run = 0;
        for (std::size_t iter = 0;; ++iter) {
            if (budget_ && iter % 64 == 0) budget_->check_time();
            std::optional<std::size_t> leave;
            Rational leave_mult;
            for (std::size_t k = 0; k < d_; ++k) {
                if (slot_[k] < 0) continue;
                Rational u = dot(c_, cols_[k]);
                if (u.sign() >= 0) continue;
                if (!leave) {
                    leave = k;
                    leave_mult = std::move(u);
                    continue;
                }
                const bool lower_row = slot_[k] < slot_[*leave];
                if (bland ? lower_row : (u < leave_mult || (u == leave_mult && lower_row))) {
                    leave = k;
                    leave_mult = std::move(u);
                }
            }
            if (!leave) {
                LpResult r;
                r.status = LpStatus::optimal;
                r.value = dot(c_, x_);
                r.point = x_;
                return r;
            }
            Vec dir = negated(cols_[*leave]);
            auto block = ratio_test(dir);
            if (!block) return unbounded(std::move(dir));
            if (block->step.is_zero()) {
                if (++degenerate_run >= kDegenerateRunBeforeBland) bland = true;
            } else {
                degenerate_run = 0;
            }
            move(dir, block->step);
            const auto leaving_row = static_cast<std::size_t>(slot_[*leave]);
            replace_slot(*leave, block->row);
            slack_[leaving_row] = sys_.rhs[leaving_row] - sys_.rows[leaving_row].dot(x_);
        }
    }

    const System& sys_;
    const Vec& c_;
    std::size_t d_;
    std::size_t m_;
    const Budget* budget_;
    Vec x_;
    Vec slack_;
    std::vector<Vec> cols_;
    std::vector<long> slot_;
    std::vector<bool> in_slot_;
    Vec along_;
};

}  // namespace

std::optional<Vec> find_feasible_point(const System& system, const Budget* budget) {
    const std::size_t d = system.dim;
    // max -t  s.t.  <a_i, x> - t <= b_i,  -t <= 0
    System aux;
    aux.dim = d + 1;
    Rational t0;
    for (std::size_t i = 0; i < system.size(); ++i) {
        SparseRow row = system.rows[i];
        row.index.push_back(static_cast<std::uint32_t>(d));
        row.value.push_back(Rational(-1));
        aux.add(std::move(row), system.rhs[i]);
        if (-system.rhs[i] > t0) t0 = -system.rhs[i];
    }
    SparseRow tpos;
    tpos.index.push_back(static_cast<std::uint32_t>(d));
    tpos.value.push_back(Rational(-1));
    aux.add(std::move(tpos), Rational());
    Vec start(d + 1);
    start[d] = t0;
    Vec objective(d + 1);
    objective[d] = -1;
    LpResult r = ActiveSet(aux, objective, std::move(start), budget).run();
    if (r.status != LpStatus::optimal || !r.value.is_zero()) return std::nullopt;
    r.point.pop_back();
    return r.point;
}

LpResult maximize(const System& system, const Vec& objective, const Options& options) {
    if (objective.size() != system.dim) throw std::invalid_argument("lp: objective dimension mismatch");
    Vec start;
    if (options.start) {
        if (options.start->size() != system.dim) throw std::invalid_argument("lp: start point dimension mismatch");
        if (!system.satisfied_by(*options.start)) throw std::logic_error("lp: start point is not feasible");
        start = *options.start;
    } else {
        auto feasible = find_feasible_point(system, options.budget);
        if (!feasible) return LpResult{};
        start = std::move(*feasible);
    }
    return ActiveSet(system, objective, std::move(start), options.budget).run();
}

}  // namespace lp

LpResult lp_optimize(const Vec& objective, const HRep& h, Sense sense) {
    if (objective.size() != h.dim()) throw std::invalid_argument("lp_optimize: objective dimension mismatch");
    const lp::System system = lp::System::from(h);
    if (sense == Sense::maximize) return lp::maximize(system, objective);
    Vec negated(objective.size());
    for (std::size_t i = 0; i < objective.size(); ++i) negated[i] = -objective[i];
    LpResult r = lp::maximize(system, negated);
    if (r.status == LpStatus::optimal) r.value = -r.value;
    return r;
}

}  // namespace lprev
