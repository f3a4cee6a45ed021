// Copyright 2026 The fairprice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <stdexcept>

#include "fairprice/core_lp.hpp"
#include "fairprice/errors.hpp"

namespace fairprice {

std::size_t LinearSystem::add_variable(std::string name) {
    variables_.push_back(std::move(name));
    return variables_.size() - 1;
}

void LinearSystem::add_constraint(LinearConstraint constraint) {
    for (const auto &t : constraint.terms) {
        if (t.variable >= variables_.size()) {
            throw ValidationError("constraint '" + constraint.label + "' references undeclared variable " +
                                  std::to_string(t.variable));
        }
    }
    constraints_.push_back(std::move(constraint));
}

std::optional<std::size_t> LinearSystem::first_violation(const std::vector<Rational> &point) const {
    if (point.size() != variables_.size()) {
        throw ValidationError("point dimension does not match the system");
    }
    for (std::size_t j = 0; j < constraints_.size(); ++j) {
        const auto &c = constraints_[j];
        Rational lhs = 0;
        for (const auto &t : c.terms) {
            lhs += t.coefficient * point[t.variable];
        }
        const bool ok = c.relation == Relation::equal           ? lhs == c.rhs
                        : c.relation == Relation::greater_equal ? lhs >= c.rhs
                                                                : lhs <= c.rhs;
        if (!ok) {
            return j;
        }
    }
    return std::nullopt;
}

bool LinearSystem::satisfied_by(const std::vector<Rational> &point) const {
    return !first_violation(point).has_value();
}

namespace {

/// One column of the Farkas system: (a, b) in ">=" orientation, sparse in a.
struct FarkasColumn {
    std::size_t constraint;
    int sign;  // +1 or -1 relative to the ">=" orientation of the constraint
};

int orientation(Relation r) {
    return r == Relation::less_equal ? -1 : 1;
}

class Phase1 {
   public:
    explicit Phase1(const LinearSystem &system) : system_(system), rows_(system.variables().size() + 1) {
        for (std::size_t j = 0; j < system.constraints().size(); ++j) {
            const auto rel = system.constraints()[j].relation;
            columns_.push_back({j, orientation(rel)});
            if (rel == Relation::equal) {
                columns_.push_back({j, -1});
            }
        }
        inverse_.assign(rows_, std::vector<Rational>(rows_, Rational(0)));
        for (std::size_t i = 0; i < rows_; ++i) {
            inverse_[i][i] = 1;
            basis_.push_back(columns_.size() + i);
        }
        values_.assign(rows_, Rational(0));
        values_[rows_ - 1] = 1;
    }

    FeasibilityResult run() {
        FeasibilityResult out;
        for (;;) {
            const auto pi = duals();
            const auto entering = choose_entering(pi);
            if (!entering) {
                return finish(pi, out.pivots);
            }
            pivot(*entering);
            ++out.pivots;
        }
    }

   private:
    bool is_artificial(std::size_t col) const { return col >= columns_.size(); }

    /// Dense column of the Farkas system.
    std::vector<Rational> column(std::size_t col) const {
        std::vector<Rational> out(rows_, Rational(0));
        if (is_artificial(col)) {
            out[col - columns_.size()] = 1;
            return out;
        }
        const auto &fc = columns_[col];
        const auto &c = system_.constraints()[fc.constraint];
        for (const auto &t : c.terms) {
            out[t.variable] += fc.sign * t.coefficient;
        }
        out[rows_ - 1] = fc.sign * c.rhs;
        return out;
    }

    /// pi = c_B^T B^{-1}; artificials cost 1, structural columns 0.
    std::vector<Rational> duals() const {
        std::vector<Rational> pi(rows_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (!is_artificial(basis_[i])) {
                continue;
            }
            for (std::size_t k = 0; k < rows_; ++k) {
                if (inverse_[i][k] != 0) {
                    pi[k] += inverse_[i][k];
                }
            }
        }
        return pi;
    }

    Rational price(const std::vector<Rational> &pi, std::size_t col) const {
        if (is_artificial(col)) {
            return 1 - pi[col - columns_.size()];
        }
        const auto &fc = columns_[col];
        const auto &c = system_.constraints()[fc.constraint];
        Rational dot = pi[rows_ - 1] * c.rhs;
        for (const auto &t : c.terms) {
            dot += pi[t.variable] * t.coefficient;
        }
        return fc.sign > 0 ? Rational(-dot) : dot;
    }

    /// Bland's rule: the lowest-index column with negative reduced cost.
    std::optional<std::size_t> choose_entering(const std::vector<Rational> &pi) const {
        const std::size_t total = columns_.size() + rows_;
        for (std::size_t col = 0; col < total; ++col) {
            if (price(pi, col) < 0) {
                return col;
            }
        }
        return std::nullopt;
    }

    void pivot(std::size_t entering) {
        const auto a = column(entering);
        std::vector<Rational> u(rows_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < rows_; ++k) {
                if (inverse_[i][k] != 0 && a[k] != 0) {
                    u[i] += inverse_[i][k] * a[k];
                }
            }
        }
        std::optional<std::size_t> leave;
        Rational best_ratio;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (u[i] <= 0) {
                continue;
            }
            Rational ratio = values_[i] / u[i];
            if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (!leave) {
            // Phase 1 is bounded below by zero, so an improving ray cannot exist.
            throw std::logic_error("phase-1 simplex reported an unbounded direction");
        }
        const std::size_t r = *leave;
        const Rational pivot_value = u[r];
        for (std::size_t k = 0; k < rows_; ++k) {
            inverse_[r][k] /= pivot_value;
        }
        values_[r] /= pivot_value;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || u[i] == 0) {
                continue;
            }
            const Rational factor = u[i];
            for (std::size_t k = 0; k < rows_; ++k) {
                if (inverse_[r][k] != 0) {
                    inverse_[i][k] -= factor * inverse_[r][k];
                }
            }
            values_[i] -= factor * values_[r];
        }
        basis_[r] = entering;
    }

    FeasibilityResult finish(const std::vector<Rational> &pi, std::size_t pivots) const {
        FeasibilityResult out;
        out.pivots = pivots;
        Rational objective = 0;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (is_artificial(basis_[i])) {
                objective += values_[i];
            }
        }
        const std::size_t n = rows_ - 1;
        if (objective == 0) {
            out.feasible = false;
            out.farkas.assign(system_.constraints().size(), Rational(0));
            for (std::size_t i = 0; i < rows_; ++i) {
                if (is_artificial(basis_[i]) || values_[i] == 0) {
                    continue;
                }
                const auto &fc = columns_[basis_[i]];
                const int base = orientation(system_.constraints()[fc.constraint].relation);
                out.farkas[fc.constraint] += fc.sign == base ? values_[i] : Rational(-values_[i]);
            }
            return out;
        }
        out.feasible = true;
        const Rational &scale = pi[n];
        out.point.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            out.point[k] = -pi[k] / scale;
        }
        return out;
    }

    const LinearSystem &system_;
    std::size_t rows_;
    std::vector<FarkasColumn> columns_;
    std::vector<std::vector<Rational>> inverse_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> values_;
};

}  // namespace

FeasibilityResult lp_feasible(const LinearSystem &system) {
    return Phase1(system).run();
}

bool verify_infeasibility_certificate(const LinearSystem &system, const std::vector<Rational> &farkas) {
    const auto &constraints = system.constraints();
    if (farkas.size() != constraints.size()) {
        return false;
    }
    std::vector<Rational> combined(system.variables().size(), Rational(0));
    Rational rhs = 0;
    for (std::size_t j = 0; j < constraints.size(); ++j) {
        const auto &c = constraints[j];
        const Rational &lambda = farkas[j];
        if (c.relation != Relation::equal && lambda < 0) {
            return false;
        }
        if (lambda == 0) {
            continue;
        }
        const int sign = orientation(c.relation);
        for (const auto &t : c.terms) {
            combined[t.variable] += sign * lambda * t.coefficient;
        }
        rhs += sign * lambda * c.rhs;
    }
    for (const auto &v : combined) {
        if (v != 0) {
            return false;
        }
    }
    return rhs > 0;
}

}  // namespace fairprice
