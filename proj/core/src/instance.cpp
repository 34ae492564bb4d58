#include "vecpack/instance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vecpack {

std::string_view to_string(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::VBP: return "VBP";
        case ProblemKind::VS: return "VS";
        case ProblemKind::VBC: return "VBC";
    }
    return "?";
}

ProblemKind problem_kind_from_string(std::string_view name) {
    if (name == "VBP") return ProblemKind::VBP;
    if (name == "VS") return ProblemKind::VS;
    if (name == "VBC") return ProblemKind::VBC;
    throw std::invalid_argument("unknown problem kind \"" + std::string(name) + "\"");
}

PackingInstance::PackingInstance(ProblemKind kind, std::size_t dim, std::vector<VectorJob> jobs,
                                 std::optional<int> machines)
    : kind_(kind), dim_(dim), jobs_(std::move(jobs)), machines_(machines) {
    if (dim_ < 1) throw std::invalid_argument("dimension must be at least 1");
    if ((kind_ == ProblemKind::VS) != machines_.has_value()) {
        throw std::invalid_argument("machines must be given exactly for VS instances");
    }
    if (machines_ && *machines_ < 1) throw std::invalid_argument("machines must be positive");
    const Rational zero(0), one(1);
    for (std::size_t i = 0; i < jobs_.size(); ++i) {
        if (jobs_[i].dim() != dim_) {
            throw std::invalid_argument("job " + std::to_string(i) + " has dimension " +
                                        std::to_string(jobs_[i].dim()) + ", expected " +
                                        std::to_string(dim_));
        }
        for (std::size_t c = 0; c < dim_; ++c) {
            const auto& v = jobs_[i].coords[c];
            if (v < zero || v > one) {
                throw std::invalid_argument("job " + std::to_string(i) + " coordinate " +
                                            std::to_string(c) + " = " + v.str() +
                                            " outside [0,1]");
            }
        }
    }
}

bool PackingInstance::is_zero_one() const {
    const Rational zero(0), one(1);
    return std::all_of(jobs_.begin(), jobs_.end(), [&](const VectorJob& j) {
        return std::all_of(j.coords.begin(), j.coords.end(),
                           [&](const Rational& v) { return v == zero || v == one; });
    });
}

ObjectiveValue ObjectiveValue::of(const Rational& v) {
    return ObjectiveValue{v, 1, v, v.to_double()};
}

ObjectiveValue ObjectiveValue::root_of(const Rational& radicand, unsigned root) {
    ObjectiveValue out{radicand, root, exact_root(radicand, root), 0.0};
    out.approx = out.exact ? out.exact->to_double()
                           : std::pow(radicand.to_double(), 1.0 / static_cast<double>(root));
    return out;
}

ObjectiveReport evaluate(const PackingInstance& instance, const Assignment& assignment,
                         Norm norm) {
    const auto n = instance.size();
    const auto d = instance.dim();
    if (assignment.part_of.size() != n) {
        throw std::invalid_argument("assignment covers " + std::to_string(assignment.part_of.size()) +
                                    " jobs, instance has " + std::to_string(n));
    }
    if (assignment.part_count < 0) throw std::invalid_argument("negative part count");
    if (instance.kind() == ProblemKind::VS && assignment.part_count != *instance.machines()) {
        throw std::invalid_argument("VS assignment uses " + std::to_string(assignment.part_count) +
                                    " parts, instance has " +
                                    std::to_string(*instance.machines()) + " machines");
    }

    ObjectiveReport report;
    report.loads.assign(static_cast<std::size_t>(assignment.part_count),
                        std::vector<Rational>(d, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        const int p = assignment.part_of[i];
        if (p < 0 || p >= assignment.part_count) {
            throw std::invalid_argument("job " + std::to_string(i) + " assigned to part " +
                                        std::to_string(p) + " out of range");
        }
        for (std::size_t c = 0; c < d; ++c) report.loads[p][c] += instance.job(i).coords[c];
    }

    const Rational one(1);
    switch (instance.kind()) {
        case ProblemKind::VBP: {
            report.feasible = std::all_of(report.loads.begin(), report.loads.end(), [&](const auto& l) {
                return std::all_of(l.begin(), l.end(), [&](const Rational& v) { return v <= one; });
            });
            report.value = ObjectiveValue::of(Rational(assignment.part_count));
            break;
        }
        case ProblemKind::VS: {
            report.feasible = true;
            if (norm.is_infinity()) {
                Rational best(0);
                for (const auto& l : report.loads) {
                    for (const auto& v : l) best = std::max(best, v);
                }
                report.value = ObjectiveValue::of(best);
            } else {
                // max over coordinates of sum over machines of load^r; the
                // r-th root is monotone, so the argmax is exact on radicands.
                Rational best(0);
                for (std::size_t c = 0; c < d; ++c) {
                    Rational s(0);
                    for (const auto& l : report.loads) s += l[c].pow(norm.r);
                    best = std::max(best, s);
                }
                report.value = ObjectiveValue::root_of(best, norm.r);
            }
            break;
        }
        case ProblemKind::VBC: {
            int covered = 0;
            for (const auto& l : report.loads) {
                if (std::all_of(l.begin(), l.end(), [&](const Rational& v) { return v >= one; })) {
                    ++covered;
                }
            }
            report.value = ObjectiveValue::of(Rational(covered));
            report.feasible = covered == assignment.part_count;
            break;
        }
    }
    return report;
}

}  // namespace vecpack
