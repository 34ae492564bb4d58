#include "vecpack/labelcover.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "vecpack/errors.hpp"

namespace vecpack {

LabelCover::LabelCover(int left, int right, int sigma_left, int sigma_right, std::vector<LcEdge> edges)
    : left_(left), right_(right), sigma_left_(sigma_left), sigma_right_(sigma_right) {
    if (left < 0 || right < 0) throw std::invalid_argument("label cover: negative side size");
    if (sigma_right < 1) throw std::invalid_argument("label cover: sigma_right must be positive");
    if (sigma_left < sigma_right) throw std::invalid_argument("label cover: sigma_left < sigma_right");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        const std::string at = "edge " + std::to_string(i) + ": ";
        if (e.u < 0 || e.u >= left) throw std::invalid_argument(at + "left endpoint out of range");
        if (e.v < 0 || e.v >= right) throw std::invalid_argument(at + "right endpoint out of range");
        if (static_cast<int>(e.pi.size()) != sigma_left) throw std::invalid_argument(at + "projection length differs from sigma_left");
        for (Label b : e.pi) {
            if (b < 0 || b >= sigma_right) throw std::invalid_argument(at + "projection value out of range");
        }
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
}

std::vector<std::vector<int>> LabelCover::right_incidence() const {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(right_));
    for (std::size_t i = 0; i < edges_.size(); ++i) inc[edges_[i].v].push_back(static_cast<int>(i));
    return inc;
}

std::vector<std::vector<int>> LabelCover::left_incidence() const {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(left_));
    for (std::size_t i = 0; i < edges_.size(); ++i) inc[edges_[i].u].push_back(static_cast<int>(i));
    return inc;
}

int LabelCover::max_right_degree() const {
    std::size_t best = 0;
    for (const auto& r : right_incidence()) best = std::max(best, r.size());
    return static_cast<int>(best);
}

Rational evaluate(const LabelCover& lc, const Labeling& labeling) {
    if (static_cast<int>(labeling.left.size()) != lc.left() || static_cast<int>(labeling.right.size()) != lc.right()) {
        throw std::invalid_argument("labeling shape differs from the instance");
    }
    for (Label a : labeling.left) {
        if (a < 0 || a >= lc.sigma_left()) throw std::invalid_argument("left label out of range");
    }
    for (Label b : labeling.right) {
        if (b < 0 || b >= lc.sigma_right()) throw std::invalid_argument("right label out of range");
    }
    if (lc.edges().empty()) return Rational(1);
    std::int64_t good = 0;
    for (const auto& e : lc.edges()) {
        if (e.pi[labeling.left[e.u]] == labeling.right[e.v]) ++good;
    }
    return Rational(good, static_cast<std::int64_t>(lc.edges().size()));
}

BestLabeling best_labeling(const LabelCover& lc, const SearchCaps& caps) {
    const auto per_round = static_cast<std::uint64_t>(lc.left()) * static_cast<std::uint64_t>(lc.sigma_left()) +
                           lc.edges().size() + 1;
    std::uint64_t work = per_round;
    for (int i = 0; i < lc.right(); ++i) {
        work *= static_cast<std::uint64_t>(lc.sigma_right());
        if (work > caps.labeling_work) {
            throw CapExceeded("best_labeling: work " + std::to_string(lc.sigma_right()) + "^" +
                              std::to_string(lc.right()) + " x " + std::to_string(per_round) +
                              " exceeds cap " + std::to_string(caps.labeling_work));
        }
    }

    const auto inc = lc.left_incidence();
    const auto total = static_cast<std::int64_t>(lc.edges().size());
    Labeling current{std::vector<Label>(static_cast<std::size_t>(lc.left()), 0),
                     std::vector<Label>(static_cast<std::size_t>(lc.right()), 0)};
    BestLabeling best{Rational(-1), current};
    std::int64_t best_good = -1;

    while (true) {
        std::int64_t good = 0;
        for (int u = 0; u < lc.left(); ++u) {
            int top = -1;
            for (Label a = 0; a < lc.sigma_left(); ++a) {
                int s = 0;
                for (int e : inc[u]) {
                    const auto& edge = lc.edges()[e];
                    if (edge.pi[a] == current.right[edge.v]) ++s;
                }
                if (s > top) {
                    top = s;
                    current.left[u] = a;
                }
            }
            good += top;
        }
        if (good > best_good) {
            best_good = good;
            best.witness = current;
            if (good == total) break;
        }
        int i = lc.right() - 1;
        while (i >= 0 && current.right[i] == lc.sigma_right() - 1) current.right[i--] = 0;
        if (i < 0) break;
        ++current.right[i];
    }
    best.value = total == 0 ? Rational(1) : Rational(best_good, total);
    return best;
}

bool satisfies(const Cnf& formula, const std::vector<bool>& assignment) {
    return std::all_of(formula.clauses.begin(), formula.clauses.end(), [&](const Clause& c) {
        return std::any_of(c.begin(), c.end(),
                           [&](const Literal& l) { return assignment.at(static_cast<std::size_t>(l.var)) != l.negated; });
    });
}

std::vector<int> satisfying_masks(const Clause& clause) {
    std::vector<int> out;
    for (int m = 0; m < 8; ++m) {
        for (int j = 0; j < 3; ++j) {
            if (((m >> j) & 1) != (clause[j].negated ? 0 : 1)) continue;
            out.push_back(m);
            break;
        }
    }
    return out;
}

LabelCover threesat_to_labelcover(const Cnf& formula) {
    std::vector<LcEdge> edges;
    for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
        const auto& clause = formula.clauses[c];
        const std::string at = "clause " + std::to_string(c) + ": ";
        if (clause.size() != 3) throw std::invalid_argument(at + "needs exactly 3 literals");
        for (int j = 0; j < 3; ++j) {
            if (clause[j].var < 0 || clause[j].var >= formula.variables) {
                throw std::invalid_argument(at + "variable out of range");
            }
        }
        if (clause[0].var == clause[1].var || clause[0].var == clause[2].var || clause[1].var == clause[2].var) {
            throw std::invalid_argument(at + "variables are not distinct");
        }
        const auto masks = satisfying_masks(clause);
        for (int j = 0; j < 3; ++j) {
            LcEdge e{static_cast<int>(c), clause[j].var, {}};
            for (int m : masks) e.pi.push_back((m >> j) & 1);
            edges.push_back(std::move(e));
        }
    }
    return LabelCover(static_cast<int>(formula.clauses.size()), formula.variables, 7, 2, std::move(edges));
}

}  // namespace vecpack
