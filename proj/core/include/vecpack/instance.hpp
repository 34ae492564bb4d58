#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "vecpack/rational.hpp"

namespace vecpack {

enum class ProblemKind { VBP, VS, VBC };

std::string_view to_string(ProblemKind kind);
ProblemKind problem_kind_from_string(std::string_view name);

/// One d-dimensional job; every coordinate lies in [0, 1].
struct VectorJob {
    std::vector<Rational> coords;

    std::size_t dim() const { return coords.size(); }
    friend bool operator==(const VectorJob&, const VectorJob&) = default;
};

/// A Vector Bin Packing, Vector Scheduling or Vector Bin Covering instance.
/// Construction validates every invariant, so a live object is always
/// well-formed.
class PackingInstance {
public:
    /// `machines` must be present iff kind == VS. Throws std::invalid_argument.
    PackingInstance(ProblemKind kind, std::size_t dim, std::vector<VectorJob> jobs,
                    std::optional<int> machines = std::nullopt);

    ProblemKind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    std::size_t size() const { return jobs_.size(); }
    const std::vector<VectorJob>& jobs() const { return jobs_; }
    const VectorJob& job(std::size_t i) const { return jobs_.at(i); }
    std::optional<int> machines() const { return machines_; }

    /// True iff every coordinate is 0 or 1.
    bool is_zero_one() const;

    friend bool operator==(const PackingInstance&, const PackingInstance&) = default;

private:
    ProblemKind kind_;
    std::size_t dim_;
    std::vector<VectorJob> jobs_;
    std::optional<int> machines_;
};

/// Job i goes to part part_of[i]; parts are numbered 0..part_count-1.
struct Assignment {
    std::vector<int> part_of;
    int part_count = 0;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Objective norm for Vector Scheduling: r = 0 encodes the l_inf makespan.
struct Norm {
    unsigned r = 0;

    static constexpr Norm infinity() { return Norm{0}; }
    static constexpr Norm l(unsigned r) { return Norm{r}; }
    bool is_infinity() const { return r == 0; }
    friend bool operator==(const Norm&, const Norm&) = default;
};

/// An objective value that may be an r-th root of a rational. For l_inf and
/// for the VBP / VBC counts, `root` is 1 and `radicand` is the value itself.
/// Comparisons between values of the same root are exact on the radicand.
struct ObjectiveValue {
    Rational radicand;
    unsigned root = 1;
    std::optional<Rational> exact;  // set when radicand^(1/root) is rational
    double approx = 0.0;

    static ObjectiveValue of(const Rational& v);
    static ObjectiveValue root_of(const Rational& radicand, unsigned root);
};

struct ObjectiveReport {
    /// loads[part][coordinate]
    std::vector<std::vector<Rational>> loads;
    ObjectiveValue value;
    bool feasible = false;
};

/// Evaluates an assignment under the instance's objective. Throws
/// std::invalid_argument on length mismatch, part index out of range, or
/// (VS) a part count different from the machine count.
ObjectiveReport evaluate(const PackingInstance& instance, const Assignment& assignment,
                         Norm norm = Norm::infinity());

}  // namespace vecpack
