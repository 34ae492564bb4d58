#include "vecpack/solve.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "scaled.hpp"
#include "vecpack/errors.hpp"

namespace vecpack::solve {

namespace {

using Mask = std::uint32_t;

std::vector<std::vector<Rational>> coords_of(const PackingInstance& inst) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(inst.size());
    for (const auto& j : inst.jobs()) rows.push_back(j.coords);
    return rows;
}

void require_kind(const PackingInstance& inst, ProblemKind kind, const char* who) {
    if (inst.kind() != kind) {
        throw std::invalid_argument(std::string(who) + ": instance kind is " + std::string(to_string(inst.kind())));
    }
}

void require_jobs(const PackingInstance& inst, int cap, const char* who) {
    if (static_cast<long>(inst.size()) > cap) {
        throw CapExceeded(std::string(who) + ": " + std::to_string(inst.size()) + " jobs exceeds cap " +
                          std::to_string(cap));
    }
}

// Bit i of the result is set when subset mask i has an acceptable sum.
// `accept` sees the running sum of the subset; `monotone` means acceptance
// is closed under taking subsets, which lets the sweep stop early.
template <class Int, class Accept>
std::vector<bool> subset_table(const detail::ScaledMatrix<Int>& m, Accept accept, bool monotone) {
    const std::size_t n = m.rows;
    const std::size_t d = m.cols;
    std::vector<bool> ok(std::size_t{1} << n, false);
    std::vector<Int> sum(d, Int(0));
    std::function<void(std::size_t, Mask)> rec = [&](std::size_t start, Mask mask) {
        for (std::size_t i = start; i < n; ++i) {
            const Int* row = m.row(i);
            for (std::size_t c = 0; c < d; ++c) sum[c] += row[c];
            const Mask next = mask | (Mask{1} << i);
            const bool good = accept(sum);
            ok[next] = good;
            if (good || !monotone) rec(i + 1, next);
            for (std::size_t c = 0; c < d; ++c) sum[c] -= row[c];
        }
    };
    ok[0] = accept(sum);
    rec(0, 0);
    return ok;
}

Assignment from_parts(const std::vector<Mask>& parts, std::size_t n) {
    Assignment a{std::vector<int>(n, 0), static_cast<int>(parts.size())};
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (std::size_t i = 0; i < n; ++i) {
            if (parts[p] >> i & 1) a.part_of[i] = static_cast<int>(p);
        }
    }
    return a;
}

SolveResult vbp_exact(const PackingInstance& inst, const SearchCaps& caps) {
    require_jobs(inst, std::min(caps.vbp_jobs, 30), "vbp");
    const std::size_t n = inst.size();
    SolveResult out;
    out.exhaustive = true;
    const auto feasible = detail::with_scaled(coords_of(inst), inst.dim(), n, [&](const auto& m) {
        using Int = std::decay_t<decltype(m.scale)>;
        return subset_table<Int>(
            m, [&](const std::vector<Int>& s) { return std::all_of(s.begin(), s.end(), [&](const Int& v) { return v <= m.scale; }); },
            true);
    });
    const Mask full = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
    std::vector<int> best(std::size_t{full} + 1, std::numeric_limits<int>::max());
    std::vector<Mask> choice(std::size_t{full} + 1, 0);
    best[0] = 0;
    for (Mask mask = 1; mask <= full && mask != 0; ++mask) {
        const Mask low = mask & (~mask + 1);
        const Mask rest = mask ^ low;
        // every bin containing the lowest job, as low | sub for sub of rest
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
            const Mask bin = sub | low;
            ++out.nodes;
            if (feasible[bin] && best[mask ^ bin] + 1 < best[mask]) {
                best[mask] = best[mask ^ bin] + 1;
                choice[mask] = bin;
            }
            if (sub == 0) break;
        }
        if (mask == full) break;
    }
    std::vector<Mask> parts;
    for (Mask m = full; m != 0; m ^= choice[m]) parts.push_back(choice[m]);
    std::sort(parts.begin(), parts.end(), [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
    out.witness = from_parts(parts, n);
    out.optimum = ObjectiveValue::of(Rational(static_cast<std::int64_t>(parts.size())));
    return out;
}

SolveResult vbp_first_fit(const PackingInstance& inst, bool decreasing) {
    const std::size_t n = inst.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (decreasing) {
        auto peak = [&](std::size_t i) { return *std::max_element(inst.job(i).coords.begin(), inst.job(i).coords.end()); };
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return peak(a) > peak(b); });
    }
    const Rational one(1);
    std::vector<std::vector<Rational>> loads;
    SolveResult out;
    out.witness.part_of.assign(n, 0);
    for (std::size_t i : order) {
        const auto& x = inst.job(i).coords;
        std::size_t p = 0;
        for (; p < loads.size(); ++p) {
            ++out.nodes;
            bool fits = true;
            for (std::size_t c = 0; c < x.size() && fits; ++c) fits = loads[p][c] + x[c] <= one;
            if (fits) break;
        }
        if (p == loads.size()) loads.emplace_back(inst.dim(), Rational(0));
        for (std::size_t c = 0; c < x.size(); ++c) loads[p][c] += x[c];
        out.witness.part_of[i] = static_cast<int>(p);
    }
    out.witness.part_count = static_cast<int>(loads.size());
    out.optimum = ObjectiveValue::of(Rational(static_cast<std::int64_t>(loads.size())));
    return out;
}

template <class Int>
Int ipow(const Int& x, unsigned r) {
    Int out(1);
    for (unsigned i = 0; i < r; ++i) out *= x;
    return out;
}

// Branch and bound for VS. With r = 0 the objective is the largest load;
// otherwise it is max_c sum_i load_ic^r, on scale^r.
template <class Int>
struct VsSearch {
    VsSearch(const detail::ScaledMatrix<Int>& matrix, int machine_count, unsigned norm_r, std::uint64_t cap)
        : m(matrix), machines(machine_count), r(norm_r), node_cap(cap), n(m.rows), d(m.cols),
          load(static_cast<std::size_t>(machines) * d, Int(0)), column(d, Int(0)), part(n, 0) {}

    const detail::ScaledMatrix<Int>& m;
    int machines;
    unsigned r;
    std::uint64_t node_cap;
    std::size_t n;
    std::size_t d;
    std::vector<Int> load;
    std::vector<Int> column;  // r > 0: sum_i load^r
    std::vector<int> part;
    std::vector<int> best_part;
    std::optional<Int> best;
    Int floor_value = Int(0);
    bool done = false;
    std::uint64_t nodes = 0;

    Int objective_after(int p, std::size_t j, Int current) {
        const Int* x = m.row(j);
        Int* l = load.data() + static_cast<std::size_t>(p) * d;
        if (r == 0) {
            for (std::size_t c = 0; c < d; ++c) {
                const Int v = l[c] + x[c];
                if (v > current) current = v;
            }
            return current;
        }
        Int top(0);
        for (std::size_t c = 0; c < d; ++c) {
            const Int v = column[c] - ipow(l[c], r) + ipow(Int(l[c] + x[c]), r);
            if (v > top) top = v;
        }
        return top;
    }

    void place(int p, std::size_t j, int sign) {
        const Int* x = m.row(j);
        Int* l = load.data() + static_cast<std::size_t>(p) * d;
        for (std::size_t c = 0; c < d; ++c) {
            if (r > 0) column[c] -= ipow(l[c], r);
            if (sign > 0) l[c] += x[c];
            else l[c] -= x[c];
            if (r > 0) column[c] += ipow(l[c], r);
        }
    }

    void run(std::size_t j, int used, const Int& current) {
        if (done) return;
        if (j == n) {
            best = current;
            best_part = part;
            if (current <= floor_value) done = true;
            return;
        }
        const int limit = std::min(machines - 1, used);
        for (int p = 0; p <= limit && !done; ++p) {
            if (++nodes > node_cap) {
                throw CapExceeded("vs: node budget " + std::to_string(node_cap) + " exhausted");
            }
            const Int next = objective_after(p, j, current);
            if (best && next >= *best) continue;
            part[j] = p;
            place(p, j, +1);
            run(j + 1, std::max(used, p + 1), next);
            place(p, j, -1);
        }
    }
};

// Admissible bound on the scaled axis: the average machine (by convexity
// for r > 0) and the largest single coordinate.
template <class Int>
Rational vs_floor(const detail::ScaledMatrix<Int>& m, int machines, unsigned r) {
    Rational out(0);
    for (std::size_t c = 0; c < m.cols; ++c) {
        Int total(0);
        for (std::size_t i = 0; i < m.rows; ++i) {
            const Int x = m.row(i)[c];
            total += x;
            out = std::max(out, detail::ratio(r == 0 ? x : ipow(x, r), Int(1)));
        }
        out = std::max(out, r == 0 ? detail::ratio(total, Int(machines))
                                   : detail::ratio(ipow(total, r), ipow(Int(machines), r - 1)));
    }
    return out;
}

SolveResult vs_exact(const PackingInstance& inst, Norm norm, const SearchCaps& caps) {
    require_jobs(inst, caps.vs_jobs, "vs");
    const int machines = *inst.machines();
    const unsigned r = norm.r;
    const auto rows = coords_of(inst);
    const mpz_class scale = detail::common_denominator(rows);
    mpz_class bound = scale * mpz_class(static_cast<unsigned long>(inst.size() + 1));
    if (r > 0) {
        mpz_pow_ui(bound.get_mpz_t(), bound.get_mpz_t(), r);
        bound *= static_cast<unsigned long>(machines) + 1;
    }
    SolveResult out;
    out.exhaustive = true;
    auto search = [&](auto tag) {
        using Int = decltype(tag);
        const auto m = detail::build_scaled<Int>(rows, inst.dim(), scale);
        VsSearch<Int> s(m, machines, r, caps.vs_nodes);
        // Scaled objectives are integers, so reaching ceil(floor) is optimal.
        const Rational fl = vs_floor(m, machines, r);
        mpz_class ceiling;
        mpz_cdiv_q(ceiling.get_mpz_t(), fl.numerator().get_mpz_t(), fl.denominator().get_mpz_t());
        s.floor_value = detail::to_int<Int>(ceiling);
        s.run(0, 0, Int(0));
        out.nodes = s.nodes;
        out.witness = Assignment{s.best_part, machines};
        const Int value = *s.best;
        if (r == 0) {
            out.optimum = ObjectiveValue::of(detail::ratio(value, m.scale));
        } else {
            out.optimum = ObjectiveValue::root_of(detail::ratio(value, ipow(m.scale, r)), r);
        }
    };
    if (detail::fits_int64(bound)) search(std::int64_t{});
    else search(mpz_class{});
    return out;
}

// max_c sum_i load_ic^r (r > 0) or the largest load (r = 0)
Rational radicand(const std::vector<std::vector<Rational>>& loads, Norm norm) {
    Rational out(0);
    if (loads.empty()) return out;
    for (std::size_t c = 0; c < loads.front().size(); ++c) {
        Rational col(0);
        for (const auto& l : loads) {
            if (norm.is_infinity()) out = std::max(out, l[c]);
            else col += l[c].pow(norm.r);
        }
        out = std::max(out, col);
    }
    return out;
}

SolveResult vs_list_greedy(const PackingInstance& inst, Norm norm) {
    const int machines = *inst.machines();
    SolveResult out;
    out.witness = Assignment{std::vector<int>(inst.size(), 0), machines};
    std::vector<std::vector<Rational>> loads(static_cast<std::size_t>(machines),
                                             std::vector<Rational>(inst.dim(), Rational(0)));
    for (std::size_t j = 0; j < inst.size(); ++j) {
        const auto& x = inst.job(j).coords;
        std::optional<Rational> best;
        int best_p = 0;
        for (int p = 0; p < machines; ++p) {
            ++out.nodes;
            for (std::size_t c = 0; c < x.size(); ++c) loads[p][c] += x[c];
            const Rational v = radicand(loads, norm);
            for (std::size_t c = 0; c < x.size(); ++c) loads[p][c] -= x[c];
            if (!best || v < *best) {
                best = v;
                best_p = p;
            }
        }
        for (std::size_t c = 0; c < x.size(); ++c) loads[best_p][c] += x[c];
        out.witness.part_of[j] = best_p;
    }
    out.optimum = evaluate(inst, out.witness, norm).value;
    return out;
}

SolveResult vbc_exact(const PackingInstance& inst, const SearchCaps& caps) {
    require_jobs(inst, std::min(caps.vbc_jobs, 30), "vbc");
    const std::size_t n = inst.size();
    SolveResult out;
    out.exhaustive = true;
    const auto covers = detail::with_scaled(coords_of(inst), inst.dim(), n, [&](const auto& m) {
        using Int = std::decay_t<decltype(m.scale)>;
        return subset_table<Int>(
            m, [&](const std::vector<Int>& s) { return std::all_of(s.begin(), s.end(), [&](const Int& v) { return v >= m.scale; }); },
            false);
    });
    const Mask full = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
    std::vector<int> best(std::size_t{full} + 1, 0);
    std::vector<Mask> choice(std::size_t{full} + 1, 0);  // 0: lowest job left over
    for (Mask mask = 1; mask <= full && mask != 0; ++mask) {
        const Mask low = mask & (~mask + 1);
        const Mask rest = mask ^ low;
        best[mask] = best[rest];
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
            const Mask part = sub | low;
            ++out.nodes;
            if (covers[part] && best[mask ^ part] + 1 > best[mask]) {
                best[mask] = best[mask ^ part] + 1;
                choice[mask] = part;
            }
            if (sub == 0) break;
        }
        if (mask == full) break;
    }
    std::vector<Mask> parts;
    Mask leftover = 0;
    for (Mask m = full; m != 0;) {
        if (choice[m] == 0) {
            const Mask low = m & (~m + 1);
            leftover |= low;
            m ^= low;
        } else {
            parts.push_back(choice[m]);
            m ^= choice[m];
        }
    }
    std::sort(parts.begin(), parts.end(), [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
    if (parts.empty() && n > 0) parts.push_back(0);
    if (!parts.empty()) parts.front() |= leftover;
    out.witness = from_parts(parts, n);
    out.optimum = ObjectiveValue::of(Rational(best[full]));
    return out;
}

SolveResult vbc_greedy(const PackingInstance& inst) {
    const Rational one(1);
    SolveResult out;
    const std::size_t n = inst.size();
    out.witness.part_of.assign(n, 0);
    std::vector<Rational> sum(inst.dim(), Rational(0));
    int closed = 0;
    std::vector<std::size_t> open;
    for (std::size_t j = 0; j < n; ++j) {
        ++out.nodes;
        for (std::size_t c = 0; c < inst.dim(); ++c) sum[c] += inst.job(j).coords[c];
        open.push_back(j);
        if (std::all_of(sum.begin(), sum.end(), [&](const Rational& v) { return v >= one; })) {
            for (std::size_t i : open) out.witness.part_of[i] = closed;
            ++closed;
            open.clear();
            std::fill(sum.begin(), sum.end(), Rational(0));
        }
    }
    // leftovers join the last covering part, or form a single part
    const int target = closed > 0 ? closed - 1 : 0;
    for (std::size_t i : open) out.witness.part_of[i] = target;
    out.witness.part_count = std::max(closed, n > 0 ? 1 : 0);
    out.optimum = ObjectiveValue::of(Rational(closed));
    return out;
}

}  // namespace

SolveResult vbp(const PackingInstance& instance, VbpMode mode, const SearchCaps& caps) {
    require_kind(instance, ProblemKind::VBP, "vbp");
    switch (mode) {
        case VbpMode::Exact: return vbp_exact(instance, caps);
        case VbpMode::FirstFit: return vbp_first_fit(instance, false);
        case VbpMode::FirstFitDecreasing: return vbp_first_fit(instance, true);
    }
    throw std::invalid_argument("vbp: unknown mode");
}

SolveResult vs(const PackingInstance& instance, VsMode mode, Norm norm, const SearchCaps& caps) {
    require_kind(instance, ProblemKind::VS, "vs");
    switch (mode) {
        case VsMode::Exact: return vs_exact(instance, norm, caps);
        case VsMode::ListGreedy: return vs_list_greedy(instance, norm);
    }
    throw std::invalid_argument("vs: unknown mode");
}

SolveResult vbc(const PackingInstance& instance, VbcMode mode, const SearchCaps& caps) {
    require_kind(instance, ProblemKind::VBC, "vbc");
    switch (mode) {
        case VbcMode::Exact: return vbc_exact(instance, caps);
        case VbcMode::Greedy: return vbc_greedy(instance);
    }
    throw std::invalid_argument("vbc: unknown mode");
}

SolveResult setcover(const SetSystem& s, CoverMode mode, const SearchCaps& caps) {
    const int n = s.universe_size();
    if (!analyze(s).nontrivial) throw std::invalid_argument("setcover: some element lies in no set");
    SolveResult out;
    if (mode == CoverMode::Greedy) {
        std::vector<bool> covered(static_cast<std::size_t>(n), false);
        int left = n;
        while (left > 0) {
            std::size_t pick = 0;
            int gain = -1;
            for (std::size_t i = 0; i < s.size(); ++i) {
                ++out.nodes;
                const int g = static_cast<int>(std::count_if(s.sets()[i].begin(), s.sets()[i].end(),
                                                             [&](Element e) { return !covered[e]; }));
                if (g > gain) {
                    gain = g;
                    pick = i;
                }
            }
            for (Element e : s.sets()[pick]) covered[e] = true;
            left -= gain;
            out.cover.push_back(static_cast<int>(pick));
        }
        std::sort(out.cover.begin(), out.cover.end());
        out.optimum = ObjectiveValue::of(Rational(static_cast<std::int64_t>(out.cover.size())));
        return out;
    }

    if (n > std::min(caps.setcover_universe, 30)) {
        throw CapExceeded("setcover: universe " + std::to_string(n) + " exceeds cap " +
                          std::to_string(caps.setcover_universe));
    }
    out.exhaustive = true;
    std::vector<Mask> masks;
    for (const auto& set : s.sets()) {
        Mask m = 0;
        for (Element e : set) m |= Mask{1} << e;
        masks.push_back(m);
    }
    const Mask full = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
    // BFS over covered masks; first arrival is shortest, and scanning sets in
    // index order makes the recovered cover deterministic.
    std::vector<int> via(std::size_t{full} + 1, -1);
    std::vector<Mask> from(std::size_t{full} + 1, 0);
    std::vector<bool> seen(std::size_t{full} + 1, false);
    std::vector<Mask> frontier{0};
    seen[0] = true;
    while (!seen[full]) {
        std::vector<Mask> next;
        for (Mask cur : frontier) {
            for (std::size_t i = 0; i < masks.size(); ++i) {
                ++out.nodes;
                const Mask m = cur | masks[i];
                if (seen[m]) continue;
                seen[m] = true;
                via[m] = static_cast<int>(i);
                from[m] = cur;
                next.push_back(m);
            }
        }
        frontier = std::move(next);
    }
    for (Mask m = full; m != 0; m = from[m]) out.cover.push_back(via[m]);
    std::sort(out.cover.begin(), out.cover.end());
    out.optimum = ObjectiveValue::of(Rational(static_cast<std::int64_t>(out.cover.size())));
    return out;
}

}  // namespace vecpack::solve
