#include "vecpack/embed.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "scaled.hpp"

namespace vecpack {

Embedding::Embedding(std::size_t dim, std::vector<std::vector<Rational>> rows)
    : dim_(dim), rows_(std::move(rows)) {
    const Rational zero(0), one(1);
    for (std::size_t e = 0; e < rows_.size(); ++e) {
        if (rows_[e].size() != dim_) {
            throw std::invalid_argument("embedding row " + std::to_string(e) + " has length " +
                                        std::to_string(rows_[e].size()) + ", expected " +
                                        std::to_string(dim_));
        }
        for (const auto& v : rows_[e]) {
            if (v < zero || v > one) {
                throw std::invalid_argument("embedding value " + v.str() + " of element " +
                                            std::to_string(e) + " outside [0,1]");
            }
        }
    }
}

Rational Embedding::norm(const ElementSet& t) const {
    Rational best(0);
    for (std::size_t c = 0; c < dim_; ++c) {
        Rational s(0);
        for (Element e : t) s += rows_.at(static_cast<std::size_t>(e))[c];
        best = std::max(best, s);
    }
    return best;
}

std::size_t bouquet_embedding_dim(int k, int delta) {
    const auto kd = static_cast<std::size_t>(k) * static_cast<std::size_t>(delta);
    return 2 + 2 * kd + kd * kd;
}

Embedding bouquet_embedding(const SetSystem& s, const ElementSet& u, int k, int delta) {
    if (k < 2) throw std::invalid_argument("bouquet_embedding: k must be at least 2");
    if (delta < 1) throw std::invalid_argument("bouquet_embedding: delta must be positive");
    if (!is_sunflower_bouquet(s, u)) {
        throw std::invalid_argument("bouquet_embedding: family is not a sunflower-bouquet with this core");
    }
    const auto st = analyze(s);
    if (st.k > k) throw std::invalid_argument("bouquet_embedding: a set has more than k elements");
    if (st.delta > delta) {
        throw std::invalid_argument("bouquet_embedding: an element lies in more than delta sets");
    }

    const auto n = static_cast<std::size_t>(s.universe_size());
    const std::size_t kd = static_cast<std::size_t>(k) * static_cast<std::size_t>(delta);
    const std::size_t dim = bouquet_embedding_dim(k, delta);
    const std::size_t g_base = 2;
    const std::size_t gp_base = 2 + 2 * kd;
    const std::size_t m = u.size();

    // petals[i]: elements sharing a set with core element u[i] (V_i); the
    // remaining non-core elements form V_0.
    std::vector<ElementSet> petals(m);
    std::vector<int> core_index(n, -1);
    for (std::size_t i = 0; i < m; ++i) core_index[u[i]] = static_cast<int>(i);
    for (const auto& a : s.sets()) {
        const auto it = std::find_if(a.begin(), a.end(), [&](Element e) { return core_index[e] >= 0; });
        const auto i = static_cast<std::size_t>(core_index[*it]);
        for (Element e : a) {
            if (e != *it) petals[i].push_back(e);
        }
    }
    for (auto& p : petals) p = make_set(std::move(p));
    std::vector<bool> in_petal(n, false);
    for (const auto& p : petals) {
        if (p.size() > kd) throw std::logic_error("bouquet_embedding: petal larger than k*delta");
        for (Element e : p) in_petal[e] = true;
    }

    const Rational one(1);
    const Rational inv_k(1, k);
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(dim, Rational(0)));

    // f0: (1, 1/k) on the core, (1/k, 1/k) on V_0, (0, 1/k) on petals.
    for (std::size_t v = 0; v < n; ++v) {
        rows[v][1] = inv_k;
        if (core_index[v] >= 0) {
            rows[v][0] = one;
        } else if (!in_petal[v]) {
            rows[v][0] = inv_k;
        }
    }

    // g: kd two-dimensional blocks separating different sunflowers.
    // alpha_i = 1 - 1/k + i/(k(m+1)), i = 1..m: distinct, inside (1 - 1/k, 1).
    for (std::size_t i = 0; i < m; ++i) {
        const Rational alpha = one - inv_k + Rational(static_cast<std::int64_t>(i + 1),
                                                      static_cast<std::int64_t>(k) *
                                                          static_cast<std::int64_t>(m + 1));
        const Rational core_lo = alpha;
        const Rational core_hi = Rational(2) - inv_k - alpha;
        const Rational petal_lo = one - alpha;
        const Rational petal_hi = alpha + inv_k - one;
        const auto& p = petals[i];
        for (std::size_t l = 0; l < kd; ++l) {
            const std::size_t c = g_base + 2 * l;
            rows[u[i]][c] = core_lo;
            rows[u[i]][c + 1] = core_hi;
            if (p.empty()) continue;
            // Slot l names the l-th petal element, repeating the largest.
            const Element v = p[std::min(l, p.size() - 1)];
            rows[v][c] = petal_lo;
            rows[v][c + 1] = petal_hi;
        }
    }

    // g': one coordinate per pair of petal elements that may not join their
    // core element; it overflows exactly when both do.
    const Rational pinned = one - Rational(2, k) + Rational(1, static_cast<std::int64_t>(k) * k);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& p = petals[i];
        if (p.size() < 2) continue;
        std::vector<std::pair<Element, Element>> pairs;
        for (std::size_t a = 0; a < p.size(); ++a) {
            for (std::size_t b = a + 1; b < p.size(); ++b) pairs.emplace_back(p[a], p[b]);
        }
        if (pairs.size() > kd * kd) throw std::logic_error("bouquet_embedding: too many petal pairs");
        for (std::size_t l = 0; l < kd * kd; ++l) {
            const auto [x, y] = pairs[std::min(l, pairs.size() - 1)];
            if (in_downward_closure(s, make_set({u[i], x, y}))) continue;
            const std::size_t c = gp_base + l;
            rows[u[i]][c] = pinned;
            rows[x][c] = inv_k;
            rows[y][c] = inv_k;
        }
    }
    return Embedding(dim, std::move(rows));
}

Embedding concat(const Embedding& a, const Embedding& b) {
    if (a.elements() != b.elements()) {
        throw std::invalid_argument("concat: embeddings have different element domains");
    }
    std::vector<std::vector<Rational>> rows(a.elements());
    for (std::size_t e = 0; e < rows.size(); ++e) {
        rows[e].reserve(a.dim() + b.dim());
        rows[e].insert(rows[e].end(), a.rows()[e].begin(), a.rows()[e].end());
        rows[e].insert(rows[e].end(), b.rows()[e].begin(), b.rows()[e].end());
    }
    return Embedding(a.dim() + b.dim(), std::move(rows));
}

FullEmbedding full_embedding(const SetSystem& s) {
    if (s.size() == 0) throw std::invalid_argument("full_embedding: empty family");
    const auto st = analyze(s);
    FullEmbedding out{Embedding{}, decompose(s), st.k, st.delta};
    bool first = true;
    for (const auto& part : out.decomposition.parts) {
        auto e = bouquet_embedding(part.family, part.core, st.k, st.delta);
        out.embedding = first ? std::move(e) : concat(out.embedding, e);
        first = false;
    }
    return out;
}

namespace {

template <class Int>
void sweep_subsets(const detail::ScaledMatrix<Int>& m, int cap,
                   const std::function<void(const ElementSet&, const std::vector<Int>&)>& visit) {
    // Depth-first over increasing element sequences with running sums.
    const int n = static_cast<int>(m.rows);
    std::vector<std::vector<Int>> sums(static_cast<std::size_t>(cap) + 1,
                                       std::vector<Int>(m.cols, Int(0)));
    ElementSet current;
    std::function<void(int)> rec = [&](int start) {
        const std::size_t depth = current.size();
        visit(current, sums[depth]);
        if (static_cast<int>(depth) == cap) return;
        for (int e = start; e < n; ++e) {
            const Int* r = m.row(static_cast<std::size_t>(e));
            auto& next = sums[depth + 1];
            for (std::size_t c = 0; c < m.cols; ++c) next[c] = sums[depth][c] + r[c];
            current.push_back(e);
            rec(e + 1);
            current.pop_back();
        }
    };
    rec(0);
}

}  // namespace

VerificationReport verify_embedding(const SetSystem& s, const Embedding& f,
                                    const VerifyOptions& options) {
    if (f.elements() != static_cast<std::size_t>(s.universe_size())) {
        throw std::invalid_argument("verify_embedding: embedding domain differs from universe");
    }
    if (options.excluded_core.has_value() != options.core_size_cap.has_value()) {
        throw std::invalid_argument("verify_embedding: excluded_core and core_size_cap go together");
    }
    const int k = analyze(s).k;
    const int complete_cap = std::max(k, options.core_size_cap.value_or(0)) + 1;
    const int cap = options.size_cap.value_or(complete_cap);
    if (cap < complete_cap && !options.force) {
        throw std::invalid_argument("verify_embedding: size_cap " + std::to_string(cap) +
                                    " is below k+1 = " + std::to_string(complete_cap) +
                                    " (set force to check anyway)");
    }

    VerificationReport report;
    detail::with_scaled(f.rows(), f.dim(), static_cast<std::size_t>(std::max(cap, 1)), [&](const auto& m) {
        using Int = std::decay_t<decltype(m.scale)>;
        sweep_subsets<Int>(m, cap, [&](const ElementSet& t, const std::vector<Int>& sum) {
            ++report.sets_checked;
            Int peak(0);
            for (const auto& v : sum) {
                if (v > peak) peak = v;
            }
            const bool accepted = peak <= m.scale;
            const bool member = in_downward_closure(s, t, options.excluded_core, options.core_size_cap);
            if (accepted != member) {
                report.counterexamples.push_back({t, member, detail::ratio(peak, m.scale)});
            }
        });
    });
    std::sort(report.counterexamples.begin(), report.counterexamples.end(),
              [](const EmbeddingCounterexample& a, const EmbeddingCounterexample& b) {
                  if (a.set.size() != b.set.size()) return a.set.size() < b.set.size();
                  return a.set < b.set;
              });
    report.ok = report.counterexamples.empty();
    return report;
}

}  // namespace vecpack
