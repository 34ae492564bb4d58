#include "vecpack/setsys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace vecpack {

ElementSet make_set(std::vector<Element> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return elements;
}

bool is_subset(const ElementSet& a, const ElementSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::size_t intersection_size(const ElementSet& a, const ElementSet& b) {
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

SetSystem::SetSystem(int universe_size, std::vector<ElementSet> sets)
    : n_(universe_size), sets_(std::move(sets)) {
    if (n_ < 0) throw std::invalid_argument("negative universe size");
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        auto& s = sets_[i];
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw std::invalid_argument("set " + std::to_string(i) + " repeats an element");
        }
        for (Element e : s) {
            if (e < 0 || e >= n_) {
                throw std::invalid_argument("set " + std::to_string(i) + " has element " +
                                            std::to_string(e) + " outside universe of size " +
                                            std::to_string(n_));
            }
        }
    }
    std::sort(sets_.begin(), sets_.end());
    if (std::adjacent_find(sets_.begin(), sets_.end()) != sets_.end()) {
        throw std::invalid_argument("duplicate set in family");
    }
}

SetSystemStats analyze(const SetSystem& s) {
    SetSystemStats st;
    std::vector<int> degree(static_cast<std::size_t>(s.universe_size()), 0);
    const auto& sets = s.sets();
    for (const auto& a : sets) {
        st.k = std::max(st.k, static_cast<int>(a.size()));
        for (Element e : a) ++degree[e];
    }
    for (std::size_t i = 0; i < sets.size() && st.simple; ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (intersection_size(sets[i], sets[j]) > 1) {
                st.simple = false;
                break;
            }
        }
    }
    st.delta = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
    st.nontrivial = std::all_of(degree.begin(), degree.end(), [](int d) { return d > 0; });

    // Downward closed iff each member's one-smaller subsets are members too.
    const std::set<ElementSet> members(sets.begin(), sets.end());
    st.downward_closed = !sets.empty();
    for (const auto& a : sets) {
        for (std::size_t drop = 0; drop < a.size() && st.downward_closed; ++drop) {
            ElementSet sub;
            for (std::size_t t = 0; t < a.size(); ++t) {
                if (t != drop) sub.push_back(a[t]);
            }
            if (!members.count(sub)) st.downward_closed = false;
        }
    }
    return st;
}

bool in_downward_closure(const SetSystem& s, const ElementSet& t,
                         const std::optional<ElementSet>& excluded_core,
                         std::optional<int> size_cap) {
    for (Element e : t) {
        if (e < 0 || e >= s.universe_size()) {
            throw std::invalid_argument("element " + std::to_string(e) + " outside universe");
        }
    }
    for (const auto& a : s.sets()) {
        if (is_subset(t, a)) return true;
    }
    if (excluded_core && size_cap) {
        return intersection_size(t, *excluded_core) == 0 &&
               static_cast<int>(t.size()) <= *size_cap;
    }
    return false;
}

bool is_sunflower_bouquet(const SetSystem& s, const ElementSet& u) {
    if (u.empty()) throw std::invalid_argument("sunflower-bouquet core must be nonempty");
    const auto& sets = s.sets();
    for (const auto& a : sets) {
        if (intersection_size(a, u) != 1) return false;
    }
    for (Element c : u) {
        const bool covered = std::any_of(sets.begin(), sets.end(), [&](const ElementSet& a) {
            return std::binary_search(a.begin(), a.end(), c);
        });
        if (!covered) return false;
    }
    // Intersecting sets meet exactly in their (shared) core element.
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            ElementSet common;
            std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                                  std::back_inserter(common));
            if (common.empty()) continue;
            ElementSet ci, cj;
            std::set_intersection(sets[i].begin(), sets[i].end(), u.begin(), u.end(),
                                  std::back_inserter(ci));
            std::set_intersection(sets[j].begin(), sets[j].end(), u.begin(), u.end(),
                                  std::back_inserter(cj));
            if (ci != common || cj != common) return false;
        }
    }
    return true;
}

std::vector<std::vector<Element>> conflict_graph(const SetSystem& s) {
    const auto n = static_cast<std::size_t>(s.universe_size());
    std::vector<std::set<Element>> adj(n);
    const auto& sets = s.sets();
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i; j < sets.size(); ++j) {
            if (i != j && intersection_size(sets[i], sets[j]) == 0) continue;
            for (Element a : sets[i]) {
                for (Element b : sets[j]) {
                    if (a == b) continue;
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
            }
        }
    }
    std::vector<std::vector<Element>> out(n);
    for (std::size_t v = 0; v < n; ++v) out[v].assign(adj[v].begin(), adj[v].end());
    return out;
}

BouquetDecomposition decompose(const SetSystem& s) {
    const auto st = analyze(s);
    if (!st.simple) throw std::invalid_argument("decompose: set system is not simple");
    if (!st.nontrivial) throw std::invalid_argument("decompose: some element lies in no set");
    if (st.k < 2) throw std::invalid_argument("decompose: largest set must have at least 2 elements");

    const auto adj = conflict_graph(s);
    const auto n = adj.size();
    std::vector<int> color(n, -1);
    BouquetDecomposition out;
    for (std::size_t v = 0; v < n; ++v) {
        out.conflict_max_degree = std::max(out.conflict_max_degree, static_cast<int>(adj[v].size()));
        std::vector<bool> taken(adj[v].size() + 1, false);
        for (Element w : adj[v]) {
            const int c = color[w];
            if (c >= 0 && c < static_cast<int>(taken.size())) taken[c] = true;
        }
        int c = 0;
        while (taken[c]) ++c;
        color[v] = c;
        out.colors_used = std::max(out.colors_used, c + 1);
    }

    for (int c = 0; c < out.colors_used; ++c) {
        ElementSet core;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] == c) core.push_back(static_cast<Element>(v));
        }
        std::vector<ElementSet> touching;
        for (const auto& a : s.sets()) {
            if (intersection_size(a, core) > 0) touching.push_back(a);
        }
        BouquetPart part{core, SetSystem(s.universe_size(), std::move(touching))};
        if (!is_sunflower_bouquet(part.family, part.core)) {
            throw std::logic_error("decompose: color class " + std::to_string(c) +
                                   " is not a sunflower-bouquet");
        }
        out.parts.push_back(std::move(part));
    }

    const long bound = static_cast<long>(st.k) * (st.k - 1) * st.delta * st.delta + 1;
    if (out.colors_used > bound) {
        throw std::logic_error("decompose: greedy coloring exceeded k(k-1)Delta^2 + 1 colors");
    }
    return out;
}

}  // namespace vecpack
