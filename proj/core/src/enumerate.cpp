#include "ffdesign/enumerate.hpp"

#include "ffdesign/contrast.hpp"
#include "ffdesign/symmetry.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

namespace ffd {

namespace {

struct CellSystem {
    // Flattened marginal cells over all J with 1 <= |J| <= t.
    std::vector<long> target;                  // s / m_J per cell
    std::vector<std::vector<int>> cells_of_run; // flat cell ids hit by each run
    std::vector<std::vector<long>> remain;      // remain[p][cell]: runs with rank >= p hitting cell
};

CellSystem build_cells(const DesignSpace& space, long s, int t) {
    const int n = space.factor_count();
    const std::size_t m = space.run_count();
    CellSystem cs;
    cs.cells_of_run.assign(m, {});

    std::vector<int> J;
    std::function<void(int)> rec = [&](int start) {
        if (!J.empty() && static_cast<int>(J.size()) <= t) {
            long mJ = 1;
            for (int j : J) mJ *= space.levels_of(j);
            const std::size_t base = cs.target.size();
            for (long c = 0; c < mJ; ++c) cs.target.push_back(s / mJ);
            for (std::size_t k = 0; k < m; ++k) {
                const RunIndex& i = space.run_indices()[k];
                long cell = 0;
                for (int j : J) cell = cell * space.levels_of(j) + (i[j] - 1);
                cs.cells_of_run[k].push_back(static_cast<int>(base + cell));
            }
        }
        if (static_cast<int>(J.size()) == t) return;
        for (int j = start; j < n; ++j) {
            J.push_back(j);
            rec(j + 1);
            J.pop_back();
        }
    };
    rec(0);

    cs.remain.assign(m + 1, std::vector<long>(cs.target.size(), 0));
    for (std::size_t p = m; p-- > 0;) {
        cs.remain[p] = cs.remain[p + 1];
        for (int cell : cs.cells_of_run[p]) ++cs.remain[p][cell];
    }
    return cs;
}

struct SearchState {
    std::size_t pos = 0;
    long chosen = 0;
    std::vector<std::uint8_t> y;
    std::vector<long> counts;
};

class Searcher {
public:
    Searcher(const DesignSpace& space, long s, const CellSystem& cs)
        : m_(space.run_count()), s_(s), cs_(cs) {}

    void run(SearchState& st, std::vector<Fraction>& out) const { dfs(st, out); }

    SearchState initial() const {
        SearchState st;
        st.y.assign(m_, 0);
        st.counts.assign(cs_.target.size(), 0);
        return st;
    }

    // One expansion step; returns the feasible children of `st` in branch order
    // (run included first, then excluded).
    std::vector<SearchState> children(const SearchState& st) const {
        std::vector<SearchState> out;
        if (st.pos == m_) return out;
        if (can_include(st)) {
            out.push_back(st);
            include(out.back());
        }
        if (can_exclude(st)) {
            out.push_back(st);
            exclude(out.back());
        }
        return out;
    }

    bool complete(const SearchState& st) const { return st.pos == m_; }
    bool accept(const SearchState& st) const { return st.chosen == s_; }

private:
    bool can_include(const SearchState& st) const {
        if (st.chosen >= s_) return false;
        for (int cell : cs_.cells_of_run[st.pos])
            if (st.counts[cell] + 1 > cs_.target[cell]) return false;
        return true;
    }

    bool can_exclude(const SearchState& st) const {
        if (st.chosen + static_cast<long>(m_ - st.pos - 1) < s_) return false;
        for (int cell : cs_.cells_of_run[st.pos])
            if (st.counts[cell] + cs_.remain[st.pos + 1][cell] < cs_.target[cell]) return false;
        return true;
    }

    void include(SearchState& st) const {
        st.y[st.pos] = 1;
        ++st.chosen;
        for (int cell : cs_.cells_of_run[st.pos]) ++st.counts[cell];
        ++st.pos;
    }

    void exclude(SearchState& st) const { ++st.pos; }

    void dfs(SearchState& st, std::vector<Fraction>& out) const {
        if (st.pos == m_) {
            if (st.chosen == s_) out.push_back(Fraction{st.y});
            return;
        }
        if (can_include(st)) {
            const std::size_t pos = st.pos;
            include(st);
            dfs(st, out);
            // unwind
            --st.pos;
            st.y[pos] = 0;
            --st.chosen;
            for (int cell : cs_.cells_of_run[pos]) --st.counts[cell];
        }
        if (can_exclude(st)) {
            ++st.pos;
            dfs(st, out);
            --st.pos;
        }
    }

    std::size_t m_;
    long s_;
    const CellSystem& cs_;
};

} // namespace

EnumerationResult enumerate_orthogonal(const DesignSpace& space, long s, int t,
                                       const EnumerationOptions& options) {
    if (t < 1 || t > space.factor_count())
        throw std::invalid_argument("enumerate_orthogonal: t out of range");
    if (s < 0) throw std::invalid_argument("enumerate_orthogonal: negative size");

    EnumerationResult result;
    if (s > 0) {
        const auto sizes = compatible_sizes(space, t);
        if (std::find(sizes.begin(), sizes.end(), s) == sizes.end()) {
            result.size_compatible = false;
            return result;
        }
    }

    const CellSystem cs = build_cells(space, s, t);
    const Searcher searcher(space, s, cs);

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        SearchState st = searcher.initial();
        searcher.run(st, result.solutions);
    } else {
        // Expand a frontier wide enough to keep the workers busy, then search
        // each subtree independently; bucket order keeps the merge deterministic.
        std::vector<SearchState> frontier{searcher.initial()};
        while (static_cast<int>(frontier.size()) < 4 * jobs) {
            std::vector<SearchState> next;
            bool expanded = false;
            for (const auto& st : frontier) {
                if (searcher.complete(st)) {
                    next.push_back(st);
                    continue;
                }
                expanded = true;
                for (auto& child : searcher.children(st)) next.push_back(std::move(child));
            }
            frontier = std::move(next);
            if (!expanded) break;
        }
        std::vector<std::vector<Fraction>> buckets(frontier.size());
        std::atomic<std::size_t> cursor{0};
        auto worker = [&] {
            for (std::size_t i = cursor.fetch_add(1); i < frontier.size();
                 i = cursor.fetch_add(1)) {
                if (searcher.complete(frontier[i])) {
                    if (searcher.accept(frontier[i])) buckets[i].push_back(Fraction{frontier[i].y});
                } else {
                    searcher.run(frontier[i], buckets[i]);
                }
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (auto& b : buckets)
            result.solutions.insert(result.solutions.end(), b.begin(), b.end());
    }

    std::sort(result.solutions.begin(), result.solutions.end());

    if (options.canonical_only) {
        const auto group = symmetry_group(space);
        std::vector<Fraction> reps;
        for (auto& f : result.solutions)
            if (canonical_form(space, group, f) == f) reps.push_back(std::move(f));
        result.solutions = std::move(reps);
    }
    return result;
}

long count_orthogonal(const DesignSpace& space, long s, int t, const EnumerationOptions& options) {
    return static_cast<long>(enumerate_orthogonal(space, s, t, options).solutions.size());
}

} // namespace ffd
