#include "ffdesign/symmetry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ffd {

namespace {

void check_element(const DesignSpace& space, const GroupElement& g) {
    const int n = space.factor_count();
    if (static_cast<int>(g.factor_perm.size()) != n ||
        static_cast<int>(g.level_perms.size()) != n)
        throw std::invalid_argument("group element: wrong arity");
    for (int j = 0; j < n; ++j) {
        const int k = g.factor_perm[j];
        if (k < 0 || k >= n || space.levels_of(k) != space.levels_of(j))
            throw std::invalid_argument("group element: factor permutation must preserve level counts");
        if (static_cast<int>(g.level_perms[j].size()) != space.levels_of(j))
            throw std::invalid_argument("group element: level permutation has wrong size");
    }
}

std::vector<std::vector<int>> all_permutations(std::vector<int> base) {
    std::sort(base.begin(), base.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

} // namespace

GroupElement identity_element(const DesignSpace& space) {
    const int n = space.factor_count();
    GroupElement g;
    g.factor_perm.resize(n);
    g.level_perms.resize(n);
    for (int j = 0; j < n; ++j) {
        g.factor_perm[j] = j;
        g.level_perms[j].resize(space.levels_of(j));
        for (int v = 0; v < space.levels_of(j); ++v) g.level_perms[j][v] = v;
    }
    return g;
}

GroupElement compose(const DesignSpace& space, const GroupElement& g, const GroupElement& h) {
    check_element(space, g);
    check_element(space, h);
    const int n = space.factor_count();
    GroupElement out;
    out.factor_perm.resize(n);
    out.level_perms.resize(n);
    for (int j = 0; j < n; ++j) {
        const int mid = h.factor_perm[j];
        out.factor_perm[j] = g.factor_perm[mid];
        out.level_perms[j].resize(space.levels_of(j));
        for (int v = 0; v < space.levels_of(j); ++v)
            out.level_perms[j][v] = g.level_perms[mid][h.level_perms[j][v]];
    }
    return out;
}

GroupElement inverse_element(const DesignSpace& space, const GroupElement& g) {
    check_element(space, g);
    const int n = space.factor_count();
    GroupElement inv;
    inv.factor_perm.resize(n);
    inv.level_perms.resize(n);
    for (int j = 0; j < n; ++j) {
        const int k = g.factor_perm[j];
        inv.factor_perm[k] = j;
        inv.level_perms[k].resize(space.levels_of(j));
        for (int v = 0; v < space.levels_of(j); ++v) inv.level_perms[k][g.level_perms[j][v]] = v;
    }
    return inv;
}

std::vector<GroupElement> symmetry_group(const DesignSpace& space) {
    const int n = space.factor_count();

    // Equal-level-count blocks, in order of first occurrence.
    std::vector<std::vector<int>> blocks;
    for (int j = 0; j < n; ++j) {
        bool found = false;
        for (auto& b : blocks)
            if (space.levels_of(b[0]) == space.levels_of(j)) {
                b.push_back(j);
                found = true;
                break;
            }
        if (!found) blocks.push_back({j});
    }

    // All factor permutations as full sigma vectors.
    std::vector<std::vector<int>> sigmas{std::vector<int>(n)};
    for (int j = 0; j < n; ++j) sigmas[0][j] = j;
    for (const auto& block : blocks) {
        const auto images = all_permutations(block);
        std::vector<std::vector<int>> next;
        next.reserve(sigmas.size() * images.size());
        for (const auto& sigma : sigmas)
            for (const auto& img : images) {
                auto s = sigma;
                for (std::size_t d = 0; d < block.size(); ++d) s[block[d]] = img[d];
                next.push_back(std::move(s));
            }
        sigmas = std::move(next);
    }

    // Per-factor level permutations.
    std::vector<std::vector<std::vector<int>>> level_options(n);
    for (int j = 0; j < n; ++j) {
        std::vector<int> base(space.levels_of(j));
        for (int v = 0; v < space.levels_of(j); ++v) base[v] = v;
        level_options[j] = all_permutations(base);
    }

    std::vector<GroupElement> group;
    for (const auto& sigma : sigmas) {
        std::vector<std::size_t> pick(n, 0);
        while (true) {
            GroupElement g;
            g.factor_perm = sigma;
            g.level_perms.resize(n);
            for (int j = 0; j < n; ++j) g.level_perms[j] = level_options[j][pick[j]];
            group.push_back(std::move(g));
            int pos = n - 1;
            while (pos >= 0 && ++pick[pos] == level_options[pos].size()) pick[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return group;
}

RunIndex apply_to_index(const DesignSpace& space, const GroupElement& g, const RunIndex& i) {
    const int n = space.factor_count();
    RunIndex out(n);
    for (int j = 0; j < n; ++j) out[g.factor_perm[j]] = g.level_perms[j][i[j] - 1] + 1;
    return out;
}

Fraction apply(const DesignSpace& space, const GroupElement& g, const Fraction& f) {
    check_element(space, g);
    Fraction out = empty_fraction(space);
    for (std::size_t k = 0; k < space.run_count(); ++k)
        out.y[space.run_rank(apply_to_index(space, g, space.run_indices()[k]))] = f.y[k];
    return out;
}

ExactMatrix permutation_matrix(const DesignSpace& space, const GroupElement& g) {
    check_element(space, g);
    const std::size_t m = space.run_count();
    ExactMatrix p(m, m);
    for (std::size_t k = 0; k < m; ++k)
        p.at(space.run_rank(apply_to_index(space, g, space.run_indices()[k])), k) = 1;
    return p;
}

std::vector<Rational> theta_transform(const DesignSpace& space, const GroupElement& g,
                                      const std::vector<Rational>& theta) {
    const ExactMatrix x = space.model_matrix();
    return solve_exact(x, permutation_matrix(space, g).apply(x.apply(theta)));
}

std::vector<Rational> mu_transform(const DesignSpace& space, const ContrastMatrix& cm,
                                   const GroupElement& g, const std::vector<Rational>& mu) {
    return cm.C.apply(permutation_matrix(space, g).apply(solve_exact(cm.C, mu)));
}

Fraction complement(const Fraction& f) {
    Fraction out = f;
    for (auto& v : out.y) v = v ? 0 : 1;
    return out;
}

Fraction canonical_form(const DesignSpace& space, const std::vector<GroupElement>& group,
                        const Fraction& f) {
    Fraction best = f;
    for (const auto& g : group) {
        Fraction cand = apply(space, g, f);
        if (cand.y < best.y) best = std::move(cand);
    }
    return best;
}

std::vector<Orbit> classify(const DesignSpace& space, const std::vector<Fraction>& fractions) {
    {
        auto sorted = fractions;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("classify: duplicate input fractions");
    }
    const auto group = symmetry_group(space);
    std::map<Fraction, std::vector<Fraction>> buckets;
    for (const auto& f : fractions) buckets[canonical_form(space, group, f)].push_back(f);

    std::vector<Orbit> orbits;
    orbits.reserve(buckets.size());
    for (auto& [rep, members] : buckets) {
        std::sort(members.begin(), members.end());
        orbits.push_back(Orbit{rep, std::move(members)});
    }
    std::sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.representative.y < b.representative.y;
    });
    return orbits;
}

} // namespace ffd
