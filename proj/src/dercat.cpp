#include "iqg/dercat.hpp"

#include <algorithm>
#include <queue>

namespace iqg {

namespace {
bool vec_less(const IntVec& a, const IntVec& b) {
    for (int i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// +1 / -1 for a nonzero vector with all entries of one sign
int vec_sign(const IntVec& v) {
    bool pos = (v.array() >= 0).all() && v.sum() > 0;
    bool neg = (v.array() <= 0).all() && v.sum() < 0;
    if (pos) return 1;
    if (neg) return -1;
    throw Error("KNIT_FAILED", "mesh produced a mixed-sign vector");
}
}  // namespace

KnitTable::KnitTable(const IQuiver& q, int periods)
    : q_(q), h_(coxeter_number(q.type, q.rank)), root_idx_(vec_less) {
    roots_ = positive_roots(q_);
    for (int i = 0; i < (int)roots_.size(); ++i) root_idx_[roots_[i]] = i;

    // level function: arrow i->j forces level(i) = level(j)+1 so that the
    // projective slice P_i |-> (i, level(i)) is closed under irreducible maps
    level_.assign(q_.rank, 0);
    std::vector<std::vector<std::pair<int, int>>> nbr(q_.rank);  // (other, delta)
    for (auto& [a, b] : q_.arrows) {
        nbr[a].push_back({b, -1});  // level(a) = level(b) + 1
        nbr[b].push_back({a, +1});
    }
    std::vector<bool> seen(q_.rank, false);
    std::queue<int> bfs;
    seen[0] = true;
    bfs.push(0);
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        for (auto [y, d] : nbr[x]) {
            if (!seen[y]) {
                seen[y] = true;
                level_[y] = level_[x] + d;
                bfs.push(y);
            }
        }
    }
    int lmin = *std::min_element(level_.begin(), level_.end());
    for (auto& l : level_) l -= lmin;
    int lmax = *std::max_element(level_.begin(), level_.end());

    int half = periods / 2;
    pmin_ = -half * h_ - 2;
    pmax_ = half * h_ + lmax + 2;

    // topological order, sources first
    {
        std::vector<int> indeg(q_.rank, 0);
        for (auto& [a, b] : q_.arrows) indeg[b]++;
        std::queue<int> qq;
        for (int i = 0; i < q_.rank; ++i)
            if (indeg[i] == 0) qq.push(i);
        while (!qq.empty()) {
            int x = qq.front();
            qq.pop();
            topo_.push_back(x);
            for (auto& [a, b] : q_.arrows)
                if (a == x && --indeg[b] == 0) qq.push(b);
        }
        if ((int)topo_.size() != q_.rank) throw Error("CYCLIC_ORIENTATION", "orientation has a cycle");
    }

    knit();
}

void KnitTable::knit() {
    int n = q_.rank;
    int cells = (pmax_ - pmin_ + 1) * n;
    labels_.assign(cells, Label{-1, 0});

    // dim P_i = number of paths i -> j, per vertex j
    std::vector<IntVec> pdim(n, IntVec::Zero(n));
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
        int i = *it;
        pdim[i][i] = 1;
        for (auto& [a, b] : q_.arrows)
            if (a == i) pdim[i] += pdim[b];
    }
    std::vector<IntVec> idim(n, IntVec::Zero(n));  // dim I_i = paths j -> i
    for (int i : topo_) {
        idim[i][i] = 1;
        for (auto& [a, b] : q_.arrows)
            if (b == i) idim[i] += idim[a];
    }
    proj_.resize(n);
    inj_.resize(n);
    for (int i = 0; i < n; ++i) {
        proj_[i] = root_idx_.at(pdim[i]);
        inj_[i] = root_idx_.at(idim[i]);
    }

    // knit in K_0 with signs: the class of Sigma^s M is (-1)^s dim M, so the
    // mesh rule is purely additive; shifts are recovered by counting sign
    // flips along each tau-ray (monotone to the right)
    std::vector<IntVec> d(cells);
    std::vector<int> sh(cells, 0);
    std::vector<bool> have(cells, false);

    for (int i = 0; i < n; ++i) {
        d[idx(i, level_[i])] = pdim[i];
        sh[idx(i, level_[i])] = 0;
        have[idx(i, level_[i])] = true;
    }

    auto mesh_sum = [&](int i, int p) {
        // in-arrows of (i,p): (a,p) for arrows a->i, (b,p-1) for arrows i->b
        IntVec acc = IntVec::Zero(n);
        for (auto& [a, b] : q_.arrows) {
            if (b == i) acc += d[idx(a, p)];
            else if (a == i) acc += d[idx(b, p - 1)];
        }
        return acc;
    };

    // rightward: d(i,p) = mesh(i,p) - d(i,p-1)
    for (int p = pmin_ + 1; p <= pmax_; ++p) {
        for (int i : topo_) {
            if (p <= level_[i] || have[idx(i, p)]) continue;
            IntVec val = mesh_sum(i, p) - d[idx(i, p - 1)];
            int flip = vec_sign(val) != vec_sign(d[idx(i, p - 1)]) ? 1 : 0;
            d[idx(i, p)] = val;
            sh[idx(i, p)] = sh[idx(i, p - 1)] + flip;
            have[idx(i, p)] = true;
        }
    }
    // leftward: d(i,p-1) = mesh(i,p) - d(i,p)
    for (int p = pmax_; p >= pmin_ + 1; --p) {
        for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
            int i = *it;
            if (p - 1 >= level_[i] || have[idx(i, p - 1)]) continue;
            IntVec val = mesh_sum(i, p) - d[idx(i, p)];
            int flip = vec_sign(val) != vec_sign(d[idx(i, p)]) ? 1 : 0;
            d[idx(i, p - 1)] = val;
            sh[idx(i, p - 1)] = sh[idx(i, p)] - flip;
            have[idx(i, p - 1)] = true;
        }
    }

    for (int p = pmin_; p <= pmax_; ++p) {
        for (int i = 0; i < n; ++i) {
            if (!have[idx(i, p)]) throw Error("KNIT_FAILED", "uncovered vertex");
            IntVec v = d[idx(i, p)];
            if (vec_sign(v) < 0) v = -v;
            auto rit = root_idx_.find(v);
            if (rit == root_idx_.end()) throw Error("KNIT_FAILED", "label is not a root");
            labels_[idx(i, p)] = Label{rit->second, sh[idx(i, p)]};
            where_.insert({{rit->second, sh[idx(i, p)]}, {i, p}});
        }
    }
}

int KnitTable::root_index(const IntVec& r) const {
    auto it = root_idx_.find(r);
    if (it == root_idx_.end()) throw Error("NOT_A_ROOT", "vector is not a positive root");
    return it->second;
}

KnitTable::Label KnitTable::label(int i, int p) const {
    if (i < 0 || i >= q_.rank || p < pmin_ || p > pmax_)
        throw Error("WINDOW_TOO_SMALL", "vertex outside knit window");
    return labels_[idx(i, p)];
}

std::pair<int, int> KnitTable::vertex_of(int root, int shift) const {
    auto it = where_.find({root, shift});
    if (it == where_.end()) throw Error("WINDOW_TOO_SMALL", "label outside knit window");
    return it->second;
}

DerivedObject KnitTable::tau(DerivedObject x) const {
    auto [i, p] = vertex_of(x.root, x.shift);
    auto l = label(i, p - 1);
    return {l.root, l.shift};
}

DerivedObject KnitTable::tau_inv(DerivedObject x) const {
    auto [i, p] = vertex_of(x.root, x.shift);
    auto l = label(i, p + 1);
    return {l.root, l.shift};
}

DerivedObject KnitTable::rho_hat(DerivedObject x) const {
    IntVec r = apply_rho(q_, roots_[x.root]);
    auto it = root_idx_.find(r);
    return {it->second, x.shift};
}

int KnitTable::hom(DerivedObject x, DerivedObject y) const {
    int ds = y.shift - x.shift;
    if (ds != 0 && ds != 1) return 0;
    long e = euler_form(q_, roots_[x.root], roots_[y.root]);
    // indecomposables over a representation-directed algebra never carry a
    // nonzero Hom and Ext^1 against the same partner
    if (ds == 0) return e > 0 ? (int)e : 0;
    return e < 0 ? (int)-e : 0;
}

int KnitTable::hom_orbit(DerivedObject x, DerivedObject y, OrbitFunctor f, int taupow) const {
    auto apply = [&](DerivedObject z, int m) {
        DerivedObject r = z;
        if (f == OrbitFunctor::SigmaRho) {
            int steps = m >= 0 ? m : -m;
            for (int k = 0; k < steps; ++k) r = m >= 0 ? sigma_rho(r) : rho_hat(sigma(r, -1));
        } else if (f == OrbitFunctor::SigmaSq) {
            r = sigma(r, 2 * m);
        } else {
            int steps = (m >= 0 ? m : -m) * taupow;
            for (int k = 0; k < steps; ++k) r = m >= 0 ? tau(r) : tau_inv(r);
        }
        return r;
    };
    if (f == OrbitFunctor::TauPow && taupow == 0)
        throw Error("NON_ADMISSIBLE_F", "tau^0 is the identity");

    int mrange = 2 * h_ + 2;
    // admissibility: Hom(P_i, F^m P_i) must vanish for all m != 0
    for (int i = 0; i < q_.rank; ++i) {
        DerivedObject p{proj_[i], 0};
        for (int m = -mrange; m <= mrange; ++m) {
            if (m == 0) continue;
            DerivedObject fm;
            try {
                fm = apply(p, m);
            } catch (const Error&) {
                continue;  // wandered outside the window: shift far from range, Hom = 0
            }
            if (hom(p, fm) != 0) throw Error("NON_ADMISSIBLE_F", "Hom(P_i, F^m P_i) != 0");
        }
    }
    int total = 0;
    for (int m = -mrange; m <= mrange; ++m) {
        DerivedObject fm;
        try {
            fm = apply(y, m);
        } catch (const Error&) {
            continue;
        }
        total += hom(x, fm);
    }
    return total;
}

std::vector<DerivedObject> KnitTable::module_objects() const {
    std::vector<DerivedObject> v;
    for (int r = 0; r < (int)roots_.size(); ++r) v.push_back({r, 0});
    return v;
}

KnitTable::FunctorOrder KnitTable::sigma_rho_order() const {
    FunctorOrder out;
    // Sigma rho_hat shifts every vertex by a constant number of levels;
    // compare against tau^{-m} and read off the leftover vertex permutation.
    int n = q_.rank;
    std::optional<int> delta;
    std::vector<int> perm(n, -1);
    for (int i = 0; i < n; ++i) {
        auto l = label(i, 0);
        DerivedObject img = sigma_rho({l.root, l.shift});
        auto [i2, p2] = vertex_of(img.root, img.shift);
        if (!delta) delta = p2;
        if (p2 != *delta) throw Error("KNIT_FAILED", "Sigma rho_hat is not level-homogeneous");
        perm[i] = i2;
    }
    out.power = *delta;  // Sigma rho_hat = tau^{-power} composed with perm
    out.extra = perm;
    out.pure = true;
    for (int i = 0; i < n; ++i)
        if (perm[i] != i) out.pure = false;
    return out;
}

std::vector<int> les_ranks(const std::vector<int>& dims) {
    if (dims.size() < 2 || dims.front() != 0 || dims.back() != 0)
        throw Error("INCONSISTENT_EXACT_SEQUENCE", "sequence must have zero ends");
    std::vector<int> r(dims.size() - 1, 0);
    for (size_t k = 1; k + 1 < dims.size(); ++k) {
        r[k] = dims[k] - r[k - 1];
        if (r[k] < 0) throw Error("INCONSISTENT_EXACT_SEQUENCE", "negative rank");
    }
    if (r.back() != 0) throw Error("INCONSISTENT_EXACT_SEQUENCE", "alternating sum is nonzero");
    return r;
}

}  // namespace iqg
