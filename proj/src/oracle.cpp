#include "iqg/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace iqg {

namespace {

std::string vec_key(const IntVec& r) {
    std::ostringstream os;
    for (int i = 0; i < r.size(); ++i) os << r[i] << ".";
    return os.str();
}

// maps keyed (src,tgt); Dynkin diagrams are trees so a key determines the arrow
using MapTable = std::map<std::pair<int, int>, RatMat>;

struct WorkRep {
    IntVec dims;
    std::vector<std::pair<int, int>> arrows;
    MapTable maps;
};

RatMat zero_mat(int r, int c) {
    RatMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = Rat(0);
    return m;
}

// row echelon; returns rank, mutates a copy
int rank_of(RatMat m) {
    int rows = (int)m.rows(), cols = (int)m.cols();
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!m(r, c).zero()) { piv = r; break; }
        if (piv < 0) continue;
        m.row(rank).swap(m.row(piv));
        Rat inv = Rat(1) / m(rank, c);
        for (int cc = c; cc < cols; ++cc) m(rank, cc) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m(r, c).zero()) continue;
            Rat f = m(r, c);
            for (int cc = c; cc < cols; ++cc) m(r, cc) -= f * m(rank, cc);
        }
        ++rank;
    }
    return rank;
}

// basis of the null space (as columns)
RatMat null_basis(const RatMat& m) {
    int rows = (int)m.rows(), cols = (int)m.cols();
    RatMat a = m;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!a(r, c).zero()) { piv = r; break; }
        if (piv < 0) continue;
        a.row(rank).swap(a.row(piv));
        Rat inv = Rat(1) / a(rank, c);
        for (int cc = 0; cc < cols; ++cc) a(rank, cc) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a(r, c).zero()) continue;
            Rat f = a(r, c);
            for (int cc = 0; cc < cols; ++cc) a(r, cc) -= f * a(rank, cc);
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_piv(cols, false);
    for (int c : pivot_col) is_piv[c] = true;
    RatMat basis = zero_mat(cols, cols - rank);
    int k = 0;
    for (int c = 0; c < cols; ++c) {
        if (is_piv[c]) continue;
        basis(c, k) = Rat(1);
        for (int r = 0; r < rank; ++r) basis(pivot_col[r], k) = -a(r, c);
        ++k;
    }
    return basis;
}

// basis of the left null space: rows K with K m = 0 and full row rank
RatMat left_null_basis(const RatMat& m) {
    RatMat nt = null_basis(m.transpose());
    return nt.transpose();
}

}  // namespace

int rat_rank(RatMat m) { return rank_of(std::move(m)); }

std::string RepOracle::key(const IntVec& r) { return vec_key(r); }

ExplicitRep RepOracle::simple(int i) const {
    ExplicitRep m;
    m.dims = unit_vec(q_.rank, i);
    for (auto& [a, b] : q_.arrows) m.maps.push_back(zero_mat(m.dims[b], m.dims[a]));
    return m;
}

RepOracle::RepOracle(const IQuiver& q) : q_(q), roots_(positive_roots(q)) {
    // all indecomposables arise as tau^{-k} of a projective; projectives over
    // a tree quiver are thin, with identity maps along their support
    std::vector<int> topo;
    {
        std::vector<int> indeg(q_.rank, 0);
        for (auto& [a, b] : q_.arrows) indeg[b]++;
        std::vector<int> stack;
        for (int i = 0; i < q_.rank; ++i)
            if (indeg[i] == 0) stack.push_back(i);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            topo.push_back(x);
            for (auto& [a, b] : q_.arrows)
                if (a == x && --indeg[b] == 0) stack.push_back(b);
        }
    }
    std::vector<IntVec> pdim(q_.rank, IntVec::Zero(q_.rank));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int i = *it;
        pdim[i][i] = 1;
        for (auto& [a, b] : q_.arrows)
            if (a == i) pdim[i] += pdim[b];
    }

    for (int i = 0; i < q_.rank; ++i) {
        ExplicitRep p;
        p.dims = pdim[i];
        for (auto& [a, b] : q_.arrows) {
            RatMat m = zero_mat(p.dims[b], p.dims[a]);
            if (p.dims[a] == 1 && p.dims[b] == 1) m(0, 0) = Rat(1);
            p.maps.push_back(m);
        }
        ExplicitRep cur = p;
        for (size_t guard = 0; guard <= roots_.size(); ++guard) {
            if (!reps_.count(key(cur.dims))) reps_[key(cur.dims)] = cur;
            ExplicitRep nxt = tau_inverse(cur);
            if (nxt.dims.size() == 0) break;
            cur = std::move(nxt);
        }
    }
    if (reps_.size() != roots_.size()) throw Error("ORACLE_FAILED", "missed some indecomposables");
}

ExplicitRep RepOracle::tau_inverse(const ExplicitRep& m) const {
    WorkRep w;
    w.dims = m.dims;
    w.arrows = q_.arrows;
    for (size_t a = 0; a < q_.arrows.size(); ++a) w.maps[q_.arrows[a]] = m.maps[a];

    // source reflections in topological order; each vertex is a source of the
    // partially reflected quiver when its turn comes
    std::vector<int> topo;
    {
        std::vector<int> indeg(q_.rank, 0);
        for (auto& [a, b] : q_.arrows) indeg[b]++;
        std::vector<int> stack;
        for (int i = 0; i < q_.rank; ++i)
            if (indeg[i] == 0) stack.push_back(i);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            topo.push_back(x);
            for (auto& [a, b] : q_.arrows)
                if (a == x && --indeg[b] == 0) stack.push_back(b);
        }
    }

    for (int j : topo) {
        std::vector<std::pair<int, int>> out;
        for (auto& ar : w.arrows)
            if (ar.first == j) out.push_back(ar);
        int total = 0;
        for (auto& ar : out) total += w.dims[ar.second];
        // crossing an injective shows up as a failed reflection count
        if (total - w.dims[j] < 0) return ExplicitRep{};
        // delta: M_j -> sum of targets
        RatMat delta = zero_mat(total, w.dims[j]);
        int off = 0;
        for (auto& ar : out) {
            const RatMat& f = w.maps[ar];
            for (int r = 0; r < f.rows(); ++r)
                for (int c = 0; c < f.cols(); ++c) delta(off + r, c) = f(r, c);
            off += w.dims[ar.second];
        }
        RatMat K = left_null_basis(delta);  // coker projection, rows = new dim
        int newdim = (int)K.rows();
        // delta must be injective on an indecomposable that survives the sweep
        if (newdim != total - w.dims[j]) return ExplicitRep{};
        // replace arrows j->t by t->j with the block of K
        off = 0;
        for (auto& ar : out) {
            RatMat block = zero_mat(newdim, w.dims[ar.second]);
            for (int r = 0; r < newdim; ++r)
                for (int c = 0; c < w.dims[ar.second]; ++c) block(r, c) = K(r, off + c);
            w.maps.erase(ar);
            std::pair<int, int> rev{ar.second, ar.first};
            w.maps[rev] = block;
            for (auto& a2 : w.arrows)
                if (a2 == ar) a2 = rev;
            off += w.dims[ar.second];
        }
        w.dims[j] = newdim;
    }

    // the sweep reverses every arrow twice, so we are back over Q
    ExplicitRep out;
    if (w.dims.sum() == 0) return out;  // was injective
    out.dims = w.dims;
    for (auto& ar : q_.arrows) {
        auto it = w.maps.find(ar);
        if (it == w.maps.end()) throw Error("ORACLE_FAILED", "arrow lost in reflection sweep");
        out.maps.push_back(it->second);
    }
    // reflected dims must be a positive root or we fell off the category
    bool ok = (out.dims.array() >= 0).all() && out.dims.sum() > 0;
    if (!ok) return ExplicitRep{};
    return out;
}

const ExplicitRep& RepOracle::rep(const IntVec& root) const {
    auto it = reps_.find(key(root));
    if (it == reps_.end()) throw Error("NOT_A_ROOT", "no indecomposable with this dimension vector");
    return it->second;
}

int RepOracle::hom_rank(const ExplicitRep& x, const ExplicitRep& y) const {
    // variables: entries of f_v (y.dims[v] x x.dims[v]), row-major
    std::vector<int> voff(q_.rank + 1, 0);
    for (int v = 0; v < q_.rank; ++v) voff[v + 1] = voff[v] + x.dims[v] * y.dims[v];
    int vars = voff[q_.rank];
    int eqs = 0;
    for (size_t a = 0; a < q_.arrows.size(); ++a)
        eqs += x.dims[q_.arrows[a].first] * y.dims[q_.arrows[a].second];
    RatMat sys = zero_mat(std::max(eqs, 1), vars);
    int row = 0;
    for (size_t a = 0; a < q_.arrows.size(); ++a) {
        auto [s, t] = q_.arrows[a];
        const RatMat& Xa = x.maps[a];
        const RatMat& Ya = y.maps[a];
        for (int r = 0; r < y.dims[t]; ++r) {
            for (int c = 0; c < x.dims[s]; ++c) {
                for (int k = 0; k < x.dims[t]; ++k)
                    sys(row, voff[t] + r * x.dims[t] + k) -= Xa(k, c);
                for (int k = 0; k < y.dims[s]; ++k)
                    sys(row, voff[s] + k * x.dims[s] + c) += Ya(r, k);
                ++row;
            }
        }
    }
    return vars - rat_rank(sys);
}

int RepOracle::ext_rank(const ExplicitRep& x, const ExplicitRep& y) const {
    // Ext^1 = coker( sum_v Hom(X_v,Y_v) -> sum_a Hom(X_{s(a)}, Y_{t(a)}) )
    std::vector<int> voff(q_.rank + 1, 0);
    for (int v = 0; v < q_.rank; ++v) voff[v + 1] = voff[v] + x.dims[v] * y.dims[v];
    int vars = voff[q_.rank];
    int eqs = 0;
    for (size_t a = 0; a < q_.arrows.size(); ++a)
        eqs += x.dims[q_.arrows[a].first] * y.dims[q_.arrows[a].second];
    RatMat delta = zero_mat(std::max(eqs, 1), std::max(vars, 1));
    int row = 0;
    for (size_t a = 0; a < q_.arrows.size(); ++a) {
        auto [s, t] = q_.arrows[a];
        const RatMat& Xa = x.maps[a];
        const RatMat& Ya = y.maps[a];
        for (int r = 0; r < y.dims[t]; ++r) {
            for (int c = 0; c < x.dims[s]; ++c) {
                for (int k = 0; k < x.dims[t]; ++k)
                    delta(row, voff[t] + r * x.dims[t] + k) -= Xa(k, c);
                for (int k = 0; k < y.dims[s]; ++k)
                    delta(row, voff[s] + k * x.dims[s] + c) += Ya(r, k);
                ++row;
            }
        }
    }
    return eqs - rat_rank(delta);
}

int RepOracle::end_dim(const IntVec& root) const {
    const ExplicitRep& m = rep(root);
    return hom_rank(m, m);
}

std::vector<std::vector<RatMat>> RepOracle::hom_basis(const ExplicitRep& x, const ExplicitRep& y) const {
    std::vector<int> voff(q_.rank + 1, 0);
    for (int v = 0; v < q_.rank; ++v) voff[v + 1] = voff[v] + x.dims[v] * y.dims[v];
    int vars = voff[q_.rank];
    int eqs = 0;
    for (size_t a = 0; a < q_.arrows.size(); ++a)
        eqs += x.dims[q_.arrows[a].first] * y.dims[q_.arrows[a].second];
    RatMat sys = zero_mat(std::max(eqs, 1), vars);
    int row = 0;
    for (size_t a = 0; a < q_.arrows.size(); ++a) {
        auto [s, t] = q_.arrows[a];
        const RatMat& Xa = x.maps[a];
        const RatMat& Ya = y.maps[a];
        for (int r = 0; r < y.dims[t]; ++r) {
            for (int c = 0; c < x.dims[s]; ++c) {
                for (int k = 0; k < x.dims[t]; ++k)
                    sys(row, voff[t] + r * x.dims[t] + k) -= Xa(k, c);
                for (int k = 0; k < y.dims[s]; ++k)
                    sys(row, voff[s] + k * x.dims[s] + c) += Ya(r, k);
                ++row;
            }
        }
    }
    RatMat basis = null_basis(sys);
    std::vector<std::vector<RatMat>> out;
    for (int b = 0; b < basis.cols(); ++b) {
        std::vector<RatMat> f;
        for (int v = 0; v < q_.rank; ++v) {
            RatMat fv = zero_mat(y.dims[v], x.dims[v]);
            for (int r = 0; r < y.dims[v]; ++r)
                for (int c = 0; c < x.dims[v]; ++c) fv(r, c) = basis(voff[v] + r * x.dims[v] + c, b);
            f.push_back(fv);
        }
        out.push_back(f);
    }
    return out;
}

int RepOracle::alpha_star_rank(int i, int j, const IntVec& zroot) const {
    IntVec xroot = unit_vec(q_.rank, i) + unit_vec(q_.rank, j);
    const ExplicitRep& X = rep(xroot);
    const ExplicitRep& Si = rep(unit_vec(q_.rank, i));
    const ExplicitRep& Z = rep(zroot);
    auto alpha_space = hom_basis(Si, X);
    if (alpha_space.size() != 1) throw Error("ORACLE_FAILED", "embedding S_i -> X_ij is not unique");
    auto& alpha = alpha_space[0];
    auto gs = hom_basis(X, Z);
    if (gs.empty()) return 0;
    // coordinates of g . alpha in Hom(S_i, Z): a single column per g
    RatMat coords = zero_mat(Z.dims[i], (int)gs.size());
    for (size_t g = 0; g < gs.size(); ++g) {
        // (g.alpha)_i = g_i * alpha_i, a (Z.dims[i] x 1) matrix
        RatMat comp = zero_mat(Z.dims[i], 1);
        for (int r = 0; r < Z.dims[i]; ++r) {
            Rat s(0);
            for (int k = 0; k < X.dims[i]; ++k) s += gs[g][i](r, k) * alpha[i](k, 0);
            comp(r, 0) = s;
        }
        for (int r = 0; r < Z.dims[i]; ++r) coords(r, g) = comp(r, 0);
    }
    return rat_rank(coords);
}

int RepOracle::vij_entry(int i, int j, const IntVec& zroot) const {
    const ExplicitRep& Si = rep(unit_vec(q_.rank, i));
    const ExplicitRep& Z = rep(zroot);
    return hom_rank(Si, Z) - alpha_star_rank(i, j, zroot);
}

int RepOracle::crosscheck(const OrbitQuiver& orbit, std::vector<std::string>* log) const {
    int bad = 0;
    const KnitTable& k = orbit.knit();
    auto note = [&](const std::string& s) {
        if (log) log->push_back(s);
        ++bad;
    };
    for (size_t a = 0; a < roots_.size(); ++a) {
        for (size_t b = 0; b < roots_.size(); ++b) {
            const ExplicitRep& X = rep(roots_[a]);
            const ExplicitRep& Y = rep(roots_[b]);
            int h = hom_rank(X, Y);
            int e = ext_rank(X, Y);
            DerivedObject xo{(int)a, 0}, yo{(int)b, 0};
            if (h != k.hom(xo, yo))
                note("hom mismatch at roots " + vec_key(roots_[a]) + " " + vec_key(roots_[b]));
            if (e != k.ext1(xo, yo))
                note("ext mismatch at roots " + vec_key(roots_[a]) + " " + vec_key(roots_[b]));
            if (h - e != euler_form(q_, roots_[a], roots_[b]))
                note("euler mismatch at roots " + vec_key(roots_[a]) + " " + vec_key(roots_[b]));
        }
        if (end_dim(roots_[a]) != 1) note("endomorphism ring not one-dimensional");
    }
    for (auto [i, j] : orbit.arrow_pairs()) {
        DimPair vij = orbit.canonical_vij(i, j);
        for (int z = 0; z < orbit.modules(); ++z) {
            if (vij.v[z] != vij_entry(i, j, orbit.module_root(z)))
                note("v^{ij} mismatch at pair " + std::to_string(i + 1) + "," + std::to_string(j + 1));
        }
    }
    return bad;
}

}  // namespace iqg
