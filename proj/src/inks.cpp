#include "iqg/inks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace iqg {

OrbitQuiver::OrbitQuiver(const IQuiver& q) : q_(q), knit_(q) {
    int n = modules();
    simple_.resize(q_.rank);
    inj_.resize(q_.rank);
    inj_of_.assign(n, -1);
    for (int i = 0; i < q_.rank; ++i) {
        simple_[i] = knit_.root_index(unit_vec(q_.rank, i));
        inj_[i] = knit_.inj_root(i);
        inj_of_[inj_[i]] = i;
    }

    tau_.resize(n);
    tau_inv_.resize(n);
    for (int z = 0; z < n; ++z) {
        tau_[z] = fold(knit_.tau({z, 0}));
        tau_inv_[z] = fold(knit_.tau_inv({z, 0}));
    }

    // fold the ZQ arrows: from the shift-0 representative of each orbit,
    // count arrows into every F^m-translate
    arrows_in_.assign(n, {});
    arrows_out_.assign(n, {});
    std::map<std::pair<int, int>, int> mult;
    for (int z = 0; z < n; ++z) {
        auto [i, p] = knit_.vertex_of(z, 0);
        // out-arrows of (i,p): (i,p)->(b,p) for arrows i->b, (i,p)->(a,p+1) for arrows a->i
        for (auto& [a, b] : q_.arrows) {
            if (a == i) {
                auto l = knit_.label(b, p);
                mult[{z, fold({l.root, l.shift})}]++;
            } else if (b == i) {
                auto l = knit_.label(a, p + 1);
                mult[{z, fold({l.root, l.shift})}]++;
            }
        }
    }
    for (auto& [key, m] : mult) {
        arrows_out_[key.first].push_back({key.second, m});
        arrows_in_[key.second].push_back({key.first, m});
    }
}

int OrbitQuiver::fold(DerivedObject x) const {
    // F^{-s}(root, s) = (rho^s root, 0)
    IntVec r = knit_.roots()[x.root];
    if (x.shift % 2 != 0) r = apply_rho(q_, r);
    int s = x.shift % 2;
    (void)s;
    // rho has order <= 2, so only the parity of the shift matters
    return knit_.root_index(r);
}

IntVec OrbitQuiver::cq(const IntVec& v) const {
    IntVec out(modules());
    for (int z = 0; z < modules(); ++z) {
        long s = v[z] + v[tau_[z]];
        for (auto& [y, m] : arrows_in_[z]) s -= (long)m * v[y];
        out[z] = (int)s;
    }
    return out;
}

IntVec OrbitQuiver::sigma_star(const IntVec& w) const {
    IntVec out = zero_v();
    for (int i = 0; i < q_.rank; ++i) out[simple_[i]] += w[i];
    return out;
}

IntVec OrbitQuiver::tau_star(const IntVec& v) const {
    IntVec out(modules());
    for (int z = 0; z < modules(); ++z) out[z] = v[tau_[z]];
    return out;
}

IntVec OrbitQuiver::slack(const DimPair& p) const { return sigma_star(p.w) - cq(p.v); }

int OrbitQuiver::hom_orbit(int zx, int zy) const {
    // Hom(X,Y) + Ext^1(X, rho Y) in the module category
    DerivedObject x{zx, 0}, y{zy, 0};
    int h = knit_.hom(x, y);
    int e = knit_.ext1(x, knit_.rho_hat(y));
    return h + e;
}

DimPair OrbitQuiver::canonical_v(int i) const {
    DimPair p;
    p.w = zero_w();
    p.w[i] += 1;
    p.w[q_.rho[i]] += 1;
    p.v = zero_v();
    for (int z = 0; z < modules(); ++z) p.v[z] = hom_orbit(simple_[i], z);
    return p;
}

bool OrbitQuiver::arrow_pair(int i, int j) const { return q_.arrows_between(j, i) == 1; }

std::vector<std::pair<int, int>> OrbitQuiver::arrow_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < q_.rank; ++i)
        for (int j = 0; j < q_.rank; ++j)
            if (arrow_pair(i, j)) out.push_back({i, j});
    return out;
}

DimPair OrbitQuiver::canonical_vij(int i, int j) const {
    if (!arrow_pair(i, j)) throw Error("NO_ARROW", "Ext^1(S_j, S_i) must be one-dimensional");
    DimPair p;
    p.w = zero_w();
    p.w[i] += 1;
    p.w[j] += 1;
    p.v = zero_v();

    IntVec xroot = unit_vec(q_.rank, i) + unit_vec(q_.rank, j);
    int xij = knit_.root_index(xroot);
    DerivedObject Si{simple_[i], 0}, Sj{simple_[j], 0}, X{xij, 0};

    // rank of xi^* on Hom(S_i, z) from the long exact sequence of the
    // triangle Sigma^{-1} S_j -> S_i -> X_ij -> S_j; only the untwisted
    // component contributes, the twisted one lands in shift 2
    for (int z = 0; z < modules(); ++z) {
        DerivedObject Z{z, 0};
        std::vector<int> dims = {0,
                                 knit_.hom(Sj, Z), knit_.hom(X, Z), knit_.hom(Si, Z),
                                 knit_.ext1(Sj, Z), knit_.ext1(X, Z), knit_.ext1(Si, Z),
                                 0};
        auto r = les_ranks(dims);
        p.v[z] = r[3];
    }
    return p;
}

std::vector<DimPair> OrbitQuiver::enumerate_pairs(const IntVec& w) const {
    std::set<DimPair> out;
    int n = q_.rank;

    std::vector<DimPair> vi(n);
    for (int i = 0; i < n; ++i) vi[i] = canonical_v(i);

    std::vector<int> noninj;
    for (int z = 0; z < modules(); ++z)
        if (!is_injective(z)) noninj.push_back(z);

    // iterate a in N^I with a_k + a_{rho k} <= w_k at every k
    IntVec a = IntVec::Zero(n);
    auto feasible = [&]() {
        for (int k = 0; k < n; ++k)
            if (a[k] + a[q_.rho[k]] > w[k]) return false;
        return true;
    };
    std::function<void(int)> rec_a = [&](int pos) {
        if (!feasible()) return;
        if (pos == n) {
            IntVec w0 = zero_w();
            IntVec v0 = zero_v();
            for (int k = 0; k < n; ++k) {
                w0[k] += a[k] + a[q_.rho[k]];
                v0 += a[k] * vi[k].v;
            }
            IntVec wplus = w - w0;
            // a stable module with frozen dimension w+ is a quotient of a sum
            // of K_L(S_k)'s, so v+ <= sum_k w+(k) v^{rho k} away from injectives
            IntVec bound = zero_v();
            for (int k = 0; k < n; ++k) bound += wplus[k] * vi[q_.rho[k]].v;
            IntVec vplus = zero_v();
            IntVec sw = sigma_star(wplus);
            std::function<void(size_t)> rec_v = [&](size_t zi) {
                if (zi == noninj.size()) {
                    if ((sw - cq(vplus)).minCoeff() >= 0) {
                        DimPair p;
                        p.v = vplus + v0;
                        p.w = w;
                        out.insert(p);
                    }
                    return;
                }
                int z = noninj[zi];
                for (int c = 0; c <= bound[z]; ++c) {
                    vplus[z] = c;
                    rec_v(zi + 1);
                }
                vplus[z] = 0;
            };
            rec_v(0);
            return;
        }
        for (int c = 0;; ++c) {
            a[pos] = c;
            if (!feasible()) break;
            rec_a(pos + 1);
        }
        a[pos] = 0;
    };
    rec_a(0);

    std::vector<DimPair> res(out.begin(), out.end());
    std::sort(res.begin(), res.end(), [](const DimPair& x, const DimPair& y) {
        long sx = x.v.sum(), sy = y.v.sum();
        if (sx != sy) return sx < sy;
        return x < y;
    });
    return res;
}

std::pair<DimPair, DimPair> OrbitQuiver::decompose_pair(const DimPair& p) const {
    if (!l_dominant(p)) throw Error("NOT_L_DOMINANT", "pair is not l-dominant");
    int n = q_.rank;
    DimPair zero_part, plus_part;
    zero_part.v = zero_v();
    zero_part.w = zero_w();
    for (int i = 0; i < n; ++i) {
        int ai = p.v[injective_vertex(i)];
        DimPair vi = canonical_v(i);
        zero_part.v += ai * vi.v;
        zero_part.w += ai * vi.w;
    }
    plus_part.v = p.v - zero_part.v;
    plus_part.w = p.w - zero_part.w;
    if (plus_part.v.minCoeff() < 0 || plus_part.w.minCoeff() < 0)
        throw Error("NOT_L_DOMINANT", "decomposition left negative entries");
    for (int i = 0; i < n; ++i)
        if (plus_part.v[injective_vertex(i)] != 0)
            throw Error("NOT_L_DOMINANT", "plus part touches an injective vertex");
    if (!l_dominant(plus_part)) throw Error("NOT_L_DOMINANT", "plus part is not l-dominant");
    return {plus_part, zero_part};
}

DimPair OrbitQuiver::klr_dim(const IntVec& a) const {
    DimPair out;
    out.v = zero_v();
    out.w = zero_w();
    for (int i = 0; i < q_.rank; ++i) {
        if (a[i] < 0) throw Error("NEGATIVE_CLASS", "coefficients must be nonnegative");
        DimPair vi = canonical_v(i);
        out.v += a[i] * vi.v;
        out.w += a[i] * vi.w;
    }
    return out;
}

std::string OrbitQuiver::root_key(int z) const {
    std::ostringstream os;
    const IntVec& r = module_root(z);
    for (int i = 0; i < r.size(); ++i) {
        if (i) os << ".";
        os << r[i];
    }
    return os.str();
}

}  // namespace iqg
