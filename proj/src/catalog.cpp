#include "iqg/catalog.hpp"

namespace iqg {

std::optional<CaseCatalog::Resolution> CaseCatalog::lookup(const IntVec& v, const IntVec& w) const {
    for (auto& f : facts_) {
        if (f.kind == "transition-zero") continue;
        if (f.w.size() != w.size() || f.v.size() != v.size()) continue;
        if (f.w == w && f.v == v) {
            if (f.kind == "vanish") return Resolution{Resolution::Zero, {}, f.anchor};
            return Resolution{Resolution::Rewrite, f.v2, f.anchor};
        }
    }
    if (v.sum() != 0) {
        for (auto& r : rules_) {
            if (r.w.size() == w.size() && r.w == w && v[r.support] == 0)
                return Resolution{Resolution::Zero, {}, r.anchor};
        }
    }
    return std::nullopt;
}

CaseCatalog CaseCatalog::standard(const OrbitQuiver& orbit) {
    CaseCatalog cat;
    const IQuiver& q = orbit.quiver();
    int n = q.rank;

    auto wv = [&](std::initializer_list<std::pair<int, int>> parts) {
        IntVec w = orbit.zero_w();
        for (auto [i, m] : parts) w[i] += m;
        return w;
    };

    // single-frozen grades: a nonzero stable module needs weight on S_k
    for (int k = 0; k < n; ++k) {
        cat.add_vanish_rule(wv({{k, 1}}), orbit.simple_vertex(k),
                            "nonempty M(v,1_{sigma S_k}) forces v >= 1_{S_k}");
        // the canonical class over the one-point base
        DimPair vk = orbit.canonical_v(k);
        cat.add({"identify", vk.v, wv({{k, 1}}), orbit.zero_v(),
                 "M(v^k, 1_{sigma S_k}) is the one-point variety"});
    }

    for (auto [i, j] : orbit.arrow_pairs()) {
        DimPair vij = orbit.canonical_vij(i, j);
        DimPair vi = orbit.canonical_v(i);
        DimPair vj = orbit.canonical_v(j);
        IntVec wij = wv({{i, 1}, {j, 1}});

        // nonzero stable module over w^{ij} needs weight on S_i
        cat.add_vanish_rule(wij, orbit.simple_vertex(i),
                            "nonempty M(v,w^{ij}) forces v >= 1_{S_i}");

        // point identifications over the single-frozen grade
        if (vij.v != vi.v)
            cat.add({"identify", vij.v, wv({{i, 1}}), orbit.zero_v(),
                     "M(v^{ij}, 1_{sigma S_i}) is the one-point variety"});
        IntVec diff = vj.v - vij.v;
        if ((diff.array() >= 0).all() && diff.sum() > 0 && diff != vj.v)
            cat.add({"identify", diff, wv({{j, 1}}), orbit.zero_v(),
                     "M(v^j - v^{ij}, 1_{sigma S_j}) is the one-point variety"});

        // the natural inclusion identifies the v^i and v^{ij} classes at w^{ij}
        if (vi.v != vij.v)
            cat.add({"identify", vi.v, wij, vij.v,
                     "M(v^i, w^{ij}) = M(v^{ij}, w^{ij}) by the natural inclusion"});
        // the v^j class at w^{ij} indexes an empty family
        DimPair pj{vj.v, wij};
        if (!orbit.l_dominant(pj) && vj.v != vi.v)
            cat.add({"vanish", vj.v, wij, {}, "M(v^j, w^{ij}) is empty"});

        // fibre over the origin at the iij grade: the pushforward of the
        // v^{ij} class contains no extra constant-sheaf summand
        IntVec wiij = wij;
        wiij[i] += 1;
        cat.add({"transition-zero", vij.v, wiij, orbit.zero_v(),
                 "fibre of M(v^{ij}, w^{iij}) over the origin carries no top class"});
    }
    return cat;
}

bool CaseCatalog::transition_zero(const IntVec& v, const IntVec& v2, const IntVec& w) const {
    for (auto& f : facts_) {
        if (f.kind != "transition-zero") continue;
        if (f.w.size() == w.size() && f.w == w && f.v == v && f.v2 == v2) return true;
    }
    return false;
}

}  // namespace iqg
