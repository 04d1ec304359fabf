#pragma once

#include <memory>
#include <tuple>
#include <vector>

#include "iqg/dercat.hpp"

namespace iqg {

// (v, w): v over the module vertices of the folded quiver, w over the frozen
// vertices (one per simple).
struct DimPair {
    IntVec v;
    IntVec w;

    friend bool operator==(const DimPair& a, const DimPair& b) {
        return a.v.size() == b.v.size() && a.w.size() == b.w.size() && a.v == b.v && a.w == b.w;
    }
    friend bool operator<(const DimPair& a, const DimPair& b) {
        for (int i = 0; i < a.v.size(); ++i)
            if (a.v[i] != b.v[i]) return a.v[i] < b.v[i];
        for (int i = 0; i < a.w.size(); ++i)
            if (a.w[i] != b.w[i]) return a.w[i] < b.w[i];
        return false;
    }
};

inline bool leq(const IntVec& a, const IntVec& b) { return (a.array() <= b.array()).all(); }

// The folded quiver ZQ/F with frozen vertices: module vertices are labelled
// by indecomposable kQ-modules (positive roots), frozen vertices by simples.
class OrbitQuiver {
public:
    explicit OrbitQuiver(const IQuiver& q);

    const IQuiver& quiver() const { return q_; }
    const KnitTable& knit() const { return knit_; }

    int modules() const { return (int)knit_.roots().size(); }
    const IntVec& module_root(int z) const { return knit_.roots()[z]; }
    int simple_vertex(int i) const { return simple_[i]; }
    int injective_vertex(int i) const { return inj_[i]; }
    bool is_injective(int z) const { return inj_of_[z] >= 0; }

    int tau_mod(int z) const { return tau_[z]; }
    int tau_inv_mod(int z) const { return tau_inv_[z]; }
    // arrows between module vertices, with fold multiplicities
    const std::vector<std::vector<std::pair<int, int>>>& arrows_into() const { return arrows_in_; }
    const std::vector<std::vector<std::pair<int, int>>>& arrows_out() const { return arrows_out_; }
    // frozen vertex k sits between tau S_k and S_k; returns tau S_k's vertex
    int frozen_source(int k) const { return tau_[simple_[k]]; }

    IntVec zero_v() const { return IntVec::Zero(modules()); }
    IntVec zero_w() const { return IntVec::Zero(q_.rank); }

    IntVec cq(const IntVec& v) const;
    IntVec sigma_star(const IntVec& w) const;
    IntVec tau_star(const IntVec& v) const;
    IntVec slack(const DimPair& p) const;  // sigma* w - Cq v, entries may be negative
    bool l_dominant(const DimPair& p) const { return (slack(p).array() >= 0).all(); }

    // hom in the orbit category between module objects
    int hom_orbit(int zx, int zy) const;

    DimPair canonical_v(int i) const;  // (v^i, w^i)
    // requires Ext^1(S_j, S_i) = k; throws NO_ARROW otherwise
    DimPair canonical_vij(int i, int j) const;
    bool arrow_pair(int i, int j) const;
    std::vector<std::pair<int, int>> arrow_pairs() const;

    // all strongly l-dominant (v, w), sorted by (|v|, lex v)
    std::vector<DimPair> enumerate_pairs(const IntVec& w) const;
    // unique splitting (v,w) = (v+,w+) + (v0,w0); throws NOT_L_DOMINANT
    std::pair<DimPair, DimPair> decompose_pair(const DimPair& p) const;
    // dim of the intermediate extension of a finite-projective-dimension
    // class sum a_i E_i
    DimPair klr_dim(const IntVec& a) const;

    std::string root_key(int z) const;  // "a1.a2...an"

private:
    IQuiver q_;
    KnitTable knit_;
    std::vector<int> simple_, inj_;
    std::vector<int> inj_of_;  // module -> i if module == I_i else -1
    std::vector<int> tau_, tau_inv_;
    std::vector<std::vector<std::pair<int, int>>> arrows_in_, arrows_out_;

    int fold(DerivedObject x) const;  // orbit representative of a derived object
};

}  // namespace iqg
