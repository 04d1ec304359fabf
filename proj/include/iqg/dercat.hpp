#pragma once

#include <map>
#include <optional>
#include <vector>

#include "iqg/rootdata.hpp"

namespace iqg {

// An indecomposable of the bounded derived category: a positive root
// together with a homological shift.
struct DerivedObject {
    int root = -1;  // index into the positive-root list
    int shift = 0;

    friend bool operator==(const DerivedObject& a, const DerivedObject& b) {
        return a.root == b.root && a.shift == b.shift;
    }
    friend bool operator<(const DerivedObject& a, const DerivedObject& b) {
        return std::tie(a.shift, a.root) < std::tie(b.shift, b.root);
    }
};

enum class OrbitFunctor { SigmaRho, SigmaSq, TauPow };

// The repetition quiver ZQ over a level window, with every vertex labelled
// by (positive root, shift) via mesh knitting from the projective slice.
class KnitTable {
public:
    explicit KnitTable(const IQuiver& q, int periods = 4);

    const IQuiver& quiver() const { return q_; }
    const std::vector<IntVec>& roots() const { return roots_; }
    int root_index(const IntVec& r) const;
    int coxeter() const { return h_; }
    int pmin() const { return pmin_; }
    int pmax() const { return pmax_; }

    struct Label {
        int root;
        int shift;
    };
    Label label(int i, int p) const;
    // inverse lookup; throws WINDOW_TOO_SMALL if the label is out of window
    std::pair<int, int> vertex_of(int root, int shift) const;

    DerivedObject tau(DerivedObject x) const;
    DerivedObject tau_inv(DerivedObject x) const;
    DerivedObject sigma(DerivedObject x, int n = 1) const { return {x.root, x.shift + n}; }
    DerivedObject rho_hat(DerivedObject x) const;
    DerivedObject sigma_rho(DerivedObject x) const { return sigma(rho_hat(x)); }

    int proj_root(int i) const { return proj_[i]; }  // root index of P_i
    int inj_root(int i) const { return inj_[i]; }    // root index of I_i

    // dim Hom_{D_Q}(X, Y); nonzero only for shift differences 0 and 1
    int hom(DerivedObject x, DerivedObject y) const;
    int ext1(DerivedObject x, DerivedObject y) const { return hom(x, sigma(y)); }

    // sum_m dim Hom(X, F^m Y) for the orbit functor F; throws NON_ADMISSIBLE_F
    // when F fails the projective-vanishing requirement.
    int hom_orbit(DerivedObject x, DerivedObject y, OrbitFunctor f, int taupow = 1) const;

    // order of Sigma rho_hat as a power of tau^{-1}; `extra` is the diagram
    // permutation left over when it is not a pure power.
    struct FunctorOrder {
        int power = 0;
        bool pure = false;
        std::vector<int> extra;
    };
    FunctorOrder sigma_rho_order() const;

    // permutation sanity: applies F to every module label, for tests
    std::vector<DerivedObject> module_objects() const;

private:
    IQuiver q_;
    int h_;
    int pmin_, pmax_;
    std::vector<IntVec> roots_;
    std::map<IntVec, int, bool (*)(const IntVec&, const IntVec&)> root_idx_;
    std::vector<int> level_;  // slice level of P_i
    std::vector<int> topo_;   // topological order of vertices, sources first
    std::vector<Label> labels_;
    std::map<std::pair<int, int>, std::pair<int, int>> where_;  // (root,shift) -> (i,p)
    std::vector<int> proj_, inj_;

    int idx(int i, int p) const { return (p - pmin_) * q_.rank + i; }
    void knit();
};

// Rank bookkeeping for a finite exact sequence with zero ends: given the
// dimension list, returns the ranks of the consecutive maps.  Throws
// INCONSISTENT_EXACT_SEQUENCE when no such ranks exist.
std::vector<int> les_ranks(const std::vector<int>& dims);

}  // namespace iqg
