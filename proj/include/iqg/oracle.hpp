#pragma once

#include <Eigen/Dense>
#include <map>

#include "iqg/inks.hpp"
#include "iqg/rational.hpp"

namespace iqg {

using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

// Gaussian elimination helpers on exact rational matrices.
int rat_rank(RatMat m);

// A quiver representation given by explicit matrices over Q: one space per
// vertex and one matrix per arrow (dims_target x dims_source).
struct ExplicitRep {
    IntVec dims;
    std::vector<RatMat> maps;  // indexed like quiver.arrows
};

// Brute-force cross-check: builds one indecomposable per positive root with
// reflection functors and computes Hom/Ext dimensions and induced-map ranks
// by plain linear algebra.
class RepOracle {
public:
    explicit RepOracle(const IQuiver& q);

    const IQuiver& quiver() const { return q_; }
    const ExplicitRep& rep(const IntVec& root) const;

    int hom_rank(const ExplicitRep& x, const ExplicitRep& y) const;
    int ext_rank(const ExplicitRep& x, const ExplicitRep& y) const;
    int end_dim(const IntVec& root) const;

    // basis of Hom(X,Y) as stacked coordinate vectors
    std::vector<std::vector<RatMat>> hom_basis(const ExplicitRep& x, const ExplicitRep& y) const;

    // rank of Hom(X_{ij}, Z) -> Hom(S_i, Z) induced by the inclusion S_i -> X_{ij}
    int alpha_star_rank(int i, int j, const IntVec& zroot) const;

    // v^{ij}(z) recomputed from oracle ranks
    int vij_entry(int i, int j, const IntVec& zroot) const;

    // compares hom/ext data against the mesh calculus; returns the number of
    // mismatches and appends messages
    int crosscheck(const OrbitQuiver& orbit, std::vector<std::string>* log = nullptr) const;

private:
    IQuiver q_;
    std::vector<IntVec> roots_;
    std::map<std::string, ExplicitRep> reps_;

    static std::string key(const IntVec& r);
    ExplicitRep simple(int i) const;
    // inverse Coxeter functor: one full sweep of source reflections
    ExplicitRep tau_inverse(const ExplicitRep& m) const;
};

}  // namespace iqg
