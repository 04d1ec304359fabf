#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "iqg/catalog.hpp"
#include "iqg/halflaurent.hpp"
#include "iqg/inks.hpp"

namespace iqg {

// Finite combination of L-basis symbols with Laurent coefficients.
class GElement {
public:
    GElement() = default;
    static GElement basis(const DimPair& p) {
        GElement g;
        g.terms_[p] = HalfLaurent(1);
        return g;
    }
    static GElement unit(const OrbitQuiver& o) { return basis({o.zero_v(), o.zero_w()}); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<DimPair, HalfLaurent>& terms() const { return terms_; }
    HalfLaurent coeff(const DimPair& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? HalfLaurent() : it->second;
    }
    void add(const DimPair& p, const HalfLaurent& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(p);
        if (it == terms_.end()) {
            terms_[p] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    friend GElement operator+(const GElement& a, const GElement& b) {
        GElement r = a;
        for (auto& [p, c] : b.terms_) r.add(p, c);
        return r;
    }
    friend GElement operator-(const GElement& a, const GElement& b) {
        GElement r = a;
        for (auto& [p, c] : b.terms_) r.add(p, -c);
        return r;
    }
    friend GElement operator*(const HalfLaurent& s, const GElement& g) {
        GElement r;
        for (auto& [p, c] : g.terms_) r.add(p, s * c);
        return r;
    }
    friend bool operator==(const GElement& a, const GElement& b) { return a.terms_ == b.terms_; }

private:
    std::map<DimPair, HalfLaurent> terms_;
};

// element with a rational-function scalar carried as a numerator/denominator
// pair of Laurent polynomials
struct Scaled {
    GElement g;
    HalfLaurent num = HalfLaurent(1);
    HalfLaurent den = HalfLaurent(1);
};

enum class SolveStatus { Unique, Underdetermined };

// The quantum Grothendieck ring layer: twisted comultiplication on the
// pushforward basis, the transition solver, products of L-basis classes and
// the relation checks.
class GrothRing {
public:
    // cache_dir, or the IQG_CACHE_DIR environment variable, persists solved
    // transition tables between runs
    GrothRing(const OrbitQuiver& orbit, CaseCatalog catalog, std::string cache_dir = "");

    const OrbitQuiver& orbit() const { return o_; }
    const CaseCatalog& catalog() const { return cat_; }

    long d_form(const DimPair& a, const DimPair& b) const;
    // u-exponent of the comultiplication twist on a split (w1, w2)
    int twist_u(const IntVec& w1, const IntVec& w2) const;

    // coefficient map over (pairs(w1) x pairs(w2))
    using SplitMat = std::map<std::pair<int, int>, HalfLaurent>;

    struct Row {
        SplitMat mat;
        bool clean = false;  // no dropped terms anywhere in its derivation
    };
    struct Grade {
        IntVec w;
        std::vector<DimPair> pairs;
        SolveStatus status = SolveStatus::Unique;
        std::vector<std::pair<int, int>> free_entries;
        // transition a[i][j]: coefficient of L(v_j, w) in pi(v_i, w)
        std::vector<std::vector<HalfLaurent>> a;
        std::vector<bool> row_modeled;  // row was pinned using modeled data
        // per split (keyed by w1), per pair: Delta L in the L x L basis
        std::map<std::vector<int>, std::vector<std::optional<Row>>> deltaL;
        int index_of(const IntVec& v) const;
    };

    const Grade& transition(const IntVec& w);

    // resolution of a pushforward class pi(v, w) in the L-basis of the grade
    struct PiExpansion {
        bool ok = false;
        bool clean = true;
        std::vector<std::pair<int, HalfLaurent>> terms;  // (pair index, coeff)
    };
    PiExpansion resolve_pi(const IntVec& v, const IntVec& w);

    // comultiplication of the pushforward class pi(v, w) on the split
    // (w1, w - w1), expanded in the L x L basis of the two sub-grades
    Row comult_pi(const IntVec& v, const IntVec& w, const IntVec& w1);

    GElement multiply(const GElement& x, const GElement& y, bool allow_modeled = true);
    Scaled multiply(const Scaled& x, const Scaled& y, bool allow_modeled = true);
    static Scaled add(const Scaled& x, const Scaled& y);
    Scaled multiply_word(const std::vector<Scaled>& factors);

    // generator images: keys "B<i>" and "k<i>", 1-based
    std::map<std::string, Scaled> kappa_images();

    // evaluates the named relation at (i, j); empty result means it holds
    // ids: k-comm, kB-comm, BB-antisym, BB-comm, serre3, iserre
    GElement verify_relation(const std::string& id, int i, int j);
    bool relation_applies(const std::string& id, int i, int j) const;

    std::vector<std::pair<DimPair, DimPair>> filtration_basis(const IntVec& w) const;

    struct ReducedTerm {
        DimPair plus;
        IntVec residual;  // leftover exponents of the k-generators
        HalfLaurent coeff;
    };
    std::vector<ReducedTerm> reduce(const GElement& x, const std::vector<HalfLaurent>& varsigma);

    std::string str(const GElement& g) const;

private:
    OrbitQuiver o_;
    CaseCatalog cat_;
    std::string cache_dir_;
    std::map<std::vector<int>, Grade> cache_;
    mutable std::recursive_mutex mtx_;  // cache writes serialized, reads cheap

    std::string cache_path(const IntVec& w) const;
    bool load_grade(Grade& g) const;
    void save_grade(const Grade& g) const;

    static std::vector<int> key(const IntVec& w);
    bool flow_vanish(const IntVec& v, const IntVec& w) const;
    void solve(Grade& g);
    // all ordered splits (w1, w2 = w - w1) with both parts nonzero
    std::vector<IntVec> proper_splits(const IntVec& w) const;

};

}  // namespace iqg
