#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iqg/inks.hpp"

namespace iqg {

// Geometric inputs the combinatorics cannot derive: emptiness of certain
// strata and identifications of pushforward classes.  Facts are consulted,
// never inferred; every entry carries its source anchor.
class CaseCatalog {
public:
    struct Fact {
        std::string kind;  // "vanish" | "identify" | "transition-zero"
        IntVec v, w;
        IntVec v2;  // identify target / transition column
        std::string anchor;
    };

    struct Resolution {
        enum Kind { Zero, Rewrite } kind;
        IntVec v2;
        std::string anchor;
    };

    CaseCatalog() = default;

    // the fact set used by the rank-2 computations, instantiated on a quiver
    static CaseCatalog standard(const OrbitQuiver& orbit);

    void add(Fact f) { facts_.push_back(std::move(f)); }
    const std::vector<Fact>& facts() const { return facts_; }

    std::optional<Resolution> lookup(const IntVec& v, const IntVec& w) const;

    // true when the catalog asserts a_{v,v'} = 0 at grade w
    bool transition_zero(const IntVec& v, const IntVec& v2, const IntVec& w) const;

private:
    std::vector<Fact> facts_;

    // parametric vanishing rules: (w-shape, index data)
    struct VanishRule {
        IntVec w;     // exact grade the rule speaks about
        int support;  // v must vanish at this module vertex to be empty
        std::string anchor;
    };
    std::vector<VanishRule> rules_;
    friend class CaseCatalogBuilder;

public:
    void add_vanish_rule(IntVec w, int support_vertex, std::string anchor) {
        rules_.push_back({std::move(w), support_vertex, std::move(anchor)});
    }
    const std::vector<VanishRule>& vanish_rules() const { return rules_; }
};

}  // namespace iqg
