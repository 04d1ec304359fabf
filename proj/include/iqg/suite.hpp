#pragma once

#include <string>
#include <vector>

#include "iqg/groth.hpp"
#include "iqg/oracle.hpp"

namespace iqg {

struct CheckResult {
    std::string name;
    std::string anchor;
    bool pass = false;
    std::string detail;
};

// One short tag per quiver, e.g. "A3 1>2<3 rho=(13)"
std::string quiver_tag(const IQuiver& q);

enum SuiteSection : unsigned {
    SEC_CARTAN = 1u << 0,
    SEC_HOM = 1u << 1,
    SEC_VIJ = 1u << 2,
    SEC_PAIRS = 1u << 3,
    SEC_DFORM = 1u << 4,
    SEC_TABLE1 = 1u << 5,
    SEC_BASIS = 1u << 6,
    SEC_PRODUCTS = 1u << 7,
    SEC_RELATIONS = 1u << 8,
    SEC_ORACLE = 1u << 9,
    SEC_FIXTURES = SEC_CARTAN | SEC_HOM | SEC_VIJ | SEC_PAIRS | SEC_DFORM | SEC_TABLE1 | SEC_BASIS,
    SEC_ALL = 0xffffffffu,
};

// The fixture ledger, evaluated on one quiver.
std::vector<CheckResult> run_fixture_suite(const IQuiver& q, unsigned sections = SEC_ALL);

// Quiver families used by the acceptance gate.
std::vector<IQuiver> hom_suite_quivers();       // A_n (n<=5) x orientations x involutions, D4, D5
std::vector<IQuiver> relation_suite_quivers();  // A_n (n<=4) x involutions, D4 split
std::vector<IQuiver> product_suite_quivers();   // split A2, quasi A3, both orientations
std::vector<IQuiver> all_ade_rank_le8();

IQuiver linear_a(int n);
IQuiver alternating_a(int n);

}  // namespace iqg
